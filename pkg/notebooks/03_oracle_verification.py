"""
Checking the bounds numerically
===============================

The oracle never evaluates the bound formulas. It builds class members
from points of the Caratheodory coefficient body and searches for the
largest value of |a3 - mu a2^2|. If the closed forms are right the search
should come within a hair of the bound and never above it.
"""

import numpy as np

from fsbounds import ClassSpec, Kernel, extremal, janowski, sigmas, sup_sweep

spec = ClassSpec(0.5, Kernel.salagean(1), janowski(1, 0))
s1, s2, _ = sigmas(spec)
mus = np.linspace(s1 - 1, s2 + 1, 9)

# a coarse grid keeps this quick; the acceptance suite uses density 400
reports = sup_sweep(spec, mus, grid_density=120, refine_steps=40, seed=0)
print("      mu     bound  empirical        gap")
for r in reports:
    print(f"{r.mu:+8.4f} {r.theoretical_bound:9.6f} {r.empirical_sup:10.6f} {r.gap:10.2e}")
print("any violation:", any(r.violation for r in reports))

# %%
# Where the maximum sits
# ----------------------
# Outside [sigma1, sigma2] the maximizer has |zeta1| = 1, the rotation of
# the K2 extremal. Inside it zeta1 = 0 and |zeta2| = 1, which is K3.

for r in reports[::4]:
    print(f"mu={r.mu:+.3f}: |zeta1|={abs(r.argmax.zeta1):.3f} |zeta2|={abs(r.argmax.zeta2):.3f}")

for kind in ("K2", "K3"):
    a2, a3 = extremal(kind, spec)
    print(f"{kind}: a2={a2.real:.6f} a3={a3.real:.6f}")
