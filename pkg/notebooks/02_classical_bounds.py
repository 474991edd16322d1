"""
Fekete-Szego bounds across the mu line
======================================

For real mu the sharp bound on |a3 - mu a2^2| is piecewise linear with a
flat middle piece between sigma1 and sigma2. We tabulate it for the
starlike and convex classes, then for a less familiar operator.
"""

import numpy as np

from fsbounds import ClassSpec, Kernel, fs_complex, fs_real, janowski, sigmas

star = ClassSpec(0, Kernel.identity(), janowski(1, -1))
convex = ClassSpec(1, Kernel.identity(), janowski(1, -1))

for name, spec in (("starlike", star), ("convex", convex)):
    s1, s2, s3 = sigmas(spec)
    print(f"{name}: sigma1={s1:.4f} sigma3={s3:.4f} sigma2={s2:.4f}")
    for mu in np.linspace(s1 - 1, s2 + 1, 9):
        r = fs_real(spec, mu)
        print(f"   mu={mu:+.3f}  {r.regime.value:7s} bound={r.bound:.6f}")

# %%
# The middle piece can be sharpened: adding a multiple of |a2|^2 to the
# left-hand side keeps the same right-hand side. The multiple is zero at
# the breakpoints and largest at sigma3.

s1, s2, s3 = sigmas(star)
for mu in (s1, (s1 + s3) / 2, s3, (s3 + s2) / 2, s2):
    imp = fs_real(star, mu).improvement
    print(f"mu={mu:.3f}: |a3 - mu a2^2| + {imp.coefficient:.4f} |a2|^2 <= {imp.rhs:g}")

# %%
# Complex mu
# ----------
# For complex mu the bound is a single max, which agrees with the
# piecewise form on the real axis.

for mu in (0.3, 0.3 + 1j, 2 - 0.5j):
    print(f"starlike mu={mu}: {fs_complex(star, mu).bound:.6f}  (closed form {max(1, abs(4 * mu - 3)):.6f})")

# %%
# A Ruscheweyh operator with a Janowski target and alpha = 1/2

spec = ClassSpec(0.5, Kernel.ruscheweyh(2), janowski(0.5, -0.5))
s1, s2, _ = sigmas(spec)
print(f"ruscheweyh:2, alpha=1/2, janowski(1/2,-1/2): sigma1={s1:.5f} sigma2={s2:.5f}")
print("bound at mu=0:", fs_real(spec, 0).bound)
