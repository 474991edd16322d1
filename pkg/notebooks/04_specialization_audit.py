"""
Auditing printed special cases
==============================

Several familiar results are special cases of the general bound. The
audit recomputes each one from its own formula and compares it with the
general bound. Findings are reported as data rather than hidden.
"""

from fsbounds import ClassSpec, Kernel, janowski, sigmas, specialization_check

# Starlike and convex cases agree exactly
for name, mu in (("keogh_merkes_star", 2.0), ("keogh_merkes_convex", 0.5 + 1j)):
    res = specialization_check(name, mu=mu)
    print(f"{name} mu={mu}: printed={res.specialized.bound:.6f} general={res.general.bound:.6f} agree={res.agree}")

# %%
# The fractional-derivative case prints sigma2 three times too large.
# The bound values still agree because the general breakpoints are used
# to pick the branch.

spec = ClassSpec(0, Kernel.owa_srivastava(0.5), janowski(1, -1))
_, s2, _ = sigmas(spec)
res = specialization_check("fractional", alpha=0, delta=0.5, mu=s2 + 0.5)
for f in res.findings:
    print(f"{f.quantity}: printed={f.printed:.6f} general={f.general:.6f} ({f.kind}) {f.note}")
print("bound values agree:", res.agree)

# %%
# The Janowski special case writes its lower branch in a different but
# equal arrangement. That shows up as a layout finding, not a discrepancy.

res = specialization_check("janowski_general", alpha=0.5, C=0.5, D=-0.5, mu=-2.0)
print([(f.quantity, f.kind) for f in res.findings], "discrepancies:", res.discrepancies)
