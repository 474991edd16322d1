"""
Truncated series and convolution kernels
========================================

Everything in the package is built on complex power series cut off at a
fixed order. This walk-through multiplies, divides and composes a few of
them, then looks at the kernel families used to define the operator.
"""

import numpy as np

from fsbounds import Kernel, TruncSeries, compose, div, janowski, kernel_series, mul

# (1+z)/(1-z) by long division: every coefficient after the first is 2
order = 6
p = div(TruncSeries([1, 1], order), TruncSeries([1, -1], order))
print("(1+z)/(1-z) =", p.coeffs.real)

# multiplying back recovers the numerator
print("times (1-z) =", mul(p, TruncSeries([1, -1], order)).coeffs.real)

# composing with z^2 spreads the coefficients out
print("p(z^2)      =", compose(p, TruncSeries.monomial(2, order)).coeffs.real)

# the Janowski target with C=1, D=-1 is the same function
print("janowski(1,-1) matches:", janowski(1, -1).series(order).allclose(p))

# %%
# Kernel coefficients
# -------------------
# Each kernel g = z + b2 z^2 + b3 z^3 + ... enters the bounds only through
# b2 and b3. Here are the first few coefficients of each family.

kernels = [
    Kernel.identity(),
    Kernel.ruscheweyh(2),
    Kernel.salagean(2),
    Kernel.owa_srivastava(0.5),
    Kernel.multiplier(2, 1.0),
    Kernel.dziok_srivastava([3, 1], [1]),
]
for k in kernels:
    b = kernel_series(k, 5).coeffs.real[1:]
    print(f"{k.label():28s}", np.array2string(b, precision=4))

# the Dziok-Srivastava choice above reproduces Ruscheweyh(2)
print(
    "dziok_srivastava:3,1/1 == ruscheweyh:2 ->",
    kernel_series(Kernel.dziok_srivastava([3, 1], [1]), 8).allclose(kernel_series(Kernel.ruscheweyh(2), 8)),
)
