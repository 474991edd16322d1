"""The functional ``Psi_g`` and its first two coefficients.

``psi_forward`` builds the full series of

    1 + z L'/L + z L''/L' - ((1-a) z^2 L'' + z L') / ((1-a) z L' + a L),   L = f * g

from truncated-series arithmetic alone. ``d_closed_form`` and ``solve_a23`` are
the polynomial identities for its ``z`` and ``z^2`` coefficients and their
inverse; the two routes are kept separate so one can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Real

import numpy as np

from .errors import InvalidClassSpec
from .kernels import Kernel
from .series import TruncSeries, derivative, hadamard
from .targets import Target


@dataclass(frozen=True)
class ClassSpec:
    """The class parameter ``alpha`` together with a kernel and a target."""

    alpha: float
    kernel: Kernel
    target: Target

    def __post_init__(self):
        a = self.alpha
        if isinstance(a, bool) or not isinstance(a, Real) or not np.isfinite(a):
            raise InvalidClassSpec(f"alpha must be a finite real number, got {a!r}")
        if a < 0:
            raise InvalidClassSpec(f"alpha must be >= 0, got {a}")
        object.__setattr__(self, "alpha", float(a))
        b2, b3 = self.kernel.b2, self.kernel.b3
        if b2 == 0 or b3 == 0:
            raise InvalidClassSpec(f"kernel {self.kernel.label()} has b2={b2}, b3={b3}; both must be nonzero")
        if b3 < 0:
            raise InvalidClassSpec(f"kernel {self.kernel.label()} has b3={b3} < 0; regime ordering is undefined")
        if not np.isfinite(b2) or not np.isfinite(b3):
            raise InvalidClassSpec(f"kernel {self.kernel.label()} has non-finite coefficients")

    @property
    def b2(self) -> float:
        return self.kernel.b2

    @property
    def b3(self) -> float:
        return self.kernel.b3

    @property
    def B1(self) -> float:
        return self.target.B1

    @property
    def B2(self) -> float:
        return self.target.B2

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "kernel": self.kernel.to_dict(), "target": self.target.to_dict()}

    @classmethod
    def from_dict(cls, d: dict) -> ClassSpec:
        return cls(float(d["alpha"]), Kernel.from_dict(d["kernel"]), Target.from_dict(d["target"]))

    def label(self) -> str:
        return f"alpha={self.alpha:g} kernel={self.kernel.label()} target={self.target.label}"


@dataclass(frozen=True)
class DPair:
    d1: complex
    d2: complex


def psi_forward(f: TruncSeries, spec: ClassSpec, order: int) -> TruncSeries:
    """Series of ``Psi_g(f)`` to ``order``.

    ``f`` must be normalized (``f[0] = 0``, ``f[1] = 1``); coefficients past
    ``f.order`` are taken as zero. Two extra working orders absorb the loss
    from differentiating twice.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    if f.coeffs[0] != 0 or f.order < 1 or f.coeffs[1] != 1:
        raise ValueError("f must satisfy f(0) = 0 and f'(0) = 1")
    work = order + 2
    a = spec.alpha
    L = hadamard(f.truncate(work), spec.kernel.series(work))
    L_over_z = L.shift_down()
    dL = derivative(L)
    d2L = derivative(dL)
    z_d2L = d2L.shift_up()

    t1 = dL / L_over_z                                        # z L' / L
    t2 = z_d2L / dL                                           # z L'' / L'
    t3 = ((1 - a) * z_d2L + dL) / ((1 - a) * dL + a * L_over_z)  # common factor z cancelled
    return (1 + t1 + t2 - t3).truncate(order)


def d_closed_form(a2, a3, spec: ClassSpec) -> DPair:
    """``d1 = (1+a) a2 b2`` and ``d2 = 2(2a+1) a3 b3 + (a^2-4a-1) a2^2 b2^2``.

    Works elementwise on numpy arrays as well as scalars.
    """
    a, b2, b3 = spec.alpha, spec.b2, spec.b3
    d1 = (1 + a) * a2 * b2
    d2 = 2 * (2 * a + 1) * a3 * b3 + (a * a - 4 * a - 1) * a2 * a2 * b2 * b2
    return DPair(d1, d2)


def solve_a23(d: DPair, spec: ClassSpec) -> tuple:
    """Invert :func:`d_closed_form`: recover ``(a2, a3)`` from ``(d1, d2)``."""
    a, b2, b3 = spec.alpha, spec.b2, spec.b3
    a2 = d.d1 / ((1 + a) * b2)
    a3 = (d.d2 - (a * a - 4 * a - 1) * a2 * a2 * b2 * b2) / (2 * (2 * a + 1) * b3)
    return a2, a3
