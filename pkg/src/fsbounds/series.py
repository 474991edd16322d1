"""Truncated complex Taylor series.

A :class:`TruncSeries` of order ``N`` stores the coefficients of
``z**0 .. z**N``. Binary operations on series of different orders truncate to
the smaller order, so every result is exact up to its own order.
"""

from __future__ import annotations

from numbers import Number
from typing import Iterable

import numpy as np

from .config import DEFAULT_ORDER, DEFAULT_TOLERANCES
from .errors import DivisionByNonUnit, NonVanishingInner

__all__ = [
    "TruncSeries",
    "mul",
    "div",
    "compose",
    "derivative",
    "hadamard",
]


class TruncSeries:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[complex] | np.ndarray, order: int | None = None):
        c = np.array(coeffs, dtype=complex).ravel()
        if order is None:
            order = c.size - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if c.size < order + 1:
            c = np.concatenate([c, np.zeros(order + 1 - c.size, dtype=complex)])
        c = c[: order + 1].copy()
        c.flags.writeable = False
        self._c = c

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, value: complex, order: int = DEFAULT_ORDER) -> TruncSeries:
        return cls([value], order)

    @classmethod
    def z(cls, order: int = DEFAULT_ORDER) -> TruncSeries:
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, power: int, order: int = DEFAULT_ORDER, scale: complex = 1) -> TruncSeries:
        c = np.zeros(order + 1, dtype=complex)
        if power <= order:
            c[power] = scale
        return cls(c, order)

    # -- container protocol -------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __len__(self) -> int:
        return self._c.size

    def __getitem__(self, k):
        return self._c[k]

    def __iter__(self):
        return iter(self._c)

    def __repr__(self) -> str:
        body = ", ".join(f"{c:.6g}" for c in self._c)
        return f"TruncSeries([{body}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self._c, other._c))

    __hash__ = None

    def allclose(self, other: TruncSeries | Iterable[complex], atol: float = 1e-12) -> bool:
        o = other.coeffs if isinstance(other, TruncSeries) else np.asarray(list(other), dtype=complex)
        n = min(self._c.size, o.size)
        return bool(np.all(np.abs(self._c[:n] - o[:n]) <= atol))

    def truncate(self, order: int) -> TruncSeries:
        return TruncSeries(self._c, order)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, Number):
            return TruncSeries.constant(complex(other), self.order)
        return NotImplemented

    def __neg__(self) -> TruncSeries:
        return TruncSeries(-self._c)

    def __add__(self, other) -> TruncSeries:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = min(self.order, o.order) + 1
        return TruncSeries(self._c[:n] + o._c[:n])

    __radd__ = __add__

    def __sub__(self, other) -> TruncSeries:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other) -> TruncSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncSeries:
        if isinstance(other, Number):
            return TruncSeries(self._c * complex(other))
        if isinstance(other, TruncSeries):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> TruncSeries:
        if isinstance(other, Number):
            return TruncSeries(self._c / complex(other))
        if isinstance(other, TruncSeries):
            return div(self, other)
        return NotImplemented

    def __rtruediv__(self, other) -> TruncSeries:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return div(o, self)

    def __call__(self, z):
        """Evaluate the truncated polynomial at ``z`` (scalar or array)."""
        return np.polynomial.polynomial.polyval(z, self._c)

    # -- shifts -------------------------------------------------------------

    def shift_up(self) -> TruncSeries:
        """Multiply by ``z``, keeping the order (top coefficient drops out)."""
        return TruncSeries(np.concatenate([[0], self._c[:-1]]))

    def shift_down(self) -> TruncSeries:
        """Divide by ``z``; requires a zero constant term. The top slot is padded with 0."""
        if self._c[0] != 0:
            raise NonVanishingInner("shift_down needs a zero constant term")
        return TruncSeries(np.concatenate([self._c[1:], [0]]))


def mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    n = min(a.order, b.order)
    return TruncSeries(np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])[: n + 1])


def div(a: TruncSeries, b: TruncSeries, tol: float | None = None) -> TruncSeries:
    tol = DEFAULT_TOLERANCES.unit if tol is None else tol
    b0 = b.coeffs[0]
    if abs(b0) <= tol:
        raise DivisionByNonUnit(f"constant term {b0!r} is not invertible")
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    q = np.zeros(n + 1, dtype=complex)
    for k in range(n + 1):
        # q[k] = (a[k] - sum_{i=1..k} b[i] q[k-i]) / b[0]
        q[k] = (ac[k] - np.dot(bc[1 : k + 1], q[k - 1 :: -1][:k])) / b0
    return TruncSeries(q)


def compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """Series of ``outer(inner(z))`` by Horner's scheme."""
    if inner.coeffs[0] != 0:
        raise NonVanishingInner(f"inner constant term is {inner.coeffs[0]!r}, expected 0")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    result = TruncSeries.constant(outer.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        result = mul(result, inner) + outer.coeffs[k]
    return result


def derivative(a: TruncSeries) -> TruncSeries:
    n = a.order
    k = np.arange(1, n + 1)
    return TruncSeries(k * a.coeffs[1:], n)


def hadamard(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Coefficientwise product; for normalized functions this is the convolution ``a * b``."""
    n = min(a.order, b.order)
    return TruncSeries(a.coeffs[: n + 1] * b.coeffs[: n + 1])
