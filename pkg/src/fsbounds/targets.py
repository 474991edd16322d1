"""Ma-Minda target functions ``phi(z) = 1 + B1 z + B2 z^2 + ...``."""

from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Real
from typing import Callable

import numpy as np

from .config import DEFAULT_ORDER, DEFAULT_TOLERANCES
from .errors import (
    InconsistentSeries,
    InvalidJanowskiParams,
    InvalidTarget,
    NonVanishingInner,
    NotSchwarz,
)
from .series import TruncSeries, compose, div

SeriesGen = Callable[[int], TruncSeries]

_SCHWARZ_RADIUS = 0.5
_SCHWARZ_POINTS = 64


@dataclass(frozen=True)
class Target:
    B1: float
    B2: float
    series_gen: SeriesGen = field(repr=False, compare=False)
    label: str = ""
    descriptor: dict = field(default_factory=dict, repr=False, compare=False)

    def series(self, order: int = DEFAULT_ORDER) -> TruncSeries:
        return self.series_gen(order)

    def to_dict(self) -> dict:
        return dict(self.descriptor)

    @classmethod
    def from_dict(cls, d: dict) -> Target:
        kind = d.get("kind")
        try:
            if kind == "janowski":
                return janowski(d["C"], d["D"])
            if kind == "custom":
                return custom(d["B1"], d["B2"])
        except KeyError as exc:
            raise InvalidTarget(f"target descriptor {d!r} is missing {exc}") from exc
        raise InvalidTarget(f"unknown target kind {kind!r}")


def _real(x, name: str) -> float:
    if isinstance(x, bool) or not isinstance(x, Real):
        if isinstance(x, complex) or np.iscomplexobj(x):
            raise InvalidTarget(f"{name} must be real, got {x!r}")
        raise InvalidTarget(f"{name} must be a real number, got {x!r}")
    return float(x)


def janowski(C: float, D: float) -> Target:
    """``phi(z) = (1 + C z) / (1 + D z)`` with ``-1 <= D < C <= 1``."""
    C, D = float(C), float(D)
    if not (-1 <= D < C <= 1):
        raise InvalidJanowskiParams(f"need -1 <= D < C <= 1, got C={C}, D={D}")

    def gen(order: int) -> TruncSeries:
        return div(TruncSeries([1, C], order), TruncSeries([1, D], order))

    B1 = C - D
    return Target(
        B1=B1,
        B2=-D * B1,
        series_gen=gen,
        label=f"janowski:{C:g},{D:g}",
        descriptor={"kind": "janowski", "C": C, "D": D},
    )


def custom(B1: float, B2: float, series_gen: SeriesGen | None = None, label: str = "", tol: float | None = None) -> Target:
    """Wrap a user-supplied target.

    Without ``series_gen`` the series is the polynomial ``1 + B1 z + B2 z^2``,
    which is all the bounds need.
    """
    tol = DEFAULT_TOLERANCES.series_match if tol is None else tol
    B1, B2 = _real(B1, "B1"), _real(B2, "B2")
    if not B1 > 0:
        raise InvalidTarget(f"B1 must be positive, got {B1}")
    if series_gen is None:
        def series_gen(order: int) -> TruncSeries:
            return TruncSeries([1, B1, B2], order)

    s = series_gen(max(DEFAULT_ORDER, 2))
    expected = np.array([1, B1, B2])
    if s.order < 2 or np.any(np.abs(s.coeffs[:3] - expected) > tol):
        raise InconsistentSeries(
            f"series starts {s.coeffs[:3]!r}, expected 1, B1={B1}, B2={B2}"
        )
    return Target(
        B1=B1,
        B2=B2,
        series_gen=series_gen,
        label=label or f"custom:{B1:g},{B2:g}",
        descriptor={"kind": "custom", "B1": B1, "B2": B2},
    )


def starlike() -> Target:
    return janowski(1.0, -1.0)


def check_schwarz(w: TruncSeries, tol: float | None = None) -> None:
    """Tripwire for ``w(0) = 0`` and ``|w(z)| <= |z|`` sampled on ``|z| = 1/2``."""
    tol = DEFAULT_TOLERANCES.schwarz if tol is None else tol
    if w.coeffs[0] != 0:
        raise NotSchwarz(f"w(0) = {w.coeffs[0]!r}, expected 0")
    z = _SCHWARZ_RADIUS * np.exp(2j * np.pi * np.arange(_SCHWARZ_POINTS) / _SCHWARZ_POINTS)
    worst = float(np.max(np.abs(w(z))))
    if worst > _SCHWARZ_RADIUS * (1 + tol):
        raise NotSchwarz(f"max |w(z)| on |z|={_SCHWARZ_RADIUS} is {worst:.6g}")


def compose_schwarz(t: Target, w: TruncSeries) -> TruncSeries:
    """Series of ``phi(w(z))``; its z and z^2 coefficients are ``d1, d2``."""
    check_schwarz(w)
    try:
        return compose(t.series(w.order), w)
    except NonVanishingInner as exc:  # pragma: no cover - check_schwarz already caught it
        raise NotSchwarz(str(exc)) from exc


def parse_target(text: str) -> Target:
    """Parse ``janowski:C,D``, ``custom:B1,B2`` or the shorthand ``starlike``."""
    name, _, rest = text.strip().partition(":")
    name = name.lower()
    if name == "starlike" and not rest:
        return starlike()
    try:
        values = [float(v) for v in rest.split(",") if v]
        if name == "janowski":
            C, D = values
            return janowski(C, D)
        if name == "custom":
            B1, B2 = values
            return custom(B1, B2)
    except ValueError as exc:
        if isinstance(exc, (InvalidTarget, InvalidJanowskiParams, InconsistentSeries)):
            raise
        raise InvalidTarget(f"cannot parse target {text!r}: {exc}") from exc
    raise InvalidTarget(f"unknown target {text!r}")
