"""Numerical witnesses for the closed-form bounds.

Class members are generated from the Caratheodory coefficient body: a pair
``(zeta1, zeta2)`` in the closed bidisk gives

    c1 = 2 zeta1,   c2 = 2 zeta1^2 + 2 (1 - |zeta1|^2) zeta2,

which covers every ``(c1, c2)`` of a function with positive real part. The
pair is pushed through ``d1 = B1 c1 / 2``,
``d2 = B1 (c2 - c1^2/2) / 2 + B2 c1^2 / 4`` and :func:`solve_a23` to get
``(a2, a3)``. Nothing here evaluates the bound formulas except to compare.

Because ``a2`` depends only on ``zeta1`` and ``a3`` is affine in ``zeta2``,
any functional ``|A(zeta1) + B(zeta1) zeta2|`` is maximized over the ``zeta2``
disk by ``|A| + |B|``. The search therefore runs over ``zeta1`` alone.
"""

from __future__ import annotations

import functools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bounds import as_real_mu, decode_number, encode_number, fs_auto
from .config import DEFAULT_ORDER, DEFAULT_TOLERANCES, Tolerances
from .errors import OutOfDisk, OutOfRange
from .psi_map import ClassSpec, DPair, solve_a23
from .series import TruncSeries, div
from .targets import check_schwarz, compose_schwarz

# (zeta1 array) -> (A, B): the objective is |A + B zeta2|
AffineFn = Callable[[np.ndarray], tuple]


@dataclass(frozen=True)
class CaratheodoryPoint:
    zeta1: complex
    zeta2: complex
    c1: complex
    c2: complex

    def to_dict(self) -> dict:
        return {k: encode_number(getattr(self, k)) for k in ("zeta1", "zeta2", "c1", "c2")}

    @classmethod
    def from_dict(cls, d: dict) -> CaratheodoryPoint:
        return cls(*(complex(decode_number(d[k])) for k in ("zeta1", "zeta2", "c1", "c2")))


def caratheodory_coefficients(zeta1, zeta2):
    """Vectorized ``(c1, c2)`` for arrays of parameters."""
    zeta1 = np.asarray(zeta1, dtype=complex)
    zeta2 = np.asarray(zeta2, dtype=complex)
    c1 = 2 * zeta1
    c2 = 2 * zeta1 * zeta1 + 2 * (1 - np.abs(zeta1) ** 2) * zeta2
    return c1, c2


def caratheodory_point(zeta1: complex, zeta2: complex, tol: float | None = None) -> CaratheodoryPoint:
    tol = DEFAULT_TOLERANCES.disk if tol is None else tol
    zeta1, zeta2 = complex(zeta1), complex(zeta2)
    for name, z in (("zeta1", zeta1), ("zeta2", zeta2)):
        if abs(z) > 1 + tol:
            raise OutOfDisk(f"|{name}| = {abs(z):.17g} exceeds 1")
    c1, c2 = caratheodory_coefficients(zeta1, zeta2)
    return CaratheodoryPoint(zeta1, zeta2, complex(c1), complex(c2))


def point_from_coefficients(c1: complex, c2: complex, tol: float | None = None) -> CaratheodoryPoint:
    """Inverse parameterization. On ``|zeta1| = 1`` the choice of ``zeta2`` is free; 0 is used."""
    tol = DEFAULT_TOLERANCES.disk if tol is None else tol
    zeta1 = complex(c1) / 2
    rest = 1 - abs(zeta1) ** 2
    if rest <= tol:
        zeta2 = 0j
    else:
        zeta2 = (complex(c2) - 2 * zeta1 * zeta1) / (2 * rest)
    if abs(zeta1) > 1 + tol or abs(zeta2) > 1 + 1e-9:
        raise OutOfDisk(f"(c1, c2) = ({c1}, {c2}) is outside the coefficient body")
    return CaratheodoryPoint(zeta1, zeta2, complex(c1), complex(c2))


def member_coefficients(c1, c2, spec: ClassSpec):
    """``(a2, a3)`` of the class member whose ``p1`` has coefficients ``(c1, c2)``; vectorized."""
    B1, B2 = spec.B1, spec.B2
    d1 = 0.5 * B1 * c1
    d2 = 0.5 * B1 * (c2 - 0.5 * c1 * c1) + 0.25 * B2 * c1 * c1
    return solve_a23(DPair(d1, d2), spec)


def member_from_point(pt: CaratheodoryPoint, spec: ClassSpec) -> tuple[complex, complex]:
    a2, a3 = member_coefficients(pt.c1, pt.c2, spec)
    return complex(a2), complex(a3)


# -- search ---------------------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    value: float
    zeta1: complex
    zeta2: complex
    samples: int


@functools.lru_cache(maxsize=16)
def _grid(density: int, seed: int) -> np.ndarray:
    """Polar grid on the closed disk (rows = radii) followed by seeded random points."""
    r = np.linspace(0.0, 1.0, density + 1)
    t = 2 * np.pi * np.arange(density) / density
    polar = (r[:, None] * np.exp(1j * t[None, :])).ravel()
    rng = np.random.default_rng(seed)
    extra = np.sqrt(rng.uniform(0, 1, density)) * np.exp(2j * np.pi * rng.uniform(0, 1, density))
    g = np.concatenate([polar, extra])
    g.flags.writeable = False
    return g


def _best_in_chunk(fn: AffineFn, pts: np.ndarray, offset: int) -> tuple[float, int]:
    A, B = fn(pts)
    vals = np.abs(A) + np.abs(B)
    i = int(np.argmax(vals))  # first maximal index
    return float(vals[i]), offset + i


def _reduce(results) -> tuple[float, int]:
    # max value; ties go to the smallest grid index
    return max(results, key=lambda vi: (vi[0], -vi[1]))


def _optimal_zeta2(A: complex, B: complex) -> complex:
    if abs(B) == 0:
        return 0j
    if abs(A) == 0:
        return complex(np.conj(B) / abs(B))
    return complex(A / abs(A) * np.conj(B) / abs(B))


def _grid_best(fn: AffineFn, grid: np.ndarray, workers: int) -> tuple[float, int]:
    if workers <= 1:
        return _best_in_chunk(fn, grid, 0)
    bounds = np.linspace(0, grid.size, workers + 1).astype(int)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(
            pool.map(lambda ab: _best_in_chunk(fn, grid[ab[0]:ab[1]], ab[0]), zip(bounds[:-1], bounds[1:]))
        )
    return _reduce(parts)


def _refine(fn: AffineFn, z: complex, best_val: float, density: int, refine_steps: int, samples: int) -> SearchResult:
    """Compass pattern search from ``z``; the step halves when no neighbour improves.

    The four neighbours are evaluated together but accepted in a fixed order,
    first improvement wins, so the path does not depend on the batching.
    """
    compass = np.array([1, -1, 1j, -1j])
    step = 1.0 / density
    for _ in range(refine_steps):
        cands = z + step * compass
        r = np.abs(cands)
        cands = np.where(r > 1, cands / np.where(r > 1, r, 1), cands)
        A, B = fn(cands)
        vals = np.abs(A) + np.abs(B)
        better = np.flatnonzero(vals > best_val)
        if better.size:
            k = int(better[0])
            best_val, z = float(vals[k]), complex(cands[k])
            samples += k + 1
        else:
            samples += 4
            step /= 2

    A, B = fn(np.array([z]))
    zeta2 = _optimal_zeta2(complex(A[0]), complex(B[0]))
    return SearchResult(best_val, z, zeta2, samples)


def bidisk_max(fn: AffineFn, density: int, refine_steps: int, seed: int, workers: int = 1) -> SearchResult:
    """Maximize ``|A(zeta1) + B(zeta1) zeta2|`` over the closed bidisk.

    Grid search over ``zeta1`` followed by a compass pattern search. With
    ``workers > 1`` the grid is split into contiguous chunks; the reduction is
    order-independent so the result matches the serial run exactly.
    """
    if density < 8:
        raise OutOfRange(f"grid density must be >= 8, got {density}")
    grid = _grid(density, seed)
    best_val, best_idx = _grid_best(fn, grid, workers)
    return _refine(fn, complex(grid[best_idx]), best_val, density, refine_steps, grid.size)


def member_terms(spec: ClassSpec, z1: np.ndarray):
    """``(a2, a3 at zeta2 = 0, d a3 / d zeta2)`` on an array of ``zeta1`` values."""
    c1, c2_0 = caratheodory_coefficients(z1, 0)
    _, c2_1 = caratheodory_coefficients(z1, 1)
    a2, a3_0 = member_coefficients(c1, c2_0, spec)
    _, a3_1 = member_coefficients(c1, c2_1, spec)
    return a2, a3_0, a3_1 - a3_0


def _functional(terms, mu: complex):
    a2, a3_0, slope = terms
    return a3_0 - mu * a2 * a2, slope


def fs_affine(spec: ClassSpec, mu: complex) -> AffineFn:
    """``a3 - mu a2^2`` as an affine function of ``zeta2``, built from the member chain."""
    mu = complex(mu)
    return lambda z1: _functional(member_terms(spec, z1), mu)


def lemma_affine(v: complex) -> AffineFn:
    """``c2 - v c1^2`` as an affine function of ``zeta2``."""
    v = complex(v)

    def fn(z1: np.ndarray):
        c1, c2_0 = caratheodory_coefficients(z1, 0)
        _, c2_1 = caratheodory_coefficients(z1, 1)
        return c2_0 - v * c1 * c1, c2_1 - c2_0

    return fn


def lemma_sup(v: complex, density: int = 400, refine_steps: int = 60, seed: int = 0) -> SearchResult:
    """Empirical ``sup |c2 - v c1^2|`` over the coefficient body."""
    return bidisk_max(lemma_affine(v), density, refine_steps, seed)


@dataclass(frozen=True)
class VerifyReport:
    mu: complex | float
    theoretical_bound: float
    empirical_sup: float
    argmax: CaratheodoryPoint
    samples: int
    violation: bool
    sharp: bool

    @property
    def gap(self) -> float:
        return self.theoretical_bound - self.empirical_sup

    def to_dict(self) -> dict:
        return {
            "mu": encode_number(self.mu),
            "theoretical_bound": self.theoretical_bound,
            "empirical_sup": self.empirical_sup,
            "gap": self.gap,
            "argmax": self.argmax.to_dict(),
            "samples": self.samples,
            "violation": self.violation,
            "sharp": self.sharp,
        }

    @classmethod
    def from_dict(cls, d: dict) -> VerifyReport:
        return cls(
            mu=decode_number(d["mu"]),
            theoretical_bound=float(d["theoretical_bound"]),
            empirical_sup=float(d["empirical_sup"]),
            argmax=CaratheodoryPoint.from_dict(d["argmax"]),
            samples=int(d["samples"]),
            violation=bool(d["violation"]),
            sharp=bool(d["sharp"]),
        )

    CSV_HEADER = ("mu", "bound", "empirical_sup", "gap", "violation", "sharp")

    def csv_row(self) -> list:
        return [self.mu, self.theoretical_bound, self.empirical_sup, self.gap, self.violation, self.sharp]


def _report(spec: ClassSpec, mu: complex, res: SearchResult, tol: Tolerances) -> VerifyReport:
    pt = caratheodory_point(res.zeta1, res.zeta2)
    a2, a3 = member_from_point(pt, spec)
    mu_r = as_real_mu(mu)
    mu_out = mu_r if mu_r is not None else complex(mu)
    value = float(abs(a3 - complex(mu) * a2 * a2))
    bound = fs_auto(spec, mu_out).bound
    return VerifyReport(
        mu=mu_out,
        theoretical_bound=bound,
        empirical_sup=value,
        argmax=pt,
        samples=res.samples,
        violation=value > bound + tol.validity,
        sharp=bound - value <= tol.sharpness,
    )


def sup_search(
    spec: ClassSpec,
    mu: complex,
    grid_density: int = 400,
    refine_steps: int = 60,
    seed: int = 0,
    tol: Tolerances | None = None,
    workers: int = 1,
) -> VerifyReport:
    """Search the bidisk for ``sup |a3 - mu a2^2|`` and compare with the closed form."""
    tol = DEFAULT_TOLERANCES if tol is None else tol
    res = bidisk_max(fs_affine(spec, mu), grid_density, refine_steps, seed, workers)
    return _report(spec, mu, res, tol)


def sup_sweep(
    spec: ClassSpec,
    mus,
    grid_density: int = 400,
    refine_steps: int = 60,
    seed: int = 0,
    tol: Tolerances | None = None,
) -> list[VerifyReport]:
    """:func:`sup_search` over many ``mu`` at once.

    The member coefficients on the grid do not depend on ``mu``, so they are
    computed once. Each report equals the one :func:`sup_search` would return.
    """
    tol = DEFAULT_TOLERANCES if tol is None else tol
    if grid_density < 8:
        raise OutOfRange(f"grid density must be >= 8, got {grid_density}")
    grid = _grid(grid_density, seed)
    terms = member_terms(spec, grid)
    out = []
    for mu in mus:
        A, B = _functional(terms, complex(mu))
        vals = np.abs(A) + np.abs(B)
        i = int(np.argmax(vals))
        res = _refine(fs_affine(spec, mu), complex(grid[i]), float(vals[i]), grid_density, refine_steps, grid.size)
        out.append(_report(spec, mu, res, tol))
    return out


# -- extremal functions ------------------------------------------------------------

EXTREMAL_KINDS = ("K2", "K3", "Ggamma", "Hgamma")


def schwarz_for(kind: str, gamma: float | None = None, order: int = DEFAULT_ORDER) -> TruncSeries:
    """The Schwarz function whose image under ``phi`` defines each extremal function."""
    if kind == "K2":
        return TruncSeries.z(order)
    if kind == "K3":
        return TruncSeries.monomial(2, order)
    if kind in ("Ggamma", "Hgamma"):
        if gamma is None or not 0 <= gamma <= 1:
            raise OutOfRange(f"{kind} needs 0 <= gamma <= 1, got {gamma!r}")
        w = div(TruncSeries([0, gamma, 1], order), TruncSeries([1, gamma], order))
        return w if kind == "Ggamma" else -w
    raise OutOfRange(f"unknown extremal kind {kind!r}; choose from {EXTREMAL_KINDS}")


def _a23_from_schwarz(spec: ClassSpec, w: TruncSeries) -> tuple[complex, complex]:
    p = compose_schwarz(spec.target, w)
    a2, a3 = solve_a23(DPair(p.coeffs[1], p.coeffs[2]), spec)
    return complex(a2), complex(a3)


def extremal(kind: str, spec: ClassSpec, gamma: float | None = None) -> tuple[complex, complex]:
    """First coefficients of ``K^{phi_2}``, ``K^{phi_3}``, ``G^gamma`` or ``H^gamma``."""
    return _a23_from_schwarz(spec, schwarz_for(kind, gamma))


@dataclass(frozen=True)
class PathCheck:
    via_series: tuple[complex, complex]
    via_caratheodory: tuple[complex, complex]
    agree: bool


def schwarz_path_check(spec: ClassSpec, w: TruncSeries, mu: complex = 0, tol: float | None = None) -> PathCheck:
    """Recover ``(a2, a3)`` from a Schwarz function along two routes.

    Route A composes ``phi`` with ``w``. Route B forms ``p1 = (1+w)/(1-w)``
    and goes through the Caratheodory coefficients. ``mu`` is accepted for
    symmetry with the functional checks; agreement is on the coefficients.
    """
    tol = DEFAULT_TOLERANCES.path_agree if tol is None else tol
    check_schwarz(w)
    via_series = _a23_from_schwarz(spec, w)
    p1 = div(1 + w, 1 - w)
    pt = point_from_coefficients(p1.coeffs[1], p1.coeffs[2])
    via_car = member_from_point(pt, spec)
    agree = all(math.isclose(abs(x - y), 0, abs_tol=tol) for x, y in zip(via_series, via_car))
    fa, fb = (abs(a3 - complex(mu) * a2 * a2) for a2, a3 in (via_series, via_car))
    agree = agree and abs(fa - fb) <= tol
    return PathCheck(via_series, via_car, agree)
