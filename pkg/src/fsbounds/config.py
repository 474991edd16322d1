"""Numerical tolerances shared across modules.

All defaults live here; functions that take a ``tol`` argument fall back to
:data:`DEFAULT_TOLERANCES` when it is omitted.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_ORDER = 8


@dataclass(frozen=True)
class Tolerances:
    unit: float = 1e-12            # |b[0]| below this is not invertible
    disk: float = 1e-12            # slack on |zeta| <= 1
    series_match: float = 1e-10    # custom target series vs declared B1, B2
    schwarz: float = 1e-12         # relative slack of the |w(z)| <= |z| tripwire
    validity: float = 1e-9         # empirical sup may exceed the bound by this much
    sharpness: float = 5e-3        # bound - empirical sup must be below this
    path_agree: float = 1e-9       # two-route coefficient agreement
    specialization: float = 1e-10  # special-case formula vs general bound


DEFAULT_TOLERANCES = Tolerances()
