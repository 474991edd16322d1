"""Convolution kernels ``g(z) = z + sum_{n>=2} b_n z^n`` for the classical operators.

Each :class:`Kernel` is an immutable descriptor (family name plus parameters)
that knows how to produce its coefficient ``b_n``. Supported families:

==================  =====================  ==========================================
family              params                 b_n
==================  =====================  ==========================================
identity            -                      1
ruscheweyh          k                      C(n+k-1, k)
salagean            m                      n**m
owa_srivastava      delta                  Gamma(n+1) Gamma(2-delta) / Gamma(n+1-delta)
multiplier          r, lambda              ((n+lambda)/(1+lambda))**r
dziok_srivastava    numer, denom           prod (a_i)_{n-1} / (prod (b_j)_{n-1} (n-1)!)
coefficients        b (list b_2, b_3, ..)  explicit; zero past the list
==================  =====================  ==========================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import InvalidKernelParam
from .series import TruncSeries

FAMILIES = (
    "identity",
    "ruscheweyh",
    "salagean",
    "owa_srivastava",
    "multiplier",
    "dziok_srivastava",
    "coefficients",
)

# Above this argument math.gamma overflows; fall back to the ratio recurrence.
_GAMMA_SAFE = 170.0


def pochhammer(a: float, n: int) -> float:
    """Rising factorial ``a (a+1) ... (a+n-1)`` as an iterated product."""
    out = 1.0
    for i in range(n):
        out *= a + i
    return out


def _is_nonneg_int(x: Any) -> bool:
    if isinstance(x, bool):
        return False
    if isinstance(x, int):
        return x >= 0
    if isinstance(x, float) and x.is_integer():
        return x >= 0
    return False


def _is_nonpositive_int(x: float) -> bool:
    return float(x).is_integer() and x <= 0


@dataclass(frozen=True)
class Kernel:
    family: str
    params: dict = field(default_factory=dict, compare=False)
    _key: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidKernelParam(f"unknown kernel family {self.family!r}")
        params = _validate(self.family, dict(self.params))
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "_key", (self.family, _freeze(params)))

    def __eq__(self, other):
        if not isinstance(other, Kernel):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    # -- named constructors -------------------------------------------------

    @classmethod
    def identity(cls) -> Kernel:
        return cls("identity")

    @classmethod
    def ruscheweyh(cls, k: int) -> Kernel:
        return cls("ruscheweyh", {"k": k})

    @classmethod
    def salagean(cls, m: int) -> Kernel:
        return cls("salagean", {"m": m})

    @classmethod
    def owa_srivastava(cls, delta: float) -> Kernel:
        return cls("owa_srivastava", {"delta": delta})

    @classmethod
    def multiplier(cls, r: int, lam: float) -> Kernel:
        return cls("multiplier", {"r": r, "lambda": lam})

    @classmethod
    def dziok_srivastava(cls, numer: Sequence[float], denom: Sequence[float]) -> Kernel:
        return cls("dziok_srivastava", {"numer": list(numer), "denom": list(denom)})

    @classmethod
    def from_coefficients(cls, b: Sequence[float]) -> Kernel:
        """Kernel with explicit ``b_2, b_3, ...``; used for the generic-``g`` statements."""
        return cls("coefficients", {"b": list(b)})

    # -- coefficients -------------------------------------------------------

    def coeff(self, n: int) -> float:
        return coeff(self, n)

    @property
    def b2(self) -> float:
        return coeff(self, 2)

    @property
    def b3(self) -> float:
        return coeff(self, 3)

    def series(self, order: int) -> TruncSeries:
        return kernel_series(self, order)

    def label(self) -> str:
        p = self.params
        if self.family == "identity":
            return "identity"
        if self.family == "multiplier":
            return f"multiplier:{_fmt(p['r'])},{_fmt(p['lambda'])}"
        if self.family == "dziok_srivastava":
            num = ",".join(_fmt(x) for x in p["numer"])
            den = ",".join(_fmt(x) for x in p["denom"])
            return f"dziok_srivastava:{num}/{den}"
        if self.family == "coefficients":
            return "coefficients:" + ",".join(_fmt(x) for x in p["b"])
        (value,) = p.values()
        return f"{self.family}:{_fmt(value)}"

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {"family": self.family, "params": dict(self.params)}

    @classmethod
    def from_dict(cls, d: dict) -> Kernel:
        try:
            return cls(d["family"], dict(d.get("params", {})))
        except (KeyError, TypeError) as exc:
            raise InvalidKernelParam(f"malformed kernel descriptor {d!r}") from exc


def _fmt(x) -> str:
    if isinstance(x, float) and x.is_integer():
        return str(int(x))
    return str(x)


def _freeze(params: dict) -> tuple:
    return tuple(sorted((k, tuple(v) if isinstance(v, list) else v) for k, v in params.items()))


def _validate(family: str, p: dict) -> dict:
    def need(*names):
        missing = [n for n in names if n not in p]
        extra = [n for n in p if n not in names]
        if missing or extra:
            raise InvalidKernelParam(
                f"{family} expects params {list(names)}, got {sorted(p)}"
            )

    if family == "identity":
        need()
    elif family in ("ruscheweyh", "salagean"):
        name = "k" if family == "ruscheweyh" else "m"
        need(name)
        if not _is_nonneg_int(p[name]):
            raise InvalidKernelParam(f"{family} {name} must be a non-negative integer, got {p[name]!r}")
        p[name] = int(p[name])
    elif family == "owa_srivastava":
        need("delta")
        delta = float(p["delta"])
        # delta < 1 also rules out the excluded values 2, 3, 4, ...
        if not delta < 1:
            raise InvalidKernelParam(f"owa_srivastava needs delta < 1, got {delta}")
        p["delta"] = delta
    elif family == "multiplier":
        need("r", "lambda")
        if not _is_nonneg_int(p["r"]):
            raise InvalidKernelParam(f"multiplier r must be a non-negative integer, got {p['r']!r}")
        lam = float(p["lambda"])
        if not lam > -1:
            raise InvalidKernelParam(f"multiplier lambda must exceed -1, got {lam}")
        p["r"], p["lambda"] = int(p["r"]), lam
    elif family == "dziok_srivastava":
        need("numer", "denom")
        numer = [float(x) for x in p["numer"]]
        denom = [float(x) for x in p["denom"]]
        bad = [b for b in denom if _is_nonpositive_int(b)]
        if bad:
            raise InvalidKernelParam(f"dziok_srivastava denominator parameters {bad} are non-positive integers")
        p["numer"], p["denom"] = numer, denom
    elif family == "coefficients":
        need("b")
        b = [float(x) for x in p["b"]]
        if not all(math.isfinite(x) for x in b):
            raise InvalidKernelParam("coefficients must be finite")
        p["b"] = b
    return p


def _owa_coeff(delta: float, n: int) -> float:
    if n + 1 <= _GAMMA_SAFE:
        return math.gamma(n + 1) * math.gamma(2 - delta) / math.gamma(n + 1 - delta)
    # b_{j+1} / b_j = (j+1) / (j+1-delta)
    b = _owa_coeff(delta, int(_GAMMA_SAFE) - 1)
    for j in range(int(_GAMMA_SAFE) - 1, n):
        b *= (j + 1) / (j + 1 - delta)
    return b


def coeff(k: Kernel, n: int) -> float:
    """The coefficient ``b_n`` of ``k`` (``n >= 1``)."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidKernelParam(f"coefficient index must be a positive integer, got {n!r}")
    if n == 1:
        return 1.0
    p = k.params
    fam = k.family
    if fam == "identity":
        return 1.0
    if fam == "ruscheweyh":
        return float(math.comb(n + p["k"] - 1, p["k"]))
    if fam == "salagean":
        return float(n ** p["m"])
    if fam == "owa_srivastava":
        return _owa_coeff(p["delta"], n)
    if fam == "multiplier":
        return ((n + p["lambda"]) / (1 + p["lambda"])) ** p["r"]
    if fam == "dziok_srivastava":
        num = math.prod(pochhammer(a, n - 1) for a in p["numer"])
        den = math.prod(pochhammer(b, n - 1) for b in p["denom"])
        return num / (den * math.factorial(n - 1))
    # coefficients
    b = p["b"]
    return b[n - 2] if n - 2 < len(b) else 0.0


def kernel_series(k: Kernel, order: int) -> TruncSeries:
    """``g(z)`` truncated at ``order``."""
    if order < 3:
        raise InvalidKernelParam(f"kernel series needs order >= 3, got {order}")
    return TruncSeries([0.0] + [coeff(k, n) for n in range(1, order + 1)], order)


def parse_kernel(text: str) -> Kernel:
    """Parse the flag grammar ``family[:p1,p2,...]``.

    Dziok-Srivastava takes ``numer/denom`` lists, e.g. ``dziok_srivastava:2,1/1``.
    ``owa`` and ``dziok`` are accepted as short names.
    """
    name, _, rest = text.strip().partition(":")
    name = {"owa": "owa_srivastava", "dziok": "dziok_srivastava"}.get(name.lower(), name.lower())
    try:
        if name == "identity":
            if rest:
                raise InvalidKernelParam("identity takes no parameters")
            return Kernel.identity()
        if name == "dziok_srivastava":
            num, _, den = rest.partition("/")
            numer = [float(x) for x in num.split(",") if x]
            denom = [float(x) for x in den.split(",") if x]
            return Kernel.dziok_srivastava(numer, denom)
        values = [v for v in rest.split(",") if v]
        if name == "ruscheweyh":
            (v,) = values
            return Kernel.ruscheweyh(_as_int(v))
        if name == "salagean":
            (v,) = values
            return Kernel.salagean(_as_int(v))
        if name == "owa_srivastava":
            (v,) = values
            return Kernel.owa_srivastava(float(v))
        if name == "multiplier":
            r, lam = values
            return Kernel.multiplier(_as_int(r), float(lam))
        if name == "coefficients":
            return Kernel.from_coefficients([float(v) for v in values])
    except ValueError as exc:
        if isinstance(exc, InvalidKernelParam):
            raise
        raise InvalidKernelParam(f"cannot parse kernel {text!r}: {exc}") from exc
    raise InvalidKernelParam(f"unknown kernel family in {text!r}")


def _as_int(text: str) -> int:
    x = float(text)
    if not x.is_integer():
        raise InvalidKernelParam(f"expected an integer, got {text!r}")
    return int(x)
