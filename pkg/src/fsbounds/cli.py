"""Command-line front end.

    fsbounds bound    --alpha 0 --kernel identity --target janowski:1,-1 --mu 0
    fsbounds verify   --alpha 0 --kernel salagean:1 --target janowski:1,-1 --mu 0 --density 400
    fsbounds extremal --alpha 1 --kernel identity --target janowski:1,-1 --mu 1 --gamma 0.5
    fsbounds table    --alpha 0 --kernel identity --target janowski:1,-1 --mu-range -1 2 13
    fsbounds lemma    --v-range -2 3 41 --complex-samples 20

Exit status: 0 on success, 1 on invalid input, 2 when a verification run
finds the empirical supremum above the closed-form bound.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .bounds import (
    Regime,
    decode_number,
    encode_number,
    fs_auto,
    lemma_minda,
    lemma_ravi,
)
from .errors import ConfigError, FSBoundsError
from .kernels import parse_kernel
from .oracle import EXTREMAL_KINDS, VerifyReport, extremal, lemma_sup, sup_search, sup_sweep
from .psi_map import ClassSpec
from .targets import parse_target

EXIT_OK, EXIT_CONFIG, EXIT_VIOLATION = 0, 1, 2


# -- emitted records -------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    mu: float
    sigma1: float
    sigma2: float
    sigma3: float
    regime: Regime
    bound: float
    empirical_sup: float
    gap: float

    FIELDS = ("mu", "sigma1", "sigma2", "sigma3", "regime", "bound", "empirical_sup", "gap")

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in self.FIELDS}
        d["mu"] = encode_number(self.mu)
        d["regime"] = self.regime.value
        return d

    @classmethod
    def from_dict(cls, d: dict) -> TableRow:
        return cls(
            mu=decode_number(d["mu"]),
            sigma1=float(d["sigma1"]),
            sigma2=float(d["sigma2"]),
            sigma3=float(d["sigma3"]),
            regime=Regime(d["regime"]),
            bound=float(d["bound"]),
            empirical_sup=float(d["empirical_sup"]),
            gap=float(d["gap"]),
        )


@dataclass(frozen=True)
class LemmaRow:
    lemma: str
    v: complex | float
    bound: float
    empirical_sup: float

    FIELDS = ("lemma", "v", "bound", "empirical_sup", "gap")

    @property
    def gap(self) -> float:
        return self.bound - self.empirical_sup

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "v": encode_number(self.v),
            "bound": self.bound,
            "empirical_sup": self.empirical_sup,
            "gap": self.gap,
        }

    @classmethod
    def from_dict(cls, d: dict) -> LemmaRow:
        return cls(d["lemma"], decode_number(d["v"]), float(d["bound"]), float(d["empirical_sup"]))


@dataclass(frozen=True)
class ExtremalRecord:
    kind: str
    gamma: float | None
    a2: complex | float
    a3: complex | float
    functional: float

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "gamma": self.gamma,
            "a2": encode_number(self.a2),
            "a3": encode_number(self.a3),
            "functional": self.functional,
        }

    @classmethod
    def from_dict(cls, d: dict) -> ExtremalRecord:
        g = d.get("gamma")
        return cls(d["kind"], None if g is None else float(g), decode_number(d["a2"]),
                   decode_number(d["a3"]), float(d["functional"]))


# -- formatting ------------------------------------------------------------------


def format_number(x) -> str:
    """17 significant digits, '.' decimal point, complex as ``re+imj``."""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, str):
        return x
    if isinstance(x, Regime):
        return x.value
    if isinstance(x, complex):
        if x.imag == 0:
            return format(x.real, ".17g")
        return f"{x.real:.17g}{x.imag:+.17g}j"
    return format(float(x), ".17g")


def to_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_number(x) for x in row])
    return buf.getvalue()


def to_json(doc) -> str:
    return json.dumps(doc, indent=2, allow_nan=True) + "\n"


# -- argument parsing ---------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def parse_mu(text: str) -> complex | float:
    t = text.strip().replace(" ", "").replace("i", "j")
    try:
        z = complex(t)
    except ValueError as exc:
        raise ConfigError(f"cannot parse mu {text!r}") from exc
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise ConfigError(f"mu must be finite, got {text!r}")
    return z.real if z.imag == 0 else z


def _mu_values(args) -> tuple[list, bool]:
    """The mu values requested, and whether a single value (not a list) was asked for."""
    if args.mu is not None and args.mu_range is not None:
        raise ConfigError("give either --mu or --mu-range, not both")
    if args.mu_range is not None:
        try:
            start, stop, count_f = (float(x) for x in args.mu_range)
        except ValueError as exc:
            raise ConfigError(f"bad --mu-range {args.mu_range!r}") from exc
        if not count_f.is_integer() or count_f < 1:
            raise ConfigError(f"--mu-range count must be a positive integer, got {args.mu_range[2]!r}")
        return [float(x) for x in np.linspace(start, stop, int(count_f))], False
    if args.mu is None:
        raise ConfigError("one of --mu or --mu-range is required")
    return [parse_mu(args.mu)], True


def _spec(args) -> ClassSpec:
    return ClassSpec(args.alpha, parse_kernel(args.kernel), parse_target(args.target))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fsbounds", description="Fekete-Szego bounds and their numerical verification.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp, with_mu=True, with_search=False):
        sp.add_argument("--alpha", type=float, required=True)
        sp.add_argument("--kernel", required=True, help="family[:p1,p2,...], e.g. ruscheweyh:2")
        sp.add_argument("--target", required=True, help="janowski:C,D or custom:B1,B2")
        if with_mu:
            sp.add_argument("--mu", help="real or complex, e.g. 0.5 or 1+2j")
            sp.add_argument("--mu-range", nargs=3, metavar=("START", "STOP", "COUNT"))
        if with_search:
            _search_args(sp)
        _output_args(sp)

    common(sub.add_parser("bound", help="closed-form bound(s)"))
    common(sub.add_parser("verify", help="bidisk search against the bound"), with_search=True)
    ex = sub.add_parser("extremal", help="coefficients of the extremal functions")
    common(ex)
    ex.add_argument("--gamma", type=float, default=0.5)
    common(sub.add_parser("table", help="CSV sweep over a mu range"), with_search=True)

    lm = sub.add_parser("lemma", help="coefficient-body lemmas against the bidisk search")
    lm.add_argument("--v-range", nargs=3, metavar=("START", "STOP", "COUNT"), default=["-2", "3", "41"])
    lm.add_argument("--complex-samples", type=int, default=20)
    lm.add_argument("--complex-radius", type=float, default=3.0)
    _search_args(lm)
    _output_args(lm)
    return p


def _search_args(sp):
    sp.add_argument("--density", type=int, default=400)
    sp.add_argument("--refine", type=int, default=60)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)


def _output_args(sp):
    sp.add_argument("--format", choices=("json", "csv"), default=None)
    sp.add_argument("--output", "-o", default="-", help="file path, or - for stdout")


# -- commands ---------------------------------------------------------------------


def _check_search(args):
    if args.density < 8:
        raise ConfigError(f"--density must be >= 8, got {args.density}")
    if args.refine < 0:
        raise ConfigError(f"--refine must be >= 0, got {args.refine}")
    if args.workers < 1:
        raise ConfigError(f"--workers must be >= 1, got {args.workers}")


def cmd_bound(args) -> tuple[str, int]:
    spec = _spec(args)
    mus, single = _mu_values(args)
    reports = [fs_auto(spec, mu) for mu in mus]
    if args.format == "csv":
        header = ("mu", "sigma1", "sigma2", "sigma3", "regime", "bound", "v")
        rows = [(r.mu, r.sigma1, r.sigma2, r.sigma3, r.regime, r.bound, r.v) for r in reports]
        return to_csv(header, rows), EXIT_OK
    docs = [r.to_dict() for r in reports]
    return to_json(docs[0] if single else docs), EXIT_OK


def _run_searches(args, spec, mus) -> list[VerifyReport]:
    _check_search(args)
    if args.workers == 1:
        return sup_sweep(spec, mus, args.density, args.refine, args.seed)
    return [sup_search(spec, mu, args.density, args.refine, args.seed, workers=args.workers) for mu in mus]


def cmd_verify(args) -> tuple[str, int]:
    spec = _spec(args)
    mus, single = _mu_values(args)
    reports = _run_searches(args, spec, mus)
    status = EXIT_VIOLATION if any(r.violation for r in reports) else EXIT_OK
    if args.format == "csv":
        return to_csv(VerifyReport.CSV_HEADER, [r.csv_row() for r in reports]), status
    docs = [r.to_dict() for r in reports]
    return to_json(docs[0] if single else docs), status


def cmd_extremal(args) -> tuple[str, int]:
    spec = _spec(args)
    mus, single = _mu_values(args)
    if not 0 <= args.gamma <= 1:
        raise ConfigError(f"--gamma must lie in [0, 1], got {args.gamma}")
    docs, rows = [], []
    for mu in mus:
        records = []
        for kind in EXTREMAL_KINDS:
            gamma = args.gamma if kind in ("Ggamma", "Hgamma") else None
            a2, a3 = extremal(kind, spec, gamma)
            rec = ExtremalRecord(kind, gamma, _simplify(a2), _simplify(a3), float(abs(a3 - mu * a2 * a2)))
            records.append(rec)
            rows.append((mu, kind, "" if gamma is None else gamma, rec.a2, rec.a3, rec.functional))
        docs.append({
            "mu": encode_number(mu),
            "bound": fs_auto(spec, mu).to_dict(),
            "extremals": [r.to_dict() for r in records],
        })
    if args.format == "csv":
        return to_csv(("mu", "kind", "gamma", "a2", "a3", "functional"), rows), EXIT_OK
    return to_json(docs[0] if single else docs), EXIT_OK


def _simplify(z: complex) -> complex | float:
    z = complex(z)
    return z.real if z.imag == 0 else z


def cmd_table(args) -> tuple[str, int]:
    spec = _spec(args)
    mus, _ = _mu_values(args)
    reports = _run_searches(args, spec, mus)
    rows = []
    for mu, vr in zip(mus, reports):
        br = fs_auto(spec, mu)
        rows.append(TableRow(vr.mu, br.sigma1, br.sigma2, br.sigma3, br.regime, br.bound,
                             vr.empirical_sup, br.bound - vr.empirical_sup))
    status = EXIT_VIOLATION if any(r.violation for r in reports) else EXIT_OK
    if args.format == "json":
        return to_json([r.to_dict() for r in rows]), status
    return to_csv(TableRow.FIELDS, [[getattr(r, k) for k in TableRow.FIELDS] for r in rows]), status


def cmd_lemma(args) -> tuple[str, int]:
    _check_search(args)
    try:
        start, stop, count = (float(x) for x in args.v_range)
    except ValueError as exc:
        raise ConfigError(f"bad --v-range {args.v_range!r}") from exc
    if not count.is_integer() or count < 1:
        raise ConfigError(f"--v-range count must be a positive integer, got {args.v_range[2]!r}")
    vs = np.linspace(start, stop, int(count))
    if args.complex_samples < 0:
        raise ConfigError("--complex-samples must be >= 0")
    rows = []
    for v in vs:
        res = lemma_sup(float(v), args.density, args.refine, args.seed)
        rows.append(LemmaRow("minda", float(v), lemma_minda(float(v)), res.value))
    rng = np.random.default_rng(args.seed)
    rad = args.complex_radius * np.sqrt(rng.uniform(0, 1, args.complex_samples))
    ang = rng.uniform(0, 2 * np.pi, args.complex_samples)
    for v in rad * np.exp(1j * ang):
        res = lemma_sup(complex(v), args.density, args.refine, args.seed)
        rows.append(LemmaRow("ravi", complex(v), lemma_ravi(complex(v)), res.value))
    if args.format == "csv":
        return to_csv(LemmaRow.FIELDS, [[getattr(r, k) for k in LemmaRow.FIELDS] for r in rows]), EXIT_OK
    return to_json([r.to_dict() for r in rows]), EXIT_OK


COMMANDS = {
    "bound": cmd_bound,
    "verify": cmd_verify,
    "extremal": cmd_extremal,
    "table": cmd_table,
    "lemma": cmd_lemma,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        text, status = COMMANDS[args.command](args)
    except FSBoundsError as exc:
        doc = {"error": "ConfigError", "cause": type(exc).__name__, "message": str(exc)}
        stderr.write(json.dumps(doc) + "\n")
        return EXIT_CONFIG
    if args.output in (None, "-"):
        stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return status


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
