import csv
import io
import json
import subprocess
import sys

import pytest

from fsbounds.bounds import BoundReport, Regime
from fsbounds.cli import ExtremalRecord, LemmaRow, TableRow, format_number, parse_mu, run
from fsbounds.errors import ConfigError
from fsbounds.oracle import VerifyReport

STAR = ["--alpha", "0", "--kernel", "identity", "--target", "janowski:1,-1"]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def test_bound_starlike_example():
    status, out, _ = call("bound", *STAR, "--mu", "0")
    assert status == 0
    doc = json.loads(out)
    assert doc["bound"] == pytest.approx(3, abs=1e-12)
    assert doc["regime"] == "Below"
    assert BoundReport.from_dict(doc).regime is Regime.BELOW


def test_bound_convex_example():
    status, out, _ = call("bound", "--alpha", "1", "--kernel", "identity", "--target", "janowski:1,-1", "--mu", "1")
    doc = json.loads(out)
    assert status == 0
    assert doc["bound"] == pytest.approx(1 / 3, abs=1e-12) and doc["regime"] == "Middle"


def test_verify_salagean_example():
    status, out, _ = call("verify", "--alpha", "0", "--kernel", "salagean:1", "--target", "janowski:1,-1",
                          "--mu", "0", "--density", "400")
    assert status == 0
    r = VerifyReport.from_dict(json.loads(out))
    assert not r.violation
    assert r.theoretical_bound == pytest.approx(1, abs=1e-12)
    assert -1e-9 <= r.gap <= 5e-3


def test_bound_complex_mu():
    status, out, _ = call("bound", *STAR, "--mu", "1+2i")
    doc = json.loads(out)
    assert doc["mu"] == {"re": 1.0, "im": 2.0}
    assert doc["regime"] == "ComplexMax"
    assert doc["bound"] == pytest.approx(abs(4 * (1 + 2j) - 3))


def test_bound_range_round_trip():
    _, out, _ = call("bound", *STAR, "--mu-range", "-1", "2", "7")
    docs = json.loads(out)
    assert len(docs) == 7
    for d in docs:
        assert BoundReport.from_dict(d).to_dict() == d


def test_extremal_round_trip():
    status, out, _ = call("extremal", "--alpha", "1", "--kernel", "identity", "--target", "janowski:1,-1",
                          "--mu", "1", "--gamma", "0.5")
    assert status == 0
    doc = json.loads(out)
    recs = [ExtremalRecord.from_dict(e) for e in doc["extremals"]]
    assert [r.kind for r in recs] == ["K2", "K3", "Ggamma", "Hgamma"]
    assert [r.to_dict() for r in recs] == doc["extremals"]
    k2 = recs[0]
    assert (k2.a2, k2.a3) == pytest.approx((1, 1))
    assert recs[1].functional == pytest.approx(1 / 3)


def test_table_csv_and_json():
    argv = ["table", *STAR, "--mu-range", "-1", "2", "5", "--density", "60", "--refine", "20"]
    status, out, _ = call(*argv)
    assert status == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == TableRow.FIELDS
    assert len(rows) == 6
    assert rows[1][4] == "Below" and float(rows[1][5]) == pytest.approx(7)
    _, out_json, _ = call(*argv, "--format", "json")
    for d, r in zip(json.loads(out_json), rows[1:]):
        row = TableRow.from_dict(d)
        assert row.to_dict() == d
        assert format_number(row.bound) == r[5]


def test_lemma_round_trip():
    status, out, _ = call("lemma", "--v-range", "-1", "2", "4", "--complex-samples", "3", "--density", "60")
    assert status == 0
    docs = json.loads(out)
    assert [d["lemma"] for d in docs] == ["minda"] * 4 + ["ravi"] * 3
    for d in docs:
        row = LemmaRow.from_dict(d)
        assert row.to_dict() == d
        assert row.empirical_sup <= row.bound + 1e-9


def test_golden_outputs_are_byte_identical(tmp_path):
    argv = ["verify", *STAR, "--mu-range", "-1", "3", "5", "--density", "80", "--seed", "3"]
    _, first, _ = call(*argv)
    _, second, _ = call(*argv, "--workers", "3")
    assert first == second
    path = tmp_path / "out.json"
    assert call(*argv, "-o", str(path))[0] == 0
    assert path.read_text() == first


def test_violation_exit_status(monkeypatch):
    import fsbounds.oracle as oracle_mod

    real = oracle_mod.fs_auto

    def too_small(spec, mu):
        r = real(spec, mu)
        return BoundReport(**{**r.__dict__, "bound": r.bound * 0.9})

    monkeypatch.setattr(oracle_mod, "fs_auto", too_small)
    status, out, _ = call("verify", *STAR, "--mu", "0", "--density", "40")
    assert status == 2
    assert json.loads(out)["violation"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["bound", "--alpha", "0", "--kernel", "nope", "--target", "janowski:1,-1", "--mu", "0"],
        ["bound", "--alpha", "0", "--kernel", "identity", "--target", "janowski:2,0", "--mu", "0"],
        ["bound", "--alpha", "-1", "--kernel", "identity", "--target", "janowski:1,-1", "--mu", "0"],
        ["bound", *STAR, "--mu", "abc"],
        ["bound", *STAR],
        ["bound", *STAR, "--mu", "0", "--mu-range", "0", "1", "3"],
        ["bound", *STAR, "--mu-range", "0", "1", "0"],
        ["verify", *STAR, "--mu", "0", "--density", "4"],
        ["extremal", *STAR, "--mu", "0", "--gamma", "2"],
        ["frobnicate"],
        [],
    ],
)
def test_config_errors(argv):
    status, out, err = call(*argv)
    assert status == 1 and out == ""
    doc = json.loads(err)
    assert doc["error"] == "ConfigError" and doc["message"]


def test_parse_mu():
    assert parse_mu("0.5") == 0.5
    assert parse_mu("1+2j") == 1 + 2j
    assert parse_mu("-3i") == -3j
    with pytest.raises(ConfigError):
        parse_mu("inf")


def test_format_number():
    assert format_number(1 / 3) == "0.33333333333333331"
    assert format_number(1 + 0.5j) == "1+0.5j"
    assert format_number(2 + 0j) == "2"
    assert format_number(True) == "true"
    assert float(format_number(0.1)) == 0.1


def test_bound_csv():
    _, out, _ = call("bound", *STAR, "--mu-range", "0", "2", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["mu", "sigma1", "sigma2", "sigma3", "regime", "bound", "v"]
    assert [r[5] for r in rows[1:]] == ["3", "1", "5"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fsbounds", "bound", *STAR, "--mu", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["bound"] == pytest.approx(5)
