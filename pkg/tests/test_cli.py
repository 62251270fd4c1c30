import io
import json
import time

import pytest

from rsbent.boolfn import BooleanFunction, rotate
from rsbent.catalog import CatalogRecord, canonical_key
from rsbent.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestConstruct:
    def test_example1(self, capsys):
        code, out, _ = run(capsys, "construct", "theorem1", "--m", "6", "--gamma", "X0*X1*X2*X3*X4*X5")
        rec = json.loads(out)
        assert code == 0
        assert rec["n"] == 12 and rec["bent"] and rec["rotsym"] and rec["degree"] == 6
        assert len(rec["tt_hex"]) == 1024
        assert rec["params"] == {"m": 6, "gamma_text": "X0*X1*X2*X3*X4*X5"}

    def test_hypothesis_error(self, capsys):
        code, out, err = run(capsys, "construct", "theorem2", "--m", "4", "--t", "2")
        assert code == 2 and out == ""
        assert "m/gcd(m,t) must be odd" in err

    def test_quadratic(self, capsys):
        code, out, _ = run(capsys, "construct", "quadratic", "--m", "2", "--c", "01")
        assert code == 0 and json.loads(out)["bent"]

    @pytest.mark.parametrize(
        "argv",
        [
            ["su_tang", "--m", "4", "--reps", "7"],
            ["carlet", "--r", "1"],
            ["theorem2", "--m", "3", "--t", "1", "--gamma", "X0*X1*X2"],
            ["mm", "--m", "3", "--seed", "5"],
            ["mm", "--m", "2", "--pi", "2,0,3,1", "--h", "6"],
        ],
    )
    def test_families_bent(self, capsys, argv):
        code, out, _ = run(capsys, "construct", *argv)
        assert code == 0 and json.loads(out)["bent"]

    def test_missing_param(self, capsys):
        code, _, err = run(capsys, "construct", "theorem2", "--m", "3")
        assert code == 2 and "--t" in err

    def test_spectral_cap_flag(self, capsys):
        code, _, err = run(capsys, "construct", "theorem1", "--m", "3", "--spectral-cap", "4")
        assert code == 2 and "cap" in err

    def test_deterministic(self, capsys):
        _, a, _ = run(capsys, "construct", "mm", "--m", "3", "--seed", "11")
        _, b, _ = run(capsys, "construct", "mm", "--m", "3", "--seed", "11")
        assert a == b

    def test_check_reproduces_record(self, capsys):
        _, out, _ = run(capsys, "construct", "theorem2", "--m", "5", "--t", "2", "--gamma", "X0*X1*X2+X1*X2*X3+X2*X3*X4+X0*X3*X4+X0*X1*X4")
        rec = json.loads(out)
        _, out, _ = run(capsys, "check", rec["tt_hex"], "--n", str(rec["n"]))
        rep = json.loads(out)
        assert (rep["bent"], rep["rotsym"], rep["degree"]) == (rec["bent"], rec["rotsym"], rec["degree"])


class TestCheck:
    def test_pair_products(self, capsys):
        f = BooleanFunction.from_bits(4, [(u & 1) & (u >> 2 & 1) ^ (u >> 1 & 1) & (u >> 3 & 1) for u in range(16)])
        code, out, _ = run(capsys, "check", f.to_hex(), "--n", "4")
        assert code == 0
        assert json.loads(out) == {"bent": True, "rotsym": True, "degree": 2, "nonlinearity": 6}

    def test_zero(self, capsys):
        _, out, _ = run(capsys, "check", "0000", "--n", "4")
        rep = json.loads(out)
        assert rep["bent"] is False and rep["degree"] == 0

    def test_truncated(self, capsys):
        code, out, err = run(capsys, "check", "000", "--n", "4")
        assert code == 2 and out == "" and "digits" in err


def test_spectrum(capsys):
    code, out, _ = run(capsys, "spectrum", "8", "--n", "2")
    assert code == 0 and json.loads(out) == [2, 2, 2, -2]


class TestVerifyPaper:
    def test_restricted_fast(self, capsys):
        start = time.perf_counter()
        code, out, err = run(capsys, "verify-paper", "--max-m", "4")
        assert time.perf_counter() - start < 10
        assert code == 0 and json.loads(out)["passed"]
        assert "PASS" in err

    def test_full(self, capsys):
        code, out, _ = run(capsys, "verify-paper")
        report = json.loads(out)
        assert code == 0 and report["passed"]
        names = {c["name"] for c in report["checks"]}
        assert {"lemma2_identities", "pi_permutation", "quadratic_gcd_vs_spectrum", "su_tang_extraction"} <= names

    def test_injected_fault(self, capsys):
        code, out, err = run(capsys, "verify-paper", "--max-m", "4", "--inject-fault")
        report = json.loads(out)
        assert code == 1
        assert sum(len(c["failures"]) for c in report["checks"]) == 1
        assert "failing tuple" in err


class TestCatalog:
    def records(self, capsys, *argv_list):
        lines = []
        for argv in argv_list:
            _, out, _ = run(capsys, "construct", *argv)
            lines.append(out)
        return "".join(lines)

    def test_add_then_skip(self, capsys, monkeypatch, tmp_path):
        path = tmp_path / "cat.jsonl"
        stream = self.records(
            capsys, ["theorem1", "--m", "3"], ["theorem1", "--m", "3", "--gamma", "X0*X1*X2"]
        )
        code, out, _ = run(capsys, "catalog", str(path), stdin=stream, monkeypatch=monkeypatch)
        assert code == 0 and json.loads(out) == {"added": 2, "skipped": 0}
        content = path.read_text()
        code, out, _ = run(capsys, "catalog", str(path), stdin=stream, monkeypatch=monkeypatch)
        assert json.loads(out) == {"added": 0, "skipped": 2}
        assert path.read_text() == content

    def test_rotation_is_duplicate(self, capsys, monkeypatch, tmp_path):
        path = tmp_path / "cat.jsonl"
        stream = self.records(capsys, ["theorem1", "--m", "3", "--gamma", "X0*X1"])
        run(capsys, "catalog", str(path), stdin=stream, monkeypatch=monkeypatch)
        rec = json.loads(stream)
        f = rotate(BooleanFunction.from_hex(rec["tt_hex"], rec["n"]), 1)
        assert f.to_hex() != rec["tt_hex"]
        rotated = dict(rec, tt_hex=f.to_hex(), canonical_key="", family="external")
        code, out, _ = run(capsys, "catalog", str(path), stdin=json.dumps(rotated) + "\n", monkeypatch=monkeypatch)
        assert json.loads(out) == {"added": 0, "skipped": 1}

    def test_malformed_existing_aborts(self, capsys, monkeypatch, tmp_path):
        path = tmp_path / "cat.jsonl"
        path.write_text("{not json\n")
        stream = self.records(capsys, ["theorem1", "--m", "2"])
        code, _, err = run(capsys, "catalog", str(path), stdin=stream, monkeypatch=monkeypatch)
        assert code == 2 and "malformed" in err
        assert path.read_text() == "{not json\n"

    def test_unwritable(self, capsys, monkeypatch, tmp_path):
        stream = self.records(capsys, ["theorem1", "--m", "2"])
        code, _, _ = run(capsys, "catalog", str(tmp_path / "missing" / "c.jsonl"), stdin=stream, monkeypatch=monkeypatch)
        assert code == 2

    def test_canonical_key_rotation_invariant(self):
        f = BooleanFunction.from_int(5, 0x1234ABCD)
        keys = {canonical_key(rotate(f, s)) for s in range(5)}
        assert len(keys) == 1
        assert len(keys.pop()) == 8

    def test_record_from_dict_fills_key(self):
        rec = CatalogRecord.from_dict(
            {"family": "external", "params": {}, "n": 2, "tt_hex": "8", "degree": 2, "bent": True, "rotsym": True}
        )
        assert rec.canonical_key == "8"
