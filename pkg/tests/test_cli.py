import json
import subprocess
import sys

import pytest

from spaltcalc import checks
from spaltcalc.arc_diagrams import ExtendedCupDiagram, extended_cup_rowstrict
from spaltcalc.cli import main
from spaltcalc.tableaux import RowStrictTableau, parse_tableau


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEnumerate:
    @pytest.mark.parametrize("argv,count", [
        (["--n", "4", "--k", "2", "--type", "1,2,3,4", "--standard"], 2),
        (["--n", "4", "--k", "2", "--type", "1,2,3,4"], 6),
        (["--n", "2", "--k", "0", "--type", "1,2"], 1),
    ])
    def test_counts(self, capsys, argv, count):
        code, out, _ = run(capsys, "enumerate", *argv)
        assert code == 0
        assert out.splitlines()[-1] == f"count: {count}"

    def test_json_roundtrip(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "5", "--k", "2", "--type", "1,3,4,5",
                           "--format", "json")
        data = json.loads(out)
        ws = [RowStrictTableau.from_json(d) for d in data["tableaux"]]
        assert [str(w) for w in ws] == [d["tableau"] for d in data["tableaux"]]
        assert "431/53" in [str(w) for w in ws] and data["count"] == len(ws)

    def test_invalid_type(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "4", "--k", "1", "--type", "2,4")
        assert code == 2 and "error" in err

    def test_type_must_match_n(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "5", "--type", "1,2,3")
        assert code == 2 and "--n" in err

    def test_k_too_large(self, capsys):
        assert run(capsys, "enumerate", "--n", "3", "--k", "2")[0] == 2


class TestDiagram:
    def test_ascii(self, capsys):
        code, out, _ = run(capsys, "diagram", "7543/631", "--standard")
        assert code == 0
        labels, arcs = out.splitlines()
        assert labels.split() == [str(p) for p in range(0, 8)]
        assert arcs.split() == ["g(", "b(", "x", "x", "b)", "g)", "b(", "b)"]

    def test_json_roundtrip(self, capsys):
        code, out, _ = run(capsys, "diagram", "6543/731", "--format", "json")
        d = ExtendedCupDiagram.from_json(json.loads(out), 7)
        assert d == extended_cup_rowstrict(parse_tableau("6543/731"))

    def test_svg_palette(self, capsys):
        _, out, _ = run(capsys, "diagram", "6543/731", "7653/431", "--format", "svg")
        assert out.startswith("<svg") and "#c00" in out and 'stroke-width="4"' in out
        _, out, _ = run(capsys, "diagram", "6543/731", "7543/631", "--format", "svg")
        assert "#000" in out and "#2a7f2a" in out and "stroke-dasharray" in out

    def test_graph(self, capsys):
        code, out, _ = run(capsys, "diagram", "6543/731", "--kind", "graph")
        assert code == 0
        for label in ("N^-1", "N^-2", "e3", "e4", "f3"):
            assert label in out
        _, out, _ = run(capsys, "diagram", "6543/731", "--kind", "graph", "--format", "svg")
        assert out.count("<path") == 5

    def test_not_standard(self, capsys):
        assert run(capsys, "diagram", "6543/731", "--standard")[0] == 2

    def test_deterministic(self, capsys):
        outs = {run(capsys, "diagram", "6543/731", "7543/631", "--format", fmt)[1]
                for fmt in ("svg", "svg")}
        assert len(outs) == 1

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "d.svg"
        code, out, _ = run(capsys, "diagram", "21/43", "--format", "svg", "--out", str(path))
        assert code == 0 and out == "" and path.read_text().startswith("<svg")


class TestCohomology:
    def test_black_pair(self, capsys):
        code, out, _ = run(capsys, "cohomology", "6543/731", "7543/631", "--format", "json")
        (row,) = json.loads(out)
        assert code == 0
        assert (row["dimension"], row["poincare"]) == (2, "1+q^2")
        assert (row["black"], row["green"], row["red"]) == (1, 2, 0)

    def test_red_pair(self, capsys):
        code, out, _ = run(capsys, "cohomology", "6543/731", "7653/431")
        assert code == 0 and "dim=0" in out and "empty intersection" in out

    def test_mirror(self, capsys):
        w = parse_tableau("6543/731")
        _, out, _ = run(capsys, "cohomology", str(w), str(w), "--format", "json")
        assert json.loads(out)[0]["dimension"] == 2 ** len(extended_cup_rowstrict(w).black_arcs)

    def test_all(self, capsys):
        code, out, _ = run(capsys, "cohomology", "--all", "--n", "4", "--k", "2",
                           "--format", "json")
        rows = json.loads(out)
        assert code == 0 and len(rows) == 36
        assert all(r["dimension"] == (0 if r["red"] else 2 ** r["independents"]) for r in rows)

    def test_mismatched(self, capsys):
        assert run(capsys, "cohomology", "21/43", "6543/731")[0] == 2


class TestAlgebra:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "algebra", "--n", "2", "--k", "1", "--format", "json")
        assert code == 0 and len(json.loads(out)["basis"]) == 5

    def test_ascii(self, capsys):
        code, out, _ = run(capsys, "algebra", "--n", "2", "--k", "1")
        assert code == 0 and out.splitlines()[0] == "dimension 5"

    def test_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("CALC_MAX_DIM", "4")
        code, _, err = run(capsys, "algebra", "--n", "2", "--k", "1")
        assert code == 2 and "CALC_MAX_DIM" in err


class TestVerify:
    def test_relations(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "relations")
        assert code == 0 and out.startswith("relations: pass")

    def test_sized(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "emptiness", "--max-n", "4",
                           "--format", "json")
        (res,) = json.loads(out)
        assert code == 0 and res["passed"] and res["checked"] > 0

    def test_unknown_suite(self, capsys):
        assert run(capsys, "verify", "--suite", "nope")[0] == 2

    def test_failure_exit(self, capsys, monkeypatch):
        def broken():
            res = checks.SuiteResult("relations")
            res.check(False, case="forced")
            return res
        monkeypatch.setitem(checks.SUITES, "relations", broken)
        code, out, _ = run(capsys, "verify", "--suite", "relations")
        assert code == 1 and "FAIL" in out and '"case": "forced"' in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spaltcalc", "enumerate", "--n", "4", "--k", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.splitlines()[-1] == "count: 6"


def test_no_command():
    assert main([]) == 2
