import io
import json

import pytest

from qplab import closed_forms as cf
from qplab.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestEnumerate:
    def test_count(self):
        assert run("enumerate", "--distinct", "--norm", "14", "--filter", "i=1,j=1", "--emit", "count") == (0, "10\n")

    def test_list(self):
        code, out = run("enumerate", "--max-part", "3", "--norm", "10", "--filter", "alt=2", "--emit", "list")
        lines = out.split()
        assert code == 0 and len(lines) == 9
        assert lines[0] == "(3,3,3,1)" and lines[-1] == "(2,1,1,1,1,1,1,1,1)"

    def test_empty_partition(self):
        assert run("enumerate", "--max-part", "1", "--norm", "0", "--emit", "list") == (0, "()\n")

    def test_gf(self):
        code, out = run("enumerate", "--distinct", "--max-part", "2", "--emit", "gf", "--weight", "qtz")
        assert (code, out.strip()) == (0, "1 + q*t + q^2 + q^3*z")

    def test_gollnitz(self):
        code, out = run("enumerate", "--gollnitz-gap", "--norm", "10")
        assert out.split() == ["(10)", "(8,2)", "(7,3)", "(6,4)"]

    def test_json(self):
        code, out = run("enumerate", "--max-norm", "2", "--output", "json")
        assert json.loads(out) == {"partitions": [[2], [1, 1], [1], []]}

    @pytest.mark.parametrize("argv", [
        ("enumerate", "--distinct"),
        ("enumerate", "--norm", "4", "--filter", "i"),
        ("enumerate", "--norm", "4", "--filter", "i=x"),
        ("enumerate", "--norm", "4", "--filter", "boulet=1"),
        ("enumerate", "--norm", "4", "--max-norm", "5"),
        ("enumerate", "--max-part", "-1", "--max-parts", "2"),
        ("enumerate", "--emit", "svg"),
    ])
    def test_usage_errors(self, argv):
        assert run(*argv)[0] == 2


class TestVerify:
    def test_pass(self):
        code, out = run("verify", "--id", "T3_1", "--param", "bound=5", "--param", "k=-1")
        assert code == 0 and ": Pass" in out

    def test_rational(self):
        code, out = run("verify", "--id", "T6_4", "--param", "N=2", "--param", "nu=1",
                        "--mode", "rational", "--points", "20", "--seed", "182")
        assert code == 0 and "[rational:20:182]: Pass" in out

    def test_seed_from_environment(self, monkeypatch):
        monkeypatch.setenv("QPLAB_SEED", "9")
        code, out = run("verify", "--id", "T6_4", "--param", "N=1", "--param", "nu=0",
                        "--mode", "rational", "--points", "3")
        assert code == 0 and "rational:3:9" in out

    def test_unknown_id(self):
        assert run("verify", "--id", "NOPE")[0] == 2

    def test_missing_param(self):
        assert run("verify", "--id", "T2_1", "--param", "bound=3")[0] == 2

    def test_conflicting_flags(self):
        assert run("verify", "--id", "T2_1", "--param", "bound=3,i=0,j=0", "--mode", "exact",
                   "--cutoff", "4")[0] == 2
        assert run("verify", "--id", "T3_2", "--param", "bound=3,k=0", "--cutoff", "4")[0] == 2

    def test_failure_exit_code(self, monkeypatch):
        original = cf.p_distinct_closed
        monkeypatch.setattr(cf, "p_distinct_closed", lambda b, i, j: original(b, i, j) * 2)
        code, out = run("verify", "--id", "T2_1", "--param", "bound=3,i=1,j=0", "--output", "json")
        report = json.loads(out)
        assert code == 1 and report["status"] == "Fail"
        assert report["first_discrepancy"] == {"check": "closed form vs enumeration", "monomial": "q",
                                               "lhs": 2, "rhs": 1}

    def test_json_schema(self):
        code, out = run("verify", "--id", "T2_1", "--param", "bound=3,i=1,j=0", "--output", "json")
        report = json.loads(out)
        assert {"id", "params", "mode", "status", "lhs", "rhs", "first_discrepancy",
                "elapsed_ms"} <= report.keys()
        assert report["params"] == {"bound": 3, "i": 1, "j": 0}


class TestSuite:
    def test_smoke_with_report(self, tmp_path):
        path = tmp_path / "r.json"
        code, out = run("suite", "--name", "smoke", "--report", str(path))
        data = json.loads(path.read_text())
        assert code == 0 and out.strip().endswith("0 fail, 0 error")
        assert data["summary"]["fail"] == 0 and len(data["reports"]) == data["summary"]["pass"]

    def test_text_output_is_stable(self):
        assert run("suite", "--name", "smoke") == run("suite", "--name", "smoke")

    def test_injected_failure(self, monkeypatch):
        original = cf.bg_closed
        monkeypatch.setattr(cf, "bg_closed", lambda *a, **k: -original(*a, **k))
        code, out = run("suite", "--name", "smoke")
        assert code == 1 and "T3_1" in out and "first discrepancy" in out

    def test_bad_jobs(self):
        assert run("suite", "--jobs", "0")[0] == 2


class TestTable:
    def test_table2(self):
        code, out = run("table", "table2")
        assert code == 0 and "p(1,1,14) = 10" in out and "p'(1,1,14) = 10" in out

    def test_table7(self):
        code, out = run("table", "table7")
        assert "A_{5,3}(10,2) = 4" in out and "B_{3,5}(10,2) = 4" in out

    def test_table8(self):
        code, out = run("table", "table8")
        assert code == 0 and "P~_7(0,1,2,q) = q^9 + q^11 + q^13 + q^15" in out

    def test_json(self):
        code, out = run("table", "table6", "--output", "json")
        rows = json.loads(out)["rows"]
        assert [r["count"] for r in rows] == [9, 9] and all(r["ok"] for r in rows)

    def test_unknown(self):
        assert run("table", "table9")[0] == 2


def test_list():
    code, out = run("list", "--output", "json")
    assert code == 0 and len(json.loads(out)) == 46


def test_no_command():
    assert run()[0] == 2
