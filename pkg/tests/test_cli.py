import io
import json
from pathlib import Path

import pytest

from superres.cli import run

FIXTURE = str(Path(__file__).parent / "fixtures" / "f4_extrapolated.txt")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return out


def test_lop_example():
    assert ok("lop", "--family", "osp2", "--n", "2", "--weight", "0|0,0") == '{"result":"-1|1,0"}\n'


def test_complexity_example():
    out = ok("complexity", "--family", "osp2", "--n", "1", "--module", "simple", "--label", "0")
    assert json.loads(out) == {"c": 3}


def test_resolve_example():
    out = ok("resolve", "--family", "osp32", "--module", "simple", "--label", "0", "--d", "4",
             "--format", "json")
    assert json.loads(out)["count"] == 3


def test_linv_and_orbit():
    assert json.loads(ok("linv", "--n", "2", "--weight", "0|0,0")) == {"result": "4|0,0"}
    out = json.loads(ok("orbit", "--n", "1", "--weight", "0|0", "--from", "-1", "--to", "1"))
    assert out == {"orbit": [{"l": -1, "weight": "2|0"}, {"l": 0, "weight": "0|0"},
                             {"l": 1, "weight": "-1|1"}]}


def test_atyp_and_diagram():
    out = json.loads(ok("atyp", "--n", "2", "--weight", "0|0,0"))
    assert out["degree"] == 1
    json.loads(ok("diagram", "--n", "2", "--weight", "0|0,0"))
    json.loads(ok("fcoords", "--n", "2", "--weight", "0|0,0"))


def test_dims():
    assert json.loads(ok("dim", "--system", "g2", "--hw", "0,1")) == {"dim": "14"}
    assert json.loads(ok("kacdim", "--n", "2", "--weight", "0|0,0")) == {"dim": "16"}


def test_report_and_csv():
    argv = ["complexity", "--family", "osp2", "--n", "1", "--label", "0", "--dmax", "120"]
    rep = json.loads(ok(*argv, "--report"))
    assert rep["c"] == 3 and rep["window"] == [16, 120]
    lines = ok(*argv, "--format", "csv").splitlines()
    assert lines[0] == "d,dim_lower,dim_upper,count" and len(lines) == 1 + 105
    z = json.loads(ok("zcomplexity", "--family", "osp2", "--n", "1", "--module", "kac",
                      "--label", "0", "--dmax", "120"))
    assert z == {"z": 1}


def test_table_format():
    out = ok("resolve", "--family", "osp2", "--n", "2", "--label", "0", "--d", "3",
             "--format", "table")
    lines = out.splitlines()
    assert lines[0].split() == ["index", "label", "mult"]
    assert [ln.split()[1] for ln in lines[1:]] == ["-3|3,0", "-1|1,0", "4|0,0", "6|2,0"]


def test_geom_and_f4_table():
    rep = json.loads(ok("geom", "--family", "osp2", "--n", "2", "--kind", "simple",
                        "--atypical", "1"))
    assert rep["identity_c"] is True
    out = json.loads(ok("resolve", "--family", "f4", "--table", FIXTURE, "--label", "0",
                        "--d", "1"))
    assert "extrapolated" in out["flags"]


@pytest.mark.parametrize("argv", [
    [],
    ["lop", "--n", "2"],
    ["lop", "--n", "2", "--weight", "garbage"],
    ["lop", "--n", "0", "--weight", "0|"],
    ["resolve", "--family", "f4", "--label", "0", "--d", "1"],
    ["resolve", "--family", "osp2", "--n", "1", "--label", "0", "--d", "-1"],
    ["complexity", "--family", "osp2", "--n", "1", "--label", "0", "--dmin", "16", "--dmax", "20"],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    line = err.strip().splitlines()[-1]
    assert json.loads(line)["code"] == 2


def test_domain_error_for_typical_lop():
    code, _, err = call("lop", "--n", "1", "--weight", "1/2|0")
    assert code == 2 and json.loads(err)["code"] == 2


def test_inconsistency_exit(monkeypatch):
    from superres import growth

    real = growth.term

    class Fake:
        def __init__(self, t):
            self.dim_lower, self.dim_upper, self.count = t.dim_lower, t.dim_upper * t.d, t.count

    monkeypatch.setattr(growth, "term", lambda desc, d: Fake(real(desc, d)))
    code, _, err = call("complexity", "--family", "osp32", "--label", "0", "--dmax", "160")
    assert code == 3 and json.loads(err)["code"] == 3


def test_verify_failure_exit(monkeypatch):
    from superres import cli

    monkeypatch.setitem(cli.COMMANDS, "verify", lambda args: {"pass": False, "suites": []})
    assert call("verify", "--suite", "counts")[0] == 4


def test_deterministic_output():
    argv = ["resolve", "--family", "g3", "--k", "1", "--label", "2", "--d", "5"]
    assert ok(*argv) == ok(*argv)
