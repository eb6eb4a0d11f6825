import io
import json
import subprocess
import sys

import pytest

from skewhall.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_product_worked_example():
    code, out, _ = call("product", "--cat", "a,gr,origin", "--n", "2", "(0,0);(1,0);(0,1)", "(0,0);(1,0)")
    assert code == 0
    assert out.startswith("3 terms")
    assert "δ[(0,0);(0,1);(1,0);(2,0);(3,0)]" in out


def test_product_json():
    code, out, _ = call("product", "--cat", "a,gr,origin", "--format", "json", "(0,0);(1,0);(0,1)", "(0,0);(1,0)")
    doc = json.loads(out)
    assert code == 0 and doc["version"] == 1 and len(doc["result"]) == 3
    assert all(t["coeff"] == "1/1" for t in doc["result"])


def test_bracket():
    code, out, _ = call("bracket", "--cat", "a,gr,origin", "--format", "json", "(0,0);(1,0);(0,1)", "(0,0);(1,0)")
    coeffs = sorted(t["coeff"] for t in json.loads(out)["result"])
    assert code == 0 and coeffs == ["-1/1"] * 3 + ["1/1"] * 2


def test_verify_bialgebra():
    code, out, _ = call("verify", "bialgebra", "--cat", "a,gr,origin", "--n", "2", "--bound", "5")
    assert code == 0 and out.strip().endswith("PASS")


def test_empty_shape_listing():
    code, out, _ = call("enumerate-shapes", "--n", "2", "--k", "0", "--format", "json")
    assert code == 0 and json.loads(out)["result"] == [[]]


def test_enumerate_shapes_text():
    code, out, _ = call("enumerate-shapes", "--n", "2", "--k", "3")
    assert code == 0 and out.splitlines()[0] == "4 shapes"


def test_domain_error():
    code, _, err = call("render", "(0,0);(1,1)")
    assert code == 1 and "NotConvex" in err


def test_usage_errors():
    assert call("product", "--cat", "zz", "(0,0)", "(0,0)")[0] == 2
    assert call("no-such-verb")[0] == 2
    assert call("product", "(0,0);oops", "(0,0)")[0] == 2
    assert call("product", '{"n":2,"size":2,"action":[[0,2,2],[0,1,0]]}', "(0,0)")[0] == 2


def test_resource_cap():
    code, _, err = call("enumerate-modules", "--n", "2", "--d", "5", "--cap", "50")
    assert code == 3 and "cap" in err


def test_cap_from_environment():
    env = {"SKEWHALL_MAX_ELEMENTS": "50", "PATH": ""}
    proc = subprocess.run(
        [sys.executable, "-m", "skewhall.cli", "enumerate-modules", "--n", "2", "--d", "5"], capture_output=True, text=True, env=env
    )
    assert proc.returncode == 3


def test_parallel_output_identical():
    a = call("enumerate-modules", "--n", "2", "--d", "4", "--cat", "origin", "--jobs", "1")[1]
    b = call("enumerate-modules", "--n", "2", "--d", "4", "--cat", "origin", "--jobs", "3")[1]
    assert a == b


def test_coproduct_and_dual():
    code, out, _ = call("coproduct", "(0,0) + (0,0)", "--format", "json")
    assert code == 0 and len(json.loads(out)["result"]) == 3
    code, out, _ = call("dual-coproduct", "(0);(1)")
    assert code == 0 and out.startswith("3 terms")


def test_tableaux_verb():
    code, out, _ = call("tableaux", "(0,1);(0,2);(1,0);(1,1);(2,0);(3,0)", "--count")
    lines = out.splitlines()
    assert code == 0 and lines[0].split()[0] == lines[1].split()[0]


def test_render_entries():
    code, out, _ = call("render", "(0,0);(1,0);(0,1)", "--entries", "1,3,2")
    assert code == 0 and out == "[3]\n[1][2]\n"


@pytest.mark.parametrize("suite", ["classification", "antipode", "pairing", "tableaux", "ladders"])
def test_other_suites(suite):
    assert call("verify", suite, "--cat", "a,gr,origin", "--bound", "4")[0] == 0


def test_verify_failure_exit_code(monkeypatch):
    from skewhall import checks
    from skewhall.hall import AxiomReport

    def broken(*args, **kwargs):
        r = AxiomReport("broken", 1)
        r.record("x", False, "witness")
        return r

    monkeypatch.setattr(checks, "check_bialgebra", broken)
    code, out, _ = call("verify", "bialgebra")
    assert code == 1 and "witness" in out
