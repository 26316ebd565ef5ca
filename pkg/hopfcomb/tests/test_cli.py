import json

import pytest
from six import StringIO

from hopfcomb.cli import run
from hopfcomb.config import set_limit

@pytest.fixture(autouse=True)
def reset_limit():
    yield
    set_limit(None)

def call(*argv):
    out, err = StringIO(), StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()

def test_product():
    code, out, _ = call("product", "--algebra", "eqsym", "--basis", "M", "1", "22")
    assert code == 0
    assert out == "M[133] + M[223] + M[323]\n"

def test_count():
    code, out, _ = call("count", "--family", "parking-stalactic", "5")
    assert (code, out) == (0, "501\n")

def test_stalactic_subcommands():
    assert call("stalactic", "count", "endofunctions", "4")[:2] == (0, "136\n")
    code, out, _ = call("stalactic", "triangle", "lah", "4")
    assert out.splitlines()[-1] == "1 12 36 24"
    code, out, _ = call("stalactic", "insert", "cabccdbdd")
    assert code == 0
    assert out.splitlines()[0] == "c a b d"
    assert out.splitlines()[-1] == "Q = {1,4,5|2|3,7|6,8,9}"

def test_verify():
    code, out, _ = call("verify", "--algebra", "phisym", "--max-degree", "4")
    assert code == 0
    assert "cocommutative: yes" in out

@pytest.mark.parametrize("check, degree", [
    ("qs-confluence", "4"),
    ("sym-embed-identities", "3"),
    ("stalactic-q-fiber", "3"),
    ("phisym-ssecond-sgsym", "3"),
])
def test_verify_check(check, degree):
    code, out, _ = call("verify", "--check", check, "--max-degree", degree)
    assert (code, out) == (0, check + ": pass\n")

def test_verify_needs_a_target():
    code, _, err = call("verify")
    assert code == 2
    assert "verify needs --algebra or --check" in err

def test_unknown_algebra():
    code, out, err = call("product", "--algebra", "nosuch", "1")
    assert code == 2
    assert out == ""
    assert "Unknown algebra" in err
    assert "usage:" in err

def test_bad_arguments():
    assert call("product")[0] == 2
    assert call("triangle", "nosuch", "3")[0] == 2

def test_json_output():
    code, out, _ = call("coproduct", "--algebra", "ncsf-q", "--format", "json", "2")
    response = json.loads(out)
    assert code == 0
    assert response["status"] == "success"
    assert response["result"]["basis"] == ["S", "S"]

def test_specialize():
    code, out, _ = call("product", "--algebra", "qsym-q", "--q", "0", "1", "1")
    assert out == "M[(1,1)] + M[(2)]\n"

def test_limit():
    code, _, err = call("product", "--algebra", "eqsym", "--limit", "2", "1", "22")
    assert code == 2
    assert "exceeds the configured limit 2" in err
