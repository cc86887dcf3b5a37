import json
import os
import subprocess

import pytest

import superstar as ss


@pytest.fixture
def sig():
    return ss.Signature(1, 1, 1)


def test_generator_table(sig):
    p1, q1, t1, t2 = (sig.parse(x) for x in ("p1", "q1", "t1", "t2"))
    assert str(ss.star(p1, q1)) == "p1*q1 + 1/2*h"
    assert str(ss.commutator(p1, q1)) == "h"
    assert str(ss.star(t1, t1)) == "-1/2*h"
    assert str(ss.star(t2, t2)) == "1/2*h"
    assert (ss.star(t1, t2) + ss.star(t2, t1)).is_zero()


def test_bracket_and_defect(sig):
    f = sig.parse("p1^2*q1")
    g = sig.parse("p1*q1^2")
    assert str(ss.bracket(sig.parse("p1"), sig.parse("q1"))) == "1"
    assert str(ss.bd1_defect(f, g)) == "-1/2*h^3"
    assert ss.classical_limit(ss.star(f, g)) == f * g


def test_polynomial_arithmetic(sig):
    f = ss.parse("t2*t1", sig)
    assert str(f) == "-1*t1*t2"
    assert f.parity == 0
    assert sig.parse("p1 + t1").parity is None
    assert (f - f).is_zero()
    assert repr(-f) == "SuperPolynomial('t1*t2')"


def test_errors(sig):
    with pytest.raises(ss.ParseError):
        sig.parse("p1 +")
    with pytest.raises(ss.MathError):
        ss.star(sig.parse("p1"), ss.Signature(2).parse("p1"))
    with pytest.raises(ss.MathError):
        ss.Signature(1, 1, 1, eps=[1, 1])


def test_weyl_clifford(sig):
    assert str(ss.normal_order(sig, "q1 p1")) == "p1*q1 - h"
    assert str(ss.normal_order(sig, "p1 q1", star_basis=True)) == "p1*q1 + 1/2*h"
    checked, mismatches = ss.iso_check(sig, 3)
    assert checked == 1 + 4 + 16 + 64
    assert mismatches == []


def test_membership():
    even = ss.Signature(1)
    assert ss.is_sp_member(even, json.dumps({"A": [[1, 1], [0, 1]]}))
    assert not ss.is_sp_member(even, json.dumps({"A": [[1, 1], ["1/2", 1]]}))
    assert ss.is_sp_member(even, json.dumps({"A": [[0, 1], [0, 0]]}), lie=True)


def test_jets():
    sig = ss.Signature(1, 2, 0)
    f = sig.parse("p1^3*t1 + q1*t2")
    assert all(d.is_zero() for d in ss.jet_flatness_defect(f))
    assert ss.taylor_jet(sig.parse("q1"), 1).signature.n == 2


def test_run_command():
    code, out, _ = ss.run_command(["star", "--sig", "1,1,1", "p1", "q1"])
    assert code == 0
    assert out == "p1*q1 + 1/2*h\n"
    code, _, err = ss.run_command(["star", "--sig", "1,1,1", "p1 +", "q1"])
    assert code == 1
    assert "parse error" in err


@pytest.mark.skipif("SUPERSTAR_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary():
    result = subprocess.run(
        [os.environ["SUPERSTAR_CLI"], "bracket", "--sig", "1,1,1", "--json", "p1", "q1"],
        capture_output=True,
        text=True,
        check=True,
    )
    doc = json.loads(result.stdout)
    assert doc["ok"] and doc["result"] == "1"
