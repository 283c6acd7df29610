import math

import pytest

import quintic_modulus as qm


def test_modulus_at_one():
    m = qm.modulus("1")
    assert m["k"].startswith("0.7071067811865475244008443621")
    assert float(m["residual"]) < 1e-120


def test_modulus_at_five_matches_radical():
    s5 = math.sqrt(5)
    radical = math.sqrt((9 + 4 * s5 - 2 * math.sqrt(38 + 17 * s5)) / (18 + 8 * s5))
    assert float(qm.modulus("5")["k"]) == pytest.approx(radical, rel=1e-14)


def test_ladder_levels_certify():
    levels = qm.ladder("5", n=2)
    assert [lv["r"] for lv in levels] == ["125", "3125"]
    assert all(lv["certified"] for lv in levels)


def test_rrcf_two_routes():
    closed, cf, diff = qm.rrcf("4")
    assert closed == cf or float(diff) < 1e-120
    assert float(closed) == pytest.approx(math.sqrt((5 + math.sqrt(5)) / 2) - (1 + math.sqrt(5)) / 2)


def test_verify_report():
    report = qm.verify("2")
    assert len(report["entries"]) == len(qm.registry()) == 16
    assert report["all_pass"]
    assert len(qm.verify("2", ids=["eq6-eta8"])["entries"]) == 1


def test_errors_map_to_python():
    with pytest.raises(qm.DomainError):
        qm.modulus("0")
    with pytest.raises(qm.UsageError):
        qm.modulus("x")
    with pytest.raises(qm.UsageError):
        qm.verify("5", ids=["bogus"])
    assert issubclass(qm.DomainError, qm.QuinticError)


def test_cli_entry_point():
    code, out, err = qm.run_cli(["kr", "--r", "0"])
    assert code == 2 and "domain" in err
    code, out, _ = qm.run_cli(["verify", "--r", "1", "--ids", "k-reciprocal"])
    assert code == 0 and "1/1 identities pass" in out
