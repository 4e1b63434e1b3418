import pytest

import astheno


def test_parse_and_print():
    omega = astheno.parse("Phi1 + Phi2 - 2*eta1/\\eta2")
    assert omega == astheno.kahler_form()
    assert str(omega) == "-2*eta1/\\eta2 + Phi1 + Phi2"
    assert astheno.parse("eta1/\\eta1").is_zero()
    assert astheno.Form.from_record(omega.record()) == omega


def test_parse_error():
    with pytest.raises(astheno.ParseError):
        astheno.parse("Phi3")


def test_operators():
    eta1 = astheno.Form("eta1")
    assert str(astheno.d(eta1)) == "a1*Phi1"
    assert astheno.j(astheno.j(eta1)) == -eta1
    assert astheno.j(astheno.kahler_form()) == astheno.kahler_form()
    omega = astheno.kahler_form()
    assert astheno.d(astheno.d(omega, m1=2, m2=2, ring_reduction=True), m1=2, m2=2,
                     ring_reduction=True).is_zero()
    assert str(astheno.d(omega, convention="ungraded")) == (
        "2*b1*eta1/\\Phi1 - 2*a2*eta1/\\Phi2 - 2*a1*eta2/\\Phi1 + 2*b2*eta2/\\Phi2")
    assert (omega ^ omega) == omega ** 2


def test_classify():
    r = astheno.classify("astheno", 1, 2, "sasakian", "cosymplectic")
    assert r["verdict"] == "identically-zero"
    r = astheno.classify("astheno", 2, 2, "kenmotsu", "kenmotsu")
    assert r["verdict"] == "nonzero"
    assert any(c["relations"] == "b1 = 0, b2 = 0" for c in r["conditions"])
    with pytest.raises(ValueError):
        astheno.classify("astheno", 0, 1, "sasakian", "cosymplectic")


def test_table():
    rows = astheno.table(1)
    assert len(rows) == 9
    assert [r["row"] for r in rows if r["printed_zero"]] == [1, 3, 7, 9]
    assert all(r["verdict"] == "identically-zero" for r in rows if r["printed_zero"])
    with pytest.raises(ValueError):
        astheno.table(11)


def test_cli_exit_codes():
    code, out, _ = astheno.run_cli(["eval", "--expr", "eta1", "--apply", "d"])
    assert (code, out) == (0, "a1*Phi1\n")
    assert astheno.run_cli(["table", "--id", "11"])[0] == 2
