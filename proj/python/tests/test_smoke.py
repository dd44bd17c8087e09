import pytest

import orbitlab as ol


def test_field_and_elements():
    f4 = ol.Field.parse("GF(4; mod=w^2+w+1)")
    assert f4.order == 4 and f4.characteristic == 2
    w = ol.Element("w", f4)
    assert str(w * w) == "w + 1"
    assert ol.Element("1/(t^3 + 1)", ol.Field.parse("GF(2)")).height == "3"


def test_orbit_intersection():
    f2 = ol.Field.parse("GF(2)")
    f = ol.Map("x^2 + x", f2)
    g = ol.Map("x^2 + t^2 + t", f2)
    pairs = ol.intersect_orbits(f, ol.Element("t", f2), g, ol.Element("0", f2), 16, 16)
    assert pairs == [(1, 1), (2, 2), (4, 4), (8, 8), (16, 16)]
    assert ol.common_iterate(f, g) is None
    assert ol.common_iterate(ol.Map("x^2", f2), ol.Map("x^4", f2)) == (2, 1)


def test_twisted_and_heights():
    f2 = ol.Field.parse("GF(2)")
    a = ol.Twisted("1 + T", f2)
    assert a * a == ol.Twisted("1 + T^2", f2)
    assert str((a ** 2).to_map()) == "x^4 + x"
    h = ol.canonical_height(ol.Map("x^2 + x", f2), ol.Element("t", f2))
    assert h["rationalized"] == "1"
    assert ol.multiplicative_dependence(8, 4) == (2, 3)
    assert ol.binom_mod("18446744073709551616", "1", 2) == 0


def test_scenario_and_verifier():
    report, code = ol.run_scenario("task = verify-example\nexample = 2.8; p = 3; nmax = 4\nfield = GF(3)\n")
    assert code == 0 and report["result"]["verdict"] == "PASS"
    assert all(c["status"] == "PASS" for c in ol.verify_all())


def test_errors_are_structured():
    f2 = ol.Field.parse("GF(2)")
    with pytest.raises(ol.OrbitlabError) as info:
        ol.Map("x^2 + * x", f2)
    assert ol.error_kind(info.value) == "SyntaxError"
    with pytest.raises(ValueError):
        ol.Field.parse("GF(6)")
    report, code = ol.run_scenario("task = intersect\nfield = GF(2)\nf = x^2 +\n")
    assert code == 3 and report["status"] == "invalid"
