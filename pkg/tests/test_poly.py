import pytest

from curvesing.poly import Polynomial, parse_polynomial, QQ

XYZ = ("x", "y", "z")


def P(s):
    return parse_polynomial(s, XYZ)


def test_parse_basic():
    p = P("3/2*x^2*y - z")
    assert p.terms == {(2, 1, 0): QQ(3, 2), (0, 0, 1): QQ(-1)}


def test_parse_whitespace_insensitive():
    assert P(" 3/2 * x^2 * y-z ") == P("3/2*x^2*y - z")


def test_parse_rejects_floats():
    with pytest.raises(ValueError):
        P("1.5*x")


def test_parse_rejects_unknown_variable():
    with pytest.raises(ValueError):
        P("x + w")


def test_parse_signs_and_constants():
    assert P("-x + 2 - -3*y") == P("2 + 3*y - x")
    assert P("0").is_zero()


def test_arithmetic_roundtrip():
    a = P("x^2 - 2/3*y*z + 7")
    b = P("z^3 - x*y")
    assert (a + b) - b == a
    assert a * b == b * a
    assert (a + b) * (a - b) == a * a - b * b


def test_pow():
    x = Polynomial.variable("x", XYZ)
    y = Polynomial.variable("y", XYZ)
    assert (x + y) ** 3 == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3")
    assert (x + y) ** 0 == Polynomial.one(XYZ)


def test_derivative():
    p = P("x^3*y + z^2")
    assert p.derivative("x") == P("3*x^2*y")
    assert p.derivative("z") == P("2*z")
    assert p.derivative("y") == P("x^3")


def test_substitute_composition():
    p = P("x^2 - y^3")
    images = {"x": P("x + y"), "y": P("y")}
    assert p.substitute(images) == P("x^2 + 2*x*y + y^2 - y^3")


def test_evaluate():
    p = P("x^2*y - 1/2*z")
    assert p.evaluate({"x": 2, "y": QQ(1, 4), "z": 2}) == 0


def test_quasi_degree():
    p = P("x^2 + y^4")
    assert p.quasi_degree({"x": 2, "y": 1, "z": 1}) == 4
    assert p.quasi_degree({"x": 1, "y": 1, "z": 1}) is None


def test_extend_restrict():
    p = parse_polynomial("x*y", ("x", "y"))
    q = p.extend(XYZ)
    assert q == P("x*y")
    assert q.restrict(("x", "y")) == p
    with pytest.raises(ValueError):
        P("x*z").restrict(("x", "y"))


def test_str_roundtrip():
    p = P("x^2 - 2/3*y*z + 7 - z^3")
    assert parse_polynomial(str(p), XYZ) == p
