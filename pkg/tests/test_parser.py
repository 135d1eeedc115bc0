import pytest

from pwmirror.poly import LaurentPoly, ParseError, UnknownVariableError, parse_expr

XYZ = ("x", "y", "z")
CORPUS = [
    ("(x+1)^2*(y+1)^2/(x*y*z)+z", XYZ),
    ("v + 1/(x*y*z*u*v)", ("x", "y", "z", "u", "v")),
    ("x - x", ("x",)),
    ("-3*x^-2*y + 7 - y^3", ("x", "y")),
    ("(x'+1)^2*(z'+1)^2/(x'*z'*v)", ("x'", "z'", "v")),
    ("x/(x+1) + 1/(y+1)", ("x", "y")),
    ("2*x/4", ("x",)),
    ("x/2", ("x",)),
    ("((x))^(-3) * x^+1", ("x",)),
]


def test_f22_support_size():
    f = parse_expr("(x+1)^2*(y+1)^2/(x*y*z)+z", XYZ)
    assert f.is_polynomial()
    assert len(f.numerator) == 10
    # brute-force expansion: shift of (x^2+2x+1)(y^2+2y+1) plus z
    expected = {(i - 1, j - 1, -1): a * b for i, a in enumerate((1, 2, 1)) for j, b in enumerate((1, 2, 1))}
    expected[(0, 0, 1)] = 1
    assert f.numerator.terms == expected


def test_cancellation_to_zero():
    r = parse_expr("x - x", ("x",))
    assert r.numerator.terms == {}
    assert r.is_polynomial()


def test_givental_superpotential():
    r = parse_expr("v + 1/(x*y*z*u*v)", ("x", "y", "z", "u", "v"))
    assert r.is_polynomial()
    assert set(r.numerator.terms) == {(0, 0, 0, 0, 1), (-1, -1, -1, -1, -1)}


def test_non_monomial_denominator_stays_rational():
    r = parse_expr("1/(x+1)", ("x",))
    assert not r.is_polynomial()
    assert r * parse_expr("x+1", ("x",)) == 1


def test_integer_denominators():
    assert parse_expr("2*x/4", ("x",)) == parse_expr("x/2", ("x",))
    assert not parse_expr("x/2", ("x",)).is_polynomial()
    assert parse_expr("4*x/2", ("x",)).numerator == LaurentPoly(("x",), {(1,): 2})


@pytest.mark.parametrize("text, pos", [("x +", 3), ("x ** 2", 3), ("(x+1", 4), ("x $ y", 2), ("x^y", 2), ("", 0)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_expr(text, ("x", "y"))
    assert err.value.position == pos


def test_unknown_variable():
    with pytest.raises(UnknownVariableError) as err:
        parse_expr("x + w", ("x",))
    assert err.value.position == 4


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        parse_expr("x/(y-y)", ("x", "y"))
    with pytest.raises(ZeroDivisionError):
        parse_expr("(x-x)^-1", ("x",))


def test_unary_minus_only_at_head():
    assert parse_expr("-x + 1", ("x",)) == parse_expr("1 - x", ("x",))
    assert parse_expr("(-x)^2", ("x",)) == parse_expr("x^2", ("x",))
    with pytest.raises(ParseError):
        parse_expr("x * -y", ("x", "y"))


@pytest.mark.parametrize("text, vars", CORPUS)
def test_round_trip(text, vars):
    r = parse_expr(text, vars)
    again = parse_expr(str(r), vars)
    assert again == r
    assert str(again) == str(r)
