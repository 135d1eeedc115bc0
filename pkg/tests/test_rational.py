import pytest

from pwmirror.poly import RationalExpr, parse_expr, substitute

GIVENTAL = ("x", "y", "z", "u", "v")
NEW = ("x'", "z'", "v")


def birational_map():
    return {
        "x": parse_expr("x'/(x'+1)", NEW),
        "y": parse_expr("1/(x'+1)", NEW),
        "z": parse_expr("z'/(z'+1)", NEW),
        "u": parse_expr("1/(z'+1)", NEW),
        "v": parse_expr("v", NEW),
    }


def test_w2_pulls_back():
    w2 = parse_expr("1/(x*y*z*u*v)", GIVENTAL)
    got = substitute(w2, birational_map())
    assert got == parse_expr("(x'+1)^2*(z'+1)^2/(x'*z'*v)", NEW)


def test_identity_map():
    target = parse_expr("(x^2 - y)/(x + 3*y^-1)", ("x", "y"))
    ident = {v: parse_expr(v, ("x", "y")) for v in ("x", "y")}
    assert substitute(target, ident) == target


def test_rename_recovers_toric_model():
    w = parse_expr("v + (x'+1)^2*(z'+1)^2/(x'*z'*v)", NEW)
    xyz = ("x", "y", "z")
    ren = {"x'": parse_expr("x", xyz), "z'": parse_expr("y", xyz), "v": parse_expr("z", xyz)}
    got = substitute(w, ren)
    f22 = parse_expr("(x+1)^2*(y+1)^2/(x*y*z)+z", xyz)
    # cross-multiplication equality, and the result folds to a Laurent polynomial
    assert got == f22
    assert got.is_polynomial() and got.numerator == f22.numerator


def test_u_does_not_pull_back_to_v():
    # the image of w_1 = u is 1/(z'+1), not v
    u = parse_expr("u", GIVENTAL)
    got = substitute(u, birational_map())
    assert got == parse_expr("1/(z'+1)", NEW)
    assert got != parse_expr("v", NEW)


def test_zero_denominator_during_substitution():
    with pytest.raises(ZeroDivisionError):
        substitute(parse_expr("1/x", ("x",)), {"x": parse_expr("a-a", ("a",))})
    with pytest.raises(ZeroDivisionError):
        substitute(parse_expr("1/(x-1)", ("x",)), {"x": parse_expr("1", ("a",))})


def test_missing_image():
    with pytest.raises(KeyError):
        substitute(parse_expr("x*y", ("x", "y")), {"x": parse_expr("a", ("a",))})


def test_cross_multiplication_equality():
    a = RationalExpr(parse_expr("x+1", ("x",)).numerator, parse_expr("x^2 - 1", ("x",)).numerator)
    b = parse_expr("1/(x-1)", ("x",))
    assert a == b
    assert a != parse_expr("1/(x+1)", ("x",))
