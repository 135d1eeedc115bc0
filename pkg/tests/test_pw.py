import pytest
import sympy
from hypothesis import given, settings

from pwmirror.catalog import builtin
from pwmirror.mhs import (
    HodgePiece,
    OutOfConeError,
    PerverseHodgeTable,
    PWPolynomial,
    TableError,
    mirror_transform,
    pw_polynomial,
    verify_mirror_pair,
)
from strategies import in_cone_tables

u, t, w, p = sympy.symbols("u t w p")

YCIRC_PW = "u^3*t^3*w^3 + 2*u*t^2 + 2*u^2*t^4 + 8*u*t^2*p + u^2*t^2*w^2*p + p^2 + u*t^2*p^2"
U22_PW = "p^3 + u*t*w*p^2 + u^3*t^3*w^2 + u^2*t^3*w^2 + 8*u^2*t^3*w + 2*u^2*t^3 + 2*u*t^3"


def to_sympy(q: PWPolynomial):
    return sympy.S(sum(c * u**a * t**s * w**b * p**r for (a, s, b, r), c in q.items()))


def sympy_mirror(q: PWPolynomial, d: int):
    """Substitute u -> 1/(u t^2), swap w and p, multiply by u^d t^d."""
    expr = to_sympy(q).subs({u: 1 / (u * t**2), w: p, p: w}, simultaneous=True)
    return sympy.expand(expr * u**d * t**d)


def test_point():
    assert str(pw_polynomial(builtin("point"))) == "1"


def test_ycirc_polynomial():
    assert pw_polynomial(builtin("Ycirc")) == PWPolynomial.parse(YCIRC_PW)


def test_u22_polynomial():
    assert pw_polynomial(builtin("U22")) == PWPolynomial.parse(U22_PW)


def test_missing_perverse_rejected():
    with pytest.raises(TableError, match="perverse"):
        pw_polynomial(builtin("Y22c"))


def test_evaluation_equals_total_dim():
    for key in ("Ycirc", "U22", "point"):
        tab = builtin(key)
        assert pw_polynomial(tab).evaluate() == tab.total_dim


def test_canonical_order():
    # ascending by (r, s, a, b)
    assert str(pw_polynomial(builtin("U22"))) == (
        "2*u*t^3 + 2*u^2*t^3 + 8*u^2*t^3*w + u^2*t^3*w^2 + u^3*t^3*w^2 + u*t*w*p^2 + p^3"
    )


@pytest.mark.parametrize(
    "src, d, expected",
    [("p^3", 3, "u^3*t^3*w^3"), ("8*u^2*t^3*w", 3, "8*u*t^2*p"), ("1", 0, "1")],
)
def test_mirror_examples(src, d, expected):
    assert str(mirror_transform(PWPolynomial.parse(src), d)) == expected


def test_mirror_out_of_cone():
    with pytest.raises(OutOfConeError):
        mirror_transform(PWPolynomial.parse("u^4"), 3)
    with pytest.raises(OutOfConeError):
        mirror_transform(PWPolynomial.parse("u^3*t"), 3)


def test_mirror_agrees_with_symbolic_substitution():
    q = pw_polynomial(builtin("U22"))
    assert to_sympy(mirror_transform(q, 3)) == sympy_mirror(q, 3)


def test_verify_pair():
    assert verify_mirror_pair(builtin("U22"), builtin("Ycirc")).holds
    assert verify_mirror_pair(builtin("point"), builtin("point")).holds


def test_perturbed_pair_fails_with_one_term():
    u22 = builtin("U22")
    bumped = list(u22.pieces)
    bumped[0] = HodgePiece(*bumped[0].key, mult=bumped[0].mult + 1)
    rep = verify_mirror_pair(PerverseHodgeTable("U22*", 3, "ordinary", tuple(bumped)), builtin("Ycirc"))
    assert not rep.holds
    assert len(rep.difference) == 1


def test_verify_dimension_mismatch():
    with pytest.raises(TableError):
        verify_mirror_pair(builtin("point"), builtin("Ycirc"))


@settings(max_examples=200, deadline=None)
@given(in_cone_tables())
def test_mirror_involution_and_total(tab):
    q = pw_polynomial(tab)
    m = mirror_transform(q, tab.dim)
    assert mirror_transform(m, tab.dim) == q
    assert m.evaluate() == q.evaluate() == tab.total_dim


@settings(max_examples=50, deadline=None)
@given(in_cone_tables(max_pieces=5))
def test_mirror_matches_sympy(tab):
    q = pw_polynomial(tab)
    assert to_sympy(mirror_transform(q, tab.dim)) == sympy_mirror(q, tab.dim)


@settings(max_examples=100, deadline=None)
@given(in_cone_tables(), in_cone_tables())
def test_pw_additive_on_unions(a, b):
    b = PerverseHodgeTable(b.name, a.dim, a.kind, tuple(x for x in b.pieces if x.degree <= 2 * a.dim))
    assert pw_polynomial(a + b) == pw_polynomial(a) + pw_polynomial(b)
