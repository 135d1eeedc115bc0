from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pwmirror.catalog import builtin
from pwmirror.mhs import (
    HodgePiece,
    PerverseHodgeTable,
    TableError,
    TateSummand,
    affine_perverse,
    poincare_dual,
    pw_polynomial,
    table_from_tate,
    tate_twist,
)
from strategies import dualizable_tables


def test_point_from_tate():
    t = table_from_tate(0, "ordinary", [TateSummand(0, 0, 1)])
    assert t.pieces == (HodgePiece(0, 0, 0),)


def test_tate_expansion_compact():
    t = table_from_tate(3, "compact", [TateSummand(6, 3, 1)])
    assert t.kind == "compact"
    assert t.pieces == (HodgePiece(6, 3, 6),)


def test_tate_multiplicity():
    t = table_from_tate(3, "compact", [TateSummand(4, 2, 21)])
    assert t.pieces == (HodgePiece(4, 2, 4, None, 21),)


def test_tate_degree_out_of_range():
    with pytest.raises(TableError):
        table_from_tate(1, "ordinary", [TateSummand(3, 1)])


def test_piece_invariants():
    with pytest.raises(TableError):
        HodgePiece(2, 3, 2)
    with pytest.raises(TableError):
        HodgePiece(2, 1, 2, mult=0)


def test_merge_identical_pieces():
    t = PerverseHodgeTable("m", 2, "ordinary", (HodgePiece(2, 1, 2, 0, 2), HodgePiece(2, 1, 2, 0, 3)))
    assert t.pieces == (HodgePiece(2, 1, 2, 0, 5),)
    assert t.total_dim == 5


def test_dual_of_point():
    p = builtin("point").strip_perverse()
    assert poincare_dual(p).pieces == p.pieces


def test_dual_compact_h3_of_y():
    y = table_from_tate(3, "compact", [TateSummand(3, 0)])
    dual = poincare_dual(y)
    assert dual.kind == "ordinary"
    assert dual.pieces == (HodgePiece(3, 3, 6),)


def test_dual_h4_of_ycirc():
    t = table_from_tate(3, "ordinary", [TateSummand(4, 2, 2)])
    dual = poincare_dual(t)
    assert dual.kind == "compact"
    assert dual.pieces == (HodgePiece(2, 1, 2, None, 2),)


def test_dual_rejects_out_of_range():
    t = PerverseHodgeTable("bad", 1, "ordinary", (HodgePiece(2, 2, 2),))
    with pytest.raises(TableError):
        poincare_dual(t)


def test_twists():
    t = table_from_tate(1, "ordinary", [TateSummand(0, 0)])
    assert tate_twist(t, 0) == t
    assert tate_twist(t, 1).pieces == (HodgePiece(0, 1, 2),)
    t2 = table_from_tate(3, "ordinary", [TateSummand(2, 1)])
    assert tate_twist(t2, 2).pieces == (HodgePiece(2, 3, 6),)
    with pytest.raises(TableError):
        tate_twist(t, -1)


def test_affine_perverse():
    t = table_from_tate(3, "ordinary", [TateSummand(0, 0), TateSummand(3, 2, 4)])
    out = affine_perverse(t)
    assert [p.perverse for p in out.pieces] == [3, 0]
    assert affine_perverse(builtin("point").strip_perverse()).pieces[0].perverse == 0
    with pytest.raises(TableError):
        affine_perverse(table_from_tate(1, "ordinary", [TateSummand(2, 1)]))


@settings(max_examples=200, deadline=None)
@given(dualizable_tables())
def test_duality_involution(t):
    dd = poincare_dual(poincare_dual(t))
    assert dd == t.strip_perverse()
    d1 = poincare_dual(t)
    assert d1.total_dim == t.total_dim
    # merging can only happen through dropped perverse data
    assert Counter(p.mult for p in dd.pieces) == Counter(p.mult for p in t.strip_perverse().pieces)


@settings(max_examples=100, deadline=None)
@given(dualizable_tables(), st.integers(0, 4))
def test_twist_inverse(t, k):
    assert tate_twist(tate_twist(t, k), -k) == t


@settings(max_examples=100, deadline=None)
@given(dualizable_tables())
def test_affine_rule_terms(t):
    low = PerverseHodgeTable(t.name, t.dim, t.kind, tuple(p for p in t.pieces if p.degree <= t.dim))
    q = pw_polynomial(affine_perverse(low))
    assert all(r + s == t.dim for (a, s, b, r) in q.terms)
