from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmorder.afunction import AContext, a_value, a_value_symbol, c_compare
from cmorder.errors import WrongLevel, ZeroR
from cmorder.partitions import (Verdict, dominance_compare, multipartitions,
                                partitions_of, transpose_multi)
from cmorder.symbols import kappa, min_size
from oracles import b2_a_values, type_a_a_value
from strategies import multipartitions as mp_st, rationals

LAM = ((), (3, 2))
MU = ((2, 2, 1), ())


@pytest.mark.parametrize("m,lam,value", [
    ((F(1, 2), 0), LAM, F(65, 2)), ((F(1, 2), 0), MU, 34),
    ((1, 0), LAM, 40), ((1, 0), MU, 39)])
def test_anchor_values_with_symbol_size_four(m, lam, value):
    assert a_value(lam, AContext(m, 1), size=4) == value


# derived; frozen from the type-B product formula, cross-checked below
@pytest.mark.parametrize("m,lam,value", [
    ((F(1, 2), 0), LAM, F(9, 2)), ((F(1, 2), 0), MU, 6),
    ((1, 0), LAM, 6), ((1, 0), MU, 5)])
def test_valuations(m, lam, value):
    ctx = AContext(m, 1)
    assert a_value(lam, ctx) == value == a_value_symbol(lam, ctx)


@pytest.mark.parametrize("m", [(F(1, 2), 0), (1, 0), (F(9, 10), 0)])
def test_size_normalisation_is_a_constant_shift(m):
    ctx = AContext(m, 1)
    shifts = {a_value(x, ctx, size=6) - a_value(x, ctx) for x in multipartitions(2, 5)}
    assert len(shifts) == 1


@pytest.mark.parametrize("r", [1, -1, 2, F(1, 2), F(-3, 2)])
@pytest.mark.parametrize("m", [(0, 0), (F(1, 2), 0), (1, 0), (2, 0), (F(-1, 3), 0),
                               (F(3, 10), F(1, 2)), (F(-7, 10), F(2, 3))])
def test_against_type_b2_hecke_algebra(m, r):
    expect = b2_a_values(m, r)
    ctx = AContext(m, r)
    for lam, value in expect.items():
        assert a_value(lam, ctx) == value


@pytest.mark.parametrize("r", [1, -1, F(1, 3)])
@pytest.mark.parametrize("n", range(6))
def test_against_type_a_hook_formula(n, r):
    for p in partitions_of(n):
        assert a_value((p,), AContext((0,), r)) == type_a_a_value(p, r)


@st.composite
def a_case(draw):
    l = draw(st.integers(1, 3))
    lam = draw(mp_st(l=l, max_size=3))
    m = tuple(draw(rationals(-2, 2)) for _ in range(l))
    r = draw(rationals(-2, 2).filter(bool))
    return lam, m, r


@given(a_case())
def test_negative_r_rule(case):
    lam, m, r = case
    flipped = tuple(-x for x in m)
    assert a_value(lam, AContext(m, r)) == a_value(transpose_multi(lam), AContext(flipped, -r))


@given(a_case(), rationals())
def test_only_differences_of_m_matter(case, c):
    lam, m, r = case
    shifted = tuple(x + c for x in m)
    assert a_value(lam, AContext(m, r)) == a_value(lam, AContext(shifted, r))


@given(a_case())
def test_product_formula_matches_symbol_route(case):
    lam, m, r = case
    assert a_value(lam, AContext(m, r)) == a_value_symbol(lam, AContext(m, r))


@settings(max_examples=60)
@given(a_case(), st.integers(0, 2))
def test_continuity_in_the_parameter(case, coord):
    # a is piecewise linear in m, so a one-sided difference shrinks linearly
    lam, m, r = case
    coord %= len(m)

    def at(eps):
        mm = tuple(x + eps if i == coord else x for i, x in enumerate(m))
        return a_value(lam, AContext(mm, r))
    base = at(0)
    assert at(F(1, 1000)) - base == 10 * (at(F(1, 10000)) - base)


@pytest.mark.parametrize("m", [(0, 0), (F(1, 2), 0), (1, 0), (2, 0)])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_kappa_dominance_reverses_a(m, n):
    ctx = AContext(m, 1)
    ground = multipartitions(2, n)
    size = max(min_size(x, m) for x in ground)
    for x in ground:
        for y in ground:
            if dominance_compare(kappa(x, m, size), kappa(y, m, size)) is Verdict.LESS:
                assert a_value(x, ctx) > a_value(y, ctx)
                assert c_compare(x, y, ctx, size) is Verdict.LESS


def test_c_compare_reverses_for_negative_r():
    m = (F(1, 2), 0)
    assert c_compare(MU, LAM, AContext(m, 1), 4) is Verdict.LESS
    assert c_compare(MU, LAM, AContext(m, -1), 4) is Verdict.GREATER


def test_errors():
    with pytest.raises(ZeroR):
        AContext((0, 0), 0)
    with pytest.raises(WrongLevel):
        a_value(((1,),), AContext((0, 0), 1))
