from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cmorder.errors import NegativeEntry, SizeTooSmall, WrongLevel
from cmorder.partitions import (Verdict, act_sym, act_sym_q, dominance_compare,
                                multipartitions)
from cmorder.symbols import (hc, kappa, kappa_compare, min_size, n_value,
                             n_value_of, shifted_symbol)
from oracles import n_literal, symbol_rows
from strategies import multipartitions as mp_st, perms, rationals

LAM = ((), (3, 2))
MU = ((2, 2, 1), ())
HALF, NINE, ONE = (F(1, 2), 0), (F(9, 10), 0), (1, 0)


def q(*xs):
    return tuple(F(x) for x in xs)


def test_displayed_symbol():
    sym = shifted_symbol(LAM, HALF, 4)
    assert sym.rows == (q("1/2", "3/2", "5/2", "7/2"), q(0, 1, 4, 6))


KAPPA_ANCHORS = [
    (HALF, LAM, q(6, 4, "7/2", "5/2", "3/2", 1, "1/2", 0)),
    (HALF, MU, q("11/2", "9/2", 3, "5/2", 2, 1, "1/2", 0)),
    (NINE, LAM, q(6, 4, "39/10", "29/10", "19/10", 1, "9/10", 0)),
    (NINE, MU, q("59/10", "49/10", 3, "29/10", 2, 1, "9/10", 0)),
    (ONE, LAM, q(6, 4, 4, 3, 2, 1, 1, 0, 0)),
    (ONE, MU, q(6, 5, 3, 3, 2, 1, 1, 0, 0)),
]


@pytest.mark.parametrize("m,lam,expected", KAPPA_ANCHORS)
def test_kappa_anchors(m, lam, expected):
    assert kappa(lam, m, 4) == expected


@pytest.mark.parametrize("m,verdict", [
    (HALF, Verdict.LESS), (NINE, Verdict.INCOMPARABLE), (ONE, Verdict.GREATER)])
def test_kappa_verdicts(m, verdict):
    assert kappa_compare(MU, LAM, m, 4) is verdict


# derived; frozen from the literal double sum in oracles.n_literal
@pytest.mark.parametrize("m,n_lam,n_mu", [
    (HALF, 94, 91), (NINE, 102, 103), (ONE, 104, 106)])
def test_n_values(m, n_lam, n_mu):
    assert n_value(LAM, m, 4) == n_lam == n_literal(kappa(LAM, m, 4), 2)
    assert n_value(MU, m, 4) == n_mu == n_literal(kappa(MU, m, 4), 2)


def test_min_size_and_errors():
    assert hc(LAM, HALF) == (F(-1, 2), 2)
    assert min_size(LAM, HALF) == 3
    shifted_symbol(LAM, HALF, 3)
    with pytest.raises(SizeTooSmall):
        shifted_symbol(LAM, HALF, 2)
    with pytest.raises(WrongLevel):
        kappa(LAM, (0, 0, 0), 4)
    with pytest.raises(NegativeEntry):
        n_value_of((F(-1, 2),), 2)


@st.composite
def symbol_case(draw):
    l = draw(st.integers(1, 3))
    lam = draw(mp_st(l=l, max_size=4))
    m = tuple(draw(rationals(-2, 2)) for _ in range(l))
    size = min_size(lam, m) + draw(st.integers(0, 3))
    return lam, m, size


@given(symbol_case())
def test_symbol_against_literal_definition(case):
    lam, m, size = case
    assert [list(r) for r in shifted_symbol(lam, m, size).rows] == symbol_rows(lam, m, size)


@given(symbol_case())
def test_rows_lie_in_the_class_of_m(case):
    lam, m, size = case
    for row, mi in zip(shifted_symbol(lam, m, size).rows, m):
        assert all((x - mi).denominator == 1 for x in row)
        assert list(row) == sorted(set(row))


@given(symbol_case())
def test_kappa_length_for_integral_m(case):
    lam, m, size = case
    assume(all(x.denominator == 1 for x in m))
    assert len(kappa(lam, m, size)) == len(lam) * size + sum(m)


@given(st.integers(1, 3), st.integers(0, 4), st.data())
def test_kappa_sum_is_independent_of_lam(l, n, data):
    m = tuple(data.draw(rationals(-1, 1)) for _ in range(l))
    ground = multipartitions(l, n)
    size = max(min_size(x, m) for x in ground) + data.draw(st.integers(0, 2))
    assert len({sum(kappa(x, m, size)) for x in ground}) == 1


@given(st.integers(1, 4).flatmap(lambda l: st.tuples(
    perms(l), mp_st(l=l, max_size=4), st.lists(rationals(-2, 2), min_size=l, max_size=l))))
def test_kappa_equivariance(args):
    w, lam, m = args
    size = min_size(lam, m) + 1
    assert kappa(act_sym(w, lam), act_sym_q(w, m), size) == kappa(lam, m, size)


@given(st.sampled_from([1, 2, 3]), st.integers(1, 4), st.data())
def test_kappa_dominance_forces_n_order(l, n, data):
    m = tuple(data.draw(rationals(-1, 1)) for _ in range(l))
    ground = multipartitions(l, n)
    size = max(min_size(x, m) for x in ground)
    a = data.draw(st.sampled_from(ground))
    b = data.draw(st.sampled_from(ground))
    if dominance_compare(kappa(a, m, size), kappa(b, m, size)) is Verdict.LESS:
        assert n_value(a, m, size) < n_value(b, m, size)
