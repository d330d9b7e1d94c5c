"""Acceptance criteria 1-12; each test prints one PASS/FAIL line."""
import random
import time
from fractions import Fraction as F

from acceptance_log import check
from cmorder.afunction import AContext, a_value
from cmorder.blocks import cm_blocks_l2, glen_blocks
from cmorder.charged import beta_set, tau
from cmorder.orders import wall_preorder
from cmorder.params import classify_theta_l2, wall_adjacent_alcoves_l2, wall_for_m_l2
from cmorder.partitions import Verdict
from cmorder.poset import FinitePoset, quotient_by_group
from cmorder.symbols import kappa, kappa_compare, shifted_symbol
from cmorder.verify import SUITES, Grid, random_equivariant_poset, run_suite
from oracles import tau_sets

LAM = ((), (3, 2))
MU = ((2, 2, 1), ())
HALF, NINE, ONE = (F(1, 2), 0), (F(9, 10), 0), (F(1), 0)
GRID = Grid(levels=(2, 3), max_n=4, charge_bound=2, size_span=3)


def q(*xs):
    return tuple(F(x) for x in xs)


def test_criterion_01_symbol():
    rows = shifted_symbol(LAM, HALF, 4).rows
    check(1, "shifted symbol of (0;(3,2)) at m=(1/2,0), size 4",
          rows == (q("1/2", "3/2", "5/2", "7/2"), q(0, 1, 4, 6)))


def test_criterion_02_tau():
    sets, _ = tau_sets((1, -1), MU)
    ok = (beta_set((2, 2, 1), 1, 6) == (3, 2, 0, -2, -3, -4)
          and beta_set((), -1, 4) == (-1, -2, -3, -4)
          and sorted(sets[0], reverse=True)[:6] == [5, 3, -1, -5, -7, -9]
          and sorted(sets[1], reverse=True)[:4] == [-2, -4, -6, -8]
          and beta_set(tau((1, -1), MU), 0, 9) == (5, 3, -1, -2, -4, -5, -6, -7, -8)
          and tau((1, -1), MU) == (5, 4, 1, 1))
    check(2, "tau_(1,-1)((2,2,1);0) = (5,4,1,1) with its beta-sets", ok)


def test_criterion_03_kappa_anchors():
    expected = {
        (HALF, LAM): q(6, 4, "7/2", "5/2", "3/2", 1, "1/2", 0),
        (HALF, MU): q("11/2", "9/2", 3, "5/2", 2, 1, "1/2", 0),
        (NINE, LAM): q(6, 4, "39/10", "29/10", "19/10", 1, "9/10", 0),
        (NINE, MU): q("59/10", "49/10", 3, "29/10", 2, 1, "9/10", 0),
        (ONE, LAM): q(6, 4, 4, 3, 2, 1, 1, 0, 0),
        (ONE, MU): q(6, 5, 3, 3, 2, 1, 1, 0, 0),
    }
    ok = all(kappa(lam, m, 4) == k for (m, lam), k in expected.items())
    verdicts = [kappa_compare(MU, LAM, m, 4) for m in (HALF, NINE, ONE)]
    ok = ok and verdicts == [Verdict.LESS, Verdict.INCOMPARABLE, Verdict.GREATER]
    check(3, "six kappa sequences and the Less/Incomparable/Greater verdicts", ok,
          "/".join(v.value for v in verdicts))


def test_criterion_04_a_anchors():
    got = [a_value(lam, AContext(m, 1), size=4)
           for m, lam in ((HALF, LAM), (HALF, MU), (ONE, LAM), (ONE, MU))]
    check(4, "a-values 65/2, 34, 40, 39", got == [F(65, 2), 34, 40, 39],
          "symbol-normalised at size 4; raw valuations are 9/2, 6, 6, 5")


def _suite(name, grid=GRID):
    res = run_suite(name, grid)
    return res, f"{res.cases} cases, {res.details.get('failures', 0)} counterexamples, {res.seconds}s"


def test_criterion_05_kappa_tau_equivalences():
    res, detail = _suite("thm-kappa-tau")
    check(5, "tau/kappa equivalences, l in {2,3}, n <= 4, |s_i| <= 2, three sizes",
          res.ok and not res.counterexamples and res.seconds < 60, detail)


def test_criterion_06_n_and_a():
    res_n, dn = _suite("thm-kappa-N")
    res_a, da = _suite("thm-kappa-a", Grid(levels=(2,), max_n=3, size_span=3))
    ok = res_n.ok and res_a.ok and not res_n.counterexamples and not res_a.counterexamples
    check(6, "kappa dominance forces N strictly and reverses a", ok, f"N: {dn}; a: {da}")


def test_criterion_07_bijection_laws():
    results = [run_suite(name, GRID) for name in ("tau-roundtrip", "tau-equivariance",
                                                  "tau-transpose")]
    ok = all(r.ok and not r.counterexamples for r in results)
    check(7, "tau round trip, weight, core, equivariance and transpose laws", ok,
          ", ".join(f"{r.name} {r.cases}" for r in results))


def test_criterion_08_level_two_blocks():
    blocks = cm_blocks_l2(2, (0, 0), 3)
    expected = {(((), (2,)), ((2,), ())), (((), (1, 1)), ((1, 1), ())), (((1,), (1,)),)}
    gb = glen_blocks(2, 2, 2, blocks)
    ok = set(blocks.classes) == expected and len(gb.classes) == 4
    check(8, "three blocks of G(2,1,2) and four classes for G(2,2,2)", ok,
          f"{len(blocks.classes)} blocks, {len(gb.classes)} classes")


def test_criterion_09_halfstep_and_zigzag():
    grid = Grid(levels=(2,), max_n=4, d_range=(-2, 2))
    start = time.perf_counter()
    results = [run_suite(name, grid) for name in ("lemma-halfstep", "blocks-zigzag")]
    took = time.perf_counter() - start
    ok = all(r.ok and not r.counterexamples for r in results) and took < 120
    check(9, "half-step chains and zigzag chains inside every block, n <= 4, d in -2..2",
          ok, ", ".join(f"{r.name} {r.cases} blocks" for r in results) + f", {took:.1f}s")


def test_criterion_10_negative_control():
    res = run_suite("wall-converse", Grid(levels=(2,), max_n=5, d_range=(-2, 2)))
    pairs = res.details["pairs"]
    target = {"n": 5, "d": 1, "lam": [[], [3, 2]], "mu": [[2, 2, 1], []]}
    swapped = dict(target, lam=target["mu"], mu=target["lam"])
    reported = target in pairs or swapped in pairs
    wall = classify_theta_l2((0, 1))
    alcoves = wall_adjacent_alcoves_l2(wall.d)
    direct = (wall.d == wall_for_m_l2(1)
              and wall_preorder(alcoves, LAM, MU) and wall_preorder(alcoves, MU, LAM)
              and not cm_blocks_l2(5, ONE).same_block(LAM, MU))
    at_target = [p for p in pairs if p["n"] == 5 and p["d"] == 1]
    check(10, "wall preorder joins (0;(3,2)) and ((2,2,1);0) at theta'=(0,1) "
              "but kappa blocks at m=(1,0) separate them", reported and direct,
          f"{len(pairs)} such pairs on the grid, {len(at_target)} at n=5, m=(1,0)")


def test_criterion_11_poset_quotients():
    res = run_suite("poset-quotient", Grid(samples=200, seed=0))
    idempotent = True
    for seed in range(200):
        poset, action = random_equivariant_poset(random.Random(seed), 1 + seed % 6,
                                                 1 + seed % 9)
        quotient = quotient_by_group(poset, action)
        for p in (poset, quotient):
            cover = p.hasse()
            rebuilt = FinitePoset(p.elements, cover)
            idempotent &= rebuilt == p and rebuilt.hasse() == cover
            idempotent &= FinitePoset(p.elements, p.relations()) == p
    ok = res.ok and not res.counterexamples and idempotent
    check(11, "group quotient law on 200 seeded equivariant posets, Hasse/closure idempotence",
          ok, f"{res.cases} checks")


def test_criterion_12_substitution_note():
    # the geometric statements have no desk-scale form; criteria 5-11 carry
    # their combinatorial consequences, so this one confirms that surface exists
    stand_ins = ["thm-kappa-tau", "thm-kappa-N", "thm-kappa-a", "tau-roundtrip",
                 "tau-equivariance", "tau-transpose", "lemma-halfstep", "blocks-zigzag",
                 "wall-converse", "poset-quotient", "glen-counts", "alcove-kappa-dict"]
    missing = [s for s in stand_ins if s not in SUITES]
    check(12, "geometric claims replaced by the combinatorial suites of criteria 5-11",
          not missing, "no variety or fixed-point computation is attempted")
