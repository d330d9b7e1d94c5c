"""Exhaustive and randomized checks over finite grids.

Each suite expands into independent tasks that may run in a process pool;
results are merged in task order, so output does not depend on ``jobs``.
Report-only suites collect data without asserting anything.
"""
from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .afunction import AContext, a_value, a_value_symbol, c_compare
from .blocks import (cm_blocks_jclass, cm_blocks_l2, glen_blocks,
                     glen_dimensions, irr_glen_labels)
from .charged import core_by_hooks, ell_core, tau, tau_inverse
from .errors import UnknownSuite
from .orders import _image, block_order, comb_order, wall_reachable
from .params import (Alcove, alcove_kappa_m, alcove_l2, alcove_rep,
                     classify_theta_l2, git_walls, theta_to_h,
                     wall_adjacent_alcoves_l2, wall_for_m_l2)
from .partitions import (Verdict, act_charge, act_sym, act_sym_q, bar,
                         dominance_compare, dominance_matrix, floor_q,
                         multipartitions, partitions_of, permutations,
                         transpose, transpose_multi)
from .poset import FinitePoset, GroupAction, quotient_by_group
from .symbols import (hc, kappa, kappa_compare, min_size, n_value,
                      n_value_of, shifted_symbol)

MAX_EXAMPLES = 10


@dataclass
class Grid:
    levels: Tuple[int, ...] = (2, 3)
    max_n: Optional[int] = None      # None: the suite's own default
    charge_bound: int = 2
    size_span: int = 3               # sizes min .. min + span - 1
    d_range: Tuple[int, int] = (-2, 2)
    e: Optional[int] = None
    seed: int = 0
    samples: int = 200
    jobs: int = 1

    def n_max(self, default: int) -> int:
        return default if self.max_n is None else self.max_n


@dataclass
class SuiteResult:
    name: str
    status: str                      # "pass", "fail" or "report"
    cases: int
    counterexamples: List[Any] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> Dict[str, Any]:
        return _jsonable(asdict(self))


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, Verdict):
        return x.value
    return x


# -- grids -------------------------------------------------------------------

def charges(l: int, bound: int) -> List[Tuple[int, ...]]:
    return [s for s in itertools.product(range(-bound, bound + 1), repeat=l)
            if sum(s) == 0]


_M_VALUES_2 = [Fraction(x) for x in ("-2", "-1", "-1/2", "0", "1/3", "1/2",
                                     "9/10", "1", "3/2", "2")]
_M_VALUES_3 = [Fraction(x) for x in ("-1", "-1/2", "0", "1/3", "1")]


def m_grid(l: int) -> List[Tuple[Fraction, ...]]:
    """Parameters with m^0 = 0 fixed (kappa-order is translation invariant)."""
    if l == 1:
        return [(Fraction(0),)]
    if l == 2:
        return [(x, Fraction(0)) for x in _M_VALUES_2]
    vals = _M_VALUES_3 if l == 3 else [Fraction(0), Fraction(1, 2), Fraction(1)]
    return [(Fraction(0),) + rest for rest in itertools.product(vals, repeat=l - 1)]


def charge_ms(l: int, s) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    """The two parameter choices attached to an integral charge."""
    m3 = tuple(-Fraction(s[i]) - Fraction(i, l) for i in range(l))
    m4 = tuple(Fraction(s[l - 1 - i]) - Fraction(i, l) for i in range(l))
    return m3, m4


def _run(worker: Callable, tasks: Sequence, jobs: int) -> List:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [worker(t) for t in tasks]


def _merge(name, outputs, report=False, details=None) -> SuiteResult:
    cases = sum(o[0] for o in outputs)
    bad = [c for o in outputs for c in o[1]]
    extra: Dict[str, Any] = dict(details or {})
    for o in outputs:
        for k, v in (o[2] if len(o) > 2 else {}).items():
            if isinstance(v, (int, float)):
                extra[k] = extra.get(k, 0) + v
            else:
                extra.setdefault(k, []).extend(v if isinstance(v, list) else [v])
    status = "report" if report else ("pass" if not bad else "fail")
    return SuiteResult(name, status, cases, bad[:MAX_EXAMPLES],
                       dict(extra, failures=len(bad)))


def _fmt(lam):
    return [list(p) for p in lam]


# -- kappa and tau against each other ---------------------------------------

def _size_windows(ground, m, span):
    """(size, pair mask) with each pair checked on its span admissible sizes."""
    ms = np.array([min_size(x, m) for x in ground])
    base = np.maximum(ms[:, None], ms[None, :])
    for size in range(int(ms.min()), int(ms.max()) + span):
        valid = ms <= size
        mask = valid[:, None] & valid[None, :] & (base > size - span)
        if mask.any():
            yield size, valid, mask


def _kappa_matrix(ground, m, size, valid):
    return dominance_matrix([kappa(x, m, size) if ok else ()
                             for x, ok in zip(ground, valid)])


def _w_thm_kappa_tau(task):
    l, n, s, span = task
    ground = multipartitions(l, n)
    m3, m4 = charge_ms(l, s)
    t3 = dominance_matrix([tau(s, transpose_multi(x)) for x in ground])
    t4 = dominance_matrix([tau(s, tuple(reversed(x))) for x in ground])
    cases, bad = 0, []
    for part, m, lhs, flip in ((3, m3, t3, True), (4, m4, t4, False)):
        for size, valid, mask in _size_windows(ground, m, span):
            k = _kappa_matrix(ground, m, size, valid)
            rhs = k.T if flip else k
            cases += int(mask.sum())
            for a, b in zip(*np.nonzero(mask & (lhs != rhs))):
                bad.append({"part": part, "l": l, "s": list(s), "size": size,
                            "lam": _fmt(ground[a]), "mu": _fmt(ground[b])})
    return cases, bad


def _w_thm_kappa_n(task):
    l, n, ms, span = task
    ground = multipartitions(l, n)
    cases, bad = 0, []
    for m in ms:
        for size, valid, mask in _size_windows(ground, m, span):
            k = _kappa_matrix(ground, m, size, valid) & mask
            nv = np.array([n_value(x, m, size) if ok else 0
                           for x, ok in zip(ground, valid)], dtype=object)
            for a, b in zip(*np.nonzero(k)):
                cases += 1
                if not nv[a] < nv[b]:
                    bad.append({"m": [str(x) for x in m], "size": size,
                                "lam": _fmt(ground[a]), "mu": _fmt(ground[b])})
    return cases, bad


def _w_thm_kappa_a(task):
    l, n, m, r, span = task
    ground = multipartitions(l, n)
    ctx = AContext(m, r)
    av = [a_value(x, ctx) for x in ground]
    cases, bad = 0, []
    for x, v in zip(ground, av):
        cases += 1
        if v != a_value_symbol(x, ctx):
            bad.append({"routes_differ": _fmt(x), "m": [str(y) for y in m]})
    for size, valid, mask in _size_windows(ground, m, span):
        k = _kappa_matrix(ground, m, size, valid) & mask
        for a, b in zip(*np.nonzero(k)):
            cases += 1
            ok = av[a] > av[b] if r > 0 else av[a] < av[b]
            if not ok:
                bad.append({"m": [str(y) for y in m], "size": size,
                            "lam": _fmt(ground[a]), "mu": _fmt(ground[b])})
    return cases, bad


# -- tau laws ----------------------------------------------------------------

def _w_tau_roundtrip(task):
    l, n, s = task
    core = ell_core(s)
    cases, bad = 0, []
    for lam in multipartitions(l, n):
        rho = tau(s, lam)
        cases += 1
        if tau_inverse(l, rho) != (tuple(s), lam):
            bad.append({"kind": "inverse", "s": list(s), "lam": _fmt(lam)})
        if sum(rho) != l * n + sum(core):
            bad.append({"kind": "weight", "s": list(s), "lam": _fmt(lam)})
        if core_by_hooks(rho, l) != core:
            bad.append({"kind": "core", "s": list(s), "lam": _fmt(lam)})
    return cases, bad


def _w_tau_onto(task):
    l, k = task
    cases, bad = 0, []
    for rho in partitions_of(k):
        cases += 1
        s, lam = tau_inverse(l, rho)
        if tau(s, lam) != rho:
            bad.append({"kind": "onto", "rho": list(rho)})
    return cases, bad


def _w_tau_equivariance(task):
    l, n, s = task
    cases, bad = 0, []
    for lam in multipartitions(l, n):
        rho = tau(s, lam)
        for w in permutations(l):
            cases += 1
            if tau(act_charge(w, s), act_sym(w, lam)) != rho:
                bad.append({"s": list(s), "w": list(w), "lam": _fmt(lam)})
    return cases, bad


def _w_tau_transpose(task):
    l, n, s = task
    sbar = tuple(-x for x in reversed(s))
    cases, bad = 0, []
    for lam in multipartitions(l, n):
        cases += 1
        if tau(sbar, bar(lam)) != transpose(tau(s, lam)):
            bad.append({"s": list(s), "lam": _fmt(lam)})
    return cases, bad


# -- kappa laws --------------------------------------------------------------

def _w_kappa_sum(task):
    l, n, m, span = task
    ground = multipartitions(l, n)
    base = max(min_size(x, m) for x in ground)
    cases, bad = 0, []
    for size in range(base, base + span):
        sums = set()
        for lam in ground:
            cases += 1
            sym = shifted_symbol(lam, m, size)
            for i, (row, p) in enumerate(zip(sym.rows, lam)):
                t = size - hc(lam, m)[i]
                if (len(row) != len(p) + floor_q(t)
                        or len(set(row)) != len(row)
                        or any(x < 0 or (x - m[i]).denominator != 1 for x in row)):
                    bad.append({"kind": "row", "lam": _fmt(lam), "row": i,
                                "m": [str(x) for x in m], "size": size})
            sums.add(sum(sym.entries()))
        if len(sums) != 1:
            bad.append({"kind": "sum", "l": l, "n": n, "size": size,
                        "m": [str(x) for x in m], "sums": sorted(map(str, sums))})
    return cases, bad


def _w_kappa_equivariance(task):
    l, n, m, span = task
    ground = multipartitions(l, n)
    base = max(min_size(x, m) for x in ground)
    cases, bad = 0, []
    for size in range(base, base + span):
        for lam in ground:
            k = kappa(lam, m, size)
            for w in permutations(l):
                cases += 1
                if kappa(act_sym(w, lam), act_sym_q(w, m), size) != k:
                    bad.append({"lam": _fmt(lam), "w": list(w),
                                "m": [str(x) for x in m], "size": size})
    return cases, bad


def swap_is_strict(ki: Fraction, kj: Fraction, alpha: Fraction) -> bool:
    """Whether moving alpha from kj to ki must raise N strictly.

    N has slope [x] + 1, so the gain is zero exactly when no integer lies
    strictly between kj - alpha and ki + alpha.
    """
    return floor_q(kj - alpha) + 1 < ki + alpha


_ALPHAS = [Fraction(x) for x in ("1/10", "1/3", "1/2", "1", "2")]


def _w_adjacent_swap(task):
    l, n, m = task
    ground = multipartitions(l, n)
    size = max(min_size(x, m) for x in ground)
    cases, bad, flat = 0, [], 0
    for lam in ground:
        k = list(kappa(lam, m, size))
        base = n_value_of(k, l)
        for i, j in itertools.combinations(range(len(k)), 2):
            for alpha in _ALPHAS:
                new = list(k)
                new[i] += alpha
                new[j] -= alpha
                if new[j] < 0 or any(a < b for a, b in zip(new, new[1:])):
                    continue
                cases += 1
                after = n_value_of(new, l)
                strict = swap_is_strict(k[i], k[j], alpha)
                if after < base or (strict and after == base):
                    bad.append({"kappa": [str(x) for x in k], "i": i, "j": j,
                                "alpha": str(alpha)})
                flat += after == base
    return cases, bad, {"non_strict_swaps": flat}


# -- alcoves -----------------------------------------------------------------

def _w_alcove_dict(task):
    l, n, s = task
    ground = multipartitions(l, n)
    cases, bad = 0, []
    for w in permutations(l):
        for sign in "+-":
            a = Alcove(s, w, sign)
            theta = alcove_rep(a)
            if git_walls(theta_to_h(theta), n):
                bad.append({"kind": "rep_on_wall", "s": list(s), "w": list(w),
                            "sign": sign})
            if l == 2 and classify_theta_l2(theta) != _normal_l2(a):
                bad.append({"kind": "classify", "s": list(s), "w": list(w),
                            "sign": sign})
            comb = dominance_matrix([_image(a, x) for x in ground]).T
            m = alcove_kappa_m(a)
            size = max(min_size(x, m) for x in ground)
            k = dominance_matrix([kappa(x, m, size) for x in ground])
            expect = k if sign == "+" else k.T
            cases += comb.size
            for i, j in zip(*np.nonzero(comb != expect)):
                bad.append({"kind": "dictionary", "s": list(s), "w": list(w),
                            "sign": sign, "lam": _fmt(ground[i]),
                            "mu": _fmt(ground[j])})
            ctx = AContext(m, -1 if sign == "+" else 1)
            av = [a_value(x, ctx) for x in ground]
            for i, j in zip(*np.nonzero(comb)):
                cases += 1
                if not (av[i] < av[j]
                        and c_compare(ground[i], ground[j], ctx, size) is Verdict.GREATER):
                    bad.append({"kind": "a_or_c", "s": list(s), "w": list(w),
                                "sign": sign, "lam": _fmt(ground[i]),
                                "mu": _fmt(ground[j])})
    return cases, bad


def _normal_l2(a: Alcove) -> Alcove:
    # alpha(s, w) = alpha(w^-1 . s, id): find i with the same representative
    theta = alcove_rep(a)
    total = abs(sum(theta))
    d = (theta[0] if a.sign == "+" else -theta[0]) / total
    return alcove_l2(floor_q(d), a.sign)


# -- level two walls ---------------------------------------------------------

def _wall_setup(n, d):
    m = (Fraction(d), Fraction(0))
    mp = (Fraction(d) + Fraction(1, 2), Fraction(0))
    mm = (Fraction(d) - Fraction(1, 2), Fraction(0))
    ground = multipartitions(2, n)
    size = max(n + 1, max(min_size(x, q) for x in ground for q in (m, mp, mm)))
    return m, mp, mm, ground, size


def _components(block, edge):
    """Connected components of block under a symmetric edge predicate."""
    left = list(block)
    comps = []
    while left:
        seen = [left.pop(0)]
        stack = list(seen)
        while stack:
            x = stack.pop()
            for y in list(left):
                if edge(x, y):
                    left.remove(y)
                    seen.append(y)
                    stack.append(y)
        comps.append(seen)
    return comps


def _w_halfstep(task):
    n, d = task
    m, mp, mm, ground, size = _wall_setup(n, d)
    blocks = cm_blocks_l2(n, m, size)

    def edge(x, y):
        up = kappa_compare(x, y, mp, size)
        down = kappa_compare(y, x, mm, size)
        return up in (Verdict.LESS, Verdict.GREATER) and up is down

    cases, bad = 0, []
    for block in blocks.classes:
        cases += 1
        if len(_components(block, edge)) > 1:
            bad.append({"n": n, "d": d, "block": [_fmt(x) for x in block]})
    return cases, bad


def _w_zigzag(task):
    n, d = task
    m, _, _, ground, size = _wall_setup(n, d)
    blocks = cm_blocks_l2(n, m, size)
    alcoves = wall_adjacent_alcoves_l2(wall_for_m_l2(d))

    def below(x, y):
        return any(comb_order(a, x, y) is Verdict.LESS for a in alcoves)

    def edge(x, y):
        return below(x, y) and below(y, x)

    cases, bad = 0, []
    for block in blocks.classes:
        cases += 1
        if len(_components(block, edge)) > 1:
            bad.append({"kind": "chain", "n": n, "d": d,
                        "block": [_fmt(x) for x in block]})
        for x in block:
            reach = wall_reachable(alcoves, x)
            if any(y not in reach for y in block):
                bad.append({"kind": "preorder", "n": n, "d": d, "lam": _fmt(x)})
                break
    order = block_order(alcoves, blocks.classes, require_order=False)
    return cases, bad, {"block_orders_antisymmetric": int(order.is_order),
                        "block_orders": 1}


def _w_wall_converse(task):
    n, d = task
    m, _, _, ground, size = _wall_setup(n, d)
    blocks = cm_blocks_l2(n, m, size)
    alcoves = wall_adjacent_alcoves_l2(wall_for_m_l2(d))
    reach = {x: wall_reachable(alcoves, x) for x in ground}
    found = []
    for x, y in itertools.combinations(ground, 2):
        if y in reach[x] and x in reach[y] and not blocks.same_block(x, y):
            found.append({"n": n, "d": d, "lam": _fmt(x), "mu": _fmt(y)})
    return len(ground) * (len(ground) - 1) // 2, [], {"pairs": found}


def _w_regular_singleton(task):
    (n,) = task
    cases, bad = 0, []
    for k in range(-n - 1, n + 2):
        ms = [(Fraction(k) + f, Fraction(0)) for f in (Fraction(1, 2), Fraction(1, 3))]
        if abs(k) >= n:
            ms.append((Fraction(k), Fraction(0)))
        for m in ms:
            cases += 1
            theta = (1 - m[0], m[0])
            if git_walls(theta_to_h(theta), n):
                bad.append({"kind": "wall", "n": n, "m": [str(x) for x in m]})
            if any(len(c) > 1 for c in cm_blocks_l2(n, m).classes):
                bad.append({"kind": "block", "n": n, "m": [str(x) for x in m]})
    return cases, bad


def _w_s_stability(task):
    l, n, m = task
    ground = multipartitions(l, n)
    cases, changed = 0, []
    for size, valid, mask in _size_windows(ground, m, 2):
        nxt = _kappa_matrix(ground, m, size + 1, valid)
        cur = _kappa_matrix(ground, m, size, valid)
        cases += int(mask.sum())
        for a, b in zip(*np.nonzero(mask & (cur != nxt))):
            changed.append({"m": [str(x) for x in m], "size": size,
                            "lam": _fmt(ground[a]), "mu": _fmt(ground[b])})
    return cases, [], {"changed": changed}


def _w_jclass(task):
    n, d, bound = task
    target = cm_blocks_l2(n, (d, 0)).classes
    hits = []
    for s in charges(2, bound):
        for J in ((), (0,), (1,), (0, 1)):
            if cm_blocks_jclass(2, n, s, J).classes == target:
                hits.append({"s": list(s), "J": list(J)})
    return 1, [], {"matches": [{"n": n, "d": d, "hits": hits}]}


# -- G(l, e, n) --------------------------------------------------------------

def _w_glen(task):
    l, e, n = task
    from math import factorial
    dims = glen_dimensions(l, e, n)
    order = l ** n * factorial(n) // (e if n else 1)
    cases, bad = 1, []
    if sum(v * v for v in dims.values()) != order:
        bad.append({"kind": "degrees", "l": l, "e": e, "n": n})
    if l == 2 and e == 2:
        # C_2-stable kappa blocks at m = (0, 0)
        gb = glen_blocks(l, e, n, cm_blocks_l2(n, (0, 0)))
        cases += 1
        covered = sorted(x for c in gb.classes for x in c)
        if covered != sorted(irr_glen_labels(l, e, n)):
            bad.append({"kind": "cover", "n": n})
    return cases, bad


# -- posets ------------------------------------------------------------------

def random_equivariant_poset(rng: random.Random, k: int, size: int):
    """A random partial order on ``size`` points with a C_k symmetry."""
    points = list(range(size))
    perm = {}
    i = 0
    while i < size:
        length = rng.choice([d for d in range(1, k + 1) if k % d == 0 and i + d <= size])
        cyc = points[i:i + length]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a] = b
        i += length
    action = GroupAction.generated(points, [perm])
    orbit_of = {}
    for idx, orb in enumerate(action.orbits()):
        for x in orb:
            orbit_of[x] = idx
    level = {idx: rng.randrange(4) for idx in set(orbit_of.values())}
    pairs = set()
    for _ in range(rng.randrange(1, 2 * size) if size > 1 else 0):
        x, y = rng.sample(points, 2)
        if level[orbit_of[x]] < level[orbit_of[y]]:
            for p in action.perms:
                pairs.add((p[x], p[y]))
    return FinitePoset(points, pairs), action


def _w_poset(task):
    (seed,) = task
    rng = random.Random(seed)
    cases, bad = 0, []
    poset, action = random_equivariant_poset(rng, rng.choice([2, 3, 4, 6]),
                                             rng.randrange(1, 13))
    again = FinitePoset(poset.elements, poset.relations())
    covers = FinitePoset(poset.elements, poset.hasse())
    cases += 1
    if again != poset or covers != poset or covers.hasse() != poset.hasse():
        bad.append({"seed": seed, "kind": "closure_or_hasse"})
    q = quotient_by_group(poset, action)
    cases += 1
    for a in q.elements:
        for b in q.elements:
            rule = any(poset.leq(a[0], p[poset.index[b[0]]]) for p in action.perms)
            if rule != q.leq(a, b):
                bad.append({"seed": seed, "kind": "quotient_rule"})
    trivial = quotient_by_group(poset, GroupAction.generated(poset.elements, []))
    cases += 1
    if [x[0] for x in trivial.elements] != list(poset.elements) or any(
            trivial.leq((a,), (b,)) != poset.leq(a, b)
            for a in poset.elements for b in poset.elements):
        bad.append({"seed": seed, "kind": "trivial_quotient"})
    return cases, bad


def _w_poset_nested(task):
    (seed,) = task
    rng = random.Random(seed)
    size = 6 * rng.randrange(1, 3)
    points = list(range(size))
    # C_6 = C_2 x C_3 acting freely on blocks of six points
    g2 = {x: (x // 6) * 6 + (x % 6 + 3) % 6 for x in points}
    g3 = {x: (x // 6) * 6 + (x % 6 + 2) % 6 for x in points}
    full = GroupAction.generated(points, [g2, g3])
    level = {x: rng.randrange(3) for x in points}
    for x in points:
        level[x] = level[x - x % 6]
    pairs = set()
    for _ in range(2 * size):
        x, y = rng.sample(points, 2)
        if level[x] < level[y]:
            for p in full.perms:
                pairs.add((p[x], p[y]))
    poset = FinitePoset(points, pairs)
    sub = quotient_by_group(poset, GroupAction.generated(points, [g2]))
    induced = {orb: next(o for o in sub.elements if g3[orb[0]] in o) for orb in sub.elements}
    twice = quotient_by_group(sub, GroupAction.generated(sub.elements, [induced]))
    once = quotient_by_group(poset, full)

    def flat(q):
        return {tuple(sorted(_flatten(x))) for x in q.elements}

    key = {tuple(sorted(_flatten(x))): x for x in twice.elements}
    ok = flat(twice) == flat(once) and all(
        twice.leq(key[tuple(sorted(a))], key[tuple(sorted(b))]) == once.leq(a, b)
        for a in once.elements for b in once.elements)
    return 1, ([] if ok else [{"seed": seed, "kind": "nested"}])


def _flatten(x):
    if isinstance(x, tuple):
        for y in x:
            yield from _flatten(y)
    else:
        yield x


# -- suite table -------------------------------------------------------------

def _suite_thm_kappa_tau(g: Grid):
    tasks = [(l, n, s, g.size_span) for l in g.levels for n in range(g.n_max(4) + 1)
             for s in charges(l, g.charge_bound)]
    return _merge("thm-kappa-tau", _run(_w_thm_kappa_tau, tasks, g.jobs))


def _suite_thm_kappa_n(g: Grid):
    tasks = []
    for l in g.levels:
        for n in range(g.n_max(4) + 1):
            ms = list(m_grid(l))
            for s in charges(l, g.charge_bound):
                ms.extend(charge_ms(l, s))
            tasks.append((l, n, tuple(dict.fromkeys(ms)), g.size_span))
    return _merge("thm-kappa-N", _run(_w_thm_kappa_n, tasks, g.jobs))


THM_A_MS = [(Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(0)),
            (Fraction(1), Fraction(0)), (Fraction(2), Fraction(0))]


def _suite_thm_kappa_a(g: Grid):
    tasks = [(2, n, m, Fraction(1), g.size_span)
             for n in range(g.n_max(3) + 1) for m in THM_A_MS]
    return _merge("thm-kappa-a", _run(_w_thm_kappa_a, tasks, g.jobs))


def _suite_tau_roundtrip(g: Grid):
    n_max = g.n_max(4)
    tasks = [(l, n, s) for l in (1,) + tuple(g.levels) for n in range(n_max + 1)
             for s in charges(l, g.charge_bound)]
    onto = [(l, k) for l in (1,) + tuple(g.levels) for k in range(2 * n_max + 1)]
    return _merge("tau-roundtrip", _run(_w_tau_roundtrip, tasks, g.jobs)
                  + _run(_w_tau_onto, onto, g.jobs))


def _suite_tau_equivariance(g: Grid):
    tasks = [(l, n, s) for l in g.levels for n in range(g.n_max(4) + 1)
             for s in charges(l, g.charge_bound)]
    return _merge("tau-equivariance", _run(_w_tau_equivariance, tasks, g.jobs))


def _suite_tau_transpose(g: Grid):
    tasks = [(l, n, s) for l in g.levels for n in range(g.n_max(4) + 1)
             for s in charges(l, g.charge_bound)]
    return _merge("tau-transpose", _run(_w_tau_transpose, tasks, g.jobs))


def _suite_kappa_sum(g: Grid):
    tasks = [(l, n, m, g.size_span) for l in g.levels for n in range(g.n_max(4) + 1)
             for m in m_grid(l)]
    return _merge("kappa-sum-const", _run(_w_kappa_sum, tasks, g.jobs))


def _suite_kappa_equivariance(g: Grid):
    tasks = [(l, n, m, g.size_span) for l in g.levels for n in range(g.n_max(3) + 1)
             for m in m_grid(l)]
    return _merge("kappa-equivariance", _run(_w_kappa_equivariance, tasks, g.jobs))


def _suite_adjacent_swap(g: Grid):
    tasks = [(l, n, m) for l in g.levels for n in range(g.n_max(3) + 1)
             for m in m_grid(l)]
    return _merge("adjacent-swap-N", _run(_w_adjacent_swap, tasks, g.jobs))


def _suite_alcove_dict(g: Grid):
    tasks = [(l, n, s) for l in g.levels for n in range(g.n_max(4 if l == 2 else 3) + 1)
             for s in charges(l, g.charge_bound)]
    return _merge("alcove-kappa-dict", _run(_w_alcove_dict, tasks, g.jobs))


def _wall_tasks(g: Grid, default_n: int):
    lo, hi = g.d_range
    return [(n, d) for n in range(1, g.n_max(default_n) + 1) for d in range(lo, hi + 1)]


def _suite_halfstep(g: Grid):
    return _merge("lemma-halfstep", _run(_w_halfstep, _wall_tasks(g, 4), g.jobs))


def _suite_zigzag(g: Grid):
    return _merge("blocks-zigzag", _run(_w_zigzag, _wall_tasks(g, 4), g.jobs))


def _suite_regular(g: Grid):
    tasks = [(n,) for n in range(1, g.n_max(5) + 1)]
    return _merge("blocks-regular-singleton", _run(_w_regular_singleton, tasks, g.jobs))


def _suite_s_stability(g: Grid):
    tasks = [(l, n, m) for l in g.levels for n in range(g.n_max(4) + 1)
             for m in m_grid(l)]
    res = _merge("s-stability", _run(_w_s_stability, tasks, g.jobs), report=True)
    res.details["changed_count"] = len(res.details.get("changed", []))
    res.details["changed"] = res.details.get("changed", [])[:MAX_EXAMPLES]
    return res


def _suite_jclass(g: Grid):
    lo, hi = g.d_range
    tasks = [(n, d, g.charge_bound + 1) for n in range(1, g.n_max(4) + 1)
             for d in range(lo, hi + 1)]
    return _merge("jclass-vs-kappa", _run(_w_jclass, tasks, g.jobs), report=True)


def _suite_glen(g: Grid):
    tasks = []
    for l in sorted(set(g.levels) | {2, 4}):
        for e in ([g.e] if g.e else range(1, l + 1)):
            if l % e == 0:
                tasks.extend((l, e, n) for n in range(g.n_max(4 if l < 4 else 3) + 1))
    res = _merge("glen-counts", _run(_w_glen, tasks, g.jobs))
    res.details["labels_l2_e2_n2"] = len(irr_glen_labels(2, 2, 2))
    if res.details["labels_l2_e2_n2"] != 4:
        res.status = "fail"
    return res


def _suite_poset(g: Grid):
    tasks = [(g.seed + i,) for i in range(g.samples)]
    nested = [(g.seed + i,) for i in range(max(1, g.samples // 4))]
    return _merge("poset-quotient", _run(_w_poset, tasks, g.jobs)
                  + _run(_w_poset_nested, nested, g.jobs))


def _suite_wall_converse(g: Grid):
    res = _merge("wall-converse", _run(_w_wall_converse, _wall_tasks(g, 5), g.jobs),
                 report=True)
    res.details["pair_count"] = len(res.details.get("pairs", []))
    return res


SUITES: Dict[str, Callable[[Grid], SuiteResult]] = {
    "thm-kappa-tau": _suite_thm_kappa_tau,
    "thm-kappa-N": _suite_thm_kappa_n,
    "thm-kappa-a": _suite_thm_kappa_a,
    "tau-roundtrip": _suite_tau_roundtrip,
    "tau-equivariance": _suite_tau_equivariance,
    "tau-transpose": _suite_tau_transpose,
    "kappa-sum-const": _suite_kappa_sum,
    "kappa-equivariance": _suite_kappa_equivariance,
    "adjacent-swap-N": _suite_adjacent_swap,
    "alcove-kappa-dict": _suite_alcove_dict,
    "lemma-halfstep": _suite_halfstep,
    "blocks-zigzag": _suite_zigzag,
    "blocks-regular-singleton": _suite_regular,
    "s-stability": _suite_s_stability,
    "jclass-vs-kappa": _suite_jclass,
    "glen-counts": _suite_glen,
    "poset-quotient": _suite_poset,
    "wall-converse": _suite_wall_converse,
}

REPORT_ONLY = {"s-stability", "jclass-vs-kappa", "wall-converse"}


def run_suite(name: str, grid: Optional[Grid] = None) -> SuiteResult:
    if name not in SUITES:
        raise UnknownSuite(name)
    grid = grid or Grid()
    start = time.perf_counter()
    res = SUITES[name](grid)
    res.seconds = round(time.perf_counter() - start, 3)
    return res


def run_suites(names: Sequence[str], grid: Optional[Grid] = None) -> List[SuiteResult]:
    for name in names:
        if name not in SUITES:
            raise UnknownSuite(name)
    return [run_suite(name, grid) for name in names]
