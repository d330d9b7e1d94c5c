"""Combinatorial orders attached to alcoves, walls and blocks."""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Sequence, Tuple

from .charged import tau
from .errors import OnWall, WrongLevel
from .params import Alcove, WallL2, classify_theta_l2
from .partitions import (Multipartition, Partition, Verdict, act_sym, bar,
                         dominance_compare, multipartitions, transpose_multi,
                         weight)
from .poset import FinitePoset


def _image(a: Alcove, lam: Multipartition) -> Partition:
    base = bar(lam) if a.sign == "-" else lam
    return tau(a.s, act_sym(a.w, transpose_multi(base)))


def comb_order(a: Alcove, lam: Multipartition, mu: Multipartition) -> Verdict:
    """lam < mu at the alcove iff tau_s(w . t mu) is dominated by tau_s(w . t lam)."""
    if len(lam) != a.level or len(mu) != a.level:
        raise WrongLevel("multipartition level differs from the alcove level")
    if lam == mu:
        return Verdict.EQUAL
    v = dominance_compare(_image(a, mu), _image(a, lam))
    return Verdict.INCOMPARABLE if v is Verdict.EQUAL else v


def comb_order_theta_l2(theta: Sequence, lam: Multipartition,
                        mu: Multipartition) -> Verdict:
    where = classify_theta_l2(theta)
    if not isinstance(where, Alcove):
        raise OnWall(f"theta {tuple(theta)} is not inside an alcove: {where!r}")
    return comb_order(where, lam, mu)


@lru_cache(maxsize=256)
def _successors(a: Alcove, n: int) -> Dict[Multipartition, FrozenSet[Multipartition]]:
    ground = multipartitions(a.level, n)
    images = {lam: _image(a, lam) for lam in ground}
    out = {}
    for lam in ground:
        out[lam] = frozenset(
            mu for mu in ground
            if mu != lam and dominance_compare(images[mu], images[lam]) is Verdict.LESS)
    return out


def strict_relation(a: Alcove, n: int) -> Dict[Multipartition, FrozenSet[Multipartition]]:
    """lam -> {mu : lam strictly below mu} on P(l, n)."""
    return _successors(a, n)


def order_poset(a: Alcove, n: int) -> FinitePoset:
    succ = _successors(a, n)
    pairs = [(lam, mu) for lam, ups in succ.items() for mu in ups]
    return FinitePoset(multipartitions(a.level, n), pairs)


def wall_reachable(alcoves: Iterable[Alcove], lam: Multipartition) -> FrozenSet:
    """Everything reachable from lam by strict steps in any of the alcoves."""
    alcoves = tuple(alcoves)
    n = weight(lam)
    succs = [_successors(a, n) for a in alcoves]
    seen = {lam}
    queue = deque([lam])
    while queue:
        x = queue.popleft()
        for succ in succs:
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return frozenset(seen)


def wall_preorder(alcoves: Iterable[Alcove], lam: Multipartition,
                  mu: Multipartition) -> bool:
    """Preorder generated by the orders of the adjacent alcoves."""
    if weight(lam) != weight(mu):
        return False
    return mu in wall_reachable(alcoves, lam)


def block_order(alcoves: Iterable[Alcove], classes: Sequence[Tuple[Multipartition, ...]],
                require_order: bool = True) -> FinitePoset:
    """Order on blocks: B <= B' when some member of B precedes one of B'."""
    alcoves = tuple(alcoves)
    classes = [tuple(c) for c in classes]
    owner = {lam: c for c in classes for lam in c}
    pairs = set()
    for c in classes:
        for lam in c:
            for mu in wall_reachable(alcoves, lam):
                pairs.add((c, owner[mu]))
    return FinitePoset(classes, pairs, require_order)
