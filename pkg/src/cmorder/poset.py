"""Finite posets with bitset closure, group quotients, Hasse diagrams."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import (Any, Callable, Dict, Hashable, Iterable, List, Mapping,
                    Sequence, Tuple)

from .errors import NonEquivariant, PreorderNotOrder


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """Reflexive-transitive closure of a relation on a finite set.

    ``is_order`` records whether the closure is antisymmetric. Building with
    ``require_order=True`` raises :class:`PreorderNotOrder` otherwise.
    """

    def __init__(self, elements: Sequence[Hashable],
                 pairs: Iterable[Tuple[Hashable, Hashable]] = (),
                 require_order: bool = True):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        up = [1 << i for i in range(len(self.elements))]
        for a, b in pairs:
            up[self.index[a]] |= 1 << self.index[b]
        for k in range(len(up)):
            bit = 1 << k
            row = up[k]
            for i in range(len(up)):
                if up[i] & bit:
                    up[i] |= row
        self._up = up
        self.is_order = all(
            not (up[j] >> i) & 1
            for i in range(len(up)) for j in _bits(up[i] & ~(1 << i)))
        if require_order and not self.is_order:
            raise PreorderNotOrder("relation closure is not antisymmetric")

    @classmethod
    def from_pairs(cls, elements, pairs, require_order=True) -> "FinitePoset":
        return cls(elements, pairs, require_order)

    def __len__(self):
        return len(self.elements)

    def leq(self, a, b) -> bool:
        return bool((self._up[self.index[a]] >> self.index[b]) & 1)

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def up_set(self, a) -> Tuple:
        return tuple(self.elements[j] for j in _bits(self._up[self.index[a]]))

    def relations(self) -> List[Tuple[Hashable, Hashable]]:
        """All pairs (a, b) with a <= b, reflexive pairs included."""
        return [(self.elements[i], self.elements[j])
                for i, row in enumerate(self._up) for j in _bits(row)]

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return (set(self.elements) == set(other.elements)
                and set(self.relations()) == set(other.relations()))

    def __hash__(self):
        return hash(frozenset(self.relations()))

    def maxima(self) -> Tuple:
        return tuple(x for i, x in enumerate(self.elements)
                     if all((self._up[j] >> i) & 1 for j in _bits(self._up[i])))

    def minima(self) -> Tuple:
        down = self._down()
        return tuple(x for i, x in enumerate(self.elements)
                     if all((self._up[i] >> j) & 1 for j in _bits(down[i])))

    def _down(self) -> List[int]:
        down = [0] * len(self._up)
        for i, row in enumerate(self._up):
            for j in _bits(row):
                down[j] |= 1 << i
        return down

    def hasse(self) -> List[Tuple[Hashable, Hashable]]:
        """Cover pairs (a, b): a < b with nothing strictly between."""
        if not self.is_order:
            raise PreorderNotOrder("Hasse diagram needs a partial order")
        strict = [row & ~(1 << i) for i, row in enumerate(self._up)]
        covers = []
        for i, row in enumerate(strict):
            above = 0
            for k in _bits(row):
                above |= strict[k]
            covers.extend((self.elements[i], self.elements[j])
                          for j in _bits(row & ~above))
        return covers

    def to_dot(self, label: Callable[[Any], str] = str, name: str = "poset") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, x in enumerate(self.elements):
            lines.append(f"  n{i} [label={json.dumps(label(x))}];")
        for a, b in self.hasse():
            lines.append(f"  n{self.index[a]} -> n{self.index[b]};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self, encode: Callable[[Any], Any] = lambda x: x) -> Dict[str, Any]:
        return {
            "elements": [encode(x) for x in self.elements],
            "is_order": self.is_order,
            "covers": ([[self.index[a], self.index[b]] for a, b in self.hasse()]
                       if self.is_order else None),
            "relations": [[self.index[a], self.index[b]]
                          for a, b in self.relations() if a != b],
        }


@dataclass(frozen=True)
class GroupAction:
    """A finite group acting on ``points``, stored as index permutations.

    ``perms`` is closed under composition and contains the identity, so the
    action laws hold by construction.
    """
    points: Tuple[Hashable, ...]
    perms: Tuple[Tuple[int, ...], ...]

    @classmethod
    def generated(cls, points: Sequence[Hashable],
                  generators: Iterable[Mapping[Hashable, Hashable]]) -> "GroupAction":
        points = tuple(points)
        index = {x: i for i, x in enumerate(points)}
        gens = []
        for g in generators:
            img = tuple(index[g.get(x, x)] for x in points)
            if sorted(img) != list(range(len(points))):
                raise ValueError("generator is not a bijection of the points")
            gens.append(img)
        ident = tuple(range(len(points)))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = tuple(g[p[i]] for i in range(len(points)))
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        return cls(points, tuple(sorted(seen)))

    @classmethod
    def from_table(cls, points: Sequence[Hashable], elements: Sequence[Hashable],
                   table: Mapping[Tuple[Hashable, Hashable], Hashable],
                   act: Callable[[Hashable, Hashable], Hashable]) -> "GroupAction":
        """Validate the action laws of an abstract group given by its table."""
        points = tuple(points)
        elements = tuple(elements)
        idents = [e for e in elements
                  if all(table[e, g] == g == table[g, e] for g in elements)]
        if len(idents) != 1:
            raise ValueError("table has no unique identity")
        e = idents[0]
        for x in points:
            if act(e, x) != x:
                raise ValueError("identity does not act trivially")
        for g in elements:
            for h in elements:
                for x in points:
                    if act(table[g, h], x) != act(g, act(h, x)):
                        raise ValueError("action is not compatible with the table")
        gens = [{x: act(g, x) for x in points} for g in elements]
        return cls.generated(points, gens)

    @property
    def order(self) -> int:
        return len(self.perms)

    def apply(self, k: int, x: Hashable) -> Hashable:
        return self.points[self.perms[k][self.points.index(x)]]

    def orbits(self) -> List[Tuple[Hashable, ...]]:
        seen = set()
        out = []
        for i in range(len(self.points)):
            if i in seen:
                continue
            orb = sorted({p[i] for p in self.perms})
            seen.update(orb)
            out.append(tuple(self.points[j] for j in orb))
        return out


def quotient_by_group(poset: FinitePoset, action: GroupAction,
                      require_order: bool = True) -> FinitePoset:
    """Orbit poset: [x] <= [y] iff x <= g.y for some g.

    Elements of the result are the orbits as tuples of members.
    """
    if set(action.points) != set(poset.elements):
        raise ValueError("action and poset live on different sets")
    where = {x: i for i, x in enumerate(action.points)}
    perms = [tuple(poset.index[action.points[p[where[x]]]] for x in poset.elements)
             for p in action.perms]
    # perms[k][i] is the poset index of g_k applied to poset element i
    up = poset._up
    for p in perms:
        for i, row in enumerate(up):
            for j in _bits(row):
                if not (up[p[i]] >> p[j]) & 1:
                    raise NonEquivariant(
                        f"{poset.elements[i]} <= {poset.elements[j]} is not preserved")
    orbit_of: Dict[int, int] = {}
    orbits: List[Tuple[int, ...]] = []
    for i in range(len(poset)):
        if i in orbit_of:
            continue
        members = tuple(sorted({p[i] for p in perms}))
        for j in members:
            orbit_of[j] = len(orbits)
        orbits.append(members)
    labels = [tuple(poset.elements[j] for j in orb) for orb in orbits]
    pairs = set()
    for a, orb in enumerate(orbits):
        for j in _bits(up[orb[0]]):
            pairs.add((labels[a], labels[orbit_of[j]]))
    return FinitePoset(labels, pairs, require_order)
