"""Calogero-Moser block partitions and their transport to G(l, e, n)."""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import (Any, Callable, Dict, Iterable, List, Optional, Sequence,
                    Tuple)

from .charged import j_class_key
from .errors import BadDivisor, ConstancyViolation, NotCeStable, WrongLevel
from .partitions import Multipartition, as_rationals, multipartitions, transpose
from .poset import FinitePoset
from .symbols import kappa, min_size

Block = Tuple[Multipartition, ...]


@dataclass(frozen=True)
class BlockPartition:
    ground: Tuple[Multipartition, ...]
    classes: Tuple[Block, ...]
    provenance: str = ""

    def block_of(self, lam: Multipartition) -> Block:
        for c in self.classes:
            if lam in c:
                return c
        raise KeyError(lam)

    def same_block(self, lam: Multipartition, mu: Multipartition) -> bool:
        return self.block_of(lam) == self.block_of(mu)


def _fibers(ground: Sequence[Multipartition], key: Callable) -> Tuple[Block, ...]:
    groups: Dict[Any, List[Multipartition]] = {}
    for lam in ground:
        groups.setdefault(key(lam), []).append(lam)
    return tuple(sorted((tuple(sorted(g)) for g in groups.values())))


def cm_blocks_regular(l: int, n: int) -> BlockPartition:
    ground = multipartitions(l, n)
    return BlockPartition(ground, tuple(sorted((lam,) for lam in ground)), "regular")


def cm_blocks_l2(n: int, m: Sequence, size: Optional[int] = None) -> BlockPartition:
    """Level two: fibres of the kappa sequence."""
    m = as_rationals(m)
    if len(m) != 2:
        raise WrongLevel("kappa blocks are defined here for level two")
    ground = multipartitions(2, n)
    if size is None:
        size = max(min_size(lam, m) for lam in ground)
    return BlockPartition(ground, _fibers(ground, lambda lam: kappa(lam, m, size)),
                          f"kappa m={tuple(str(x) for x in m)} size={size}")


def cm_blocks_jclass(l: int, n: int, s: Sequence, J: Iterable[int]) -> BlockPartition:
    """Fibres of lam -> J-heart of tau_s(t lam)."""
    J = tuple(sorted({j % l for j in J}))
    s = as_rationals(s)
    ground = multipartitions(l, n)
    return BlockPartition(ground, _fibers(ground, lambda lam: j_class_key(s, lam, J)),
                          f"jclass s={tuple(str(x) for x in s)} J={J}")


# -- G(l, e, n) --------------------------------------------------------------

def _period(l: int, e: int) -> int:
    if e < 1 or l % e:
        raise BadDivisor(f"e = {e} does not divide l = {l}")
    return l // e


def rotate(lam: Multipartition, p: int) -> Multipartition:
    """Generator of C_e: shift the components by p places."""
    return lam[-p:] + lam[:-p] if p % len(lam) else lam


def is_stuttering(lam: Multipartition, e: int) -> bool:
    p = _period(len(lam), e)
    return rotate(lam, p) == lam


def ce_orbit(lam: Multipartition, e: int) -> Tuple[Multipartition, ...]:
    p = _period(len(lam), e)
    return tuple(sorted({rotate(lam, k * p) for k in range(e)}))


def stabilizer_order(lam: Multipartition, e: int) -> int:
    return e // len(ce_orbit(lam, e))


def clifford_pieces(lam: Multipartition, e: int) -> int:
    """Number of irreducible summands of the restriction to G(l, e, n)."""
    # for n = 0 both groups are trivial
    return stabilizer_order(lam, e) if any(lam) else 1


@dataclass(frozen=True, order=True)
class GlenLabel:
    """Irreducible of G(l, e, n): a C_e-orbit and a Clifford index."""
    orbit: Multipartition  # smallest member of the orbit
    index: int


def irr_glen_labels(l: int, e: int, n: int) -> Tuple[GlenLabel, ...]:
    _period(l, e)
    labels = []
    for lam in multipartitions(l, n):
        orb = ce_orbit(lam, e)
        if orb[0] == lam:
            labels.extend(GlenLabel(lam, k) for k in range(clifford_pieces(lam, e)))
    return tuple(sorted(labels))


def _hook_dim(p) -> int:
    pt = transpose(p)
    hooks = prod(p[i] - j + pt[j] - i - 1 for i in range(len(p)) for j in range(p[i]))
    return factorial(sum(p)) // hooks


def glen_dimensions(l: int, e: int, n: int) -> Dict[GlenLabel, int]:
    """Degrees after restriction from G(l, 1, n): dim / |stabiliser| each."""
    out = {}
    for lab in irr_glen_labels(l, e, n):
        lam = lab.orbit
        dim = factorial(n) // prod(factorial(sum(p)) for p in lam)
        dim *= prod(_hook_dim(p) for p in lam)
        out[lab] = dim // clifford_pieces(lam, e)
    return out


@dataclass(frozen=True)
class GlenBlockPartition:
    classes: Tuple[Tuple[GlenLabel, ...], ...]
    split: Tuple[bool, ...]      # True: one of several pieces of a split singleton
    source: Tuple[Block, ...]    # the G(l, 1, n) block each class came from

    @property
    def unresolved(self) -> Tuple[Tuple[GlenLabel, ...], ...]:
        return tuple(c for c, s in zip(self.classes, self.split) if s)


def glen_blocks(l: int, e: int, n: int, wblocks: BlockPartition) -> GlenBlockPartition:
    """Transport a C_e-stable block partition of P(l, n) to labels of G(l, e, n).

    A singleton block {lam} with lam e-stuttering yields one singleton class
    per Clifford index; whether those really split is not decided here, so
    they are flagged. Any other block maps to the set of all its labels.
    """
    p = _period(l, e)
    for block in wblocks.classes:
        members = set(block)
        if any(rotate(lam, p) not in members for lam in block):
            raise NotCeStable(f"block {block} is not stable under C_{e}")
    classes, split, source = [], [], []
    for block in wblocks.classes:
        reps = sorted({ce_orbit(lam, e)[0] for lam in block})
        if len(block) == 1 and clifford_pieces(block[0], e) == e > 1:
            for k in range(e):
                classes.append((GlenLabel(reps[0], k),))
                split.append(True)
                source.append(block)
            continue
        labels = tuple(GlenLabel(r, k) for r in reps
                       for k in range(clifford_pieces(r, e)))
        classes.append(labels)
        split.append(False)
        source.append(block)
    return GlenBlockPartition(tuple(classes), tuple(split), tuple(source))


def glen_block_order(l: int, e: int, n: int, wblocks: BlockPartition,
                     worder: FinitePoset) -> FinitePoset:
    """Order on G(l, e, n) classes pulled back from an order on the blocks.

    Pieces of one split singleton are left incomparable with each other.
    """
    gb = glen_blocks(l, e, n, wblocks)
    pairs = []
    for a, (ca, ba) in enumerate(zip(gb.classes, gb.source)):
        for b, (cb, bb) in enumerate(zip(gb.classes, gb.source)):
            if a != b and ba == bb:
                continue
            if worder.leq(ba, bb):
                pairs.append((ca, cb))
    return FinitePoset(gb.classes, pairs, worder.is_order)


def afc_on_blocks(classes: Iterable[Sequence], value_fn: Callable[[Any], Any]) -> Dict:
    """Common value of ``value_fn`` on each class."""
    out = {}
    for c in classes:
        c = tuple(c)
        values = {value_fn(x) for x in c}
        if len(values) != 1:
            raise ConstancyViolation(f"values {sorted(values)} on block {c}")
        out[c] = values.pop()
    return out
