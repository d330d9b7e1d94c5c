"""Partitions, multipartitions, dominance and the symmetric group actions.

Conventions used throughout the package:

* a partition is a tuple of positive ints in weakly decreasing order;
* a multipartition of level l is a tuple of l partitions;
* rationals are :class:`fractions.Fraction`;
* a permutation of {1..l} is the tuple of its images ``(w(1), ..., w(l))``
  and ``compose(u, v)`` is the map ``i -> u(v(i))``.
"""
from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Iterator, Sequence, Tuple, Union

import numpy as np

from .errors import WrongLevel

Partition = Tuple[int, ...]
Multipartition = Tuple[Partition, ...]
Permutation = Tuple[int, ...]
RationalLike = Union[int, Fraction, str]


class Verdict(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    def flip(self) -> "Verdict":
        if self is Verdict.LESS:
            return Verdict.GREATER
        if self is Verdict.GREATER:
            return Verdict.LESS
        return self

    def __str__(self):
        return self.value


# -- rationals ---------------------------------------------------------------

def as_rational(x: RationalLike) -> Fraction:
    """Exact conversion; floats are refused on purpose."""
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as a rational")


def as_rationals(xs: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    return tuple(as_rational(x) for x in xs)


def fmt_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def floor_q(x: Fraction) -> int:
    return x.numerator // x.denominator


# -- partitions --------------------------------------------------------------

def as_partition(p: Iterable[int]) -> Partition:
    parts = tuple(int(x) for x in p)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return tuple(x for x in parts if x > 0)


def as_multipartition(lam: Iterable[Iterable[int]]) -> Multipartition:
    return tuple(as_partition(p) for p in lam)


def weight(lam: Multipartition) -> int:
    return sum(sum(p) for p in lam)


def transpose(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def transpose_multi(lam: Multipartition) -> Multipartition:
    return tuple(transpose(p) for p in lam)


def bar(lam: Multipartition) -> Multipartition:
    """(t lam^l, ..., t lam^1)."""
    return tuple(transpose(p) for p in reversed(lam))


def n_stat(seq: Sequence) -> Fraction | int:
    """sum (i-1) x_i, the usual n(.) statistic of a decreasing sequence."""
    return sum(i * x for i, x in enumerate(seq))


# -- permutations ------------------------------------------------------------

def identity(l: int) -> Permutation:
    return tuple(range(1, l + 1))


def compose(u: Permutation, v: Permutation) -> Permutation:
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for i, wi in enumerate(w, 1):
        inv[wi - 1] = i
    return tuple(inv)


def as_permutation(w: Iterable[int], l: int | None = None) -> Permutation:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    if l is not None and len(w) != l:
        raise ValueError(f"permutation {w} does not have length {l}")
    return w


def permutations(l: int) -> Iterator[Permutation]:
    return itertools.permutations(range(1, l + 1))


def act_sym(w: Permutation, lam: Multipartition) -> Multipartition:
    """(w.lam)^i = lam^{w^-1(i)}."""
    winv = inverse(w)
    return tuple(lam[winv[i] - 1] for i in range(len(lam)))


def act_sym_q(w: Permutation, m: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Permute a parameter vector indexed 0..l-1 the same way as components."""
    winv = inverse(w)
    return tuple(m[winv[i] - 1] for i in range(len(m)))


def act_charge(w: Permutation, s: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Twisted action: s'_{i-1} = s_{w^-1(i)-1} + (w^-1(i) - i)/l."""
    l = len(s)
    winv = inverse(w)
    return tuple(Fraction(s[winv[i - 1] - 1]) + Fraction(winv[i - 1] - i, l)
                 for i in range(1, l + 1))


# -- dominance ---------------------------------------------------------------

def dominance_compare(a: Sequence, b: Sequence) -> Verdict:
    """Dominance of finite rational sequences, padded with zeros.

    Sequences with different totals are incomparable.
    """
    size = max(len(a), len(b))
    a = list(a) + [0] * (size - len(a))
    b = list(b) + [0] * (size - len(b))
    if sum(a) != sum(b):
        return Verdict.INCOMPARABLE
    if a == b:
        return Verdict.EQUAL
    below = above = True
    pa = pb = 0
    for x, y in zip(a, b):
        pa += x
        pb += y
        if pa > pb:
            below = False
        elif pa < pb:
            above = False
        if not (below or above):
            return Verdict.INCOMPARABLE
    return Verdict.LESS if below else Verdict.GREATER


def dominates_strictly(a: Sequence, b: Sequence) -> bool:
    """True when a is strictly below b."""
    return dominance_compare(a, b) is Verdict.LESS


# -- enumeration -------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions_of(n: int, largest: int | None = None) -> Tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in partitions_of(n - first, first))
    return tuple(out)


def compositions(n: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of n into the given number of parts."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def multipartitions(l: int, n: int) -> Tuple[Multipartition, ...]:
    """The set P(l, n) in a fixed deterministic order."""
    if l < 1:
        raise ValueError("level must be positive")
    out = []
    for comp in compositions(n, l):
        out.extend(itertools.product(*(partitions_of(k) for k in comp)))
    return tuple(out)


def check_level(lam: Multipartition, l: int) -> None:
    if len(lam) != l:
        raise WrongLevel(f"expected {l} components, got {len(lam)}")


__all__ = [
    "Fraction", "Multipartition", "Partition", "Permutation",
    "Verdict", "act_charge", "act_sym", "act_sym_q", "as_multipartition",
    "as_partition", "as_permutation", "as_rational", "as_rationals", "bar",
    "check_level", "compose", "compositions", "dominance_compare",
    "dominance_matrix", "dominates_strictly", "floor_q", "fmt_rational", "identity", "inverse",
    "multipartitions", "n_stat", "partitions_of", "permutations",
    "transpose", "transpose_multi", "weight",
]


def dominance_matrix(seqs: Sequence[Sequence]):
    """Boolean matrix M with M[a, b] true iff seqs[a] is strictly below seqs[b].

    Entries are rescaled to integers, so the comparison stays exact.
    """
    seqs = [tuple(Fraction(x) for x in s) for s in seqs]
    if not seqs:
        return np.zeros((0, 0), dtype=bool)
    den = lcm(1, *(x.denominator for s in seqs for x in s))
    width = max(1, max(len(s) for s in seqs))
    rows = np.zeros((len(seqs), width), dtype=np.int64)
    for i, s in enumerate(seqs):
        rows[i, :len(s)] = [int(x * den) for x in s]
    pre = np.cumsum(rows, axis=1)
    le = (pre[:, None, :] <= pre[None, :, :]).all(axis=2)
    same_total = pre[:, None, -1] == pre[None, :, -1]
    equal = (rows[:, None, :] == rows[None, :, :]).all(axis=2)
    return le & same_total & ~equal
