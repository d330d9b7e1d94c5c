"""Shifted m-symbols, the kappa sequence and the N-function."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Sequence, Tuple

from .errors import NegativeEntry, SizeTooSmall, WrongLevel
from .partitions import (Multipartition, Partition, Verdict, as_rationals,
                         dominance_compare, floor_q)


def hc(lam: Multipartition, m: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Per-component shifted heights h(lam^{i+1}) - m^i."""
    if len(lam) != len(m):
        raise WrongLevel(f"multipartition has {len(lam)} components, m has {len(m)}")
    return tuple(len(p) - Fraction(mi) for p, mi in zip(lam, m))


def min_size(lam: Multipartition, m: Sequence[Fraction]) -> int:
    """Smallest admissible symbol size for lam."""
    return ceil(max(hc(lam, m)) + 1)


def _beta(p: Partition) -> Tuple[int, ...]:
    # increasing: lambda_h, ..., lambda_j - j + h, ..., lambda_1 - 1 + h
    h = len(p)
    return tuple(p[j - 1] - j + h for j in range(h, 0, -1))


def _shift(beta: Tuple[int, ...], t: Fraction) -> Tuple[Fraction, ...]:
    if 0 <= t < 1:
        return tuple(Fraction(b) for b in beta)
    base = t - floor_q(t)
    return tuple(base + k for k in range(floor_q(t))) + tuple(b + t for b in beta)


@dataclass(frozen=True)
class Symbol:
    rows: Tuple[Tuple[Fraction, ...], ...]
    m: Tuple[Fraction, ...]
    size: int

    def entries(self) -> Tuple[Fraction, ...]:
        return tuple(x for row in self.rows for x in row)


def shifted_symbol(lam: Multipartition, m: Sequence, size: int) -> Symbol:
    m = as_rationals(m)
    shifts = hc(lam, m)
    if size < max(shifts) + 1:
        raise SizeTooSmall(f"size {size} < {max(shifts) + 1}")
    rows = []
    for p, c in zip(lam, shifts):
        t = size - c
        if t < 0:
            raise SizeTooSmall(f"negative shift {t}")
        rows.append(_shift(_beta(p), t))
    return Symbol(tuple(rows), m, size)


@lru_cache(maxsize=1 << 16)
def _kappa(lam: Multipartition, m: Tuple[Fraction, ...], size: int):
    return tuple(sorted(shifted_symbol(lam, m, size).entries(), reverse=True))


def kappa(lam: Multipartition, m: Sequence, size: int) -> Tuple[Fraction, ...]:
    """All symbol entries in decreasing order."""
    return _kappa(tuple(tuple(p) for p in lam), as_rationals(m), size)


def n_value_of(k: Sequence[Fraction], l: int) -> Fraction:
    """l * sum ([x] + 1)(2x - [x]) / 2 over the entries of k."""
    total = Fraction(0)
    for x in k:
        if x < 0:
            raise NegativeEntry(f"kappa entry {x} < 0")
        f = floor_q(x)
        total += (f + 1) * (2 * x - f) / 2
    return l * total


def n_value(lam: Multipartition, m: Sequence, size: int) -> Fraction:
    return n_value_of(kappa(lam, m, size), len(lam))


def kappa_compare(lam: Multipartition, mu: Multipartition, m: Sequence,
                  size: int) -> Verdict:
    return dominance_compare(kappa(lam, m, size), kappa(mu, m, size))
