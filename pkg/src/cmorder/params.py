"""Parameter systems (h, H), (m, r) and theta, GIT walls and alcoves.

Level-two alcoves are labelled A_i for integer i. On the half
``sum(theta) = 1`` the first coordinate d = theta_0 of the normalised
point decides the label: A_i is the open strip i < d < i + 1 and integer d
are walls.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .errors import WrongLevel, ZeroR
from .partitions import (Permutation, act_charge, as_permutation,
                         as_rationals, floor_q, identity, inverse)

Theta = Tuple[Fraction, ...]


@dataclass(frozen=True)
class ParamH:
    h: Fraction
    H: Tuple[Fraction, ...]  # H_1 .. H_{l-1}

    def __post_init__(self):
        object.__setattr__(self, "h", Fraction(self.h))
        object.__setattr__(self, "H", as_rationals(self.H))

    @property
    def level(self) -> int:
        return len(self.H) + 1

    @property
    def H0(self) -> Fraction:
        return -sum(self.H, Fraction(0))


@dataclass(frozen=True)
class ParamMR:
    m: Tuple[Fraction, ...]
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", as_rationals(self.m))
        object.__setattr__(self, "r", Fraction(self.r))


@dataclass(frozen=True)
class Alcove:
    """alpha(s, w, sign) with integral charge s."""
    s: Tuple[int, ...]
    w: Permutation
    sign: str = "+"

    def __post_init__(self):
        if self.sign not in "+-" or len(self.sign) != 1:
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")
        s = tuple(int(x) for x in self.s)
        if sum(s) != 0:
            raise ValueError(f"alcove charge {s} must sum to zero")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "w", as_permutation(self.w, len(s)))

    @property
    def level(self) -> int:
        return len(self.s)


@dataclass(frozen=True)
class WallL2:
    d: int
    sign: str = "+"


class _Degenerate:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Degenerate"


Degenerate = _Degenerate()


@dataclass(frozen=True)
class GitWall:
    """One hyperplane hit: ``h = 0`` when i is None, else
    H_i + ... + H_j + m h = 0."""
    i: Optional[int] = None
    j: Optional[int] = None
    m: Optional[int] = None


# -- conversions -------------------------------------------------------------

def h_to_theta(p: ParamH) -> Theta:
    return (-p.h + p.H0,) + p.H


def theta_to_h(theta: Sequence) -> ParamH:
    theta = as_rationals(theta)
    return ParamH(-sum(theta, Fraction(0)), theta[1:])


def mr_to_h(p: ParamMR) -> ParamH:
    m = p.m
    return ParamH(p.r, tuple(p.r * (m[i] - m[i - 1]) for i in range(1, len(m))))


def h_to_mr(p: ParamH, normalization=0) -> ParamMR:
    """Inverse of :func:`mr_to_h` with m^0 fixed to ``normalization``."""
    if p.h == 0:
        raise ZeroR("h = 0 has no (m, r) form")
    c = Fraction(normalization)
    m, acc = [c], Fraction(0)
    for Hi in p.H:
        acc += Hi
        m.append(acc / p.h + c)
    return ParamMR(tuple(m), p.h)


# -- walls -------------------------------------------------------------------

def git_walls(p: ParamH, n: int) -> List[GitWall]:
    hits = []
    if p.h == 0:
        hits.append(GitWall())
    l = p.level
    for i in range(1, l):
        for j in range(i, l):
            partial = sum(p.H[i - 1:j], Fraction(0))
            for k in range(1 - n, n):
                if partial + k * p.h == 0:
                    hits.append(GitWall(i, j, k))
    return hits


def is_regular(p: ParamH, n: int) -> bool:
    return not git_walls(p, n)


# -- alcoves -----------------------------------------------------------------

def alcove_rep(a: Alcove) -> Theta:
    """A rational point of the alcove.

    alpha(s, w) equals alpha(w^-1 . s, id) under the twisted charge action,
    so the identity-coset representative is used on the moved charge.
    """
    l = a.level
    s = act_charge(inverse(a.w), a.s)
    if a.sign == "+":
        diffs = [s[0] - s[l - 1]] + [s[i] - s[i - 1] for i in range(1, l)]
        return tuple(Fraction(1, l) + d for d in diffs)
    diffs = [s[l - 1] - s[0]] + [s[l - 1 - i] - s[l - i] for i in range(1, l)]
    return tuple(Fraction(-1, l) + d for d in diffs)


def theta_bar(theta: Sequence) -> Theta:
    """(-theta_0, -theta_{l-1}, ..., -theta_1)."""
    theta = as_rationals(theta)
    return (-theta[0],) + tuple(-x for x in reversed(theta[1:]))


SIGMA = (2, 1)


def alcove_l2(i: int, sign: str = "+") -> Alcove:
    """The level-two alcove A_i in normal form."""
    if i % 2 == 0:
        return Alcove((i // 2, -i // 2), identity(2), sign)
    return Alcove(((1 - i) // 2, (i - 1) // 2), SIGMA, sign)


def classify_theta_l2(theta: Sequence) -> Union[Alcove, WallL2, _Degenerate]:
    theta = as_rationals(theta)
    if len(theta) != 2:
        raise WrongLevel("classification is for level two only")
    total = theta[0] + theta[1]
    if total == 0:
        return Degenerate
    sign = "+" if total > 0 else "-"
    if total < 0:
        theta = theta_bar(theta)
        total = -total
    d = theta[0] / total
    if d.denominator == 1:
        return WallL2(int(d), sign)
    return alcove_l2(floor_q(d), sign)


def wall_adjacent_alcoves_l2(d: int, sign: str = "+") -> Tuple[Alcove, Alcove]:
    """The two alcoves on either side of the wall d."""
    d = Fraction(d)
    if d.denominator != 1:
        raise ValueError(f"level-two walls sit at integers, got {d}")
    return alcove_l2(int(d) - 1, sign), alcove_l2(int(d), sign)


def wall_for_m_l2(k: int) -> int:
    """Wall coordinate of the level-two parameter m = (k, 0)."""
    return 1 - k


def alcove_kappa_m(a: Alcove) -> Tuple[Fraction, ...]:
    """Parameter m whose kappa-dominance reproduces the order of alcove a.

    The alcove is first moved to the identity coset, alpha(s, w) =
    alpha(s', id) with s' = w^-1 . s. Then m^i = -s'_i - i/l for sign '+'
    (same order) and m^i = s'_{l-1-i} - i/l for sign '-' (reversed order).
    """
    l = a.level
    s = act_charge(inverse(a.w), a.s)
    if a.sign == "+":
        return tuple(-s[i] - Fraction(i, l) for i in range(l))
    return tuple(s[l - 1 - i] - Fraction(i, l) for i in range(l))
