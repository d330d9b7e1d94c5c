"""Lusztig a-function and the c-function comparison.

``a_value`` is the valuation of the Schur element of the cyclotomic Hecke
algebra with parameters Q_j = zeta^j v^{r m^j}, q = v^r. For r > 0 it is
computed from a per-box product over the components; r < 0 reduces to
r > 0 through a_{m,r}(lam) = a_{-m,-r}(t lam).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import WrongLevel, ZeroR
from .partitions import (Multipartition, Verdict, as_rationals, n_stat,
                         transpose, transpose_multi)
from .symbols import kappa, min_size, n_value


@dataclass(frozen=True)
class AContext:
    m: Tuple[Fraction, ...]
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", as_rationals(self.m))
        object.__setattr__(self, "r", Fraction(self.r))
        if self.r == 0:
            raise ZeroR("r must be nonzero")

    def flipped(self) -> "AContext":
        return AContext(tuple(-x for x in self.m), -self.r)


def _hook(p, qt, i: int, j: int) -> int:
    # generalised hook of box (i, j) of p against the conjugate qt of q
    arm = p[i] - (i + 1)
    leg = (qt[j] if j < len(qt) else 0) - (j + 1)
    return arm + leg + 1


def _a_positive(lam: Multipartition, m: Sequence[Fraction]) -> Fraction:
    union = sorted((x for p in lam for x in p), reverse=True)
    total = Fraction(n_stat(union))
    conj = [transpose(p) for p in lam]
    for s, p in enumerate(lam):
        for t in range(len(lam)):
            if t == s:
                continue
            for i, row in enumerate(p):
                for j in range(row):
                    total += m[t] - min(_hook(p, conj[t], i, j) + m[s], m[t])
    return total


def a_value(lam: Multipartition, ctx: AContext, size: Optional[int] = None) -> Fraction:
    """Valuation of the Schur element; independent of any symbol size.

    Passing ``size`` returns the symbol-normalised figure r * n(kappa), which
    differs from the valuation by a constant depending only on (m, r, size).
    """
    if len(lam) != len(ctx.m):
        raise WrongLevel(f"multipartition has {len(lam)} components, m has {len(ctx.m)}")
    if ctx.r < 0:
        return a_value(transpose_multi(lam), ctx.flipped(), size)
    if size is not None:
        return ctx.r * n_stat(kappa(lam, ctx.m, size))
    return ctx.r * _a_positive(lam, ctx.m)


def a_value_symbol(lam: Multipartition, ctx: AContext,
                   size: Optional[int] = None) -> Fraction:
    """Same valuation through the symbol: r (n(kappa(lam)) - n(kappa(empty)))."""
    if ctx.r < 0:
        return a_value_symbol(transpose_multi(lam), ctx.flipped(), size)
    empty = tuple(() for _ in lam)
    if size is None:
        size = max(min_size(lam, ctx.m), min_size(empty, ctx.m))
    return ctx.r * (n_stat(kappa(lam, ctx.m, size)) - n_stat(kappa(empty, ctx.m, size)))


def c_compare(lam: Multipartition, mu: Multipartition, ctx: AContext,
              size: int) -> Verdict:
    """Order of the c-function, read from N; reversed when r < 0."""
    a, b = n_value(lam, ctx.m, size), n_value(mu, ctx.m, size)
    v = Verdict.EQUAL if a == b else Verdict.LESS if a < b else Verdict.GREATER
    return v if ctx.r > 0 else v.flip()
