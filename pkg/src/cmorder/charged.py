"""Charged beta-sets, the bijection tau_s and J-hearts."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import InternalCutoff, MalformedCharge, WrongLevel
from .partitions import Multipartition, Partition, as_rationals, transpose


def beta_set(p: Partition, charge, count: int) -> Tuple:
    """First ``count`` entries of (p_j + charge - j + 1)_{j >= 1}."""
    return tuple((p[j - 1] if j <= len(p) else 0) + charge - j + 1
                 for j in range(1, count + 1))


def _check_charge(s: Tuple[Fraction, ...]) -> None:
    l = len(s)
    if sum(s) != 0:
        raise MalformedCharge(f"charge {s} does not sum to zero")
    if any((l * x).denominator != 1 for x in s):
        raise MalformedCharge(f"charge {s} is not in (1/{l})Z")
    residues = {(i + int(l * s[i - 1])) % l for i in range(1, l + 1)}
    if len(residues) != l:
        raise MalformedCharge(f"charge {s} does not interleave into one beta-set")


def _from_beta(entries: Sequence[int]) -> Partition:
    """Partition from a decreasing beta_0 truncation that reaches the tail."""
    parts = [e + j for j, e in enumerate(entries)]
    if not parts or parts[-1] != 0:
        raise InternalCutoff("truncated beta-set does not reach its tail")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise MalformedCharge("interleaved set is not a beta-set")
    return tuple(x for x in parts if x > 0)


def tau(s: Sequence, lam: Multipartition) -> Partition:
    """Interleave the charged beta-sets of lam with step l."""
    s = as_rationals(s)
    l = len(s)
    if len(lam) != l:
        raise WrongLevel(f"charge has {l} entries, multipartition {len(lam)}")
    _check_charge(s)
    n = sum(sum(p) for p in lam)
    count = n + l * (max(abs(l * x) for x in s) + 1) + 1
    merged = []
    floor_val = None
    for i in range(1, l + 1):
        xs = beta_set(lam[i - 1], s[i - 1], int(count))
        ts = [int(l * (x - 1) + i) for x in xs]
        merged.extend(ts)
        floor_val = ts[-1] if floor_val is None else max(floor_val, ts[-1])
    kept = sorted((e for e in merged if e >= floor_val), reverse=True)
    return _from_beta(kept)


def tau_inverse(l: int, rho: Partition) -> Tuple[Tuple[int, ...], Multipartition]:
    """Recover (charge, multipartition) from a partition by residues mod l."""
    if l < 1:
        raise WrongLevel("level must be positive")
    h = len(rho)
    floor_val = 1 - h - l
    entries = [e for e in beta_set(rho, 0, h + l) if e >= floor_val]
    xs = [[] for _ in range(l)]
    for e in entries:  # decreasing, so each bucket stays decreasing
        i = (e - 1) % l + 1
        xs[i - 1].append((e - i) // l + 1)
    charge, comps = [], []
    for bucket in xs:
        c = bucket[-1] + len(bucket) - 1
        charge.append(c)
        comps.append(tuple(x - c + j for j, x in enumerate(bucket)
                           if x - c + j > 0))
    return tuple(charge), tuple(comps)


def ell_core(s: Sequence) -> Partition:
    """The l-core tau_s(empty); s must be integral."""
    s = as_rationals(s)
    if any(x.denominator != 1 for x in s):
        raise MalformedCharge(f"core needs an integral charge, got {s}")
    return tau(s, tuple(() for _ in s))


def _residue(row: int, col: int, l: int) -> int:
    return (col - row) % l


def removable_boxes(rho: Partition) -> Iterable[Tuple[int, int]]:
    """(row, col), zero-based, of every removable box."""
    for r, part in enumerate(rho):
        nxt = rho[r + 1] if r + 1 < len(rho) else 0
        if part > nxt:
            yield r, part - 1


def remove_box(rho: Partition, row: int) -> Partition:
    out = list(rho)
    out[row] -= 1
    return tuple(x for x in out if x > 0)


def j_heart(rho: Partition, J: Iterable[int], l: int) -> Partition:
    """Strip removable boxes with residue in J until none remain."""
    J = {j % l for j in J}
    rho = tuple(rho)
    while True:
        for r, c in removable_boxes(rho):
            if _residue(r, c, l) in J:
                rho = remove_box(rho, r)
                break
        else:
            return rho


def j_class_key(s: Sequence, lam: Multipartition, J: Iterable[int]) -> Partition:
    """The J-heart of tau_s(t lam); equal keys mean one J-class."""
    return j_heart(tau(s, tuple(transpose(p) for p in lam)), J, len(lam))


def core_by_hooks(rho: Partition, l: int) -> Partition:
    """l-core by repeatedly deleting rim hooks of length l from the diagram."""
    rho = list(rho)
    while True:
        conj = transpose(tuple(rho))
        for i, row in enumerate(rho):
            for j in range(row):
                arm, leg = row - j - 1, conj[j] - i - 1
                if arm + leg + 1 == l:
                    # rows i..i+leg lose the hook: each takes the next row's
                    # length minus one, the last one stops at column j
                    new = rho[:i] + [rho[r + 1] - 1 for r in range(i, i + leg)]
                    new += [j] + rho[i + leg + 1:]
                    rho = [x for x in new if x > 0]
                    break
            else:
                continue
            break
        else:
            return tuple(rho)
