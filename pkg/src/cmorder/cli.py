"""Command-line front end.

Domain errors exit with status 1 and print the error class name on stderr;
usage errors exit with status 2.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import afunction, blocks, charged, orders, params, symbols, verify
from .errors import CMOrderError, NotCeStable, WrongLevel
from .partitions import (Verdict, as_multipartition, as_partition,
                         as_permutation, as_rationals, fmt_rational,
                         multipartitions, weight)


class UsageError(Exception):
    pass


# -- argument parsing helpers -------------------------------------------------

def _rationals(text: str) -> Tuple[Fraction, ...]:
    try:
        return as_rationals(x for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse rationals from {text!r}") from exc


def _ints(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"cannot parse integers from {text!r}") from exc


def _json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON {text!r}") from exc


def _multi(text: str, l: Optional[int]):
    try:
        lam = as_multipartition(_json(text))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"not a multipartition: {text!r}") from exc
    if l is not None and len(lam) != l:
        raise WrongLevel(f"expected {l} components, got {len(lam)}")
    return lam


def _partition(text: str):
    try:
        return as_partition(_json(text))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"not a partition: {text!r}") from exc


def _need(args, name: str):
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    return value


def _q(x) -> str:
    return fmt_rational(x)


def _qs(xs) -> List[str]:
    return [_q(x) for x in xs]


def _lam_json(lam):
    return [list(p) for p in lam]


def _lam_text(lam) -> str:
    return json.dumps(_lam_json(lam), separators=(",", ":"))


def _check_n(args, lam):
    if args.n is not None and weight(lam) != args.n:
        raise UsageError(f"--n {args.n} but the multipartition has size {weight(lam)}")


# -- alcove selection ---------------------------------------------------------

def _alcove(args) -> params.Alcove:
    if args.theta is not None:
        where = params.classify_theta_l2(_rationals(args.theta))
        if not isinstance(where, params.Alcove):
            from .errors import OnWall
            raise OnWall(f"theta {args.theta} is not inside an alcove: {where!r}")
        return where
    s = _ints(_need(args, "s"))
    w = as_permutation(_ints(args.w)) if args.w else tuple(range(1, len(s) + 1))
    return params.Alcove(s, w, args.sign)


def _alcove_json(a: params.Alcove) -> Dict[str, Any]:
    return {"s": list(a.s), "w": list(a.w), "sign": a.sign}


def _alcove_text(a: params.Alcove) -> str:
    return f"alpha(({','.join(map(str, a.s))}),({','.join(map(str, a.w))}),{a.sign})"


# -- commands -----------------------------------------------------------------

def cmd_symbol(args):
    lam = _multi(_need(args, "lambda_"), args.l)
    _check_n(args, lam)
    sym = symbols.shifted_symbol(lam, _rationals(_need(args, "m")), int(_need(args, "s")))
    rows = [_qs(r) for r in sym.rows]
    return {"rows": rows}, "\n".join(",".join(r) for r in rows)


def cmd_kappa(args):
    lam = _multi(_need(args, "lambda_"), args.l)
    _check_n(args, lam)
    k = _qs(symbols.kappa(lam, _rationals(_need(args, "m")), int(_need(args, "s"))))
    return {"kappa": k}, ",".join(k)


def cmd_nvalue(args):
    lam = _multi(_need(args, "lambda_"), args.l)
    _check_n(args, lam)
    v = _q(symbols.n_value(lam, _rationals(_need(args, "m")), int(_need(args, "s"))))
    return {"N": v}, v


def cmd_kcompare(args):
    lam = _multi(_need(args, "lambda_"), args.l)
    mu = _multi(_need(args, "mu"), args.l)
    v = symbols.kappa_compare(lam, mu, _rationals(_need(args, "m")), int(_need(args, "s")))
    return {"verdict": v.value}, v.value


def cmd_tau(args):
    s = _rationals(_need(args, "s"))
    lam = _multi(_need(args, "lambda_"), args.l if args.l else len(s))
    rho = charged.tau(s, lam)
    return {"rho": list(rho)}, json.dumps(list(rho), separators=(",", ":"))


def cmd_tauinv(args):
    s, lam = charged.tau_inverse(int(_need(args, "l")), _partition(_need(args, "rho")))
    return ({"s": list(s), "lambda": _lam_json(lam)},
            f"s={','.join(map(str, s))} lambda={_lam_text(lam)}")


def cmd_core(args):
    nu = charged.ell_core(_rationals(_need(args, "s")))
    return {"core": list(nu)}, json.dumps(list(nu), separators=(",", ":"))


def cmd_jheart(args):
    rho = _partition(_need(args, "rho"))
    J = _ints(args.j or "")
    heart = charged.j_heart(rho, J, int(_need(args, "l")))
    return {"heart": list(heart)}, json.dumps(list(heart), separators=(",", ":"))


def cmd_classify(args):
    if args.l not in (None, 2):
        raise WrongLevel("classification is implemented for level two")
    where = params.classify_theta_l2(_rationals(_need(args, "theta")))
    if isinstance(where, params.Alcove):
        i = _l2_index(where)
        return ({"kind": "alcove", "index": i, **_alcove_json(where)},
                f"alcove A_{i} = {_alcove_text(where)}")
    if isinstance(where, params.WallL2):
        lo, hi = params.wall_adjacent_alcoves_l2(where.d, where.sign)
        return ({"kind": "wall", "d": where.d, "sign": where.sign,
                 "adjacent": [_alcove_json(lo), _alcove_json(hi)]},
                f"wall d={where.d} ({where.sign}) between A_{where.d - 1} and A_{where.d}")
    return {"kind": "degenerate"}, "degenerate"


def _l2_index(a: params.Alcove) -> int:
    for i in range(-1000, 1001):
        if params.alcove_l2(i, a.sign) == a:
            return i
    raise ValueError(a)


def _wall_text(w: params.GitWall) -> str:
    if w.i is None:
        return "h = 0"
    span = f"H_{w.i}" if w.i == w.j else f"H_{w.i} + ... + H_{w.j}"
    return f"{span} + ({w.m})h = 0"


def cmd_walls(args):
    h = _rationals(_need(args, "h"))
    if args.l is not None and len(h) != args.l:
        raise WrongLevel(f"--h needs {args.l} values (h, H_1, ..., H_(l-1))")
    hits = params.git_walls(params.ParamH(h[0], h[1:]), int(_need(args, "n")))
    out = [{"h": True} if w.i is None else {"i": w.i, "j": w.j, "m": w.m} for w in hits]
    text = "\n".join(_wall_text(w) for w in hits) or "regular"
    return {"walls": out, "regular": not hits}, text


def cmd_alcoverep(args):
    theta = params.alcove_rep(_alcove(args))
    return {"theta": _qs(theta)}, ",".join(_qs(theta))


def cmd_order(args):
    a = _alcove(args)
    lam = _multi(_need(args, "a"), a.level)
    mu = _multi(_need(args, "b"), a.level)
    v = orders.comb_order(a, lam, mu)
    return {"verdict": v.value, "alcove": _alcove_json(a)}, v.value


def cmd_hasse(args):
    a = _alcove(args)
    poset = orders.order_poset(a, int(_need(args, "n")))
    if args.format == "dot":
        return None, poset.to_dot(label=_lam_text).rstrip("\n")
    return poset.to_json(_lam_json), json.dumps(poset.to_json(_lam_json))


def cmd_afn(args):
    m = _rationals(_need(args, "m"))
    lam = _multi(_need(args, "lambda_"), args.l if args.l else len(m))
    _check_n(args, lam)
    ctx = afunction.AContext(m, Fraction(args.r))
    size = int(args.s) if args.s is not None else None
    v = _q(afunction.a_value(lam, ctx, size))
    return {"a": v, "size": size}, v


def _blocks_json(bp: blocks.BlockPartition):
    return {"provenance": bp.provenance,
            "classes": [[_lam_json(x) for x in c] for c in bp.classes]}


def _blocks_text(classes) -> str:
    return "\n".join("{" + "; ".join(_lam_text(x) for x in c) + "}" for c in classes)


def _wblocks(args, l: int, n: int, m=None) -> blocks.BlockPartition:
    if args.charge is not None:
        return blocks.cm_blocks_jclass(l, n, _rationals(args.charge), _ints(args.j or ""))
    if l == 2 and m is not None:
        size = int(args.s) if args.s is not None else None
        return blocks.cm_blocks_l2(n, m, size)
    return blocks.cm_blocks_regular(l, n)


def cmd_blocks(args):
    l = int(args.l or 2)
    n = int(_need(args, "n"))
    m = _rationals(args.m) if args.m else None
    if m is not None and len(m) != l:
        raise WrongLevel(f"--m needs {l} values")
    bp = _wblocks(args, l, n, m)
    return _blocks_json(bp), _blocks_text(bp.classes)


def _glen_json(label: blocks.GlenLabel):
    return {"orbit": _lam_json(label.orbit), "index": label.index}


def cmd_blocks_e(args):
    l = int(_need(args, "l"))
    e = int(_need(args, "e"))
    n = int(_need(args, "n"))
    m = None
    if args.h is not None:
        h = _rationals(args.h)
        if len(h) != l:
            raise WrongLevel(f"--h needs {l} values (h, H_1, ..., H_(l-1))")
        p = params.ParamH(h[0], h[1:])
        full = (p.H0,) + p.H
        if l % e == 0 and any(full[(j + l // e) % l] != full[j] for j in range(l)):
            raise NotCeStable("parameter is not invariant under the C_e shift")
        if l == 2 and p.h != 0:
            m = (-p.H[0] / p.h, Fraction(0))
    wb = _wblocks(args, l, n, m)
    gb = blocks.glen_blocks(l, e, n, wb)
    out = {"classes": [[_glen_json(x) for x in c] for c in gb.classes],
           "unresolved": list(gb.split),
           "labels": len(blocks.irr_glen_labels(l, e, n))}
    text = "\n".join(
        "{" + "; ".join(f"{_lam_text(x.orbit)}#{x.index}" for x in c) + "}"
        + ("  [split, unresolved]" if s else "")
        for c, s in zip(gb.classes, gb.split))
    return out, text


def cmd_verify(args):
    grid = verify.Grid(jobs=args.jobs, seed=args.seed)
    if args.l is not None:
        grid.levels = (args.l,)
    if args.max_n is not None:
        grid.max_n = args.max_n
    if args.e is not None:
        grid.e = args.e
    if args.samples is not None:
        grid.samples = args.samples
    names = args.suites or list(verify.SUITES)
    results = verify.run_suites(names, grid)
    lines = []
    for r in results:
        tag = {"pass": "PASS", "fail": "FAIL", "report": "REPORT"}[r.status]
        lines.append(f"{tag} {r.name} cases={r.cases} "
                     f"counterexamples={r.details.get('failures', 0)} ({r.seconds}s)")
        for c in r.counterexamples:
            lines.append("  " + json.dumps(verify._jsonable(c)))
        if r.status == "report":
            lines.append("  " + json.dumps(verify._jsonable(
                {k: v for k, v in r.details.items() if k != "failures"}))[:2000])
    code = 0 if all(r.ok for r in results) else 1
    return [r.to_json() for r in results], "\n".join(lines), code


COMMANDS: Dict[str, Callable] = {
    "symbol": cmd_symbol, "kappa": cmd_kappa, "nvalue": cmd_nvalue,
    "kcompare": cmd_kcompare, "tau": cmd_tau, "tauinv": cmd_tauinv,
    "core": cmd_core, "jheart": cmd_jheart, "classify": cmd_classify,
    "walls": cmd_walls, "alcoverep": cmd_alcoverep, "order": cmd_order,
    "hasse": cmd_hasse, "afn": cmd_afn, "blocks": cmd_blocks,
    "blocks-e": cmd_blocks_e, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--max-n", type=int, dest="max_n")
    common.add_argument("--l", type=int)
    common.add_argument("--e", type=int)

    parser = argparse.ArgumentParser(prog="cmorder", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, *opts, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        for opt in opts:
            if opt == "lambda":
                p.add_argument("--lambda", dest="lambda_", help='JSON, e.g. "[[],[3,2]]"')
            else:
                p.add_argument(f"--{opt}")
        return p

    add("symbol", "n", "m", "s", "lambda")
    add("kappa", "n", "m", "s", "lambda")
    add("nvalue", "n", "m", "s", "lambda")
    add("kcompare", "n", "m", "s", "lambda", "mu")
    add("tau", "s", "lambda", help="s is the charge, e.g. \"1,-1\"")
    add("tauinv", "rho")
    add("core", "s")
    add("jheart", "rho", "j")
    add("classify", "theta")
    add("walls", "n", "h")
    for name in ("alcoverep", "order", "hasse"):
        p = add(name, "s", "w", "theta")
        p.add_argument("--sign", choices=["+", "-"], default="+")
    sub.choices["order"].add_argument("--a")
    sub.choices["order"].add_argument("--b")
    sub.choices["hasse"].add_argument("--n")
    sub.choices["hasse"].add_argument("--format", choices=["dot", "json"], default="dot")
    p = add("afn", "n", "m", "s", "lambda")
    p.add_argument("--r", default="1")
    add("blocks", "n", "m", "s", "charge", "j")
    add("blocks-e", "n", "h", "s", "charge", "j")
    p = add("verify")
    p.add_argument("suites", nargs="*", metavar="suite")
    p.add_argument("--samples", type=int)
    for action in sub.choices["afn"]._actions:
        if action.dest == "n":
            action.type = int
    for name in ("symbol", "kappa", "nvalue", "kcompare"):
        for action in sub.choices[name]._actions:
            if action.dest == "n":
                action.type = int
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except CMOrderError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    payload, text, code = out if len(out) == 3 else (*out, 0)
    if args.json and payload is not None:
        print(json.dumps(payload))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
