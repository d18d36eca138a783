"""Command-line front end.

Subcommands: aut, divisors, build, table1, dual, props.  Exit codes: 0 on
success, 1 when a check fails, 2 on usage or parse errors, 3 when an
enumeration cap is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import props as props_mod
from . import zqpoly
from .errors import EnumerationCapExceeded, ParseError, SkewcodesError
from .graymaps import GrayVariant
from .rcodes import RCodeSpec, brute_dual_r, build_rcode, is_shift_closed
from .rings import (
    RingParams,
    format_relem,
    make_automorphism,
    parse_relem,
    relem_inv,
    valid_automorphisms,
)
from .search import (
    code_parameters,
    reproduce_table1,
)
from .skewpoly import format_r_poly, parse_r_poly, right_divisor_pairs
from .zqrcodes import (
    MixedCodeSpec,
    brute_dual_mixed,
    build_mixed_code,
    generator_from_parity,
    is_mixed_shift_closed,
)

USAGE_EXIT, CHECK_EXIT, CAP_EXIT = 2, 1, 3


def parse_zq_poly(text: str, q: int) -> zqpoly.ZPoly:
    """Ascending digit string, e.g. 31212201 = 3+x+2x^2+x^3+2x^4+2x^5+x^7."""
    return zqpoly.parse_zq_digits(text, q)


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--q", type=int, default=4, help="modulus q = p^s (default 4)")
    p.add_argument("--aut", default="0,3", metavar="K,D", help="automorphism theta(u)=k+ud (default 0,3)")
    p.add_argument("--format", choices=("text", "json"), default="text")


def _context(args):
    params = RingParams.from_q(args.q)
    k, d = (int(tok) for tok in args.aut.split(","))
    theta = make_automorphism(params, k, d)
    return params, theta


def _emit(args, lines: list[str], payload: dict) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_aut(args) -> int:
    params = RingParams.from_q(args.q)
    autos = valid_automorphisms(params)
    lines = [f"{len(autos)} automorphisms of Z_{args.q} + uZ_{args.q}:"]
    items = []
    for t in autos:
        lines.append(f"  theta(u) = {t.k}+{t.d}u   order m={t.m}")
        items.append({"k": t.k, "d": t.d, "m": t.m})
    _emit(args, lines, {"command": "aut", "q": args.q, "automorphisms": items})
    return 0


def cmd_divisors(args) -> int:
    params, theta = _context(args)
    lam = parse_relem(args.lam, params)
    lines, items = [], []
    for g, h in right_divisor_pairs(args.beta, lam, args.deg, params, theta, cap=args.max_enum):
        lines.append(f"g={format_r_poly(g)}  h={format_r_poly(h)}")
        items.append({"g": format_r_poly(g), "h": format_r_poly(h)})
    lines.append(f"{len(items)} factorizations x^{args.beta}-({format_relem(lam)}) = g*h with deg h={args.deg}")
    _emit(args, lines, {"command": "divisors", "count": len(items), "pairs": items})
    return 0


def cmd_build(args) -> int:
    params, theta = _context(args)
    lam = parse_relem(args.lam, params)
    g_alpha = zqpoly.parse_zq_digits(args.g_alpha, params.q)
    h = parse_r_poly(args.h_beta, params, theta)
    g, side = generator_from_parity(h, args.beta, lam)
    spec = MixedCodeSpec(
        alpha=args.alpha, beta=args.beta, lam=lam, theta=theta, g_alpha=g_alpha, g_beta=g
    )
    variant = GrayVariant(args.map)
    n, ctype, d, _ = code_parameters(spec, variant, threads=args.threads, word_cap=args.max_enum)
    k = str(ctype.k1) if ctype.k2 == 0 else f"4^{ctype.k1} 2^{ctype.k2}"
    lines = [f"[{n},{k},{d}]"]
    payload = {
        "command": "build",
        "n": n,
        "k1": ctype.k1,
        "k2": ctype.k2,
        "d": d,
        "side": side,
        "g_beta": format_r_poly(g),
        "map": variant.value,
    }
    _emit(args, lines, payload)
    return 0


def cmd_table1(args) -> int:
    report = reproduce_table1(manifest_path=args.manifest, threads=args.threads)
    payload = {
        "command": "table1",
        "ok": report.ok,
        "rows": [
            {
                "expected": [r.row.n, r.row.k, r.row.d],
                "ok": r.ok,
                "detail": r.detail,
            }
            for r in report.rows
        ],
    }
    _emit(args, report.lines(), payload)
    return 0 if report.ok else CHECK_EXIT


def cmd_dual(args) -> int:
    params, theta = _context(args)
    lam = parse_relem(args.lam, params)
    gen = parse_r_poly(args.gen, params, theta)
    lines, payload = [], {"command": "dual"}
    if args.alpha:
        g_alpha = zqpoly.parse_zq_digits(args.g_alpha, params.q)
        spec = MixedCodeSpec(
            alpha=args.alpha, beta=args.beta, lam=lam, theta=theta,
            g_alpha=g_alpha, g_beta=gen,
        )
        code = build_mixed_code(spec, explicit=True, cap=args.max_enum)
        dual = brute_dual_mixed(code, cap=args.max_enum)
        lam_inv = relem_inv(lam, params)
        closed = is_mixed_shift_closed(dual, lam_inv, theta, params)
        lines += [
            f"|C| = {len(code.words)}",
            f"|dual| = {len(dual)}",
            # a theorem only for separable codes, so informational here
            f"dual closed under inverse-twist mixed shift: {closed}",
        ]
        payload.update(size=len(code.words), dual_size=len(dual), dual_closed=closed)
        payload["gated"] = False
    else:
        spec = RCodeSpec(beta=args.beta, lam=lam, theta=theta, gen=gen)
        code = build_rcode(spec, cap=args.max_enum)
        dual = brute_dual_r(code, cap=args.max_enum)
        lam_inv = relem_inv(lam, params)
        closed = is_shift_closed(dual, lam_inv, theta, params)
        lines += [
            f"|C| = {len(code.words)}",
            f"|dual| = {len(dual)}",
            f"dual closed under lambda^-1 constacyclic shift: {closed}",
        ]
        payload.update(size=len(code.words), dual_size=len(dual), dual_closed=closed)
        payload["gated"] = True
    _emit(args, lines, payload)
    if payload["gated"] and not payload["dual_closed"]:
        return CHECK_EXIT
    return 0


def cmd_props(args) -> int:
    report = props_mod.run_all(seed=args.seed, q=args.q)
    payload = {
        "command": "props",
        "seed": report.seed,
        "ok": report.ok,
        "items": [{"name": i.name, "ok": i.ok, "detail": i.detail} for i in report.items],
    }
    _emit(args, report.lines(), payload)
    return 0 if report.ok else CHECK_EXIT


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewcodes", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("aut", help="list the valid automorphisms of Z_q + uZ_q")
    p.add_argument("--q", type=int, default=4)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_aut)

    p = sub.add_parser("divisors", help="enumerate factorizations x^beta - lambda = g*h")
    _add_common(p)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--deg", type=int, required=True, help="degree of the monic right factor h")
    p.add_argument("--max-enum", type=int, default=1 << 24)
    p.set_defaults(fn=cmd_divisors)

    p = sub.add_parser("build", help="build a mixed code from (g_alpha, h_beta) and print [n,k,d]")
    _add_common(p)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--g-alpha", required=True, help="ascending digit string, e.g. 31212201")
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--h-beta", required=True, help="comma-separated ascending coefficients")
    p.add_argument("--map", choices=("double", "triple"), default="double")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-enum", type=int, default=1 << 26)
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("table1", help="rebuild every embedded manifest row and compare")
    p.add_argument("--manifest", default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_table1)

    p = sub.add_parser("dual", help="exhaustive dual of a desk-scale code plus closure check")
    _add_common(p)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--gen", required=True, help="generator polynomial over R, ascending")
    p.add_argument("--alpha", type=int, default=0, help="nonzero for a mixed-code dual")
    p.add_argument("--g-alpha", default="1")
    p.add_argument("--max-enum", type=int, default=1 << 24)
    p.set_defaults(fn=cmd_dual)

    p = sub.add_parser("props", help="run the seeded invariant suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--q", type=int, default=4)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_props)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except EnumerationCapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return CAP_EXIT
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (SkewcodesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CHECK_EXIT


if __name__ == "__main__":
    sys.exit(main())
