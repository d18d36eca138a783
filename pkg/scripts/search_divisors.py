#!/usr/bin/env python3
"""Search skew factorizations x^beta - lambda = g*h and rank the Gray images.

Example (the alpha=7 block of the embedded table, doubling map):

    python scripts/search_divisors.py --alpha 7 --g-alpha 3121 --beta 14 \
        --deg 4 --map double --top 10

Each hit is rebuilt from scratch (span, Howell form, exhaustive Lee
distance), so printed parameters are exact.  Use --target n,k,d to keep
only codes matching given parameters; rejected candidates then abort
their distance scan early, which makes full-degree sweeps fast.
"""

import argparse
import sys

from skewcodes import zqpoly
from skewcodes.graymaps import GrayVariant
from skewcodes.rings import RingParams, make_automorphism, parse_relem
from skewcodes.search import SearchJob, format_found, run_search


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=4)
    ap.add_argument("--aut", default="0,3", metavar="K,D")
    ap.add_argument("--alpha", type=int, required=True)
    ap.add_argument("--g-alpha", required=True)
    ap.add_argument("--beta", type=int, required=True)
    ap.add_argument("--lambda", dest="lam", default="1")
    ap.add_argument("--deg", type=int, nargs="+", required=True)
    ap.add_argument("--map", choices=("double", "triple", "both"), default="double")
    ap.add_argument("--target", default=None, help="n,k,d to filter on")
    ap.add_argument("--top", type=int, default=20, help="print at most this many codes")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    params = RingParams.from_q(args.q)
    k, d = (int(x) for x in args.aut.split(","))
    theta = make_automorphism(params, k, d)
    variants = {
        "double": (GrayVariant.DOUBLE,),
        "triple": (GrayVariant.TRIPLE,),
        "both": (GrayVariant.DOUBLE, GrayVariant.TRIPLE),
    }[args.map]
    target = tuple(int(x) for x in args.target.split(",")) if args.target else None

    job = SearchJob(
        params=params,
        theta=theta,
        alpha=args.alpha,
        g_alpha=zqpoly.parse_zq_digits(args.g_alpha, params.q),
        beta=args.beta,
        lam=parse_relem(args.lam, params),
        deg_range=tuple(args.deg),
        variants=variants,
        target=target,
        threads=args.threads,
    )
    found = run_search(job)
    best = sorted(found, key=lambda f: (-f.d_lee, f.n))[: args.top]
    for fc in best:
        print(format_found(fc))
    print(f"{len(found)} codes found; showing {len(best)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
