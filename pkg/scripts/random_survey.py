"""Survey random simplicial semigroups: how often CM, and how far B~ sits below B_sat.

    python scripts/random_survey.py --count 200 --seed 7 --dims 2,3
"""
import argparse
import collections
import time

from simplicial_cm.closure import cm_closure, same_semigroup, saturate
from simplicial_cm.decomposition import decompose, is_cohen_macaulay
from simplicial_cm.instances import random_family


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--dims", default="2,3")
    ap.add_argument("--lift", action="store_true", help="embed into Z^(d+1)")
    args = ap.parse_args()
    dims = tuple(int(x) for x in args.dims.split(","))

    t0 = time.perf_counter()
    rows = collections.Counter()
    for S in random_family(args.count, args.seed, dims=dims, lift=args.lift):
        dec = decompose(S)
        cm = is_cohen_macaulay(S, dec).is_cm
        closure = cm_closure(S).closure
        normal = same_semigroup(closure, saturate(S).saturation)
        proper = sum(not I.is_unit for I in dec.ideals)
        rows[(S.rank, dec.f, cm, normal, proper)] += 1
    print(f"{'d':>2} {'f':>3} {'CM':>5} {'B~=Bsat':>8} {'proper I_j':>10} {'count':>6}")
    for (d, f, cm, normal, proper), n in sorted(rows.items()):
        print(f"{d:>2} {f:>3} {str(cm):>5} {str(normal):>8} {proper:>10} {n:>6}")
    cm_total = sum(n for k, n in rows.items() if k[2])
    print(f"{cm_total}/{args.count} Cohen-Macaulay; {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
