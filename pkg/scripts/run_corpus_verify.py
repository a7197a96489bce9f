#!/usr/bin/env python3
"""Verify every inequality on a random corpus and summarize the slack margins.

Usage: python scripts/run_corpus_verify.py [--count 40] [--seed 20000] [--n 2]
"""

import argparse
import math

import numpy as np

from magcurv.bounds import verify_report
from magcurv.graphs import random_magnetic_graph


def build_corpus(count, seed0):
    graphs = []
    for i in range(count):
        rng = np.random.default_rng(seed0 + i)
        n = int(rng.integers(3, 11))
        ell = (2, 3, 4)[i % 3]
        p = float(rng.uniform(0.3, 0.8))
        graphs.append(random_magnetic_graph(n, p, ell, rng=rng))
    return graphs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=40)
    ap.add_argument("--seed", type=int, default=20_000)
    ap.add_argument("--n", type=float, default=2.0)
    args = ap.parse_args()

    corpus = build_corpus(args.count, args.seed)
    all_ok = True
    min_harnack_slack = math.inf
    min_eigen_margin = math.inf
    min_cheeger_margin = math.inf

    print(f"{'#':>3} {'N':>3} {'ell':>3} {'kappa':>12} {'harnack slack':>14} "
          f"{'eig margin':>12} {'cheeger h1':>11} ok")
    for i, g in enumerate(corpus):
        rep = verify_report(g, n=args.n)
        slack = min((r.slack for r in rep.harnack), default=math.inf)
        min_harnack_slack = min(min_harnack_slack, slack)
        eig_margin = math.inf
        if rep.eigenvalue is not None:
            eig_margin = rep.eigenvalue.lambda_min - rep.eigenvalue.bound
            min_eigen_margin = min(min_eigen_margin, eig_margin)
        h1 = math.nan
        if rep.cheeger is not None:
            h1 = rep.cheeger.h1
            min_cheeger_margin = min(min_cheeger_margin,
                                     rep.cheeger.h1 - rep.cheeger.lower)
        all_ok = all_ok and rep.all_passed
        print(f"{i:>3} {g.num_vertices:>3} {g.ell:>3} {rep.kappa:>12.6f} "
              f"{slack:>14.6f} {eig_margin:>12.6f} {h1:>11.6f} "
              f"{'yes' if rep.all_passed else 'NO'}")

    print()
    print(f"graphs: {args.count}  all passed: {all_ok}")
    print(f"tightest harnack slack:        {min_harnack_slack:.6f}")
    print(f"tightest eigenvalue margin:    {min_eigen_margin:.6f}")
    print(f"tightest cheeger lower margin: {min_cheeger_margin:.6f}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
