#!/usr/bin/env python3
"""Watch trap-chain ratios converge to their asymptotes.

For each max degree the chain family pins the degree-1-first heuristic to
(delta*k + 2) / ((2*delta - 2)*k + 2), which tends to delta / (2*delta - 2)
as units are appended.  This sweeps k, measures the real runs, and writes
one CSV row per point so the convergence can be plotted or eyeballed.

    python3 scripts/trap_convergence.py --deltas 3,4,5,6 --max-k 50 -o conv.csv
"""

import argparse
import csv
import sys
from fractions import Fraction

from matchforge import analysis, exact, heuristics, instances


def measure(delta: int, k: int):
    if delta == 3:
        g, _ = instances.gen_trap_chain_d3(k)
    else:
        g, _ = instances.gen_trap_chain(delta, k)
    pairs, _ = heuristics.run("karpsipser", g, heuristics.lexicographic())
    opt = len(exact.max_matching_bipartite(g))
    return len(pairs), opt


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--deltas", default="3,4,5,6",
                    help="comma-separated max degrees (3 means the paired-unit chain)")
    ap.add_argument("--max-k", type=int, default=50)
    ap.add_argument("-o", "--out", default="-", help="CSV path, - for stdout")
    args = ap.parse_args(argv)

    deltas = [int(d) for d in args.deltas.split(",") if d]
    ks = sorted({1, 2, 5, 10, 25, args.max_k} | {args.max_k})

    sink = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    try:
        w = csv.writer(sink)
        w.writerow(["delta", "k", "alg", "opt", "ratio", "asymptote", "gap"])
        for delta in deltas:
            target = analysis.ks_bound(delta)
            for k in ks:
                alg, opt = measure(delta, k)
                ratio = Fraction(alg, opt)
                w.writerow([delta, k, alg, opt,
                            f"{float(ratio):.6f}", f"{float(target):.6f}",
                            f"{float(ratio - target):.6f}"])
    finally:
        if sink is not sys.stdout:
            sink.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
