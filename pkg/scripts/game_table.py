#!/usr/bin/env python3
"""Pit every built-in priority policy against every adversary.

Prints one line per (adversary, policy) pairing: matching size, optimum of
the graph the adversary ended up building, the ratio, and whether the
transcript survives the consistency replay.  Random rank functions can be
mixed in to check that the constructions do not secretly depend on the
built-in orderings.
"""

import argparse
import sys
from fractions import Fraction

from matchforge import exact, game


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--delta", type=int, default=5, help="trap and general chains")
    ap.add_argument("--k", type=int, default=3, help="trap units")
    ap.add_argument("--n", type=int, default=10, help="two-sided chain units")
    ap.add_argument("--random-policies", type=int, default=3)
    args = ap.parse_args(argv)

    # adversaries consume their construction state, so build one per play
    adversaries = [
        ("trap", game.TrapChainAdversary, (args.delta, args.k)),
        ("twosided3", game.TwoSidedChainAdversary, (args.n,)),
        ("general2s", game.GeneralTwoSidedAdversary, (args.delta,)),
    ]
    policies = [make() for make in game.POLICIES.values()]
    for arity in (1, 2):
        policies += [game.random_policy(s, arity)
                     for s in range(args.random_policies)]

    print(f"{'adversary':<10} {'policy':<12} {'alg':>4} {'opt':>4} "
          f"{'ratio':>8} consistent")
    for advname, cls, cargs in adversaries:
        for policy in policies:
            if policy.arity != cls.arity:
                continue
            t = game.play(policy, cls(*cargs))
            alg = len(t.matching())
            opt = len(exact.max_matching_bipartite(t.final_graph))
            ratio = Fraction(alg, opt) if opt else Fraction(1)
            ok = "yes" if game.consistent(t, policy) else "NO"
            print(f"{advname:<10} {policy.name:<12} {alg:>4} {opt:>4} "
                  f"{float(ratio):>8.4f} {ok}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
