"""Command line front end.

Subcommands: gen writes instance files, run executes a heuristic and
reports its ratio, exact computes a maximum matching, game plays a
priority policy against an adversary, sweep emits a CSV over a grid of
instances, check-trace audits a recorded run.  Set MATCHFORGE_THREADS
to parallelize sweeps; rows are sorted, so the output bytes do not
depend on the worker count.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from . import analysis, exact, game, graph, heuristics, instances


def _fail(msg: str, code: int = 2) -> "None":
    print(f"error: {msg}", file=sys.stderr)
    sys.exit(code)


def _load_graph(path: str) -> graph.Graph:
    try:
        return graph.load(path)
    except (OSError, graph.GraphError) as exc:
        _fail(str(exc))


def _policy_from_args(args) -> heuristics.TieBreakPolicy:
    if args.policy == "lex":
        return heuristics.lexicographic()
    return heuristics.seeded(args.seed)


def _optimum(g: graph.Graph) -> Optional[List[Tuple[int, int]]]:
    if g.bipartite:
        return exact.max_matching_bipartite(g)
    try:
        return exact.max_matching_bruteforce(g)
    except exact.TooLarge:
        return None


# ---------------------------------------------------------------------------
# gen


def _build_instance(family: str, args) -> Tuple[graph.Graph, instances.InstanceDescriptor]:
    need = {
        "trap": ("delta", "k"),
        "trap3": ("k",),
        "twosided3": ("n",),
        "mds": ("delta",),
        "avgdeg": ("n",),
        "chordedc4": (),
        "random": ("left", "right", "delta", "seed"),
    }[family]
    for name in need:
        if getattr(args, name, None) is None:
            _fail(f"family {family} needs --{name}")
    if family == "trap":
        return instances.gen_trap_chain(args.delta, args.k, args.perfect)
    if family == "trap3":
        return instances.gen_trap_chain_d3(args.k, args.perfect)
    if family == "twosided3":
        return instances.gen_two_sided_d3(args.n, args.k)
    if family == "mds":
        return instances.gen_mds_instance(args.delta)
    if family == "avgdeg":
        return instances.gen_avg_degree_instance(args.n)
    if family == "chordedc4":
        return instances.gen_chorded_c4()
    return instances.gen_random_bipartite(args.left, args.right,
                                          args.delta, args.seed)


def _cmd_gen(args) -> int:
    try:
        g, desc = _build_instance(args.family, args)
    except instances.BadParams as exc:
        _fail(str(exc))
    text = instances.expectation_comment(desc) + "\n" + graph.dumps(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# run


def _cmd_run(args) -> int:
    g = _load_graph(args.graph)
    policy = _policy_from_args(args)
    try:
        pairs, trace = heuristics.run(args.algorithm, g, policy)
    except (heuristics.UnknownAlgorithm, graph.GraphError) as exc:
        _fail(str(exc))
    if args.trace:
        heuristics.trace_dump(trace, args.trace)
    opt = _optimum(g)
    if opt is None:
        print(f"alg={len(pairs)} opt=? (graph too large for exact search)")
        if args.assert_bound:
            _fail("--assert-bound needs a computable optimum")
        return 0
    rep = analysis.ratio_report(g, pairs, opt)
    print(f"alg={rep.alg_size} opt={rep.opt_size} ratio={rep.ratio} "
          f"delta={rep.delta} bound={rep.bound} "
          f"holds={'yes' if rep.bound_holds else 'no'}")
    if args.assert_bound and not rep.bound_holds:
        return 1
    return 0


# ---------------------------------------------------------------------------
# exact


def _cmd_exact(args) -> int:
    g = _load_graph(args.graph)
    try:
        pairs = exact.max_matching(g)
    except exact.TooLarge as exc:
        _fail(str(exc))
    print(f"opt={len(pairs)}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            for u, v in sorted(pairs):
                fh.write(f"{u} {v}\n")
    return 0


# ---------------------------------------------------------------------------
# game


def _cmd_game(args) -> int:
    try:
        if args.adv == "trap":
            if args.delta is None or args.k is None:
                _fail("adversary trap needs --delta and --k")
            adv = game.TrapChainAdversary(args.delta, args.k)
        elif args.adv == "twosided3":
            if args.n is None:
                _fail("adversary twosided3 needs --n")
            adv = game.TwoSidedChainAdversary(args.n)
        else:
            if args.delta is None:
                _fail("adversary general2s needs --delta")
            adv = game.GeneralTwoSidedAdversary(args.delta)
    except instances.BadParams as exc:
        _fail(str(exc))

    if args.policy == "random":
        policy = game.random_policy(args.seed, adv.arity)
    else:
        policy = game.POLICIES[args.policy]()
    try:
        transcript = game.play(policy, adv)
    except game.ArityMismatch as exc:
        _fail(str(exc))
    if args.output:
        game.transcript_dump(transcript, args.output)
    violations = game.verify_consistency(transcript, policy)
    alg = len(transcript.matching())
    opt = len(exact.max_matching_bipartite(transcript.final_graph))
    consistent = "yes" if not violations else "no"
    print(f"alg={alg} opt={opt} rounds={len(transcript.rounds)} "
          f"consistent={consistent}")
    for msg in violations:
        print(f"violation: {msg}")
    return 0 if not violations else 1


# ---------------------------------------------------------------------------
# sweep


def _sweep_task(task) -> str:
    family, params, algorithm, policy_kind, seed = task
    g, desc = instances.FAMILIES[family](**params)
    if policy_kind == "lex":
        policy = heuristics.lexicographic()
        policy_label = "lex"
    else:
        policy = heuristics.seeded(seed)
        policy_label = f"seeded-{seed}"
    pairs, _ = heuristics.run(algorithm, g, policy)
    opt = _optimum(g)
    if opt is None:
        raise exact.TooLarge(f"no exact optimum for {desc.family}")
    rep = analysis.ratio_report(g, pairs, opt)
    label = desc.family
    if desc.params:
        label += "-" + "-".join(f"{k}{v}" for k, v in sorted(desc.params.items()))
    return analysis.csv_row(label, algorithm, policy_label, rep)


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of ints: {text!r}")


def _sweep_tasks(args) -> List[tuple]:
    grids = []
    if args.family == "trap":
        for d in args.deltas or [4]:
            for k in args.ks or [1]:
                grids.append({"delta": d, "k": k})
    elif args.family == "trap3":
        for k in args.ks or [1]:
            grids.append({"k": k})
    elif args.family == "twosided3":
        for n in args.ns or [2]:
            grids.append({"n": n})
    elif args.family == "mds":
        for d in args.deltas or [3]:
            grids.append({"delta": d})
    elif args.family == "avgdeg":
        for n in args.ns or [2]:
            grids.append({"n": n})
    elif args.family == "chordedc4":
        grids.append({})
    else:
        for left in args.lefts or [8]:
            for right in args.rights or [8]:
                for d in args.deltas or [3]:
                    for s in args.seeds or [0]:
                        grids.append({"nl": left, "nr": right,
                                      "delta": d, "seed": s})
    tasks = []
    for params in grids:
        for algorithm in args.algs:
            tasks.append((args.family, params, algorithm,
                          args.policy, args.seed))
    return tasks


def _cmd_sweep(args) -> int:
    for algorithm in args.algs:
        if algorithm not in heuristics.RUNNERS:
            _fail(f"unknown algorithm {algorithm!r}")
    tasks = _sweep_tasks(args)
    threads = int(os.environ.get("MATCHFORGE_THREADS", "1"))
    try:
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                rows = list(pool.map(_sweep_task, tasks))
        else:
            rows = [_sweep_task(t) for t in tasks]
    except (instances.BadParams, exact.TooLarge) as exc:
        _fail(str(exc))
    rows.sort()
    text = analysis.CSV_HEADER + "\n" + "".join(r + "\n" for r in rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# check-trace


def _cmd_check_trace(args) -> int:
    g = _load_graph(args.graph)
    try:
        trace = heuristics.trace_load(args.trace)
    except (OSError, graph.ParseError) as exc:
        _fail(str(exc))
    m_star = None
    if args.ref:
        if not g.bipartite:
            _fail("--ref needs a bipartite graph")
        m_star = exact.max_matching_bipartite(g)
    try:
        violations = analysis.check_karp_sipser_trace(g, trace, m_star)
    except exact.NotBipartite as exc:
        _fail(str(exc))
    if not violations:
        print(f"clean ({len(trace)} picks)")
        return 0
    for msg in violations:
        print(f"violation: {msg}")
    return 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchforge",
        description="Worst-case instrumentation for greedy matching heuristics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("family", choices=sorted(instances.FAMILIES))
    p.add_argument("--delta", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--left", type=int)
    p.add_argument("--right", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--perfect", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("run", help="run a heuristic on a graph file")
    p.add_argument("algorithm", choices=sorted(heuristics.RUNNERS))
    p.add_argument("graph")
    p.add_argument("--policy", choices=("lex", "seeded"), default="lex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace", help="write the pick trace to this file")
    p.add_argument("--assert-bound", action="store_true",
                   help="exit 1 when the ratio misses the degree bound")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("exact", help="maximum matching size")
    p.add_argument("graph")
    p.add_argument("-o", "--output", help="write the matching pairs here")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("game", help="play a priority policy against an adversary")
    p.add_argument("--adv", choices=sorted(game.ADVERSARIES), required=True)
    p.add_argument("--policy",
                   choices=sorted(game.POLICIES) + ["random"],
                   default="karpsipser")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--delta", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("-o", "--output", help="write the transcript here")
    p.set_defaults(func=_cmd_game)

    p = sub.add_parser("sweep", help="CSV of ratios over an instance grid")
    p.add_argument("--family", choices=sorted(instances.FAMILIES),
                   required=True)
    p.add_argument("--algs", type=lambda s: s.split(","),
                   default=sorted(heuristics.RUNNERS),
                   help="comma list of algorithms")
    p.add_argument("--policy", choices=("lex", "seeded"), default="lex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--deltas", type=_int_list)
    p.add_argument("--ks", type=_int_list)
    p.add_argument("--ns", type=_int_list)
    p.add_argument("--lefts", type=_int_list)
    p.add_argument("--rights", type=_int_list)
    p.add_argument("--seeds", type=_int_list)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("check-trace", help="audit a recorded run")
    p.add_argument("graph")
    p.add_argument("trace")
    p.add_argument("--ref", action="store_true",
                   help="also check against a maximum matching")
    p.set_defaults(func=_cmd_check_trace)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
