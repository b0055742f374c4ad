"""Maximal-matching heuristics with explicit tie-breaking.

Every runner works on a private clone of the input graph, applies picks
through a MinTracker (which keeps the minimum alive degree and minimum
edge degree-sum current without rescanning), and records one TracePick
per round so a run can be replayed and audited afterwards.

Tie-breaking is factored out: a TieBreakPolicy resolves every free choice
a rule leaves open, either lexicographically or by a seeded RNG that is a
pure function of (seed, round, candidate set).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .graph import Graph, ParseError, reduce_by_pick, restore, snapshot

ARBITRARY = "arbitrary"
MIN_NEIGHBOR = "minneighbor"

EXHAUSTIVE_NODE_LIMIT = 12


class UnknownAlgorithm(Exception):
    pass


class TooManyNodes(Exception):
    pass


# ---------------------------------------------------------------------------
# tie-breaking


@dataclass(frozen=True)
class TieBreakPolicy:
    """Resolves ties among candidate edges or nodes.

    kind 'lex' always takes the smallest candidate.  kind 'seeded' draws
    from a fresh RNG keyed on (seed, round, stage, sorted candidates), so
    a pick depends only on what is on offer, never on run history.
    """

    kind: str
    seed: int = 0

    def choose_edge(self, round_index: int, edges) -> Tuple[int, int]:
        cands = sorted((u, v) if u < v else (v, u) for u, v in edges)
        if not cands:
            raise ValueError("no candidate edges")
        if self.kind == "lex":
            return cands[0]
        rng = random.Random(f"{self.seed}:{round_index}:e:{cands}")
        return cands[rng.randrange(len(cands))]

    def choose_node(self, round_index: int, nodes, stage: str = "") -> int:
        cands = sorted(nodes)
        if not cands:
            raise ValueError("no candidate nodes")
        if self.kind == "lex":
            return cands[0]
        rng = random.Random(f"{self.seed}:{round_index}:{stage}:n:{cands}")
        return cands[rng.randrange(len(cands))]

    def permutation(self, n: int) -> List[int]:
        perm = list(range(n))
        if self.kind != "lex":
            random.Random(f"{self.seed}:perm").shuffle(perm)
        return perm


def lexicographic() -> TieBreakPolicy:
    return TieBreakPolicy("lex")


def seeded(seed: int) -> TieBreakPolicy:
    return TieBreakPolicy("seeded", seed)


# ---------------------------------------------------------------------------
# incremental minimum statistics


class MinTracker:
    """Bucketed degree and degree-sum statistics of a reduced graph.

    Nodes with at least one alive edge sit in _deg_buckets[degree]; alive
    edges sit in _sum_buckets[deg_u + deg_v].  A pick touches only the two
    endpoints' neighborhoods, so updates cost O(max_degree^2) instead of a
    full rescan.  Minimum pointers are re-seated by a short upward scan:
    one pick lowers a node degree by at most 2 and an edge sum by at most
    4, which bounds how far the minima can fall.
    """

    def __init__(self, g: Graph):
        self.g = g
        self._deg_buckets: Dict[int, Set[int]] = {}
        self._sum_buckets: Dict[int, Set[Tuple[int, int]]] = {}
        self._node_total = 0
        self._edge_total = 0
        self._min_deg = 0
        self._min_sum = 0
        degree = g.degree
        for v in g.alive_nodes():
            if degree[v] > 0:
                self._deg_buckets.setdefault(degree[v], set()).add(v)
                self._node_total += 1
        for u, v in g.alive_edges():
            self._sum_buckets.setdefault(degree[u] + degree[v], set()).add((u, v))
            self._edge_total += 1
        self._reseat()

    def has_edges(self) -> bool:
        return self._edge_total > 0

    def min_degree(self) -> int:
        return self._min_deg

    def min_degree_sum(self) -> int:
        return self._min_sum

    def degree_one_nodes(self) -> List[int]:
        return sorted(self._deg_buckets.get(1, ()))

    def min_degree_nodes(self) -> List[int]:
        if self._node_total == 0:
            return []
        return sorted(self._deg_buckets[self._min_deg])

    def min_sum_edges(self) -> List[Tuple[int, int]]:
        if self._edge_total == 0:
            return []
        return sorted(self._sum_buckets[self._min_sum])

    def _drop_node(self, v: int, deg: int) -> None:
        if deg > 0:
            bucket = self._deg_buckets[deg]
            bucket.discard(v)
            self._node_total -= 1

    def _drop_edge(self, u: int, v: int, total: int) -> None:
        if u > v:
            u, v = v, u
        self._sum_buckets[total].discard((u, v))
        self._edge_total -= 1

    def pick(self, u: int, v: int) -> None:
        """Apply reduce_by_pick(u, v) and refresh every bucket it touches."""
        g = self.g
        degree = g.degree
        pre_u = degree[u]
        pre_v = degree[v]
        nu = g.neighbors_alive(u)
        nv = g.neighbors_alive(v)

        self._drop_node(u, pre_u)
        self._drop_node(v, pre_v)
        for x in nu:
            if x != v:
                self._drop_edge(u, x, pre_u + degree[x])
        for x in nv:
            if x != u:
                self._drop_edge(v, x, pre_v + degree[x])
        self._drop_edge(u, v, pre_u + pre_v)

        delta: Dict[int, int] = {}
        for x in nu:
            if x != v:
                delta[x] = delta.get(x, 0) + 1
        for x in nv:
            if x != u:
                delta[x] = delta.get(x, 0) + 1

        reduce_by_pick(g, u, v)

        for x, d in delta.items():
            old = degree[x] + d
            self._deg_buckets[old].discard(x)
            if degree[x] > 0:
                self._deg_buckets.setdefault(degree[x], set()).add(x)
            else:
                self._node_total -= 1

        done = set()
        alive = g.alive
        for x in delta:
            for t in g.adj[x]:
                if not alive[t]:
                    continue
                key = (x, t) if x < t else (t, x)
                if key in done:
                    continue
                done.add(key)
                shift = delta[x] + delta.get(t, 0)
                if shift == 0:
                    continue
                new = degree[x] + degree[t]
                self._sum_buckets[new + shift].discard(key)
                self._sum_buckets.setdefault(new, set()).add(key)

        self._reseat()

    def _reseat(self) -> None:
        if self._node_total == 0:
            self._min_deg = 0
        else:
            d = max(1, self._min_deg - 2)
            while not self._deg_buckets.get(d):
                d += 1
            self._min_deg = d
        if self._edge_total == 0:
            self._min_sum = 0
        else:
            s = max(2, self._min_sum - 4)
            while not self._sum_buckets.get(s):
                s += 1
            self._min_sum = s


# ---------------------------------------------------------------------------
# traces


@dataclass(frozen=True)
class TracePick:
    """One matched edge plus the pre-pick statistics that justified it.

    Degrees and minima are taken in the reduced graph the pick was made
    in, immediately before the pick.  For node-first rules, u is the
    selected node and v its mate.
    """

    u: int
    v: int
    deg_u: int
    deg_v: int
    min_deg: int
    min_sum: int


def trace_dumps(trace: Sequence[TracePick]) -> str:
    lines = [f"{i} {p.u} {p.v} {p.deg_u} {p.deg_v} {p.min_deg} {p.min_sum}"
             for i, p in enumerate(trace, start=1)]
    return "".join(line + "\n" for line in lines)


def trace_loads(text: str) -> List[TracePick]:
    trace = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 7:
            raise ParseError(f"line {lineno}: expected 7 fields, got {len(parts)}")
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field in {line!r}")
        if vals[0] != len(trace) + 1:
            raise ParseError(f"line {lineno}: round {vals[0]} out of order")
        if min(vals[1:]) < 0:
            raise ParseError(f"line {lineno}: negative field")
        trace.append(TracePick(*vals[1:]))
    return trace


def trace_load(path) -> List[TracePick]:
    with open(path, "r", encoding="utf-8") as fh:
        return trace_loads(fh.read())


def trace_dump(trace: Sequence[TracePick], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(trace_dumps(trace))


# ---------------------------------------------------------------------------
# runners

Matching = List[Tuple[int, int]]
RunResult = Tuple[Matching, List[TracePick]]


def _start(g: Graph, policy: Optional[TieBreakPolicy]):
    work = g.clone()
    return work, MinTracker(work), policy or lexicographic(), [], []


def _apply(work, tracker, pairs, trace, u, v) -> None:
    trace.append(TracePick(u, v, work.degree[u], work.degree[v],
                           tracker.min_degree(), tracker.min_degree_sum()))
    pairs.append((u, v))
    tracker.pick(u, v)


def run_greedy(g: Graph, policy: Optional[TieBreakPolicy] = None) -> RunResult:
    """Match any alive edge until none remain."""
    work, tracker, policy, pairs, trace = _start(g, policy)
    rnd = 0
    while tracker.has_edges():
        u, v = policy.choose_edge(rnd, work.alive_edges())
        _apply(work, tracker, pairs, trace, u, v)
        rnd += 1
    return pairs, trace


def run_karp_sipser(g: Graph, policy: Optional[TieBreakPolicy] = None) -> RunResult:
    """Match a degree-1 node to its only neighbor when one exists,
    otherwise any edge."""
    work, tracker, policy, pairs, trace = _start(g, policy)
    rnd = 0
    while tracker.has_edges():
        ones = tracker.degree_one_nodes()
        if ones:
            u = policy.choose_node(rnd, ones, stage="deg1")
            v = work.neighbors_alive(u)[0]
        else:
            u, v = policy.choose_edge(rnd, work.alive_edges())
        _apply(work, tracker, pairs, trace, u, v)
        rnd += 1
    return pairs, trace


def run_min_greedy(g: Graph, policy: Optional[TieBreakPolicy] = None,
                   neighbor_rule: str = ARBITRARY) -> RunResult:
    """Select a minimum-degree node, then one of its neighbors.

    neighbor_rule 'arbitrary' leaves the mate fully to the policy;
    'minneighbor' restricts it to neighbors of minimum degree first.
    """
    if neighbor_rule not in (ARBITRARY, MIN_NEIGHBOR):
        raise ValueError(f"unknown neighbor rule {neighbor_rule!r}")
    work, tracker, policy, pairs, trace = _start(g, policy)
    degree = work.degree
    rnd = 0
    while tracker.has_edges():
        u = policy.choose_node(rnd, tracker.min_degree_nodes(), stage="select")
        nbrs = work.neighbors_alive(u)
        if neighbor_rule == MIN_NEIGHBOR:
            low = min(degree[w] for w in nbrs)
            nbrs = [w for w in nbrs if degree[w] == low]
        v = policy.choose_node(rnd, nbrs, stage="mate")
        _apply(work, tracker, pairs, trace, u, v)
        rnd += 1
    return pairs, trace


def run_mrg(g: Graph, policy: Optional[TieBreakPolicy] = None) -> RunResult:
    """Select any non-isolated node, then any of its neighbors."""
    work, tracker, policy, pairs, trace = _start(g, policy)
    degree = work.degree
    rnd = 0
    while tracker.has_edges():
        nodes = [v for v in work.alive_nodes() if degree[v] > 0]
        u = policy.choose_node(rnd, nodes, stage="select")
        v = policy.choose_node(rnd, work.neighbors_alive(u), stage="mate")
        _apply(work, tracker, pairs, trace, u, v)
        rnd += 1
    return pairs, trace


def run_shuffle(g: Graph, policy: Optional[TieBreakPolicy] = None) -> RunResult:
    """Process nodes in a fixed permutation; each still-alive node is
    matched to its earliest-in-permutation alive neighbor.

    The permutation is the policy's only influence: identity for the
    lexicographic policy, a seeded shuffle otherwise.
    """
    work, tracker, policy, pairs, trace = _start(g, policy)
    perm = policy.permutation(g.node_count)
    pos = [0] * g.node_count
    for i, v in enumerate(perm):
        pos[v] = i
    for u in perm:
        if not work.alive[u]:
            continue
        nbrs = work.neighbors_alive(u)
        if not nbrs:
            continue
        v = min(nbrs, key=pos.__getitem__)
        _apply(work, tracker, pairs, trace, u, v)
    return pairs, trace


def run_mds(g: Graph, policy: Optional[TieBreakPolicy] = None) -> RunResult:
    """Match an edge whose endpoint degree sum is minimum."""
    work, tracker, policy, pairs, trace = _start(g, policy)
    rnd = 0
    while tracker.has_edges():
        u, v = policy.choose_edge(rnd, tracker.min_sum_edges())
        _apply(work, tracker, pairs, trace, u, v)
        rnd += 1
    return pairs, trace


RUNNERS = {
    "greedy": run_greedy,
    "karpsipser": run_karp_sipser,
    "mingreedy": run_min_greedy,
    "mrg": run_mrg,
    "shuffle": run_shuffle,
    "mds": run_mds,
}


def run(name: str, g: Graph, policy: Optional[TieBreakPolicy] = None) -> RunResult:
    try:
        runner = RUNNERS[name]
    except KeyError:
        raise UnknownAlgorithm(name) from None
    return runner(g, policy)


# ---------------------------------------------------------------------------
# exhaustive tie-breaking on tiny graphs


def _adversary_candidates(g: Graph, algorithm: str) -> List[Tuple[int, int]]:
    degree = g.degree
    if algorithm == "karpsipser":
        ones = [v for v in g.alive_nodes() if degree[v] == 1]
        if ones:
            cands = {(v, g.neighbors_alive(v)[0]) for v in ones}
            return sorted((a, b) if a < b else (b, a) for a, b in cands)
        return list(g.alive_edges())
    if algorithm in ("greedy", "mrg"):
        # mrg can reach any edge by selecting either endpoint first
        return list(g.alive_edges())
    if algorithm == "mds":
        edges = list(g.alive_edges())
        if not edges:
            return []
        low = min(degree[u] + degree[v] for u, v in edges)
        return [(u, v) for u, v in edges if degree[u] + degree[v] == low]
    if algorithm in ("mingreedy", "mingreedy_minneighbor"):
        alive = [v for v in g.alive_nodes() if degree[v] > 0]
        if not alive:
            return []
        low = min(degree[v] for v in alive)
        cands = set()
        for v in alive:
            if degree[v] != low:
                continue
            nbrs = g.neighbors_alive(v)
            if algorithm == "mingreedy_minneighbor":
                nlow = min(degree[w] for w in nbrs)
                nbrs = [w for w in nbrs if degree[w] == nlow]
            for w in nbrs:
                cands.add((v, w) if v < w else (w, v))
        return sorted(cands)
    raise UnknownAlgorithm(algorithm)


def exhaustive_tie_break(g: Graph, algorithm: str) -> Tuple[int, int]:
    """(worst, best) matching size over every tie-break the rule allows.

    Explores all runs of the rule with memoization on the alive-node set;
    only feasible on tiny graphs, hence the hard node limit.  'shuffle'
    has no per-round freedom and is not supported.
    """
    if algorithm == "shuffle":
        raise UnknownAlgorithm("shuffle has no per-round tie-breaks")
    if g.node_count > EXHAUSTIVE_NODE_LIMIT:
        raise TooManyNodes(
            f"{g.node_count} nodes exceeds the limit {EXHAUSTIVE_NODE_LIMIT}")
    work = g.clone()
    memo: Dict[int, Tuple[int, int]] = {}

    def rec() -> Tuple[int, int]:
        mask = 0
        for v in range(work.node_count):
            if work.alive[v]:
                mask |= 1 << v
        hit = memo.get(mask)
        if hit is not None:
            return hit
        cands = _adversary_candidates(work, algorithm)
        if not cands:
            memo[mask] = (0, 0)
            return (0, 0)
        lo = work.node_count + 1
        hi = -1
        for u, v in cands:
            snap = snapshot(work)
            reduce_by_pick(work, u, v)
            sub_lo, sub_hi = rec()
            restore(work, snap)
            lo = min(lo, 1 + sub_lo)
            hi = max(hi, 1 + sub_hi)
        memo[mask] = (lo, hi)
        return (lo, hi)

    return rec()
