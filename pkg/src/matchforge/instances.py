"""Instance families with known heuristic and optimum matching sizes.

Each generator returns (graph, descriptor).  The descriptor freezes the
matching size a designated heuristic reaches under the lexicographic
policy and the maximum matching size, so sweeps can assert both without
re-deriving them.

Node ids are assigned so that the lexicographic run walks into the bad
matching on purpose: per family, the nodes meant to anchor free picks get
the smallest ids in their class, the nodes meant to be sacrificed in
forced cascades come later, and spectator nodes come last.  The layouts
keep each bipartition class contiguous (left ids first), which the file
format requires.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .graph import Graph, build


class BadParams(Exception):
    pass


@dataclass(frozen=True)
class InstanceDescriptor:
    family: str
    params: dict = field(default_factory=dict)
    expected_alg_size: Optional[int] = None
    expected_opt_size: Optional[int] = None
    # heuristics whose lexicographic run hits expected_alg_size exactly
    designated: Tuple[str, ...] = ()


ALL_HEURISTICS = ("greedy", "karpsipser", "mingreedy", "mrg", "shuffle", "mds")


def expectation_comment(desc: InstanceDescriptor) -> str:
    alg = desc.expected_alg_size if desc.expected_alg_size is not None else "?"
    opt = desc.expected_opt_size if desc.expected_opt_size is not None else "?"
    return f"# expect alg={alg} opt={opt}"


class _Ids:
    """Sequential id allocator keyed by structured node names."""

    def __init__(self):
        self.of: Dict[tuple, int] = {}
        self.next = 0

    def add(self, *name) -> int:
        self.of[name] = self.next
        self.next += 1
        return self.of[name]


# ---------------------------------------------------------------------------
# trap chain, max degree >= 4
#
# k traps in a row.  Each trap wastes picks of a degree-1-first run: the
# run matches delta edges per trap while the optimum matches every trap
# node (2*delta - 2 edges per trap).  Connector ladders (w-x-y-z) pad the
# anchor degrees up to delta.


def build_trap_chain(delta: int, k: int, perfect: bool = False):
    if delta < 4:
        raise BadParams(f"trap chain needs delta >= 4, got {delta}")
    if k < 1:
        raise BadParams(f"trap chain needs k >= 1, got {k}")
    lam = delta - 4
    ids = _Ids()
    traps = range(1, k + 1)
    rungs = range(1, lam + 1)

    # left class: free-pick anchors per trap first, sacrificial nodes second
    for i in traps:
        for j in rungs:
            ids.add("y", i, j)
        ids.add("p1", i)
        ids.add("d1", i)
    for i in traps:
        ids.add("c2", i)
        ids.add("c4", i)
        for j in rungs:
            ids.add("w", i, j)
        ids.add("d3", i)
        ids.add("q2", i)
    ids.add("e0")
    ids.add("e2")
    ids.add("e4")
    if perfect:
        ids.add("f1")
        ids.add("f3")
        ids.add("f6")
    left_count = ids.next

    for i in traps:
        for j in rungs:
            ids.add("x", i, j)
        ids.add("c1", i)
        ids.add("q1", i)
    for i in traps:
        ids.add("c3", i)
        ids.add("d2", i)
        ids.add("d4", i)
        ids.add("p2", i)
        for j in rungs:
            ids.add("z", i, j)
    ids.add("e1")
    ids.add("e3")
    if perfect:
        ids.add("f2")
        ids.add("f4")
        ids.add("f5")
        ids.add("f7")

    of = ids.of
    edges = []

    def e(a, b):
        edges.append((of[a], of[b]))

    for i in traps:
        e(("c1", i), ("c2", i))
        e(("c2", i), ("c3", i))
        e(("c3", i), ("c4", i))
        e(("c4", i), ("c1", i))
        e(("c1", i), ("p1", i))
        e(("p1", i), ("p2", i))
        e(("d1", i), ("d2", i))
        e(("d2", i), ("d3", i))
        e(("d3", i), ("d4", i))
        e(("d4", i), ("d1", i))
        e(("d1", i), ("q1", i))
        e(("q1", i), ("q2", i))
        e(("p2", i), ("d1", i))
        e(("p2", i), ("d3", i))
        for j in rungs:
            e(("w", i, j), ("c1", i))
            e(("w", i, j), ("c3", i))
            e(("w", i, j), ("x", i, j))
            e(("x", i, j), ("y", i, j))
            e(("y", i, j), ("z", i, j))
            e(("z", i, j), ("d1", i))
            e(("z", i, j), ("d3", i))
        if i < k:
            e(("q2", i), ("c1", i + 1))
            e(("q2", i), ("c3", i + 1))
    e(("e0",), ("c1", 1))
    e(("e0",), ("c3", 1))
    e(("q2", k), ("e1",))
    e(("q2", k), ("e3",))
    e(("e1",), ("e2",))
    e(("e2",), ("e3",))
    e(("e3",), ("e4",))
    e(("e1",), ("e4",))
    if perfect:
        e(("e0",), ("f5",))
        e(("f5",), ("f6",))
        e(("f6",), ("f7",))
        e(("f7",), ("e0",))
        e(("f1",), ("f2",))
        e(("f2",), ("f3",))
        e(("f3",), ("f4",))
        e(("f4",), ("f1",))

    g = build(ids.next, edges, bipartite=True, left_count=left_count)
    return g, of


def gen_trap_chain(delta: int, k: int, perfect: bool = False):
    g, _ = build_trap_chain(delta, k, perfect)
    bonus = 4 if perfect else 0
    desc = InstanceDescriptor(
        family="trap",
        params={"delta": delta, "k": k, "perfect": perfect},
        expected_alg_size=delta * k + 2 + bonus,
        expected_opt_size=(2 * delta - 2) * k + 2 + bonus,
        designated=("karpsipser",),
    )
    return g, desc


# ---------------------------------------------------------------------------
# trap chain, max degree 3
#
# k path-plus-square units.  Units alternate orientation so the chain
# stays bipartite with contiguous classes.  A degree-1-first run matches
# 3 edges per unit, the optimum 4.


def _d3_left(i: int) -> Tuple[str, ...]:
    return ("P2", "P4", "C1", "C3") if i % 2 == 1 else ("P1", "P3", "C2", "C4")


def build_trap_chain_d3(k: int, perfect: bool = False):
    if k < 1:
        raise BadParams(f"trap chain needs k >= 1, got {k}")
    ids = _Ids()
    units = range(1, k + 1)

    for i in units:
        ids.add("P2" if i % 2 == 1 else "P3", i)
    for i in units:
        if i % 2 == 1:
            ids.add("C1", i)
            ids.add("C3", i)
            ids.add("P4", i)
        else:
            ids.add("P1", i)
            ids.add("C2", i)
            ids.add("C4", i)
    tail_left = k % 2 == 1   # side of the unit-k exit, hence of e1/e3
    if tail_left:
        ids.add("e2")
        ids.add("e4")
    else:
        ids.add("e1")
        ids.add("e3")
    if perfect:
        ids.add("f2")
        ids.add("f4")
    left_count = ids.next

    for i in units:
        ids.add("P3" if i % 2 == 1 else "P2", i)
    for i in units:
        if i % 2 == 1:
            ids.add("P1", i)
            ids.add("C2", i)
            ids.add("C4", i)
        else:
            ids.add("C1", i)
            ids.add("C3", i)
            ids.add("P4", i)
    if not perfect:
        ids.add("e0")
    if tail_left:
        ids.add("e1")
        ids.add("e3")
    else:
        ids.add("e2")
        ids.add("e4")
    if perfect:
        ids.add("f1")
        ids.add("f3")

    of = ids.of
    edges = []

    def e(a, b):
        edges.append((of[a], of[b]))

    for i in units:
        e(("P1", i), ("P2", i))
        e(("P2", i), ("P3", i))
        e(("P3", i), ("P4", i))
        e(("P1", i), ("C1", i))
        e(("C1", i), ("C2", i))
        e(("C2", i), ("C3", i))
        e(("C3", i), ("C4", i))
        e(("C4", i), ("C1", i))
        if i > 1:
            e(("P4", i - 1), ("P2", i))
            e(("P4", i - 1), ("C3", i))
    if perfect:
        e(("f1",), ("P2", 1))
        e(("f3",), ("C3", 1))
        e(("f1",), ("f2",))
        e(("f2",), ("f3",))
        e(("f3",), ("f4",))
        e(("f4",), ("f1",))
    else:
        e(("e0",), ("P2", 1))
        e(("e0",), ("C3", 1))
    e(("P4", k), ("e1",))
    e(("P4", k), ("e3",))
    e(("e1",), ("e2",))
    e(("e2",), ("e3",))
    e(("e3",), ("e4",))
    e(("e1",), ("e4",))

    g = build(ids.next, edges, bipartite=True, left_count=left_count)
    return g, of


def gen_trap_chain_d3(k: int, perfect: bool = False):
    g, _ = build_trap_chain_d3(k, perfect)
    bonus = 2 if perfect else 0
    desc = InstanceDescriptor(
        family="trap3",
        params={"k": k, "perfect": perfect},
        expected_alg_size=3 * k + 2 + bonus,
        expected_opt_size=4 * k + 2 + bonus,
        designated=("karpsipser",),
    )
    return g, desc


# ---------------------------------------------------------------------------
# two-sided degree-3 chain
#
# n slots of 8 nodes, the first k forming a chain of closed units, the
# rest disjoint double-square components.  Every edge joins a degree-2
# and a degree-3 node (or two degree-3 nodes), so a minimum-degree-sum
# run starts on the intended script edges.  The optimum is perfect.


def build_two_sided_d3(n: int, k: int):
    if n < 1:
        raise BadParams(f"need n >= 1, got {n}")
    if not 0 <= k <= n:
        raise BadParams(f"need 0 <= k <= n, got k={k}")
    ids = _Ids()
    units = range(1, k + 1)
    comps = range(k + 1, n + 1)

    for i in units:
        ids.add("P2" if i % 2 == 1 else "P3", i)
    for i in units:
        if i % 2 == 1:
            ids.add("P4", i)
            ids.add("C1", i)
            ids.add("C3", i)
        else:
            ids.add("P1", i)
            ids.add("C2", i)
            ids.add("C4", i)
    for s in comps:
        ids.add("c1", s)
        ids.add("c3", s)
        ids.add("c6", s)
        ids.add("c8", s)
    left_count = ids.next

    for i in units:
        ids.add("P3" if i % 2 == 1 else "P2", i)
    for i in units:
        if i % 2 == 1:
            ids.add("P1", i)
            ids.add("C2", i)
            ids.add("C4", i)
        else:
            ids.add("P4", i)
            ids.add("C1", i)
            ids.add("C3", i)
    for s in comps:
        ids.add("c2", s)
        ids.add("c4", s)
        ids.add("c5", s)
        ids.add("c7", s)

    of = ids.of
    edges = []

    def e(a, b):
        edges.append((of[a], of[b]))

    for i in units:
        e(("P1", i), ("P2", i))
        e(("P2", i), ("P3", i))
        e(("P3", i), ("P4", i))
        e(("P1", i), ("C1", i))
        e(("C1", i), ("C2", i))
        e(("C2", i), ("C3", i))
        e(("C3", i), ("C4", i))
        e(("C4", i), ("C1", i))
        if i > 1:
            e(("P4", i - 1), ("P2", i))
            e(("P4", i - 1), ("C3", i))
    if k >= 1:
        # head and tail closures keep every degree at 2 or 3 with no
        # degree-(2,2) edge; a single unit merges them, dropping (C3, P1)
        # which would push P1 to degree 4
        e(("C2", 1), ("P2", 1))
        if k > 1:
            e(("C3", 1), ("P1", 1))
        e(("C4", k), ("P4", k))
        e(("P1", k), ("P4", k))
    for s in comps:
        e(("c1", s), ("c2", s))
        e(("c2", s), ("c3", s))
        e(("c3", s), ("c4", s))
        e(("c4", s), ("c1", s))
        e(("c5", s), ("c6", s))
        e(("c6", s), ("c7", s))
        e(("c7", s), ("c8", s))
        e(("c8", s), ("c5", s))
        e(("c2", s), ("c6", s))
        e(("c4", s), ("c8", s))

    g = build(ids.next, edges, bipartite=True, left_count=left_count)
    return g, of


def gen_two_sided_d3(n: int, k: Optional[int] = None):
    if k is None:
        k = n
    g, _ = build_two_sided_d3(n, k)
    alg = 4 * n if k == 0 else 4 * n + 1 - k
    desc = InstanceDescriptor(
        family="twosided3",
        params={"n": n, "k": k},
        expected_alg_size=alg,
        expected_opt_size=4 * n,
        designated=("mds",),
    )
    return g, desc


# ---------------------------------------------------------------------------
# degree-sum trap
#
# k = delta - 2 degree-2 pair edges sit at the minimum degree sum, so a
# minimum-degree-sum run eats them first and strands both hubs with their
# pendants: delta picks against an optimum of 2*delta - 2.


def build_mds_instance(delta: int):
    if delta < 3:
        raise BadParams(f"degree-sum trap needs delta >= 3, got {delta}")
    k = delta - 2
    ids = _Ids()
    pairs = range(1, k + 1)

    for i in pairs:
        ids.add("uL", i)
    for i in pairs:
        ids.add("wR", i)
    ids.add("cL")
    ids.add("cr", 1)
    ids.add("cr", 2)
    left_count = ids.next
    for i in pairs:
        ids.add("uR", i)
    for i in pairs:
        ids.add("wL", i)
    ids.add("cR")
    ids.add("cl", 1)
    ids.add("cl", 2)

    of = ids.of
    edges = []
    for i in pairs:
        edges.append((of["uL", i], of["uR", i]))
        edges.append((of["uL", i], of["wL", i]))
        edges.append((of["uR", i], of["wR", i]))
        edges.append((of["cL",], of["wL", i]))
        edges.append((of["wR", i], of["cR",]))
    edges.append((of["cr", 1], of["cR",]))
    edges.append((of["cr", 2], of["cR",]))
    edges.append((of["cL",], of["cl", 1]))
    edges.append((of["cL",], of["cl", 2]))

    g = build(ids.next, edges, bipartite=True, left_count=left_count)
    return g, of


def gen_mds_instance(delta: int):
    g, _ = build_mds_instance(delta)
    desc = InstanceDescriptor(
        family="mds",
        params={"delta": delta},
        expected_alg_size=delta,
        expected_opt_size=2 * delta - 2,
        designated=("mds",),
    )
    return g, desc


# ---------------------------------------------------------------------------
# sparse average-degree trap
#
# n paths u-v-w-x whose middle edge (v, w) is the lexicographic, minimum
# degree-sum, and minimum-degree choice all at once.  Path ends hang off
# two hubs per side, so no degree-1 node ever appears before the paths
# are spent.  Average degree stays below 3.5 while every heuristic here
# scores n + 4 against a perfect optimum of 2n + 2.


def build_avg_degree_instance(n: int):
    if n < 2:
        raise BadParams(f"average-degree trap needs n >= 2, got {n}")
    ids = _Ids()
    rng = range(1, n + 1)
    for i in rng:
        ids.add("v", i)
    for i in rng:
        ids.add("x", i)
    ids.add("l", 1)
    ids.add("l", 2)
    left_count = ids.next
    for i in rng:
        ids.add("w", i)
    for i in rng:
        ids.add("u", i)
    ids.add("r", 1)
    ids.add("r", 2)

    of = ids.of
    edges = []
    for i in rng:
        edges.append((of["v", i], of["u", i]))
        edges.append((of["v", i], of["w", i]))
        edges.append((of["w", i], of["x", i]))
        edges.append((of["u", i], of["l", 1]))
        edges.append((of["u", i], of["l", 2]))
        edges.append((of["x", i], of["r", 1]))
        edges.append((of["x", i], of["r", 2]))

    g = build(ids.next, edges, bipartite=True, left_count=left_count)
    return g, of


def gen_avg_degree_instance(n: int):
    g, _ = build_avg_degree_instance(n)
    desc = InstanceDescriptor(
        family="avgdeg",
        params={"n": n},
        expected_alg_size=n + 4,
        expected_opt_size=2 * n + 2,
        designated=ALL_HEURISTICS,
    )
    return g, desc


# ---------------------------------------------------------------------------
# chorded square
#
# The 4-cycle with one chord, labeled so the chord is the first edge in
# lexicographic order: one pick against an optimum of two.


def gen_chorded_c4():
    g = build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    desc = InstanceDescriptor(
        family="chordedc4",
        params={},
        expected_alg_size=1,
        expected_opt_size=2,
        designated=("greedy", "karpsipser", "mrg", "shuffle"),
    )
    return g, desc


# ---------------------------------------------------------------------------
# random bipartite


def gen_random_bipartite(nl: int, nr: int, delta: int, seed: int):
    """Random bipartite graph with max degree at most delta.

    The edge target is drawn from the seed; edges are rejection-sampled
    under the degree cap, so dense targets may come up short once the
    attempt budget runs out.  No expected sizes: this family exists to
    feed oracle cross-checks.
    """
    if nl < 1 or nr < 1:
        raise BadParams(f"need nl, nr >= 1, got {nl}, {nr}")
    if delta < 1:
        raise BadParams(f"need delta >= 1, got {delta}")
    rng = random.Random(seed)
    target = rng.randint(min(nl, nr), min(nl * delta, nr * delta, nl * nr))
    degree = [0] * (nl + nr)
    seen = set()
    edges = []
    budget = 50 * target + 50
    while len(edges) < target and budget > 0:
        budget -= 1
        u = rng.randrange(nl)
        v = nl + rng.randrange(nr)
        if (u, v) in seen or degree[u] >= delta or degree[v] >= delta:
            continue
        seen.add((u, v))
        degree[u] += 1
        degree[v] += 1
        edges.append((u, v))
    g = build(nl + nr, edges, bipartite=True, left_count=nl)
    desc = InstanceDescriptor(
        family="random",
        params={"nl": nl, "nr": nr, "delta": delta, "seed": seed},
    )
    return g, desc


FAMILIES = {
    "trap": gen_trap_chain,
    "trap3": gen_trap_chain_d3,
    "twosided3": gen_two_sided_d3,
    "mds": gen_mds_instance,
    "avgdeg": gen_avg_degree_instance,
    "chordedc4": gen_chorded_c4,
    "random": gen_random_bipartite,
}
