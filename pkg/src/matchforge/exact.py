"""Exact maximum-matching oracles.

A deterministic layered augmenting-path matcher covers bipartite graphs of
any size.  For general graphs two brute-force modes are provided: subset
enumeration over the edge set, and exhaustive simple-alternating-path
augmentation with backtracking.  Both are exponential by design and refuse
inputs above their edge budgets, so callers can cross-check the fast matcher
against an independent method on small instances.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple

from .graph import Graph

SUBSET_EDGE_LIMIT = 16
AUGMENT_EDGE_LIMIT = 24

_INF = float("inf")


class ExactError(Exception):
    pass


class NotBipartite(ExactError):
    pass


class TooLarge(ExactError):
    pass


class InvalidMatching(ExactError):
    pass


def validate_matching(g: Graph, pairs: Iterable[Sequence[int]]) -> set:
    """Check pairs form a matching on g's alive edges; return matched nodes."""
    used = set()
    for u, v in pairs:
        if not (0 <= u < g.node_count and 0 <= v < g.node_count):
            raise InvalidMatching(f"pair ({u}, {v}) out of range")
        if not g.has_alive_edge(u, v):
            raise InvalidMatching(f"pair ({u}, {v}) is not an alive edge")
        if u in used or v in used:
            raise InvalidMatching(f"pair ({u}, {v}) reuses a matched node")
        used.add(u)
        used.add(v)
    return used


def max_matching_bipartite(g: Graph) -> List[Tuple[int, int]]:
    """Maximum matching of a bipartite reduced graph.

    Phase-based: breadth-first layering from the free left nodes, then
    depth-first augmentation along the layers.  All iteration is in
    ascending node order, so the result is deterministic.
    """
    if not g.bipartite:
        raise NotBipartite("graph was built without a bipartition")
    alive = g.alive
    adj = g.adj
    left = [u for u in range(g.left_count) if alive[u]]
    match_of = [-1] * g.node_count
    dist = [_INF] * g.node_count

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if match_of[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        reachable_free = False
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not alive[w]:
                    continue
                mu = match_of[w]
                if mu == -1:
                    reachable_free = True
                elif dist[mu] == _INF:
                    dist[mu] = dist[u] + 1
                    queue.append(mu)
        return reachable_free

    def augment(u0: int) -> bool:
        # Explicit stack: layered paths can be as long as the graph, which
        # would overflow Python's recursion limit on big chain instances.
        stack = [(u0, iter(adj[u0]))]
        chosen: List[Optional[int]] = [None]
        while stack:
            u, it = stack[-1]
            step = None
            for w in it:
                if not alive[w]:
                    continue
                mu = match_of[w]
                if mu == -1:
                    step = ("free", w)
                    break
                if dist[mu] == dist[u] + 1:
                    chosen[-1] = w
                    stack.append((mu, iter(adj[mu])))
                    chosen.append(None)
                    step = ("descend", w)
                    break
            if step is None:
                dist[u] = _INF
                stack.pop()
                chosen.pop()
                continue
            if step[0] == "descend":
                continue
            w = step[1]
            match_of[u] = w
            match_of[w] = u
            stack.pop()
            chosen.pop()
            while stack:
                pu, _ = stack.pop()
                pw = chosen.pop()
                match_of[pu] = pw
                match_of[pw] = pu
            return True
        return False

    while bfs():
        for u in left:
            if match_of[u] == -1:
                augment(u)
    return [(u, match_of[u]) for u in left if match_of[u] != -1]


def _subset_matching(g: Graph) -> List[Tuple[int, int]]:
    edges = list(g.alive_edges())
    m = len(edges)
    if m > SUBSET_EDGE_LIMIT:
        raise TooLarge(f"{m} edges exceeds the subset budget {SUBSET_EDGE_LIMIT}")
    node_mask = []
    for u, v in edges:
        node_mask.append((1 << u) | (1 << v))
    best_mask = 0
    best_size = 0
    for mask in range(1 << m):
        used = 0
        size = 0
        ok = True
        probe = mask
        while probe:
            i = (probe & -probe).bit_length() - 1
            probe &= probe - 1
            nm = node_mask[i]
            if used & nm:
                ok = False
                break
            used |= nm
            size += 1
        if ok and size > best_size:
            best_size = size
            best_mask = mask
    return [edges[i] for i in range(m) if best_mask >> i & 1]


def _augmenting_path(g: Graph, match_of: dict, start: int) -> Optional[list]:
    """Simple alternating path from free `start` to a free node, or None.

    The visited set is backtracked, so every simple alternating path is
    eventually considered and a missed augmenting path implies none exists.
    """
    alive = g.alive
    visited = {start}

    def go(u: int) -> Optional[list]:
        for w in g.adj[u]:
            if not alive[w] or w in visited or match_of.get(u) == w:
                continue
            mw = match_of.get(w, -1)
            if mw == -1:
                return [w]
            if mw in visited:
                continue
            visited.add(w)
            visited.add(mw)
            rest = go(mw)
            if rest is not None:
                return [w, mw] + rest
            visited.discard(w)
            visited.discard(mw)
        return None

    tail = go(start)
    return None if tail is None else [start] + tail


def _augment_matching(g: Graph) -> List[Tuple[int, int]]:
    m = g.alive_edge_count()
    if m > AUGMENT_EDGE_LIMIT:
        raise TooLarge(f"{m} edges exceeds the augment budget {AUGMENT_EDGE_LIMIT}")
    match_of: dict = {}
    improved = True
    while improved:
        improved = False
        for s in g.alive_nodes():
            if match_of.get(s, -1) != -1:
                continue
            path = _augmenting_path(g, match_of, s)
            if path is None:
                continue
            for i in range(0, len(path) - 1, 2):
                match_of[path[i]] = path[i + 1]
                match_of[path[i + 1]] = path[i]
            improved = True
    pairs = []
    for u, v in match_of.items():
        if u < v:
            pairs.append((u, v))
    pairs.sort()
    return pairs


def max_matching_bruteforce(g: Graph, mode: str = "auto") -> List[Tuple[int, int]]:
    """Maximum matching of a small general graph.

    mode 'subsets' enumerates all edge subsets (<= 16 edges), 'augment'
    searches alternating paths exhaustively (<= 24 edges), 'auto' picks
    whichever budget fits and raises TooLarge beyond both.
    """
    if mode == "subsets":
        return _subset_matching(g)
    if mode == "augment":
        return _augment_matching(g)
    if mode != "auto":
        raise ValueError(f"unknown mode {mode!r}")
    m = g.alive_edge_count()
    if m <= SUBSET_EDGE_LIMIT:
        return _subset_matching(g)
    if m <= AUGMENT_EDGE_LIMIT:
        return _augment_matching(g)
    raise TooLarge(f"{m} edges exceeds every brute-force budget")


def max_matching(g: Graph) -> List[Tuple[int, int]]:
    """Maximum matching by the cheapest applicable exact method."""
    if g.bipartite:
        return max_matching_bipartite(g)
    return max_matching_bruteforce(g)


def is_maximum(g: Graph, pairs: Sequence[Sequence[int]]) -> bool:
    """True iff the given matching has maximum cardinality on g.

    Bipartite graphs are settled by the fast matcher; general graphs by
    the absence of an augmenting path, which needs the exhaustive search
    and therefore the same edge budget as mode 'augment'.
    """
    validate_matching(g, pairs)
    size = len(list(pairs))
    if g.bipartite:
        return size == len(max_matching_bipartite(g))
    if g.alive_edge_count() > AUGMENT_EDGE_LIMIT:
        raise TooLarge("general-graph maximality check needs <= "
                       f"{AUGMENT_EDGE_LIMIT} edges")
    match_of = {}
    for u, v in pairs:
        match_of[u] = v
        match_of[v] = u
    for s in g.alive_nodes():
        if match_of.get(s, -1) == -1:
            if _augmenting_path(g, match_of, s) is not None:
                return False
    return True
