"""Post-run analysis of heuristic matchings.

Provides exact-rational ratio reports against the degree-1-first
guarantee delta/(2*delta - 2), the decomposition of a heuristic matching
against a maximum one into shared edges, alternating paths and cycles,
and a replay checker that audits a recorded degree-1-first trace pick by
pick.  All ratios use fractions.Fraction; nothing here is floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .graph import Graph, max_degree, reduce_by_pick
from .exact import (ExactError, InvalidMatching, NotBipartite,
                    max_matching_bipartite, validate_matching)
from .heuristics import TracePick


def ks_bound(delta: int) -> Fraction:
    """Worst-case guarantee of degree-1-first runs at max degree delta."""
    if delta <= 1:
        return Fraction(1)
    return Fraction(delta, 2 * delta - 2)


class NotMaximum(ExactError):
    pass


@dataclass(frozen=True)
class RatioReport:
    alg_size: int
    opt_size: int
    ratio: Fraction
    per_component: Tuple[Tuple[str, int, int, Fraction], ...]
    delta: int
    bound: Fraction
    bound_holds: bool


def ratio_report(g: Graph, m, m_star) -> RatioReport:
    """Compare a matching against a maximum one and the degree bound.

    per_component lists (kind, edges kept, optimal edges, local ratio)
    for every decomposed component.  The bound column always carries the
    degree-1-first guarantee for g's max degree, so rows for other
    heuristics record whether they happen to clear that same line.
    """
    comps, _ = decompose(g, m, m_star)
    per = tuple((c.kind, len(c.m_edges), len(c.star_edges),
                 Fraction(len(c.m_edges), len(c.star_edges)))
                for c in comps)
    alg_size = len(list(m))
    opt_size = len(list(m_star))
    ratio = Fraction(alg_size, opt_size) if opt_size else Fraction(1)
    delta = max_degree(g)
    bound = ks_bound(delta)
    return RatioReport(alg_size, opt_size, ratio, per, delta, bound,
                       ratio >= bound)


CSV_HEADER = ("instance,algorithm,policy,alg_size,opt_size,"
              "ratio_num,ratio_den,delta,bound_num,bound_den,bound_holds")


def csv_row(instance: str, algorithm: str, policy: str,
            report: RatioReport) -> str:
    return (f"{instance},{algorithm},{policy},{report.alg_size},"
            f"{report.opt_size},{report.ratio.numerator},"
            f"{report.ratio.denominator},{report.delta},"
            f"{report.bound.numerator},{report.bound.denominator},"
            f"{1 if report.bound_holds else 0}")


def check_maximal(g: Graph, pairs: Sequence[Sequence[int]]) -> bool:
    """True iff pairs form a maximal matching of g (no extendable edge)."""
    used = validate_matching(g, pairs)
    for u, v in g.alive_edges():
        if u not in used and v not in used:
            return False
    return True


# ---------------------------------------------------------------------------
# decomposition of M against M*


@dataclass(frozen=True)
class HComponent:
    """One component of the union of two matchings, after normalization.

    kind 'singleton' is a single edge counted by both matchings; 'path'
    is an open alternating path on which the maximum matching keeps one
    edge more (nodes in walk order, so nodes[0] and nodes[-1] are its
    endpoints, both uncovered by the smaller matching).
    """

    kind: str
    nodes: Tuple[int, ...]
    m_edges: Tuple[Tuple[int, int], ...]
    star_edges: Tuple[Tuple[int, int], ...]

    def is_augmenting(self) -> bool:
        return self.kind == "path" and len(self.star_edges) == len(self.m_edges) + 1


def _norm(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


def decompose(g: Graph, m, m_star):
    """Split the union of two matchings into components and normalize.

    Returns (components, normalized_star).  The normalized maximum
    matching agrees with m on every even path and cycle (swapping those
    star edges keeps the size), so afterwards the two matchings differ
    exactly on the returned augmenting paths; everything else collapses
    to per-edge singletons.  Raises NotMaximum when some component holds
    more m edges than star edges, which would let m_star grow.
    """
    validate_matching(g, m)
    validate_matching(g, m_star)
    pm: Dict[int, int] = {}
    ps: Dict[int, int] = {}
    for u, v in m:
        pm[u] = v
        pm[v] = u
    for u, v in m_star:
        ps[u] = v
        ps[v] = u

    raw: List[HComponent] = []
    visited = set()

    for u in sorted(set(pm) | set(ps)):
        if u in visited:
            continue
        if pm.get(u) is not None and pm.get(u) == ps.get(u):
            v = pm[u]
            visited.add(u)
            visited.add(v)
            edge = (_norm(u, v),)
            raw.append(HComponent("shared", (u, v), edge, edge))

    def walk(start: int, first_in_m: bool):
        seq = [start]
        m_edges = []
        s_edges = []
        cur = start
        use_m = first_in_m
        while True:
            table = pm if use_m else ps
            nxt = table.get(cur)
            if nxt is None or nxt in visited and nxt != start:
                break
            if nxt == start:
                break
            (m_edges if use_m else s_edges).append(_norm(cur, nxt))
            visited.add(nxt)
            seq.append(nxt)
            cur = nxt
            use_m = not use_m
        return seq, m_edges, s_edges

    # open paths start where only one of the matchings covers the node
    for u in sorted(set(pm) | set(ps)):
        if u in visited:
            continue
        has_m = u in pm
        has_s = u in ps
        if has_m and has_s:
            continue
        visited.add(u)
        seq, m_edges, s_edges = walk(u, has_m)
        raw.append(HComponent("path", tuple(seq),
                              tuple(m_edges), tuple(s_edges)))

    # what remains are alternating cycles
    for u in sorted(set(pm) | set(ps)):
        if u in visited:
            continue
        visited.add(u)
        seq = [u]
        m_edges = [_norm(u, pm[u])]
        s_edges = []
        cur = pm[u]
        visited.add(cur)
        seq.append(cur)
        use_m = False
        while True:
            nxt = (pm if use_m else ps)[cur]
            if nxt == u:
                (m_edges if use_m else s_edges).append(_norm(cur, nxt))
                break
            (m_edges if use_m else s_edges).append(_norm(cur, nxt))
            visited.add(nxt)
            seq.append(nxt)
            cur = nxt
            use_m = not use_m
        raw.append(HComponent("cycle", tuple(seq),
                              tuple(m_edges), tuple(s_edges)))

    for comp in raw:
        if len(comp.m_edges) > len(comp.star_edges):
            raise NotMaximum(
                f"component at node {min(comp.nodes)} has more m edges "
                f"than star edges, so the star matching is not maximum")

    star_map: Dict[int, int] = dict(ps)
    for comp in raw:
        if comp.kind in ("path", "cycle") and len(comp.m_edges) == len(comp.star_edges):
            for u, v in comp.star_edges:
                star_map.pop(u, None)
                star_map.pop(v, None)
            for u, v in comp.m_edges:
                star_map[u] = v
                star_map[v] = u
    star_norm = sorted(_norm(u, v) for u, v in star_map.items() if u < v)

    # after the swap the equal-count components sit edge for edge in both
    # matchings; only the augmenting paths keep their shape
    comps: List[HComponent] = []
    for comp in raw:
        if len(comp.m_edges) == len(comp.star_edges):
            for u, v in comp.m_edges:
                edge = ((u, v),)
                comps.append(HComponent("singleton", (u, v), edge, edge))
        else:
            comps.append(comp)

    comps.sort(key=lambda c: min(c.nodes))
    return comps, star_norm


# ---------------------------------------------------------------------------
# trace replay


def _min_stats(g: Graph) -> Tuple[int, int]:
    degree = g.degree
    best_deg = 0
    for v in g.alive_nodes():
        d = degree[v]
        if d > 0 and (best_deg == 0 or d < best_deg):
            best_deg = d
    best_sum = 0
    for u, v in g.alive_edges():
        s = degree[u] + degree[v]
        if best_sum == 0 or s < best_sum:
            best_sum = s
    return best_deg, best_sum


def check_karp_sipser_trace(g: Graph, trace: Sequence[TracePick],
                            m_star: Optional[Sequence[Tuple[int, int]]] = None
                            ) -> List[str]:
    """Replay a degree-1-first trace and report every violated invariant.

    Checks, per pick: the edge is alive, the recorded degrees and minima
    match the reduced graph, a degree-1 node is taken whenever one
    exists, and no surviving degree drops by more than one (the two ends
    of a pick lie in different classes).  With a maximum matching given,
    also checks that at every forced pick each class holding a degree-1
    endpoint of an augmenting path holds a degree-1 non-endpoint too.
    Returns a list of violation messages; an empty list means the trace
    is clean.
    """
    if not g.bipartite:
        raise NotBipartite("trace replay needs a bipartition")
    violations: List[str] = []
    pairs = [(p.u, p.v) for p in trace]
    try:
        validate_matching(g, pairs)
    except InvalidMatching as exc:
        return [f"trace is not a matching: {exc}"]

    endpoints = frozenset()
    if m_star is not None:
        if len(list(m_star)) != len(max_matching_bipartite(g)):
            violations.append("reference matching is not maximum")
            m_star = None
        else:
            comps, _ = decompose(g, pairs, m_star)
            ends = set()
            for comp in comps:
                if comp.is_augmenting():
                    ends.add(comp.nodes[0])
                    ends.add(comp.nodes[-1])
            endpoints = frozenset(ends)

    work = g.clone()
    degree = work.degree
    for rnd, p in enumerate(trace, start=1):
        if not work.has_alive_edge(p.u, p.v):
            violations.append(f"round {rnd}: ({p.u}, {p.v}) is not an alive edge")
            return violations
        if degree[p.u] != p.deg_u or degree[p.v] != p.deg_v:
            violations.append(
                f"round {rnd}: recorded degrees ({p.deg_u}, {p.deg_v}) "
                f"!= actual ({degree[p.u]}, {degree[p.v]})")
        min_deg, min_sum = _min_stats(work)
        if min_deg != p.min_deg:
            violations.append(
                f"round {rnd}: recorded min degree {p.min_deg} != {min_deg}")
        if min_sum != p.min_sum:
            violations.append(
                f"round {rnd}: recorded min degree sum {p.min_sum} != {min_sum}")
        if min_deg == 1:
            if degree[p.u] != 1 and degree[p.v] != 1:
                violations.append(
                    f"round {rnd}: a degree-1 node exists but pick has "
                    f"degrees ({degree[p.u]}, {degree[p.v]})")
            if m_star is not None:
                ones = [x for x in work.alive_nodes() if degree[x] == 1]
                for side in (0, 1):
                    side_ones = [x for x in ones if work.side(x) == side]
                    if any(x in endpoints for x in side_ones) and \
                            all(x in endpoints for x in side_ones):
                        violations.append(
                            f"round {rnd}: class {side} offers only "
                            f"augmenting-path endpoints at degree 1")
        before = list(degree)
        reduce_by_pick(work, p.u, p.v)
        for x in work.alive_nodes():
            if before[x] - degree[x] > 1:
                violations.append(
                    f"round {rnd}: degree of {x} dropped by "
                    f"{before[x] - degree[x]}")
    if work.alive_edge_count() > 0:
        violations.append("trace leaves alive edges unmatched")
    return violations
