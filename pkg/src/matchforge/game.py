"""Adaptive priority game between a degree-pattern policy and an adversary.

The policy never sees node ids.  Each round the adversary puts a set of
degree patterns on offer, the policy ranks them, and the adversary
serves a concrete edge whose endpoints carry the top-ranked pattern,
committing extra edges on the side to make the claim true.  The matched
pair leaves the graph.  Forced rounds are cleanup picks the adversary
fills in without consulting the policy; the transcript marks them and
the verifier holds them only to truthfulness, not to rank.

A transcript carries every round plus the finished graph, so
verify_consistency can replay the run after the fact: every served item
must be an alive edge with the recorded degrees, and at every non-forced
round no pattern present in the reduced graph may outrank the chosen
one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple, Union

from . import graph as graphlib
from .graph import Graph, ParseError, build, reduce_by_pick
from .instances import BadParams, build_trap_chain

Pattern = Union[int, Tuple[int, int]]


class GameError(Exception):
    pass


class ArityMismatch(GameError):
    pass


@dataclass(frozen=True)
class DataItem:
    """One served edge: node u with degree d_u, matched to neighbor v.

    Two-sided items also disclose the neighbor's degree d_v; one-sided
    items leave it None and the policy learns nothing about v.
    """

    u: int
    d_u: int
    v: int
    d_v: Optional[int] = None


@dataclass(frozen=True)
class GameRound:
    index: int
    forced: bool
    item: DataItem
    candidates: Tuple[Pattern, ...]
    inserted: Tuple[Tuple[int, int], ...]

    @property
    def pattern(self) -> Pattern:
        if self.item.d_v is None:
            return self.item.d_u
        return (self.item.d_u, self.item.d_v)


@dataclass(frozen=True)
class GameTranscript:
    arity: int
    rounds: Tuple[GameRound, ...]
    final_graph: Graph

    def matching(self) -> List[Tuple[int, int]]:
        return [(r.item.u, r.item.v) for r in self.rounds]


# ---------------------------------------------------------------------------
# policies


@dataclass(frozen=True)
class PriorityPolicy:
    """Ranks degree patterns; lower keys win.

    rank(history, pattern) must give distinct keys to distinct patterns
    for a fixed history, where history is the tuple of patterns chosen
    in earlier rounds.
    """

    name: str
    arity: int
    rank: Callable[[Tuple[Pattern, ...], Pattern], tuple]


def karp_sipser_policy() -> PriorityPolicy:
    return PriorityPolicy("karpsipser", 1,
                          lambda hist, d: (0 if d == 1 else 1, d))


def greedy_policy() -> PriorityPolicy:
    return PriorityPolicy("greedy", 1, lambda hist, d: (d,))


def min_greedy_policy() -> PriorityPolicy:
    return PriorityPolicy("mingreedy", 1, lambda hist, d: (d,))


def mds_policy() -> PriorityPolicy:
    return PriorityPolicy("mds", 2,
                          lambda hist, p: (p[0] + p[1], p[0], p[1]))


def min_deg_pair_policy() -> PriorityPolicy:
    return PriorityPolicy("mindegpair", 2,
                          lambda hist, p: (min(p), max(p), p[0], p[1]))


def random_policy(seed: int, arity: int) -> PriorityPolicy:
    """A reproducible arbitrary ranking, fresh at every round."""
    def rank(hist: tuple, pattern: Pattern) -> tuple:
        key = f"{seed}:{len(hist)}:{_pattern_token(pattern, False)}"
        return (random.Random(key).random(), str(pattern))
    return PriorityPolicy(f"random-{seed}", arity, rank)


POLICIES: Dict[str, Callable[[], PriorityPolicy]] = {
    "karpsipser": karp_sipser_policy,
    "greedy": greedy_policy,
    "mingreedy": min_greedy_policy,
    "mds": mds_policy,
    "mindegpair": min_deg_pair_policy,
}


# ---------------------------------------------------------------------------
# transcripts


def _pattern_token(pattern: Pattern, forced: bool) -> str:
    body = str(pattern) if isinstance(pattern, int) else f"{pattern[0]},{pattern[1]}"
    return ("*" + body) if forced else body


def transcript_dumps(t: GameTranscript) -> str:
    lines = [f"mgt 1 {t.arity} {len(t.rounds)}"]
    for r in t.rounds:
        parts = [str(r.index), _pattern_token(r.pattern, r.forced),
                 str(r.item.u), str(r.item.v)]
        for a, b in r.inserted:
            parts.append(str(a))
            parts.append(str(b))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n" + graphlib.dumps(t.final_graph)


def transcript_loads(text: str) -> GameTranscript:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty transcript")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "mgt" or head[1] != "1":
        raise ParseError(f"bad transcript header: {lines[0]!r}")
    try:
        arity = int(head[2])
        count = int(head[3])
    except ValueError as exc:
        raise ParseError(f"bad transcript header: {lines[0]!r}") from exc
    if arity not in (1, 2):
        raise ParseError(f"arity must be 1 or 2, got {arity}")
    if len(lines) < 1 + count:
        raise ParseError("transcript is shorter than its round count")

    rounds = []
    for n, line in enumerate(lines[1:1 + count], start=1):
        parts = line.split()
        if len(parts) < 4 or len(parts) % 2 != 0:
            raise ParseError(f"bad round line: {line!r}")
        token = parts[1]
        forced = token.startswith("*")
        if forced:
            token = token[1:]
        try:
            idx = int(parts[0])
            degs = tuple(int(x) for x in token.split(","))
            nums = [int(x) for x in parts[2:]]
        except ValueError as exc:
            raise ParseError(f"bad round line: {line!r}") from exc
        if idx != n:
            raise ParseError(f"round {n} labeled {idx}")
        if len(degs) != arity:
            raise ParseError(f"round {n}: pattern arity {len(degs)} != {arity}")
        u, v = nums[0], nums[1]
        item = DataItem(u, degs[0], v, degs[1] if arity == 2 else None)
        inserted = tuple((nums[i], nums[i + 1]) for i in range(2, len(nums), 2))
        rounds.append(GameRound(n, forced, item, (), inserted))

    g = graphlib.loads("\n".join(lines[1 + count:]))
    return GameTranscript(arity, tuple(rounds), g)


def transcript_dump(t: GameTranscript, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(transcript_dumps(t))


def transcript_load(path) -> GameTranscript:
    with open(path, "r", encoding="utf-8") as fh:
        return transcript_loads(fh.read())


# ---------------------------------------------------------------------------
# verification


def verify_consistency(t: GameTranscript, policy: PriorityPolicy) -> List[str]:
    """Replay a transcript against its final graph.

    Returns violation messages, empty when the transcript is a run the
    policy could really have produced: every item truthful, every
    non-forced choice at least as good as every pattern present in the
    reduced graph, every committed edge real, and no edge left alive at
    the end.
    """
    if policy.arity != t.arity:
        raise ArityMismatch(
            f"policy {policy.name} has arity {policy.arity}, "
            f"transcript has {t.arity}")
    g = t.final_graph.clone()
    degree = g.degree
    violations: List[str] = []
    history: List[Pattern] = []

    for r in t.rounds:
        u, v = r.item.u, r.item.v
        for a, b in r.inserted:
            if not (0 <= a < g.node_count) or b not in g.adj[a]:
                violations.append(
                    f"round {r.index}: committed pair ({a}, {b}) is not "
                    f"an edge of the final graph")
        if not g.has_alive_edge(u, v):
            violations.append(f"round {r.index}: ({u}, {v}) is not an alive edge")
            return violations
        if degree[u] != r.item.d_u:
            violations.append(
                f"round {r.index}: claimed degree {r.item.d_u} for node "
                f"{u} but replay shows {degree[u]}")
        if t.arity == 2 and degree[v] != r.item.d_v:
            violations.append(
                f"round {r.index}: claimed degree {r.item.d_v} for node "
                f"{v} but replay shows {degree[v]}")
        if not r.forced:
            hist = tuple(history)
            chosen = r.pattern
            my_key = policy.rank(hist, chosen)
            if t.arity == 1:
                present: Set[Pattern] = {degree[x] for x in g.alive_nodes()
                                         if degree[x] > 0}
            else:
                present = set()
                for a, b in g.alive_edges():
                    present.add((degree[a], degree[b]))
                    present.add((degree[b], degree[a]))
            for p in sorted(present):
                if policy.rank(hist, p) < my_key:
                    violations.append(
                        f"round {r.index}: pattern {p} outranks the "
                        f"chosen {chosen}")
        history.append(r.pattern)
        reduce_by_pick(g, u, v)

    if g.alive_edge_count() > 0:
        violations.append("rounds end with alive edges remaining")
    return violations


def consistent(t: GameTranscript, policy: PriorityPolicy) -> bool:
    """True iff verify_consistency finds nothing to complain about."""
    return not verify_consistency(t, policy)


# ---------------------------------------------------------------------------
# adversaries


class _Mut:
    """Growable bipartite graph the adversaries build while playing."""

    def __init__(self, node_count: int, left_count: int):
        self.node_count = node_count
        self.left_count = left_count
        self.adj: List[Set[int]] = [set() for _ in range(node_count)]
        self.alive = [True] * node_count
        self.deg = [0] * node_count
        # degree counting every committed edge, dead or alive: the cap
        # on future commitments
        self.final_deg = [0] * node_count
        self.edges: List[Tuple[int, int]] = []

    def insert(self, a: int, b: int) -> Tuple[int, int]:
        assert a != b and self.alive[a] and self.alive[b]
        assert (a < self.left_count) != (b < self.left_count)
        assert b not in self.adj[a]
        self.adj[a].add(b)
        self.adj[b].add(a)
        self.deg[a] += 1
        self.deg[b] += 1
        self.final_deg[a] += 1
        self.final_deg[b] += 1
        edge = (a, b) if a < b else (b, a)
        self.edges.append(edge)
        return edge

    def pick(self, u: int, v: int) -> None:
        assert self.alive[u] and self.alive[v] and v in self.adj[u]
        self.alive[u] = False
        self.alive[v] = False
        for w in self.adj[u]:
            if self.alive[w]:
                self.deg[w] -= 1
        for w in self.adj[v]:
            if self.alive[w]:
                self.deg[w] -= 1
        self.deg[u] = 0
        self.deg[v] = 0

    def has_edges(self) -> bool:
        return any(self.alive[x] and self.deg[x] > 0
                   for x in range(self.node_count))

    def alive_edges(self) -> List[Tuple[int, int]]:
        out = []
        for u in range(self.node_count):
            if self.alive[u]:
                for w in self.adj[u]:
                    if u < w and self.alive[w]:
                        out.append((u, w))
        return out

    def to_graph(self) -> Graph:
        return build(self.node_count, sorted(self.edges),
                     bipartite=True, left_count=self.left_count)


class _Adversary:
    """Shared round bookkeeping.

    Subclasses fill self.mut in __init__ and drive the game in _script.
    A script that cannot realize the policy's choice flags fallback and
    the base class finishes the game honestly: no further commitments,
    candidates exactly the patterns present, so consistency still holds,
    only the forced ratio is given up.
    """

    arity = 0

    def run(self, policy: PriorityPolicy) -> GameTranscript:
        self._policy = policy
        self._rounds: List[GameRound] = []
        self._history: List[Pattern] = []
        self._fallback = False
        self._script()
        if self._fallback:
            self._honest_loop()
        assert not self.mut.has_edges()
        return GameTranscript(self.arity, tuple(self._rounds),
                              self.mut.to_graph())

    def _top(self, candidates) -> Pattern:
        hist = tuple(self._history)
        return min(candidates, key=lambda p: self._policy.rank(hist, p))

    def _emit(self, item: DataItem, candidates, forced: bool,
              inserted) -> None:
        rnd = GameRound(len(self._rounds) + 1, forced, item,
                        tuple(sorted(candidates)), tuple(inserted))
        self._rounds.append(rnd)
        self._history.append(rnd.pattern)
        self.mut.pick(item.u, item.v)

    def _forced(self, u: int, v: int) -> None:
        if self.arity == 1:
            item = DataItem(u, self.mut.deg[u], v)
        else:
            item = DataItem(u, self.mut.deg[u], v, self.mut.deg[v])
        self._emit(item, (item.d_u if self.arity == 1 else
                          (item.d_u, item.d_v),), True, ())

    def _present(self) -> Set[Pattern]:
        deg = self.mut.deg
        if self.arity == 1:
            return {deg[x] for x in range(self.mut.node_count)
                    if self.mut.alive[x] and deg[x] > 0}
        out: Set[Pattern] = set()
        for a, b in self.mut.alive_edges():
            out.add((deg[a], deg[b]))
            out.add((deg[b], deg[a]))
        return out

    def _honest_loop(self) -> None:
        deg = self.mut.deg
        while self.mut.has_edges():
            present = self._present()
            top = self._top(present)
            if self.arity == 1:
                u = min(x for x in range(self.mut.node_count)
                        if self.mut.alive[x] and deg[x] == top)
                v = min(w for w in self.mut.adj[u] if self.mut.alive[w])
                item = DataItem(u, top, v)
            else:
                u, v = min(
                    (a, b)
                    for a, b in self.mut.alive_edges() + [
                        (b, a) for a, b in self.mut.alive_edges()]
                    if (deg[a], deg[b]) == top)
                item = DataItem(u, top[0], v, top[1])
            self._emit(item, tuple(sorted(present)), False, ())

    def _script(self) -> None:
        raise NotImplementedError


class TrapChainAdversary(_Adversary):
    """One-sided adversary built on the trap chain.

    Whatever degree the policy asks for, the adversary pads the scripted
    connector node up to it with committed edges (or presents the big end
    of the same edge), so any arity-1 policy walks the chain and matches
    delta*k + 2 edges while the finished graph has a matching of
    (2*delta - 2)*k + 2.
    """

    arity = 1

    def __init__(self, delta: int, k: int):
        g, of = build_trap_chain(delta, k)
        self.delta = delta
        self.k = k
        self.lam = delta - 4
        self.of = of
        self.mut = _Mut(g.node_count, g.left_count)
        for u, v in g.alive_edges():
            self.mut.insert(u, v)

    def _claim_round(self, claimant: int, mate: int,
                     pool: Sequence[int], candidates) -> None:
        top = self._top(candidates)
        mut = self.mut
        need = top - mut.deg[claimant]
        if need == 0:
            self._emit(DataItem(claimant, top, mate), candidates, False, ())
            return
        if need > 0:
            targets = [x for x in pool
                       if mut.alive[x] and mut.final_deg[x] < self.delta
                       and x not in mut.adj[claimant]]
            targets.sort(key=lambda x: (mut.final_deg[x], x))
            if len(targets) >= need:
                inserted = [mut.insert(claimant, x) for x in targets[:need]]
                self._emit(DataItem(claimant, top, mate), candidates,
                           False, inserted)
                return
        if top == mut.deg[mate]:
            self._emit(DataItem(mate, top, claimant), candidates, False, ())
            return
        self._fallback = True

    def _script(self) -> None:
        of = self.of
        rungs = range(1, self.lam + 1)
        full = tuple(range(2, self.delta + 1))
        for i in range(1, self.k + 1):
            for j in rungs:
                pool = [of[("w", i, m)] for m in rungs if m != j]
                pool += [of[("c2", i)], of[("c4", i)], of[("q2", i)]]
                self._claim_round(of[("x", i, j)], of[("y", i, j)],
                                  pool, full)
                if self._fallback:
                    return
            pool = [of[("z", i, m)] for m in rungs]
            pool += [of[("d2", i)], of[("d4", i)]]
            self._claim_round(of[("p1", i)], of[("c1", i)], pool, full)
            if self._fallback:
                return
            star = of[("c2", 1)] if i == 1 else of[("q2", i - 1)]
            assert self.mut.deg[star] == 1
            self._forced(star, of[("c3", i)])
            if i < self.k:
                pool = [of[("w", i + 1, m)] for m in rungs]
                pool += [of[("c2", i + 1)], of[("c4", i + 1)]]
            else:
                pool = [of[("e2",)], of[("e4",)]]
            self._claim_round(of[("q1", i)], of[("d1", i)], pool, full)
            if self._fallback:
                return
            self._forced(of[("d2", i)], of[("d3", i)])
        self._claim_round(of[("q2", self.k)], of[("e1",)], [], (2, 3))
        if self._fallback:
            return
        self._forced(of[("e2",)], of[("e3",)])


class TwoSidedChainAdversary(_Adversary):
    """Two-sided adversary for max degree 3, one slot per round block.

    Each of the n slots holds 8 nodes.  The policy's top pattern decides
    what the slot becomes: a chain unit when it prefers a (2,3) edge,
    a self-contained double square when it prefers (3,3).  Either way
    the slot resolves in 3 picks but supports 4, except the closing
    slot which yields 4; every finished graph has a perfect matching of
    size 4n.
    """

    arity = 2

    CANDS: Tuple[Pattern, ...] = ((2, 3), (3, 2), (3, 3))

    def __init__(self, n: int):
        if n < 1:
            raise BadParams(f"chain game needs n >= 1, got {n}")
        self.n = n
        self.mut = _Mut(8 * n, 4 * n)
        self.units: List[Dict[str, int]] = []

    def _slot_ids(self, s: int) -> Tuple[List[int], List[int]]:
        left = [4 * s + t for t in range(4)]
        right = [4 * self.n + 4 * s + t for t in range(4)]
        return left, right

    def _unit_roles(self, s: int) -> Dict[str, int]:
        # orientation alternates along the chain to keep the hub edges
        # across the bipartition
        left, right = self._slot_ids(s)
        if len(self.units) % 2 == 0:
            names_l, names_r = ("P2", "P4", "C1", "C3"), ("P1", "P3", "C2", "C4")
        else:
            names_l, names_r = ("P1", "P3", "C2", "C4"), ("P2", "P4", "C1", "C3")
        roles = dict(zip(names_l, left))
        roles.update(zip(names_r, right))
        return roles

    def _wire_unit(self, r: Dict[str, int], closed: bool) -> List[Tuple[int, int]]:
        ins = []

        def e(a: str, b: str) -> None:
            ins.append(self.mut.insert(r[a], r[b]))

        e("P1", "P2")
        e("P2", "P3")
        e("P3", "P4")
        e("P1", "C1")
        e("C1", "C2")
        e("C2", "C3")
        e("C3", "C4")
        e("C4", "C1")
        if closed:
            e("P1", "P4")
            e("C4", "P4")
        if self.units:
            hub = self.units[-1]["P4"]
            ins.append(self.mut.insert(hub, r["P2"]))
            ins.append(self.mut.insert(hub, r["C3"]))
        else:
            # head unit closes onto itself instead of a predecessor
            e("C2", "P2")
            if not closed:
                e("C3", "P1")
        return ins

    def _entry_item(self, r: Dict[str, int], chosen: Pattern) -> DataItem:
        if chosen == (3, 3):
            return DataItem(r["P1"], 3, r["P2"], 3)
        if chosen == (2, 3):
            return DataItem(r["P3"], 2, r["P4"], 3)
        return DataItem(r["P4"], 3, r["P3"], 2)

    def _forced_completion(self) -> None:
        mut = self.mut
        while mut.has_edges():
            ones = [x for x in range(mut.node_count)
                    if mut.alive[x] and mut.deg[x] == 1]
            if ones:
                u = min(ones)
                v = min(w for w in mut.adj[u] if mut.alive[w])
            else:
                u, v = min(mut.alive_edges())
            self._forced(u, v)

    def _unit_slot(self, s: int, chosen: Pattern) -> None:
        roles = self._unit_roles(s)
        ins = self._wire_unit(roles, closed=False)
        self.units.append(roles)
        if chosen == (3, 2):
            item = DataItem(roles["P2"], 3, roles["P3"], 2)
        else:
            item = DataItem(roles["P3"], 2, roles["P2"], 3)
        self._emit(item, self.CANDS, False, ins)
        self._forced(roles["P1"], roles["C1"])
        self._forced(roles["C2"], roles["C3"])

    def _comp_slot(self, s: int) -> None:
        left, right = self._slot_ids(s)
        r = dict(zip(("c1", "c3", "c6", "c8"), left))
        r.update(zip(("c2", "c4", "c5", "c7"), right))
        ins = []
        for a, b in (("c1", "c2"), ("c2", "c3"), ("c3", "c4"), ("c4", "c1"),
                     ("c5", "c6"), ("c6", "c7"), ("c7", "c8"), ("c8", "c5"),
                     ("c2", "c6"), ("c4", "c8")):
            ins.append(self.mut.insert(r[a], r[b]))
        self._emit(DataItem(r["c2"], 3, r["c6"], 3), self.CANDS, False, ins)
        self._forced(r["c3"], r["c4"])
        self._forced(r["c7"], r["c8"])

    def _closing_slot(self, s: int, chosen: Pattern) -> None:
        roles = self._unit_roles(s)
        ins = self._wire_unit(roles, closed=True)
        self.units.append(roles)
        self._emit(self._entry_item(roles, chosen), self.CANDS, False, ins)
        self._forced_completion()

    def _script(self) -> None:
        for s in range(self.n):
            chosen = self._top(self.CANDS)
            if s < self.n - 1:
                if chosen == (3, 3):
                    self._comp_slot(s)
                else:
                    self._unit_slot(s, chosen)
            elif self.units or chosen != (3, 3):
                self._closing_slot(s, chosen)
            else:
                self._comp_slot(s)


class GeneralTwoSidedAdversary(_Adversary):
    """Two-sided adversary for any max degree >= 3, single gadget.

    delta - 3 spokes feed a core of connector nodes.  The policy names
    any degree pair in [2, delta]^2; both spoke ends are padded
    independently to match, so no claim ever fails.  The run lasts
    delta + 1 rounds against an optimum of 2*delta - 2.  At delta = 3
    there are no spokes and the whole game is the four forced core
    picks, where the guarantee is 1 anyway.
    """

    arity = 2

    def __init__(self, delta: int):
        if delta < 3:
            raise BadParams(f"general game needs delta >= 3, got {delta}")
        self.delta = delta
        m = delta - 3
        self.m = m
        ids: Dict[tuple, int] = {}
        nxt = 0
        for i in range(1, m + 1):
            ids[("a", i)] = nxt
            nxt += 1
        for i in range(1, m + 1):
            ids[("v", i)] = nxt
            nxt += 1
        for name in (("c3",), ("c4",), ("a+",), ("a-",)):
            ids[name] = nxt
            nxt += 1
        left_count = nxt
        for i in range(1, m + 1):
            ids[("u", i)] = nxt
            nxt += 1
        for i in range(1, m + 1):
            ids[("b", i)] = nxt
            nxt += 1
        for name in (("c1",), ("c2",), ("b+",), ("b-",)):
            ids[name] = nxt
            nxt += 1
        self.of = ids
        self.mut = _Mut(nxt, left_count)
        of = ids
        for i in range(1, m + 1):
            self.mut.insert(of[("a", i)], of[("u", i)])
            self.mut.insert(of[("u", i)], of[("v", i)])
            self.mut.insert(of[("v", i)], of[("b", i)])
            self.mut.insert(of[("a", i)], of[("c1",)])
            self.mut.insert(of[("a", i)], of[("c2",)])
            self.mut.insert(of[("b", i)], of[("c3",)])
            self.mut.insert(of[("b", i)], of[("c4",)])
        for a, b in ((("c2",), ("c3",)),
                     (("c1",), ("a+",)), (("a+",), ("c2",)),
                     (("c1",), ("a-",)), (("a-",), ("c2",)),
                     (("c3",), ("b+",)), (("b+",), ("c4",)),
                     (("c3",), ("b-",)), (("b-",), ("c4",))):
            self.mut.insert(of[a], of[b])
        self.cands = tuple((x, y)
                           for x in range(2, delta + 1)
                           for y in range(2, delta + 1))

    def _pad(self, node: int, want: int, pool: Sequence[int]) -> Optional[list]:
        mut = self.mut
        need = want - mut.deg[node]
        targets = [x for x in pool
                   if mut.alive[x] and mut.final_deg[x] < self.delta
                   and x not in mut.adj[node]]
        targets.sort(key=lambda x: (mut.final_deg[x], x))
        if need < 0 or len(targets) < need:
            return None
        return [mut.insert(node, x) for x in targets[:need]]

    def _script(self) -> None:
        of = self.of
        m = self.m
        for i in range(1, m + 1):
            du, dv = self._top(self.cands)
            # claims up to delta stay feasible: the u pool holds exactly
            # delta - 2 nodes of the a class, each with headroom left
            pool_u = [of[("a+",)], of[("a-",)]]
            pool_u += [of[("a", j)] for j in range(1, m + 1) if j != i]
            pool_v = [of[("b+",)], of[("b-",)]]
            pool_v += [of[("b", j)] for j in range(1, m + 1) if j != i]
            ins_u = self._pad(of[("u", i)], du, pool_u)
            ins_v = self._pad(of[("v", i)], dv, pool_v)
            if ins_u is None or ins_v is None:
                self._fallback = True
                return
            self._emit(DataItem(of[("u", i)], du, of[("v", i)], dv),
                       self.cands, False, ins_u + ins_v)
        self._forced(of[("c1",)], of[("a+",)])
        self._forced(of[("a-",)], of[("c2",)])
        self._forced(of[("c3",)], of[("b+",)])
        self._forced(of[("b-",)], of[("c4",)])


ADVERSARIES = {
    "trap": TrapChainAdversary,
    "twosided3": TwoSidedChainAdversary,
    "general2s": GeneralTwoSidedAdversary,
}


def play(policy: PriorityPolicy, adversary: _Adversary) -> GameTranscript:
    if policy.arity != adversary.arity:
        raise ArityMismatch(
            f"policy {policy.name} has arity {policy.arity}, adversary "
            f"needs {adversary.arity}")
    return adversary.run(policy)
