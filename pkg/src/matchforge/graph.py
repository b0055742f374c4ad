"""Undirected graphs with destructive vertex picks.

Matching an edge (u, v) reduces the graph: both endpoints die together
with every incident edge.  Adjacency is built once and shared between
clones; a bytearray of liveness flags plus a degree table carry all
mutable state, so cloning and snapshotting are cheap and an edge of the
reduced graph is exactly a static edge whose endpoints are both alive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple


class GraphError(Exception):
    """Base class for graph construction and mutation errors."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class PartitionViolation(GraphError):
    pass


class IndexOutOfRange(GraphError):
    pass


class NotAdjacent(GraphError):
    pass


class DeadNode(GraphError):
    pass


class StaleSnapshot(GraphError):
    pass


class ParseError(GraphError):
    pass


_uids = itertools.count(1)


class Graph:
    """Simple undirected graph under vertex-pair deletion.

    Bipartite graphs keep the left class contiguous: nodes 0..left_count-1
    are left, the rest are right.  `adj` is immutable after build() and is
    shared by clones, so only `alive` and `degree` ever mutate.
    """

    __slots__ = ("node_count", "bipartite", "left_count",
                 "adj", "alive", "degree", "_uid")

    def __init__(self, node_count: int, bipartite: bool, left_count: int,
                 adj: Tuple[Tuple[int, ...], ...],
                 alive: bytearray, degree: list):
        self.node_count = node_count
        self.bipartite = bipartite
        self.left_count = left_count
        self.adj = adj
        self.alive = alive
        self.degree = degree
        self._uid = next(_uids)

    def side(self, v: int) -> int:
        """0 for left nodes, 1 for right.  Only meaningful when bipartite."""
        return 0 if v < self.left_count else 1

    def is_alive(self, v: int) -> bool:
        return bool(self.alive[v])

    def alive_nodes(self) -> Iterator[int]:
        alive = self.alive
        return (v for v in range(self.node_count) if alive[v])

    def neighbors_alive(self, v: int) -> list:
        alive = self.alive
        return [w for w in self.adj[v] if alive[w]]

    def has_alive_edge(self, u: int, v: int) -> bool:
        return (bool(self.alive[u]) and bool(self.alive[v])
                and v in self.adj[u])

    def alive_edges(self) -> Iterator[Tuple[int, int]]:
        """Edges of the reduced graph, as (u, v) with u < v, ascending."""
        alive = self.alive
        for u in range(self.node_count):
            if not alive[u]:
                continue
            for w in self.adj[u]:
                if w > u and alive[w]:
                    yield (u, w)

    def alive_edge_count(self) -> int:
        return sum(1 for _ in self.alive_edges())

    def clone(self) -> "Graph":
        return Graph(self.node_count, self.bipartite, self.left_count,
                     self.adj, bytearray(self.alive), list(self.degree))

    def __repr__(self):
        kind = "bip" if self.bipartite else "gen"
        return (f"Graph({kind}, n={self.node_count}, "
                f"m={self.alive_edge_count()})")


def build(node_count: int, edges: Iterable[Sequence[int]], *,
          bipartite: bool = False, left_count: int = 0) -> Graph:
    """Construct a graph, validating every edge.

    Raises SelfLoop, DuplicateEdge, IndexOutOfRange, or (for bipartite
    graphs with an edge inside one class) PartitionViolation.
    """
    if node_count < 0:
        raise IndexOutOfRange(f"node_count must be >= 0, got {node_count}")
    if bipartite:
        if not 0 <= left_count <= node_count:
            raise PartitionViolation(
                f"left_count {left_count} outside 0..{node_count}")
    elif left_count != 0:
        raise PartitionViolation("left_count is only meaningful when bipartite")

    adj_sets = [set() for _ in range(node_count)]
    for u, v in edges:
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{node_count - 1}")
        if u == v:
            raise SelfLoop(f"self loop at node {u}")
        if bipartite and (u < left_count) == (v < left_count):
            raise PartitionViolation(f"edge ({u}, {v}) stays inside one class")
        if v in adj_sets[u]:
            raise DuplicateEdge(f"edge ({u}, {v}) listed twice")
        adj_sets[u].add(v)
        adj_sets[v].add(u)

    adj = tuple(tuple(sorted(s)) for s in adj_sets)
    degree = [len(a) for a in adj]
    return Graph(node_count, bipartite, left_count, adj,
                 bytearray(b"\x01" * node_count), degree)


def _check_pick(g: Graph, u: int, v: int) -> None:
    if not (0 <= u < g.node_count and 0 <= v < g.node_count):
        raise IndexOutOfRange(f"pick ({u}, {v}) outside 0..{g.node_count - 1}")
    if u == v:
        raise SelfLoop(f"pick ({u}, {u}) is not an edge")
    if not g.alive[u]:
        raise DeadNode(f"node {u} is already matched or deleted")
    if not g.alive[v]:
        raise DeadNode(f"node {v} is already matched or deleted")
    if v not in g.adj[u]:
        raise NotAdjacent(f"({u}, {v}) is not an edge")


def reduce_by_pick(g: Graph, u: int, v: int) -> None:
    """Match the alive edge (u, v): kill both endpoints, fix survivor degrees."""
    _check_pick(g, u, v)
    alive = g.alive
    degree = g.degree
    alive[u] = 0
    for x in g.adj[u]:
        if alive[x]:
            degree[x] -= 1
    alive[v] = 0
    for x in g.adj[v]:
        if alive[x]:
            degree[x] -= 1
    degree[u] = 0
    degree[v] = 0


def max_degree(g: Graph) -> int:
    alive = g.alive
    degree = g.degree
    return max((degree[v] for v in range(g.node_count) if alive[v]), default=0)


@dataclass(frozen=True)
class Snapshot:
    graph_uid: int
    alive: bytes
    degree: Tuple[int, ...]


def snapshot(g: Graph) -> Snapshot:
    return Snapshot(g._uid, bytes(g.alive), tuple(g.degree))


def restore(g: Graph, snap: Snapshot) -> None:
    """Roll g back to a snapshot taken from this same instance."""
    if snap.graph_uid != g._uid:
        raise StaleSnapshot("snapshot belongs to a different graph instance")
    g.alive[:] = snap.alive
    g.degree[:] = snap.degree


# ---------------------------------------------------------------------------
# text format
#
#   mg 1 <bip|gen> <node_count> <left_count> <edge_count>
#   u v          (one line per edge, u < v, lines ascending)
#
# Lines starting with '#' and blank lines are ignored on read; the writer
# never emits them.  Dead nodes are written as isolated nodes, so a dumped
# reduced graph reloads with the same edge set and the same live degrees.

_MAGIC = "mg"
_VERSION = "1"


def dumps(g: Graph) -> str:
    edges = list(g.alive_edges())
    kind = "bip" if g.bipartite else "gen"
    lines = [f"{_MAGIC} {_VERSION} {kind} {g.node_count} "
             f"{g.left_count} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def loads(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _parse_header(line, lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoint in {line!r}")
        if u >= v:
            raise ParseError(f"line {lineno}: edges must satisfy u < v")
        edges.append((u, v))
    if header is None:
        raise ParseError("missing header line")
    bipartite, node_count, left_count, edge_count = header
    if len(edges) != edge_count:
        raise ParseError(f"header announces {edge_count} edges, "
                         f"file lists {len(edges)}")
    return build(node_count, edges, bipartite=bipartite, left_count=left_count)


def _parse_header(line: str, lineno: int):
    parts = line.split()
    if len(parts) != 6 or parts[0] != _MAGIC:
        raise ParseError(f"line {lineno}: bad header {line!r}")
    if parts[1] != _VERSION:
        raise ParseError(f"line {lineno}: unsupported version {parts[1]!r}")
    if parts[2] not in ("bip", "gen"):
        raise ParseError(f"line {lineno}: kind must be 'bip' or 'gen'")
    try:
        node_count, left_count, edge_count = map(int, parts[3:6])
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer counts in header")
    if min(node_count, left_count, edge_count) < 0:
        raise ParseError(f"line {lineno}: negative count in header")
    bipartite = parts[2] == "bip"
    if not bipartite and left_count != 0:
        raise ParseError(f"line {lineno}: gen graphs must carry left_count 0")
    return bipartite, node_count, left_count, edge_count


def load(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dump(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(g))
