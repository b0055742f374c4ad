"""Graph container, reduction semantics, and the text format."""

import pytest

from matchforge import graph


def p4():
    # 0 - 2 - 1 - 3 as a path, left class {0, 1}
    return graph.build(4, [(0, 2), (1, 2), (1, 3)], bipartite=True, left_count=2)


def test_build_rejects_self_loop():
    with pytest.raises(graph.SelfLoop):
        graph.build(2, [(1, 1)])


def test_build_rejects_duplicate_edge():
    with pytest.raises(graph.DuplicateEdge):
        graph.build(3, [(0, 1), (0, 1)])


def test_build_rejects_out_of_range():
    with pytest.raises(graph.IndexOutOfRange):
        graph.build(2, [(0, 2)])


def test_build_rejects_same_class_edge():
    with pytest.raises(graph.PartitionViolation):
        graph.build(4, [(0, 1)], bipartite=True, left_count=2)


def test_degrees_and_edges():
    g = p4()
    assert [g.degree[v] for v in range(4)] == [1, 2, 2, 1]
    assert sorted(g.alive_edges()) == [(0, 2), (1, 2), (1, 3)]
    assert g.alive_edge_count() == 3
    assert g.has_alive_edge(2, 0)
    assert not g.has_alive_edge(0, 3)
    assert graph.max_degree(g) == 2
    assert g.side(0) == 0 and g.side(3) == 1


def test_reduce_by_pick_kills_both_ends():
    g = p4()
    graph.reduce_by_pick(g, 1, 2)
    assert not g.is_alive(1) and not g.is_alive(2)
    assert g.degree[0] == 0 and g.degree[3] == 0
    assert list(g.alive_edges()) == []
    # the second endpoint is gone, so neither end accepts another pick
    with pytest.raises(graph.DeadNode):
        graph.reduce_by_pick(g, 0, 2)


def test_reduce_by_pick_needs_an_edge():
    g = p4()
    with pytest.raises(graph.NotAdjacent):
        graph.reduce_by_pick(g, 0, 3)


def test_clone_is_independent():
    g = p4()
    h = g.clone()
    graph.reduce_by_pick(h, 1, 2)
    assert g.is_alive(1)
    assert g.degree[0] == 1
    assert sorted(g.alive_edges()) == [(0, 2), (1, 2), (1, 3)]


def test_snapshot_restore_round_trip():
    g = p4()
    snap = graph.snapshot(g)
    graph.reduce_by_pick(g, 1, 3)
    graph.reduce_by_pick(g, 0, 2)
    assert list(g.alive_edges()) == []
    graph.restore(g, snap)
    assert sorted(g.alive_edges()) == [(0, 2), (1, 2), (1, 3)]
    assert [g.degree[v] for v in range(4)] == [1, 2, 2, 1]


def test_restore_rejects_foreign_snapshot():
    g = p4()
    snap = graph.snapshot(g.clone())
    with pytest.raises(graph.StaleSnapshot):
        graph.restore(g, snap)


def test_dumps_loads_round_trip():
    g = p4()
    text = graph.dumps(g)
    assert text.splitlines()[0] == "mg 1 bip 4 2 3"
    h = graph.loads(text)
    assert h.node_count == 4 and h.left_count == 2 and h.bipartite
    assert sorted(h.alive_edges()) == sorted(g.alive_edges())


def test_dump_of_reduced_graph_keeps_live_degrees():
    g = p4()
    graph.reduce_by_pick(g, 1, 2)
    h = graph.loads(graph.dumps(g))
    # dead nodes come back isolated, so the live picture is unchanged
    assert list(h.alive_edges()) == []
    assert h.node_count == 4


def test_loads_skips_comments_and_blanks():
    text = "# produced by a generator\n\nmg 1 gen 3 0 1\n# chatter\n0 1\n"
    g = graph.loads(text)
    assert not g.bipartite
    assert sorted(g.alive_edges()) == [(0, 1)]


@pytest.mark.parametrize("text", [
    "",
    "mg 2 bip 2 1 0\n",
    "mg 1 tri 2 1 0\n",
    "mg 1 bip 2 1 one\n",
    "mg 1 gen 2 1 0\n",
    "mg 1 bip 2 1 1\n1 0\n",
    "mg 1 bip 2 1 2\n0 1\n",
    "mg 1 bip 2 1 0\n0 1\n",
])
def test_loads_rejects_malformed(text):
    with pytest.raises(graph.ParseError):
        graph.loads(text)


def test_file_round_trip(tmp_path):
    g = p4()
    path = tmp_path / "g.mg"
    graph.dump(g, path)
    h = graph.load(path)
    assert sorted(h.alive_edges()) == sorted(g.alive_edges())
