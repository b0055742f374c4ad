"""Priority-policy game: adversaries, transcripts, consistency checks."""

import pytest

from matchforge import exact, game, graph, instances


def play_named(policy_name, adv):
    policy = game.POLICIES[policy_name]()
    return game.play(policy, adv), policy


def final_opt(t):
    return len(exact.max_matching_bipartite(t.final_graph))


# ---------------------------------------------------------------------------
# policies


def test_policy_registry():
    assert set(game.POLICIES) == {
        "karpsipser", "greedy", "mingreedy", "mds", "mindegpair"}
    for factory in game.POLICIES.values():
        pol = factory()
        assert pol.arity in (1, 2)


def test_karp_sipser_policy_orders_degree_one_first():
    pol = game.POLICIES["karpsipser"]()
    ranked = sorted([3, 1, 2, 5], key=lambda p: pol.rank((), p))
    assert ranked == [1, 2, 3, 5]
    assert pol.rank((), 1) < pol.rank((), 2) < pol.rank((), 3)


def test_two_sided_policy_orderings():
    mds = game.POLICIES["mds"]()
    pats = [(3, 3), (2, 3), (3, 2), (2, 2)]
    assert min(pats, key=lambda p: mds.rank((), p)) == (2, 2)
    pair = game.POLICIES["mindegpair"]()
    assert min(pats, key=lambda p: pair.rank((), p)) == (2, 2)
    # distinct keys across a pattern grid
    grid = [(a, b) for a in range(1, 6) for b in range(1, 6)]
    for pol in (mds, pair):
        keys = {pol.rank((), p) for p in grid}
        assert len(keys) == len(grid)


def test_random_policy_is_seed_stable():
    a = game.random_policy(7, 1)
    b = game.random_policy(7, 1)
    assert [a.rank((), d) for d in range(1, 9)] == \
           [b.rank((), d) for d in range(1, 9)]


def test_play_checks_arity():
    with pytest.raises(game.ArityMismatch):
        game.play(game.POLICIES["greedy"](), game.TwoSidedChainAdversary(2))
    with pytest.raises(game.ArityMismatch):
        game.play(game.POLICIES["mds"](), game.TrapChainAdversary(4, 1))


def test_adversary_params_are_guarded():
    with pytest.raises(instances.BadParams):
        game.TrapChainAdversary(3, 1)
    with pytest.raises(instances.BadParams):
        game.TrapChainAdversary(4, 0)
    with pytest.raises(instances.BadParams):
        game.TwoSidedChainAdversary(0)
    with pytest.raises(instances.BadParams):
        game.GeneralTwoSidedAdversary(2)


def test_adversary_registry():
    assert set(game.ADVERSARIES) == {"trap", "twosided3", "general2s"}


# ---------------------------------------------------------------------------
# trap chain adversary (arity 1)


@pytest.mark.parametrize("delta", [4, 5, 7])
@pytest.mark.parametrize("k", [1, 3])
def test_trap_adversary_pins_named_policies(delta, k):
    for name in ("karpsipser", "greedy", "mingreedy"):
        t, pol = play_named(name, game.TrapChainAdversary(delta, k))
        assert len(t.matching()) == delta * k + 2
        assert final_opt(t) == (2 * delta - 2) * k + 2
        assert game.verify_consistency(t, pol) == []
        assert game.consistent(t, pol)


def test_trap_adversary_pins_random_policies():
    for seed in range(12):
        pol = game.random_policy(seed, 1)
        t = game.play(pol, game.TrapChainAdversary(5, 2))
        assert len(t.matching()) == 12
        assert final_opt(t) == 18
        assert game.verify_consistency(t, pol) == []


def test_trap_opt_offset_is_constant_in_k():
    # |M*| = (2*delta - 2) * k + c with c read off at k = 1
    for delta in (4, 5, 6):
        pol = game.POLICIES["karpsipser"]()
        c = final_opt(game.play(pol, game.TrapChainAdversary(delta, 1))) \
            - (2 * delta - 2)
        for k in (2, 3):
            t = game.play(pol, game.TrapChainAdversary(delta, k))
            assert final_opt(t) == (2 * delta - 2) * k + c
        assert c == 2


def test_trap_mingreedy_needs_no_insertions():
    t, _ = play_named("mingreedy", game.TrapChainAdversary(5, 2))
    free = [r for r in t.rounds if not r.forced]
    assert {r.item.d_u for r in free} == {2}
    assert sum(len(r.inserted) for r in t.rounds) == 0


def test_trap_big_claims_are_padded_up_to_delta():
    pol = game.PriorityPolicy("maxdeg", 1, lambda h, d: (-d,))
    t = game.play(pol, game.TrapChainAdversary(6, 2))
    assert len(t.matching()) == 14
    assert final_opt(t) == 22
    assert game.verify_consistency(t, pol) == []
    assert sum(len(r.inserted) for r in t.rounds) > 0
    assert graph.max_degree(t.final_graph) <= 6
    # truthfulness: every claimed degree is the replayed one, so the big
    # claims really were served at degree 6
    assert any(r.item.d_u == 6 for r in t.rounds if not r.forced)


def test_trap_falls_back_honestly_on_unservable_claims():
    # degree-5 lovers cannot always be served at the last trap, where the
    # leftover insertion pool is too small; the adversary then plays out
    # the real graph instead of lying
    pol = game.PriorityPolicy("five", 1,
                              lambda h, d: (0 if d == 5 else 1, d))
    t = game.play(pol, game.TrapChainAdversary(6, 1))
    assert game.verify_consistency(t, pol) == []
    assert final_opt(t) == 12
    assert graph.max_degree(t.final_graph) <= 6


# ---------------------------------------------------------------------------
# two-sided chain adversary (arity 2)


@pytest.mark.parametrize("n", [1, 2, 5])
def test_two_sided_chain_mds(n):
    t, pol = play_named("mds", game.TwoSidedChainAdversary(n))
    assert len(t.matching()) == 3 * n + 1
    assert final_opt(t) == 4 * n
    assert game.verify_consistency(t, pol) == []
    free = [r for r in t.rounds if not r.forced]
    assert all(r.pattern in ((2, 3), (3, 2)) for r in free)


def test_two_sided_chain_component_lovers():
    pol = game.PriorityPolicy("both3", 2,
                              lambda h, p: (0 if p == (3, 3) else 1, p))
    t = game.play(pol, game.TwoSidedChainAdversary(4))
    assert len(t.matching()) == 12
    assert final_opt(t) == 16
    assert game.verify_consistency(t, pol) == []
    free = [r for r in t.rounds if not r.forced]
    assert all(r.pattern == (3, 3) for r in free)


def test_two_sided_chain_random_policies():
    for seed in range(10):
        pol = game.random_policy(seed, 2)
        t = game.play(pol, game.TwoSidedChainAdversary(3))
        assert game.verify_consistency(t, pol) == []
        assert final_opt(t) == 12
        assert 9 <= len(t.matching()) <= 10


def test_two_sided_chain_candidates_never_offer_two_two():
    t, _ = play_named("mindegpair", game.TwoSidedChainAdversary(3))
    for r in t.rounds:
        if not r.forced:
            assert (2, 2) not in r.candidates
            assert set(r.candidates) <= {(2, 3), (3, 2), (3, 3)}


# ---------------------------------------------------------------------------
# general two-sided adversary (arity 2)


@pytest.mark.parametrize("delta", [3, 4, 6])
def test_general_two_sided_forces_the_ratio(delta):
    pols = [game.POLICIES["mds"](), game.POLICIES["mindegpair"]()]
    pols += [game.random_policy(s, 2) for s in range(4)]
    pols.append(game.PriorityPolicy("maxpair", 2,
                                    lambda h, p: (-p[0] - p[1], -p[0])))
    for pol in pols:
        t = game.play(pol, game.GeneralTwoSidedAdversary(delta))
        assert len(t.matching()) == delta + 1
        assert len(t.rounds) == delta + 1
        assert final_opt(t) == 2 * delta - 2
        assert game.verify_consistency(t, pol) == []
        assert graph.max_degree(t.final_graph) <= delta


def test_general_two_sided_degenerate_delta3():
    t, pol = play_named("mds", game.GeneralTwoSidedAdversary(3))
    assert all(r.forced for r in t.rounds)
    assert len(t.rounds) == 4 and final_opt(t) == 4


# ---------------------------------------------------------------------------
# transcripts


def roundtrip(t):
    return game.transcript_loads(game.transcript_dumps(t))


def test_transcript_round_trip():
    # the text format keeps rounds, items, and insertions; the candidate
    # sets are query-time data and are not serialized
    t, pol = play_named("karpsipser", game.TrapChainAdversary(4, 2))
    back = roundtrip(t)
    assert back.arity == t.arity
    assert [(r.index, r.forced, r.item, r.inserted) for r in back.rounds] == \
           [(r.index, r.forced, r.item, r.inserted) for r in t.rounds]
    assert sorted(back.final_graph.alive_edges()) == \
           sorted(t.final_graph.alive_edges())
    assert game.transcript_dumps(back) == game.transcript_dumps(t)
    assert game.verify_consistency(back, pol) == []


def test_transcript_round_trip_two_sided(tmp_path):
    t, pol = play_named("mds", game.TwoSidedChainAdversary(2))
    path = tmp_path / "game.mgt"
    game.transcript_dump(t, path)
    back = game.transcript_load(path)
    assert [r.item for r in back.rounds] == [r.item for r in t.rounds]
    assert game.verify_consistency(back, pol) == []


def test_transcript_marks_forced_rounds():
    t, _ = play_named("karpsipser", game.TrapChainAdversary(4, 1))
    text = game.transcript_dumps(t)
    lines = text.splitlines()
    forced = [r.index for r in t.rounds if r.forced]
    assert forced
    for idx in forced:
        assert lines[idx].split()[1].startswith("*")


@pytest.mark.parametrize("mangle", [
    lambda s: s.replace("mgt 1", "mgt 9", 1),
    lambda s: s.replace("mgt 1 1", "mgt 1 3", 1),
    lambda s: "\n".join(s.splitlines()[:1] + s.splitlines()[2:]) + "\n",
    lambda s: s.replace("\n1 ", "\n7 ", 1),
])
def test_transcript_loads_rejects_malformed(mangle):
    t, _ = play_named("karpsipser", game.TrapChainAdversary(4, 1))
    with pytest.raises(graph.ParseError):
        game.transcript_loads(mangle(game.transcript_dumps(t)))


# ---------------------------------------------------------------------------
# consistency probes


def mutate_round(t, idx, **changes):
    rounds = list(t.rounds)
    r = rounds[idx]
    item = game.DataItem(**{**r.item.__dict__, **changes})
    rounds[idx] = game.GameRound(r.index, r.forced, item,
                                 r.candidates, r.inserted)
    return game.GameTranscript(t.arity, tuple(rounds), t.final_graph)


def test_consistency_rejects_doctored_degree():
    t, pol = play_named("karpsipser", game.TrapChainAdversary(4, 2))
    free = next(i for i, r in enumerate(t.rounds) if not r.forced)
    bad = mutate_round(t, free, d_u=t.rounds[free].item.d_u + 1)
    msgs = game.verify_consistency(bad, pol)
    assert any("claimed degree" in m for m in msgs)
    assert not game.consistent(bad, pol)


def test_consistency_rejects_swapped_rounds():
    t, pol = play_named("mds", game.TwoSidedChainAdversary(3))
    rounds = list(t.rounds)
    a = next(i for i, r in enumerate(rounds) if not r.forced)
    b = next(i for i, r in enumerate(rounds) if not r.forced and i > a)
    ra, rb = rounds[a], rounds[b]
    rounds[a] = game.GameRound(ra.index, rb.forced, rb.item,
                               rb.candidates, rb.inserted)
    rounds[b] = game.GameRound(rb.index, ra.forced, ra.item,
                               ra.candidates, ra.inserted)
    bad = game.GameTranscript(t.arity, tuple(rounds), t.final_graph)
    assert game.verify_consistency(bad, pol) != []


def test_consistency_rejects_fake_insertions():
    t, pol = play_named("karpsipser", game.TrapChainAdversary(4, 1))
    rounds = list(t.rounds)
    r = rounds[0]
    rounds[0] = game.GameRound(r.index, r.forced, r.item, r.candidates,
                               ((0, t.final_graph.node_count - 1),))
    bad = game.GameTranscript(t.arity, tuple(rounds), t.final_graph)
    msgs = game.verify_consistency(bad, pol)
    assert any("committed" in m for m in msgs)


def test_consistency_checks_policy_identity():
    # a transcript built for one ranking need not satisfy another: the
    # big claims of a max-degree policy lose to the degree-2 nodes that
    # a smallest-first ranking would have asked for
    pol = game.PriorityPolicy("maxdeg", 1, lambda h, d: (-d,))
    t = game.play(pol, game.TrapChainAdversary(6, 1))
    assert game.verify_consistency(t, pol) == []
    assert game.verify_consistency(t, game.POLICIES["greedy"]()) != []
