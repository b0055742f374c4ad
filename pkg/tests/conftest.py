"""Shared instance corpus for the test suite."""

from matchforge import instances


def corpus():
    """Representative adversarial instances, rebuilt on every call.

    Each entry is (graph, descriptor).  All of these are bipartite; the
    chorded square lives in its own tests because most invariants here
    are stated for two-sided graphs only.
    """
    makers = (
        lambda: instances.gen_trap_chain(4, 1),
        lambda: instances.gen_trap_chain(4, 3),
        lambda: instances.gen_trap_chain(5, 2),
        lambda: instances.gen_trap_chain(6, 2),
        lambda: instances.gen_trap_chain(4, 2, perfect=True),
        lambda: instances.gen_trap_chain(5, 1, perfect=True),
        lambda: instances.gen_trap_chain_d3(1),
        lambda: instances.gen_trap_chain_d3(4),
        lambda: instances.gen_trap_chain_d3(3, perfect=True),
        lambda: instances.gen_two_sided_d3(1),
        lambda: instances.gen_two_sided_d3(3),
        lambda: instances.gen_two_sided_d3(4, 2),
        lambda: instances.gen_two_sided_d3(3, 0),
        lambda: instances.gen_mds_instance(3),
        lambda: instances.gen_mds_instance(5),
        lambda: instances.gen_avg_degree_instance(2),
        lambda: instances.gen_avg_degree_instance(9),
    )
    return [m() for m in makers]


def random_corpus(count, max_side=10, deltas=(3, 4, 5), seed0=0):
    """Deterministic batch of random bipartite instances."""
    import random

    rng = random.Random(seed0)
    out = []
    for _ in range(count):
        nl = rng.randint(1, max_side)
        nr = rng.randint(1, max_side)
        delta = rng.choice(deltas)
        g, desc = instances.gen_random_bipartite(nl, nr, delta, rng.randrange(10 ** 9))
        out.append((g, desc))
    return out
