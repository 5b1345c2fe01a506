import random

import pytest

from conftest import random_graph, shuffled
from ikforge.catalog import complete_multipartite, heawood, k7, k33, k3311
from ikforge.graph import bipartition, build_graph, is_connected
from ikforge.moves import one_step_minors
from ikforge.planarity import (
    MinorSearchExhausted,
    contains_minor,
    euler_bound_ok,
    is_k33,
    is_planar,
    is_planar_by_minors,
)

K5 = complete_multipartite(1, 1, 1, 1, 1)
PETERSEN = build_graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)


@pytest.mark.parametrize(
    "g, planar",
    [
        (K5, False),
        (k33(), False),
        (PETERSEN, False),
        (heawood(), False),
        (complete_multipartite(1, 1, 1, 1), True),
        (complete_multipartite(2, 2, 2), True),
        (k33().without_edge(0, 3), True),
    ],
)
def test_known_graphs(g, planar):
    assert is_planar(g) is planar
    assert is_planar_by_minors(g) is planar


def test_parallel_edges_do_not_matter():
    g = complete_multipartite(2, 2, 2).with_edge(0, 2, 3)
    assert is_planar(g) and is_planar_by_minors(g)


def test_is_k33():
    assert is_k33(k33())
    assert not is_k33(K5)
    assert not is_k33(k33().with_edge(0, 3))
    rng = random.Random(0)
    assert is_k33(shuffled(rng, k33())[0])


def test_minor_of_itself():
    rng = random.Random(1)
    checked = 0
    while checked < 30:
        g = random_graph(rng, rng.randint(3, 7), 0.5)
        if not is_connected(g):
            continue
        assert contains_minor(g, g)
        checked += 1


def test_minor_transitivity_chains():
    rng = random.Random(2)
    for _ in range(10):
        g = random_graph(rng, 7, 0.6)
        chain = [g]
        for _ in range(3):
            minors = [m.simplified() for m in one_step_minors(chain[-1])]
            minors = [m for m in minors if m.edge_count and is_connected(m)]
            if not minors:
                break
            chain.append(rng.choice(minors))
        for i, mid in enumerate(chain):
            for later in chain[i + 1:]:
                assert contains_minor(mid, later)


def test_minor_negative_cases():
    assert not contains_minor(k33(), K5)
    assert not contains_minor(complete_multipartite(2, 2, 2), k33())
    assert contains_minor(PETERSEN, K5)
    assert contains_minor(k7(), K5)
    assert contains_minor(k3311(), k33())
    assert not contains_minor(k7(), k3311())


def test_budget_exhaustion_raises():
    with pytest.raises(MinorSearchExhausted):
        contains_minor(heawood(), k33(), budget=1)


def test_random_bipartite_cross_validation():
    rng = random.Random(4)
    checked = 0
    while checked < 150:
        g = random_graph(rng, rng.randint(6, 12), rng.uniform(0.25, 0.6))
        if bipartition(g) is None or g.edge_count > 22:
            continue
        planar = is_planar(g)
        assert planar == is_planar_by_minors(g)
        if planar:
            assert euler_bound_ok(g)
        checked += 1
