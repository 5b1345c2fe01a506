import random
from itertools import combinations

import pytest

from conftest import random_graph
from ikforge.canon import is_isomorphic
from ikforge.catalog import cousin89, cousin110, heawood, k33, k3311
from ikforge.graph import GraphError, build_graph, distance
from ikforge.planarity import is_k33, is_planar_by_minors
from ikforge.reduction import (
    RULE_EDGE_COUNT,
    RULE_PLANAR,
    Verdict,
    count_equation,
    elimination_rule,
    local_effects,
    obstruction_check,
    obstruction_scan,
    reduce,
    suppress,
)


def test_heawood_adjacent_pair():
    g = heawood()
    assert g.has_edge(0, 1)
    r = reduce(g, 0, 1)
    bd = r.breakdown
    assert (bd.ne, bd.nv3, bd.v4ab, bd.vy) == (5, 4, 0, 0)
    assert bd.predicted == 12
    assert r.edge_count == 12


def test_cousin110_degree5_pair():
    r = reduce(cousin110(), 0, 1)
    bd = r.breakdown
    assert (bd.ne, bd.nv3, bd.v4ab, bd.vy) == (10, 1, 1, 0)
    assert bd.predicted == r.edge_count == 10


def test_k3311_degree7_pair_gives_k33():
    g = k3311()
    r = reduce(g, 6, 7)
    assert is_k33(r.reduced)
    assert elimination_rule(r.reduced) is None
    assert obstruction_check(g, 6, 7) is Verdict.FAILS


def test_rules():
    assert elimination_rule(build_graph(4, [(0, 1), (1, 2), (2, 3)])) == RULE_EDGE_COUNT
    assert elimination_rule(k33()) is None
    # K33 plus a parallel edge: 10 edges, nonplanar
    assert elimination_rule(k33().with_edge(0, 3)) is None
    # a planar 10-edge graph needs the general rule
    wheel = build_graph(6, [(0, i) for i in range(1, 6)] + [(i, i % 5 + 1) for i in range(1, 6)])
    assert elimination_rule(wheel) == RULE_PLANAR
    assert elimination_rule(wheel, strict=True) is None


def test_reduce_rejects_bad_pairs():
    with pytest.raises(GraphError):
        reduce(k33(), 0, 0)
    with pytest.raises(GraphError):
        reduce(k33(), 0, 6)


def test_suppress_cycle_vanishes():
    cycle = build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    g, kept, _ = suppress(cycle)
    assert g.order == 0 and kept == ()


def test_trace_digest_is_deterministic():
    assert reduce(cousin89(), 0, 2).trace_digest() == reduce(cousin89(), 0, 2).trace_digest()


def test_order_independence_200():
    rng = random.Random(3)
    done = 0
    while done < 200:
        g = random_graph(rng, rng.randint(4, 12), rng.uniform(0.2, 0.8), multi=done % 4 == 0)
        if g.edge_count > 22 or g.order < 2:
            continue
        a, b = rng.sample(range(g.order), 2)
        base = reduce(g, a, b).reduced
        alive = set(g.vertices()) - {a, b}
        other, _, _ = suppress(g, alive, rng=random.Random(rng.random()))
        assert other.edge_count == base.edge_count
        assert is_isomorphic(other, base)
        done += 1


def _random_pairs(candidates, n, seed):
    rng = random.Random(seed)
    for _ in range(n):
        g = rng.choice(candidates).graph
        yield g, *rng.sample(range(g.order), 2)


def test_count_equation_upper_bound_200(candidates):
    for g, a, b in _random_pairs(candidates, 200, 5):
        assert reduce(g, a, b).edge_count <= count_equation(g, a, b).predicted


def test_count_equation_exact_when_local_200(candidates):
    hits = 0
    for g, a, b in _random_pairs(candidates, 200, 6):
        if local_effects(g, a, b):
            hits += 1
            assert reduce(g, a, b).edge_count == count_equation(g, a, b).predicted
    assert hits > 20


def test_degenerate_pattern_exists(candidates):
    # a vertex with two neighbors in V3(a,b) makes the formula strict
    for bg in candidates:
        g = bg.graph
        for a, b in combinations(g.vertices(), 2):
            bd = count_equation(g, a, b)
            if bd.degenerate and bd.predicted > reduce(g, a, b).edge_count:
                return
    pytest.fail("no degenerate example found")


def test_adjacent_pairs_have_empty_shared_sets(candidates):
    for bg in candidates[::20]:
        g = bg.graph
        for a, b in g.pairs():
            bd = count_equation(g, a, b)
            assert bd.v3ab == bd.v4ab == bd.vy == 0
            assert distance(g, a, b) == 1


def test_eliminating_pairs_reduce_to_planar_graphs(candidates):
    checked = 0
    for bg in candidates[::25]:
        hit = obstruction_scan(bg)
        if hit is None:
            continue
        checked += 1
        assert is_planar_by_minors(hit.result.reduced)
        assert obstruction_check(bg, *hit.pair) is Verdict.ELIMINATES
    assert checked >= 40


def test_cousins_survive():
    assert obstruction_scan(cousin89()) is None
    assert obstruction_scan(cousin110()) is None
