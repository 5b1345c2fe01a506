import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from ikforge.catalog import cousin89, cousin110, heawood, k33, k7
from ikforge.graph import (
    BipartiteGraph,
    DegreeProfile,
    GraphError,
    bipartition,
    build_graph,
    degree_profile,
    distance,
    girth,
    has_odd_cycle,
    is_connected,
)


def test_build_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 1, 0)])


def test_multiplicity_counts_in_degree():
    g = build_graph(3, [(0, 1, 2), (1, 2)])
    assert g.edge_count == 3
    assert g.degree(1) == 3
    assert not g.is_simple()
    assert g.simplified().edge_count == 2


def test_contract_keeps_parallels_and_drops_loops():
    # triangle with a doubled edge 0-1: contracting 1-2 gives 0-1 with multiplicity 3
    g = build_graph(3, [(0, 1, 2), (1, 2), (0, 2)])
    h = g.contract(1, 2)
    assert h.order == 2
    assert h.multiplicity(0, 1) == 3


def test_bipartition_examples():
    assert bipartition(build_graph(3, [(0, 1), (1, 2), (0, 2)])) is None
    a, b = bipartition(heawood())
    assert len(a) == len(b) == 7
    assert bipartition(k33()) is not None
    assert bipartition(k7()) is None


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 14), st.floats(0.05, 0.6), st.integers(0, 2**32))
def test_bipartition_iff_no_odd_cycle(n, p, seed):
    g = random_graph(random.Random(seed), n, p)
    assert (bipartition(g) is None) == has_odd_cycle(g)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 12), st.floats(0.1, 0.7), st.integers(0, 2**32))
def test_bipartite_degree_sums(n, p, seed):
    g = random_graph(random.Random(seed), n, p)
    if bipartition(g) is None:
        return
    bg = BipartiteGraph.from_graph(g)
    deg = g.degrees()
    assert sum(deg[v] for v in bg.part_a) == sum(deg[v] for v in bg.part_b) == g.edge_count


def test_bipartite_graph_validates_parts():
    with pytest.raises(GraphError):
        BipartiteGraph(build_graph(2, [(0, 1)]), (0, 1), ())


def test_heawood_distances():
    g = heawood()
    assert girth(g) == 6
    assert distance(g, 0, 1) == 1
    a, b = bipartition(g)
    assert {distance(g, a[0], v) for v in a[1:]} == {2}
    assert {distance(g, a[0], v) for v in b} == {1, 3}


def test_distance_unreachable():
    g = build_graph(4, [(0, 1), (2, 3)])
    assert distance(g, 0, 3) is None
    assert not is_connected(g)
    assert is_connected(build_graph(1, []))


def test_degree_profiles():
    assert degree_profile(cousin110()) == (DegreeProfile.parse("3,1,1"),) * 2
    p = degree_profile(cousin89())
    assert p[0] == p[1] == DegreeProfile.parse("0,1,6")
    with pytest.raises(GraphError):
        degree_profile(heawood())
    assert degree_profile(heawood(), total=None)[0] == DegreeProfile.parse("0,0,7")


def test_degree_profile_parse():
    p = DegreeProfile.parse("3,1,1")
    assert p.degrees() == [5, 5, 5, 4, 3]
    assert p.degree_sum == 22
    assert str(p) == "[3,1,1]"
    with pytest.raises(GraphError):
        DegreeProfile.from_degrees([2, 3])
