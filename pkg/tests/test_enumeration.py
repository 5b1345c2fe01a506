import pytest

from ikforge.canon import canonical_form, is_isomorphic
from ikforge.catalog import cousin110
from ikforge.enumeration import (
    ProfilePair,
    admissible_profiles,
    generate,
    generate_from_degrees,
    part_profiles,
)
from ikforge.graph import DegreeProfile, degree_profile, is_connected
from ikforge.oracles import brute_force_classes, labeled_matrix_count, orbit_sum

# frozen after the orbit-sum oracle below agreed with the labeled count
COUNTS_DEG5 = [1, 1, 2, 9, 9, 23, 1, 3, 8, 7, 17, 11, 51, 32, 72, 151, 132, 326, 49, 142, 130]

SURROGATES = [
    ([3, 3, 3, 3], [3, 3, 3, 3], 1),
    ([4, 3, 3, 2], [3, 3, 3, 3], 1),
    ([4, 4, 3, 3], [3, 3, 3, 3, 2], 3),
    ([3, 3, 3, 3], [3, 3, 2, 2, 2], 3),
    ([4, 4, 3, 3], [3, 3, 2, 2, 2, 2], 12),
    ([3] * 5, [3] * 5, 2),
]


def test_profile_pair_counts():
    assert len(part_profiles(5)) == 6
    assert len(admissible_profiles(5)) == 21
    assert len(admissible_profiles(7)) == 253


def test_profile_pair_normalizes():
    p = ProfilePair.parse("1,2,3", "3,1,1")
    assert str(p) == "([3,1,1],[1,2,3])"
    with pytest.raises(ValueError):
        ProfilePair(DegreeProfile.parse("3,1,1"), DegreeProfile.parse("0,0,6"))


def test_counts_per_profile(candidates):
    counts = [sum(1 for _ in generate(p)) for p in admissible_profiles(5)]
    assert counts == COUNTS_DEG5
    assert len(candidates) == sum(COUNTS_DEG5) == 1177


def test_forced_profiles():
    (g,) = generate(ProfilePair.parse("3,1,1", "3,1,1"))
    assert is_isomorphic(g, cousin110())
    assert len(list(generate(ProfilePair.parse("2,3,0", "2,3,0")))) == 1


def test_outputs_distinct_connected_and_exact(candidates):
    keys = {canonical_form(g) for g in candidates}
    assert len(keys) == len(candidates)
    by_profile = {}
    for p in admissible_profiles(5):
        for g in generate(p):
            assert is_connected(g)
            assert degree_profile(g) == (p.a, p.b)
            by_profile[p] = by_profile.get(p, 0) + 1
    assert sum(by_profile.values()) == 1177


@pytest.mark.parametrize("rows, cols, expected", SURROGATES)
def test_surrogates_against_brute_force(rows, cols, expected):
    graphs = list(generate_from_degrees(rows, cols, connected_only=False))
    assert len(graphs) == expected
    assert brute_force_classes(sorted(rows, reverse=True), sorted(cols, reverse=True)) == expected
    symmetric = sorted(rows) == sorted(cols)
    assert orbit_sum(graphs, symmetric) == labeled_matrix_count(sorted(rows, reverse=True), sorted(cols, reverse=True))


def test_connected_only_filters():
    # two disjoint K33 realize six degree-3 vertices per side
    both = list(generate_from_degrees([3] * 6, [3] * 6, connected_only=False))
    conn = list(generate_from_degrees([3] * 6, [3] * 6))
    assert len(both) == len(conn) + 1


@pytest.mark.slow
def test_orbit_oracle_all_degree5_pairs():
    for p in admissible_profiles(5):
        graphs = list(generate(p, connected_only=False))
        assert orbit_sum(graphs, p.symmetric) == labeled_matrix_count(p.a.degrees(), p.b.degrees()), str(p)


def test_impossible_degrees_yield_nothing():
    assert list(generate_from_degrees([4], [1, 1, 1])) == []
    assert list(generate_from_degrees([3, 3], [3])) == []
