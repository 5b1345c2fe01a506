"""Named graphs used throughout the classification."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable

from .graph import GraphError, MultiGraph, bipartition, build_graph, distance, girth


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: MultiGraph
    provenance: str


def complete_multipartite(*sizes: int) -> MultiGraph:
    label = 0
    parts = []
    for s in sizes:
        parts.append(range(label, label + s))
        label += s
    edges = [
        (u, v)
        for p, q in combinations(parts, 2)
        for u in p
        for v in q
    ]
    return build_graph(label, edges)


def k7() -> MultiGraph:
    return build_graph(7, combinations(range(7), 2))


def k33() -> MultiGraph:
    return complete_multipartite(3, 3)


def k3311() -> MultiGraph:
    return complete_multipartite(3, 3, 1, 1)


# Heawood labels: c_i -> 2(i-1), c'_j -> 2(j-1)+1, so 0 and 1 are adjacent
_HEAWOOD_ADJ = {
    1: (1, 2, 3),
    2: (1, 4, 5),
    3: (1, 6, 7),
    4: (2, 4, 6),
    5: (2, 5, 7),
    6: (3, 4, 7),
    7: (3, 5, 6),
}


def heawood() -> MultiGraph:
    """Built by the forced 4-cycle-free completion of a degree-3 bipartite graph."""
    edges = [(2 * i - 2, 2 * j - 1) for i, nbrs in _HEAWOOD_ADJ.items() for j in nbrs]
    return build_graph(14, edges)


def heawood_distance3_pairs() -> list[tuple[int, int]]:
    g = heawood()
    return [(u, v) for u in range(14) for v in range(u + 1, 14) if distance(g, u, v) == 3]


def cousin89() -> MultiGraph:
    u, v = heawood_distance3_pairs()[0]
    return heawood().with_edge(u, v)


def cousin110() -> MultiGraph:
    """Parts A = 0..4, B = 5..9: A5 = {0,1,2}, B5 = {5,6,7}, plus edge 3-8."""
    a5, a3 = (0, 1, 2), (3, 4)
    b5, b3 = (5, 6, 7), (8, 9)
    edges = {(a, b) for a in a5 for b in b5 + b3}
    edges |= {(a, b) for a in a3 for b in b5}
    edges.add((3, 8))
    return build_graph(10, sorted(edges))


def k55_minus_path() -> MultiGraph:
    """K_{5,5} minus the 3-edge path 8-4-9-3."""
    missing = {(4, 8), (4, 9), (3, 9)}
    edges = [(a, b) for a in range(5) for b in range(5, 10) if (a, b) not in missing]
    return build_graph(10, edges)


def k33_plus_e() -> MultiGraph:
    return k33().with_edge(0, 1)


def k33_tilde() -> MultiGraph:
    """d1,d2,d3 = 0,1,2; d4 (s-vertex) = 3; d'1,d'2 = 4,5; subdivisions 6,7,8."""
    edges = [(d, p) for d in (0, 1, 2) for p in (4, 5)]
    for i, s in zip((0, 1, 2), (6, 7, 8)):
        edges += [(3, s), (s, i)]
    return build_graph(9, edges)


def p10_tilde() -> MultiGraph:
    """K~_{3,3} plus the t-vertex 9 joined to d1 and d2."""
    return build_graph(10, k33_tilde().pairs() + [(0, 9), (1, 9)])


_BUILDERS: dict[str, tuple[Callable[[], MultiGraph], int, int, str]] = {
    "k7": (k7, 7, 21, "complete graph on seven vertices"),
    "k3311": (k3311, 8, 22, "complete multipartite graph K_{3,3,1,1}"),
    "heawood": (heawood, 14, 21, "3-regular bipartite girth-6 graph on 14 vertices"),
    "cousin110": (cousin110, 10, 22, "forced ([3,1,1],[3,1,1]) construction"),
    "cousin89": (cousin89, 14, 22, "Heawood graph plus a distance-3 chord"),
    "k33": (k33, 6, 9, "complete bipartite graph K_{3,3}"),
    "k33e": (k33_plus_e, 6, 10, "K_{3,3} plus an edge inside one part"),
    "k33tilde": (k33_tilde, 9, 12, "K_{3,3} with one vertex joined to its neighbors through degree-2 vertices"),
    "p10tilde": (p10_tilde, 10, 14, "K~_{3,3} plus a degree-2 vertex joining two degree-3 vertices"),
}

_BIPARTITE = {"heawood", "cousin110", "cousin89", "k33", "k33tilde", "p10tilde"}

NAMES = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def named(name: str) -> CatalogEntry:
    name = name.lower()
    try:
        build, nv, ne, note = _BUILDERS[name]
    except KeyError:
        raise GraphError(f"unknown catalog name {name!r}; known: {', '.join(NAMES)}") from None
    g = build()
    if (g.order, g.edge_count) != (nv, ne):
        raise GraphError(f"{name}: built ({g.order}, {g.edge_count}), expected ({nv}, {ne})")
    if (name in _BIPARTITE) != (bipartition(g) is not None):
        raise GraphError(f"{name}: bipartiteness check failed")
    if name == "heawood" and (set(g.degrees()) != {3} or girth(g) != 6):
        raise GraphError("heawood: not 3-regular of girth 6")
    return CatalogEntry(name, g, note)
