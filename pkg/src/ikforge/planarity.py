"""Planarity, K_{3,3} recognition and exact minor containment for small graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .canon import certificate
from .graph import BipartiteGraph, GraphError, MultiGraph, as_multigraph, bipartition, components, is_connected

DEFAULT_BUDGET = 2_000_000


class MinorSearchExhausted(RuntimeError):
    """The expansion budget ran out before the search finished (answer unknown)."""


def to_networkx(g: MultiGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.pairs())
    return h


def is_planar(g: MultiGraph | BipartiteGraph) -> bool:
    """Planarity of the underlying simple graph (parallel edges never matter)."""
    g = as_multigraph(g)
    if g.order <= 4 or len(g.pairs()) <= 8:
        return True
    return nx.check_planarity(to_networkx(g), counterexample=False)[0]


def is_k33(g: MultiGraph | BipartiteGraph) -> bool:
    g = as_multigraph(g)
    if not g.is_simple() or g.order != 6 or g.edge_count != 9:
        return False
    if any(d != 3 for d in g.degrees()):
        return False
    parts = bipartition(g)
    return parts is not None and len(parts[0]) == 3


@dataclass(frozen=True)
class MinorQuery:
    host: MultiGraph
    pattern: MultiGraph
    budget: int = DEFAULT_BUDGET


def _strip(g: MultiGraph, min_pattern_degree: int) -> MultiGraph:
    """Simplify and drop vertices that can never matter for the pattern.

    Isolated vertices always go; leaves go when the pattern has minimum
    degree >= 2, and degree-2 vertices are suppressed when it is >= 3.
    """
    from .reduction import suppress

    g = g.simplified()
    if min_pattern_degree >= 3:
        while True:
            h, _, _ = suppress(g)
            h = h.simplified()
            if h == g:
                return g
            g = h
    drop = {v for v in g.vertices() if g.degree(v) == 0 or (min_pattern_degree >= 2 and g.degree(v) == 1)}
    while drop:
        g = g.induced_without(drop)
        drop = {v for v in g.vertices() if g.degree(v) == 0 or (min_pattern_degree >= 2 and g.degree(v) == 1)}
    return g


def has_minor(q: MinorQuery) -> bool:
    """Exact minor test by branch and bound over edge deletions and contractions.

    Raises :class:`MinorSearchExhausted` if ``q.budget`` expansions do not
    suffice.
    """
    pattern = q.pattern
    if not pattern.is_simple():
        raise GraphError("minor patterns must be simple")
    if not is_connected(pattern):
        raise GraphError("minor patterns must be connected")
    if pattern.edge_count == 0:
        return q.host.order >= pattern.order
    pdeg = sorted(pattern.degrees(), reverse=True)
    pmin = pdeg[-1]
    pcert = certificate(pattern)
    seen: set[bytes] = set()
    expansions = 0

    def feasible(h: MultiGraph) -> bool:
        if h.order < pattern.order or h.edge_count < pattern.edge_count:
            return False
        return h.edge_count - (h.order - pattern.order) >= pattern.edge_count

    def search(h: MultiGraph) -> bool:
        nonlocal expansions
        h = _strip(h, pmin)
        if not feasible(h):
            return False
        if len(components(h)) > 1:
            return any(search(h.induced_without(set(h.vertices()) - set(c))) for c in components(h))
        key = certificate(h)
        if key in seen:
            return False
        seen.add(key)
        expansions += 1
        if expansions > q.budget:
            raise MinorSearchExhausted(f"minor search exceeded {q.budget} expansions")
        if h.order == pattern.order:
            if h.edge_count == pattern.edge_count:
                return key == pcert
            hdeg = sorted(h.degrees(), reverse=True)
            if any(x < y for x, y in zip(hdeg, pdeg)):
                return False
            return any(search(h.without_edge(u, v)) for u, v in h.pairs())
        if h.edge_count == pattern.edge_count:
            return False
        for u, v in h.pairs():
            if search(h.contract(u, v)):
                return True
        return any(search(h.without_edge(u, v)) for u, v in h.pairs())

    return search(as_multigraph(q.host))


def contains_minor(host: MultiGraph | BipartiteGraph, pattern: MultiGraph, budget: int = DEFAULT_BUDGET) -> bool:
    return has_minor(MinorQuery(as_multigraph(host), pattern, budget))


@lru_cache(maxsize=None)
def _kuratowski() -> tuple[MultiGraph, MultiGraph]:
    from .catalog import complete_multipartite, k33

    k5 = complete_multipartite(1, 1, 1, 1, 1)
    return k5, k33()


def is_planar_by_minors(g: MultiGraph | BipartiteGraph, budget: int = DEFAULT_BUDGET) -> bool:
    """Independent planarity oracle: planar iff neither K_5 nor K_{3,3} is a minor."""
    k5, k33_ = _kuratowski()
    g = as_multigraph(g)
    return not (contains_minor(g, k5, budget) or contains_minor(g, k33_, budget))


def euler_bound_ok(g: MultiGraph) -> bool:
    """Necessary condition for a simple bipartite graph to be planar: |E| <= 2|V| - 4."""
    return g.order < 3 or len(g.pairs()) <= 2 * g.order - 4
