"""Two-vertex deletion followed by degree-1/degree-2 suppression.

``reduce(g, a, b)`` deletes ``a`` and ``b`` and then repeatedly strips
isolated and degree-1 vertices and contracts an edge at every degree-2
vertex, always handling the lowest-labelled eligible vertex first.  The
count equation predicts the resulting edge count from local degree data; it
is kept as diagnostic metadata and checked against the simulation.
"""

from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .graph import BipartiteGraph, GraphError, MultiGraph, as_multigraph


@dataclass(frozen=True)
class CountBreakdown:
    ne: int
    v3a: int
    v3b: int
    v3ab: int
    v4ab: int
    vy: int
    degenerate: bool
    total: int

    @property
    def nv3(self) -> int:
        return self.v3a + self.v3b - self.v3ab

    @property
    def predicted(self) -> int:
        return self.total - self.ne - (self.nv3 + self.v4ab + self.vy)

    def as_dict(self) -> dict:
        return {
            "NE": self.ne,
            "NV3": self.nv3,
            "V3a": self.v3a,
            "V3b": self.v3b,
            "V3ab": self.v3ab,
            "V4ab": self.v4ab,
            "VY": self.vy,
            "degenerate": self.degenerate,
            "predicted": self.predicted,
        }


@dataclass(frozen=True)
class ReductionResult:
    reduced: MultiGraph
    # original label of each reduced vertex
    vertex_map: tuple[int, ...]
    breakdown: CountBreakdown | None
    trace: tuple[tuple, ...] = field(repr=False)

    @property
    def edge_count(self) -> int:
        return self.reduced.edge_count

    def trace_digest(self) -> str:
        blob = json.dumps([list(step) for step in self.trace]).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


def count_equation(g: MultiGraph | BipartiteGraph, a: int, b: int) -> CountBreakdown:
    """Evaluate every term of the count equation for the pair ``a, b``.

    Neighbor sets exclude ``a`` and ``b`` themselves, so for an adjacent pair
    ``V3(a)`` counts the degree-3 neighbors of ``a`` other than ``b``.  A vertex
    with two or more neighbors in ``V3(a,b)`` loses several edges at once and
    is deleted rather than contracted, so it is left out of ``VY`` and the
    pair is flagged degenerate; the prediction is then only an upper bound.
    """
    g = as_multigraph(g)
    if a == b:
        raise GraphError("reduction needs two distinct vertices")
    deg = g.degrees()
    pair = {a, b}
    na = g.neighbors(a) - pair
    nb = g.neighbors(b) - pair
    ne = deg[a] + deg[b] - g.multiplicity(a, b)
    v3a = {c for c in na if deg[c] == 3}
    v3b = {c for c in nb if deg[c] == 3}
    v3ab = v3a & v3b
    v4ab = {c for c in na & nb if deg[c] == 4}
    hits = {c: len(g.neighbors(c) & v3ab) for c in g.vertices() if c not in pair}
    vy = {c for d in v3ab for c in g.neighbors(d) - pair if deg[c] == 3 and hits[c] == 1}
    degenerate = any(h >= 2 for h in hits.values())
    return CountBreakdown(
        ne=ne,
        v3a=len(v3a),
        v3b=len(v3b),
        v3ab=len(v3ab),
        v4ab=len(v4ab),
        vy=len(vy),
        degenerate=degenerate,
        total=g.edge_count,
    )


def local_effects(g: MultiGraph | BipartiteGraph, a: int, b: int) -> bool:
    """True when the count equation describes the reduction exactly.

    The vertices losing edges (V3 outside V3(a,b), V4(a,b) and VY) must be
    pairwise nonadjacent and have no common neighbor outside a, b and
    V3(a,b), and the pair must not be degenerate.
    """
    g = as_multigraph(g)
    deg = g.degrees()
    pair = {a, b}
    na, nb = g.neighbors(a) - pair, g.neighbors(b) - pair
    v3 = {c for c in na | nb if deg[c] == 3}
    v3ab = {c for c in na & nb if deg[c] == 3}
    v4ab = {c for c in na & nb if deg[c] == 4}
    vy = {c for d in v3ab for c in g.neighbors(d) - pair if deg[c] == 3}  # equal when not degenerate
    touched = (v3 - v3ab) | v4ab | vy
    if count_equation(g, a, b).degenerate:
        return False
    if any((g.neighbors(c) - v3ab) & touched for c in touched):
        return False
    return not any(
        len(g.neighbors(x) & touched) >= 2 for x in g.vertices() if x not in pair | v3ab
    )


def suppress(
    g: MultiGraph, alive: set[int] | None = None, rng=None
) -> tuple[MultiGraph, tuple[int, ...], list[tuple]]:
    """Strip degree-0/1 vertices and contract at degree-2 vertices until none remain.

    Vertices are processed lowest label first, contracting toward the lower
    neighbor.  Passing a ``random.Random`` picks both at random instead; the
    result is the same up to isomorphism.
    """
    mult: dict[int, dict[int, int]] = {v: {} for v in g.vertices()}
    for (u, v), m in g.mult_map().items():
        mult[u][v] = m
        mult[v][u] = m
    if alive is not None:
        for v in list(mult):
            if v not in alive:
                _delete(mult, v)
    trace: list[tuple] = []
    _suppress(mult, trace, rng)
    keep = sorted(mult)
    index = {v: i for i, v in enumerate(keep)}
    out = {}
    for u in keep:
        for w, m in mult[u].items():
            if u < w:
                out[(index[u], index[w])] = m
    return MultiGraph(len(keep), out), tuple(keep), trace


def _delete(mult: dict[int, dict[int, int]], v: int) -> None:
    for w in mult.pop(v):
        del mult[w][v]


def _suppress(mult: dict[int, dict[int, int]], trace: list[tuple], rng=None) -> None:
    while True:
        low = [v for v in sorted(mult) if sum(mult[v].values()) <= 2]
        if not low:
            return
        v = rng.choice(low) if rng else low[0]
        nbrs = mult[v]
        d = sum(nbrs.values())
        if d == 0:
            del mult[v]
            trace.append(("drop_isolated", v))
        elif d == 1:
            (w,) = nbrs
            _delete(mult, v)
            trace.append(("drop_leaf", v, w))
        else:
            w = rng.choice(sorted(nbrs)) if rng else min(nbrs)
            # contract v into w: v's other edge moves to w; extra v-w units become loops
            others = {x: m for x, m in nbrs.items() if x != w}
            loops = nbrs[w] - 1
            _delete(mult, v)
            trace.append(("contract", v, w))
            for x, m in others.items():
                mult[w][x] = mult[w].get(x, 0) + m
                mult[x][w] = mult[x].get(w, 0) + m
            if loops:
                trace.append(("drop_loop", w, loops))


def reduce(g: MultiGraph | BipartiteGraph, a: int, b: int, with_breakdown: bool = True) -> ReductionResult:
    """Delete ``a`` and ``b`` then suppress low-degree vertices (the graph G-hat)."""
    g = as_multigraph(g)
    if a == b:
        raise GraphError("reduction needs two distinct vertices")
    if not (0 <= a < g.order and 0 <= b < g.order):
        raise GraphError(f"pair {a},{b} outside graph of order {g.order}")
    alive = set(g.vertices()) - {a, b}
    reduced, vmap, steps = suppress(g, alive)
    trace = [("delete", a), ("delete", b)] + steps
    breakdown = count_equation(g, a, b) if with_breakdown else None
    return ReductionResult(reduced, vmap, breakdown, tuple(trace))


class Verdict(enum.Enum):
    ELIMINATES = "Eliminates"
    FAILS = "Fails"


# elimination rules, cheapest first
RULE_EDGE_COUNT = "edge-count"
RULE_PLANAR = "planar"


def elimination_rule(reduced: MultiGraph, strict: bool = False) -> str | None:
    """Why a reduced graph certifies "not intrinsically knotted", if it does.

    ``edge-count``: at most 8 edges, or exactly 9 and not K_{3,3}.
    ``planar``: the reduced graph is planar (bi-gons and all).  The edge-count
    rule is the special case of this one that needs no planarity test;
    ``strict=True`` disables the general rule.
    """
    from .planarity import is_k33, is_planar

    e = reduced.edge_count
    if e <= 8 or (e == 9 and not is_k33(reduced)):
        return RULE_EDGE_COUNT
    if not strict and is_planar(reduced):
        return RULE_PLANAR
    return None


def obstruction_check(g: MultiGraph | BipartiteGraph, a: int, b: int, strict: bool = False) -> Verdict:
    r = reduce(g, a, b, with_breakdown=False)
    return Verdict.ELIMINATES if elimination_rule(r.reduced, strict) else Verdict.FAILS


@dataclass(frozen=True)
class Elimination:
    pair: tuple[int, int]
    rule: str
    result: ReductionResult

    @property
    def edge_count(self) -> int:
        return self.result.edge_count


def obstruction_scan(
    g: MultiGraph | BipartiteGraph,
    pairs: Sequence[tuple[int, int]] | None = None,
    strict: bool = False,
) -> Elimination | None:
    """Lexicographically first eliminating pair, or ``None``.

    ``None`` only means that no pair reduces to a planar graph; it says
    nothing about knottedness.
    """
    g = as_multigraph(g)
    for a, b in pairs if pairs is not None else combinations(g.vertices(), 2):
        r = reduce(g, a, b, with_breakdown=False)
        rule = elimination_rule(r.reduced, strict)
        if rule:
            return Elimination((a, b), rule, reduce(g, a, b))
    return None
