"""Delta-wye and wye-delta moves, family closures, vertex splits, one-step minors."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

from .canon import CanonicalForm, canonical_form
from .graph import GraphError, MultiGraph, as_multigraph, triangles


class MoveResult(NamedTuple):
    graph: MultiGraph
    # the wye-delta move had to merge a new edge into an existing one
    simplified: bool


def nabla_y(g: MultiGraph, triangle: tuple[int, int, int]) -> MultiGraph:
    """Replace the edges of ``triangle`` by a new vertex joined to its corners."""
    g = as_multigraph(g)
    a, b, c = triangle
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise GraphError(f"{triangle} is not a triangle")
    h = g.without_edge(a, b).without_edge(b, c).without_edge(a, c)
    v = g.order
    mult = h.mult_map()
    mult.update({(a, v): 1, (b, v): 1, (c, v): 1})
    return MultiGraph(g.order + 1, mult)


def y_eligible(g: MultiGraph, v: int) -> bool:
    nbrs = g.neighbors(v)
    return len(nbrs) == 3 and all(g.multiplicity(v, w) == 1 for w in nbrs)


def y_nabla(g: MultiGraph, v: int) -> MoveResult:
    """Remove degree-3 vertex ``v`` and join its three neighbors pairwise.

    An edge that already exists is kept with multiplicity one and the result
    is flagged ``simplified``.
    """
    g = as_multigraph(g)
    if not y_eligible(g, v):
        raise GraphError(f"vertex {v} is not a degree-3 vertex with three simple edges")
    a, b, c = sorted(g.neighbors(v))
    h = g.induced_without([v])

    def shift(x: int) -> int:
        return x - (x > v)

    mult = h.mult_map()
    simplified = False
    for x, y in ((a, b), (b, c), (a, c)):
        k = (shift(x), shift(y))
        if k in mult:
            simplified = True
        else:
            mult[k] = 1
    return MoveResult(MultiGraph(h.order, mult), simplified)


@dataclass
class FamilyClosure:
    seed: CanonicalForm
    members: dict[CanonicalForm, MultiGraph]
    edges_between: list[tuple[CanonicalForm, CanonicalForm, str]] = field(default_factory=list)
    # wye-delta moves that would have merged edges; excluded from the family
    simplified_moves: int = 0

    def __len__(self) -> int:
        return len(self.members)

    def graphs(self) -> list[MultiGraph]:
        return [self.members[k] for k in sorted(self.members)]


def _moves(g: MultiGraph):
    for t in triangles(g):
        yield "nabla_y", MoveResult(nabla_y(g, t), False)
    for v in g.vertices():
        if y_eligible(g, v):
            yield "y_nabla", y_nabla(g, v)


def family_closure(seed: MultiGraph) -> FamilyClosure:
    """All cousins of ``seed`` up to isomorphism.

    Wye-delta moves whose new edges collide with existing ones change the
    edge count and are not followed; they are tallied in ``simplified_moves``.
    """
    seed = as_multigraph(seed)
    root = canonical_form(seed)
    fam = FamilyClosure(root, {root: seed})
    queue = deque([(root, seed)])
    while queue:
        key, g = queue.popleft()
        for kind, (h, simplified) in _moves(g):
            if simplified:
                fam.simplified_moves += 1
                continue
            hk = canonical_form(h)
            fam.edges_between.append((key, hk, kind))
            if hk not in fam.members:
                fam.members[hk] = h
                queue.append((hk, h))
    return fam


def nabla_descendants(seed: MultiGraph) -> dict[CanonicalForm, MultiGraph]:
    """Closure of ``seed`` under delta-wye moves only (seed included)."""
    seed = as_multigraph(seed)
    out = {canonical_form(seed): seed}
    queue = deque([seed])
    while queue:
        g = queue.popleft()
        for t in triangles(g):
            h = nabla_y(g, t)
            k = canonical_form(h)
            if k not in out:
                out[k] = h
                queue.append(h)
    return out


def vertex_splits(g: MultiGraph, v: int) -> list[MultiGraph]:
    """Every split of ``v`` into an edge ``v v'`` with both ends keeping a neighbor.

    Blocks are taken up to swapping; ``v`` keeps the block containing its
    lowest neighbor and the new vertex ``v'`` gets label ``g.order``.
    """
    g = as_multigraph(g)
    nbrs = sorted(g.neighbors(v))
    if g.degree(v) < 2:
        raise GraphError(f"vertex {v} has degree < 2")
    first, rest = nbrs[0], nbrs[1:]
    new = g.order
    out = []
    for r in range(len(rest)):
        for extra in combinations(rest, r):
            keep = {first, *extra}
            mult = {}
            for (x, y), m in g.mult_map().items():
                if v in (x, y):
                    w = y if x == v else x
                    if w in keep:
                        mult[(x, y)] = m
                    else:
                        mult[(w, new)] = m
                else:
                    mult[(x, y)] = m
            mult[(v, new)] = 1
            out.append(MultiGraph(g.order + 1, mult))
    return out


def one_step_minors(g: MultiGraph) -> list[MultiGraph]:
    """Single edge deletions and contractions, one per isomorphism class."""
    g = as_multigraph(g)
    seen: dict[CanonicalForm, MultiGraph] = {}
    for u, v in g.pairs():
        for h in (g.without_edge(u, v), g.contract(u, v)):
            seen.setdefault(canonical_form(h), h)
    return [seen[k] for k in sorted(seen)]
