"""Small immutable (multi)graph values and the structural queries built on them.

Vertices are dense integers ``0..order-1``.  Multiplicities are stored per
unordered pair; loops are never stored.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 32


class GraphError(ValueError):
    """Raised when a graph cannot be constructed or a query is ill-posed."""


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class MultiGraph:
    """An undirected graph with positive integer edge multiplicities."""

    __slots__ = ("_order", "_mult", "_adj", "_edge_count", "_hash")

    def __init__(self, order: int, mult: dict[tuple[int, int], int]):
        # Trusted constructor; use build_graph() for validated input.
        self._order = order
        self._mult = mult
        adj: list[set[int]] = [set() for _ in range(order)]
        for u, v in mult:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self._edge_count = sum(mult.values())
        self._hash = None

    @property
    def order(self) -> int:
        return self._order

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult.get(_key(u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return _key(u, v) in self._mult

    def degree(self, v: int) -> int:
        """Degree counting multiplicity."""
        return sum(self._mult[_key(v, w)] for w in self._adj[v])

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self._order)]

    def edges(self) -> list[tuple[int, int, int]]:
        """Sorted ``(u, v, multiplicity)`` triples with ``u < v``."""
        return sorted((u, v, m) for (u, v), m in self._mult.items())

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self._mult)

    def is_simple(self) -> bool:
        return all(m == 1 for m in self._mult.values())

    def vertices(self) -> range:
        return range(self._order)

    def mult_map(self) -> dict[tuple[int, int], int]:
        return dict(self._mult)

    def matrix(self) -> list[list[int]]:
        n = self._order
        mat = [[0] * n for _ in range(n)]
        for (u, v), m in self._mult.items():
            mat[u][v] = mat[v][u] = m
        return mat

    # derived graphs ------------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "MultiGraph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return MultiGraph(self._order, {_key(perm[u], perm[v]): m for (u, v), m in self._mult.items()})

    def induced_without(self, removed: Iterable[int]) -> "MultiGraph":
        """Delete ``removed`` and compact the remaining labels (order preserved)."""
        gone = set(removed)
        keep = [v for v in range(self._order) if v not in gone]
        index = {v: i for i, v in enumerate(keep)}
        mult = {
            _key(index[u], index[v]): m
            for (u, v), m in self._mult.items()
            if u in index and v in index
        }
        return MultiGraph(len(keep), mult)

    def with_edge(self, u: int, v: int, count: int = 1) -> "MultiGraph":
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        mult = dict(self._mult)
        k = _key(u, v)
        mult[k] = mult.get(k, 0) + count
        return MultiGraph(self._order, mult)

    def without_edge(self, u: int, v: int) -> "MultiGraph":
        """Remove one unit of multiplicity from ``uv``."""
        k = _key(u, v)
        if k not in self._mult:
            raise GraphError(f"no edge {u}-{v}")
        mult = dict(self._mult)
        if mult[k] == 1:
            del mult[k]
        else:
            mult[k] -= 1
        return MultiGraph(self._order, mult)

    def simplified(self) -> "MultiGraph":
        return MultiGraph(self._order, {k: 1 for k in self._mult})

    def contract(self, u: int, v: int) -> "MultiGraph":
        """Contract edge ``uv``: merge ``v`` into ``u``, drop loops, keep parallels.

        The merged vertex keeps the smaller of the two labels; labels above
        the removed one shift down by one.
        """
        if not self.has_edge(u, v):
            raise GraphError(f"no edge {u}-{v} to contract")
        keep, gone = min(u, v), max(u, v)
        mult: dict[tuple[int, int], int] = {}
        for (x, y), m in self._mult.items():
            x = keep if x == gone else x
            y = keep if y == gone else y
            if x == y:
                continue
            x -= x > gone
            y -= y > gone
            k = _key(x, y)
            mult[k] = mult.get(k, 0) + m
        return MultiGraph(self._order - 1, mult)

    def disjoint_union(self, other: "MultiGraph") -> "MultiGraph":
        off = self._order
        mult = dict(self._mult)
        for (u, v), m in other._mult.items():
            mult[(u + off, v + off)] = m
        return MultiGraph(off + other._order, mult)

    # value semantics -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._order == other._order and self._mult == other._mult

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._order, frozenset(self._mult.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiGraph(order={self._order}, edges={self.edges()})"


def build_graph(order: int, edges: Iterable[Sequence[int]]) -> MultiGraph:
    """Validated constructor.

    ``edges`` holds ``(u, v)`` or ``(u, v, multiplicity)`` entries.  A pair may
    appear only once; callers sum multiplicities themselves.
    """
    if not 0 <= order <= MAX_ORDER:
        raise GraphError(f"order {order} outside 0..{MAX_ORDER}")
    mult: dict[tuple[int, int], int] = {}
    for e in edges:
        if len(e) == 2:
            u, v, m = e[0], e[1], 1
        elif len(e) == 3:
            u, v, m = e
        else:
            raise GraphError(f"bad edge entry {e!r}")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge {u}-{v} out of range for order {order}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if m < 1:
            raise GraphError(f"multiplicity {m} on {u}-{v} must be positive")
        k = _key(u, v)
        if k in mult:
            raise GraphError(f"duplicate pair {k}")
        mult[k] = m
    return MultiGraph(order, mult)


@dataclass(frozen=True)
class BipartiteGraph:
    """A simple graph together with a fixed two-part coloring."""

    graph: MultiGraph
    part_a: frozenset[int]
    part_b: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "part_a", frozenset(self.part_a))
        object.__setattr__(self, "part_b", frozenset(self.part_b))
        g = self.graph
        if not g.is_simple():
            raise GraphError("bipartite graphs are simple")
        if self.part_a & self.part_b or (self.part_a | self.part_b) != set(g.vertices()):
            raise GraphError("parts must partition the vertex set")
        for u, v in g.pairs():
            if (u in self.part_a) == (v in self.part_a):
                raise GraphError(f"edge {u}-{v} lies inside one part")

    @classmethod
    def from_graph(cls, g: MultiGraph) -> "BipartiteGraph":
        parts = bipartition(g)
        if parts is None:
            raise GraphError("graph has an odd cycle")
        return cls(g, frozenset(parts[0]), frozenset(parts[1]))

    @classmethod
    def from_biadjacency(cls, rows: Sequence[Sequence[int]]) -> "BipartiteGraph":
        """Rows index part A (vertices ``0..r-1``), columns part B."""
        r = len(rows)
        c = len(rows[0]) if rows else 0
        edges = [(i, r + j) for i in range(r) for j in range(c) if rows[i][j]]
        g = build_graph(r + c, edges)
        return cls(g, frozenset(range(r)), frozenset(range(r, r + c)))

    @property
    def order(self) -> int:
        return self.graph.order

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    def swapped(self) -> "BipartiteGraph":
        return BipartiteGraph(self.graph, self.part_b, self.part_a)


def as_multigraph(g: MultiGraph | BipartiteGraph) -> MultiGraph:
    return g.graph if isinstance(g, BipartiteGraph) else g


# structural queries ---------------------------------------------------------


def components(g: MultiGraph) -> list[list[int]]:
    seen = [False] * g.order
    comps = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: MultiGraph | BipartiteGraph) -> bool:
    g = as_multigraph(g)
    return g.order == 0 or len(components(g)) == 1


def bipartition(g: MultiGraph | BipartiteGraph) -> tuple[list[int], list[int]] | None:
    """Two-color ``g``; the lowest vertex of every component goes to part A."""
    g = as_multigraph(g)
    color = [-1] * g.order
    for s in g.vertices():
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    a = [v for v in g.vertices() if color[v] == 0]
    b = [v for v in g.vertices() if color[v] == 1]
    return a, b


def bfs_distances(g: MultiGraph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: MultiGraph | BipartiteGraph, u: int, v: int) -> int | None:
    """Hop distance, or ``None`` when ``v`` is unreachable from ``u``."""
    return bfs_distances(as_multigraph(g), u)[v]


def girth(g: MultiGraph | BipartiteGraph) -> int | None:
    """Length of a shortest cycle (2 for a bi-gon); ``None`` for forests."""
    g = as_multigraph(g)
    if not g.is_simple():
        return 2
    best = None
    for s in g.vertices():
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cyc = dist[u] + dist[w] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def has_odd_cycle(g: MultiGraph) -> bool:
    """Independent odd-cycle search by walking parity states (oracle for bipartition)."""
    for s in g.vertices():
        seen = {(s, 0)}
        stack = [(s, 0)]
        while stack:
            u, p = stack.pop()
            for w in g.neighbors(u):
                state = (w, 1 - p)
                if w == s and p == 0:
                    return True
                if state not in seen:
                    seen.add(state)
                    stack.append(state)
    return False


def triangles(g: MultiGraph) -> Iterator[tuple[int, int, int]]:
    for u in g.vertices():
        for v in g.neighbors(u):
            if v <= u:
                continue
            for w in g.neighbors(u) & g.neighbors(v):
                if w > v:
                    yield (u, v, w)


def four_cycles(g: MultiGraph) -> list[tuple[int, int, int, int]]:
    """All 4-cycles of a simple graph, each listed once as (a, b, c, d)."""
    out = []
    for a in g.vertices():
        for b, d in _pairs_sorted(g.neighbors(a)):
            if b < a or d < a:
                continue
            for c in (g.neighbors(b) & g.neighbors(d)) - {a}:
                if c > a:
                    out.append((a, b, c, d))
    return out


def _pairs_sorted(s: frozenset[int]) -> Iterator[tuple[int, int]]:
    items = sorted(s)
    for i, x in enumerate(items):
        for y in items[i + 1 :]:
            yield x, y


# degree profiles --------------------------------------------------------------


@dataclass(frozen=True, order=True)
class DegreeProfile:
    """Vertex counts of one part by degree, highest degree first.

    ``counts[k]`` is the number of vertices of degree ``max_degree - k``; the
    compact view ``[n5, n4, n3]`` is available through
    :meth:`short` when no vertex exceeds degree 5.
    """

    n7: int = 0
    n6: int = 0
    n5: int = 0
    n4: int = 0
    n3: int = 0

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "DegreeProfile":
        counts = {d: 0 for d in range(3, 8)}
        for d in degrees:
            if d not in counts:
                raise GraphError(f"degree {d} outside 3..7")
            counts[d] += 1
        return cls(counts[7], counts[6], counts[5], counts[4], counts[3])

    @classmethod
    def parse(cls, text: str) -> "DegreeProfile":
        """Parse ``"3,1,1"`` (n5,n4,n3) or ``"0,1,3,1,1"`` (n7..n3)."""
        nums = [int(x) for x in text.replace("[", "").replace("]", "").split(",")]
        if len(nums) == 3:
            return cls(0, 0, *nums)
        if len(nums) == 5:
            return cls(*nums)
        raise GraphError(f"cannot parse profile {text!r}")

    def degree_counts(self) -> dict[int, int]:
        return {7: self.n7, 6: self.n6, 5: self.n5, 4: self.n4, 3: self.n3}

    def degrees(self) -> list[int]:
        """Degree multiset, descending."""
        return [d for d, k in self.degree_counts().items() for _ in range(k)]

    @property
    def size(self) -> int:
        return self.n7 + self.n6 + self.n5 + self.n4 + self.n3

    @property
    def degree_sum(self) -> int:
        return sum(d * k for d, k in self.degree_counts().items())

    @property
    def max_degree(self) -> int:
        return max((d for d, k in self.degree_counts().items() if k), default=0)

    def short(self) -> tuple[int, ...]:
        if self.n7 or self.n6:
            return (self.n7, self.n6, self.n5, self.n4, self.n3)
        return (self.n5, self.n4, self.n3)

    def sort_key(self) -> tuple[int, ...]:
        return (self.n7, self.n6, self.n5, self.n4, self.n3)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.short())) + "]"


def degree_profile(
    g: BipartiteGraph | MultiGraph, total: int | None = 22
) -> tuple[DegreeProfile, DegreeProfile]:
    """Per-part degree profiles, ordered so the first part has the larger
    top-degree counts (the ``|A5| >= |B5|`` convention, extended to 6 and 7).

    Each part's degree sum must equal ``total``; pass ``None`` to accept the
    graph's own edge count.
    """
    if isinstance(g, MultiGraph):
        g = BipartiteGraph.from_graph(g)
    if total is not None and g.edge_count != total:
        raise GraphError(f"graph has {g.edge_count} edges, profile expects {total}")
    degs = g.graph.degrees()
    for v, d in enumerate(degs):
        if not 3 <= d <= 7:
            raise GraphError(f"vertex {v} has degree {d}, outside 3..7")
    pa = DegreeProfile.from_degrees(degs[v] for v in sorted(g.part_a))
    pb = DegreeProfile.from_degrees(degs[v] for v in sorted(g.part_b))
    for p in (pa, pb):
        if p.degree_sum != g.edge_count:
            raise GraphError(f"profile {p} sums to {p.degree_sum}, graph has {g.edge_count} edges")
    if pb.sort_key() > pa.sort_key():
        pa, pb = pb, pa
    return pa, pb
