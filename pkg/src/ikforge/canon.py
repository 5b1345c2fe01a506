"""Canonical labeling by partition refinement and backtracking.

The certificate is the byte string of the upper-triangular multiplicity
matrix (prefixed by the order and the vertex colors) under the labeling that
makes it lexicographically smallest among the leaves of the search tree.
Automorphisms discovered at leaves prune sibling branches.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .graph import BipartiteGraph, MultiGraph, as_multigraph


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes
    # labeling[v] is the canonical label of vertex v
    labeling: tuple[int, ...]

    def hex(self) -> str:
        return self.certificate.hex()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.certificate == other.certificate

    def __hash__(self) -> int:
        return hash(self.certificate)

    def __lt__(self, other: "CanonicalForm") -> bool:
        return self.certificate < other.certificate


def _refine(cells: list[list[int]], adjm: list[list[tuple[int, int]]], n: int) -> list[list[int]]:
    cell_of = [0] * n
    while True:
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        k = len(cells)
        out: list[list[int]] = []
        for i, cell in enumerate(cells):
            if len(cell) == 1:
                out.append(cell)
                continue
            keyed = []
            for v in cell:
                counts = [0] * k
                for w, m in adjm[v]:
                    counts[cell_of[w]] += m
                keyed.append((counts, v))
            keyed.sort()
            prev = None
            for counts, v in keyed:
                if counts != prev:
                    out.append([v])
                    prev = counts
                else:
                    out[-1].append(v)
        if len(out) == k:
            return out
        cells = out


class _Search:
    def __init__(self, g: MultiGraph, colors: Sequence[int]):
        self.n = n = g.order
        self.mat = g.matrix()
        self.adjm = [[(w, self.mat[v][w]) for w in g.neighbors(v)] for v in range(n)]
        self.colors = colors
        self.first: tuple[bytes, list[int], list[int]] | None = None
        self.best: tuple[bytes, list[int], list[int]] | None = None
        self.autos: list[list[int]] = []
        self.path: list[int] = []

    def run(self) -> CanonicalForm:
        n = self.n
        if n == 0:
            return CanonicalForm(bytes([0]), ())
        degs = [sum(m for _, m in self.adjm[v]) for v in range(n)]
        groups: dict[tuple[int, int], list[int]] = {}
        for v in range(n):
            groups.setdefault((self.colors[v], degs[v]), []).append(v)
        cells = [groups[k] for k in sorted(groups)]
        self._search(_refine(cells, self.adjm, n))
        cert, order, _ = self.best
        labeling = [0] * n
        for i, v in enumerate(order):
            labeling[v] = i
        return CanonicalForm(cert, tuple(labeling))

    def _leaf(self, cells: list[list[int]]) -> int | None:
        order = [c[0] for c in cells]
        mat = self.mat
        n = self.n
        body = [n] + [self.colors[v] for v in order]
        for i in range(n):
            row = mat[order[i]]
            body.extend(row[order[j]] for j in range(i + 1, n))
        cert = bytes(body)
        if self.first is None:
            self.first = self.best = (cert, order, list(self.path))
            return None
        for ref in (self.first, self.best):
            if cert == ref[0]:
                # ref leaf -> this leaf is an automorphism
                perm = [0] * n
                for a, b in zip(ref[1], order):
                    perm[a] = b
                self.autos.append(perm)
                d = 0
                for x, y in zip(ref[2], self.path):
                    if x != y:
                        break
                    d += 1
                return d
        if cert < self.best[0]:
            self.best = (cert, order, list(self.path))
        return None

    def _orbit_rep(self, fixed: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.autos:
            if all(perm[f] == f for f in fixed):
                for v, w in enumerate(perm):
                    a, b = find(v), find(w)
                    if a != b:
                        parent[a] = b
        return [find(v) for v in range(self.n)]

    def _search(self, cells: list[list[int]]) -> int | None:
        if len(cells) == self.n:
            return self._leaf(cells)
        depth = len(self.path)
        ti = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = sorted(cells[ti])
        explored: list[int] = []
        for v in target:
            if explored and self.autos:
                rep = self._orbit_rep(self.path)
                if rep[v] in {rep[u] for u in explored}:
                    continue
            rest = [u for u in cells[ti] if u != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1 :]
            self.path.append(v)
            jump = self._search(_refine(child, self.adjm, self.n))
            self.path.pop()
            explored.append(v)
            if jump is not None and jump < depth:
                return jump
        return None


def canonical_form(g: MultiGraph | BipartiteGraph, colors: Sequence[int] | None = None) -> CanonicalForm:
    """Relabeling-invariant certificate of ``g``.

    For a :class:`BipartiteGraph` the parts act as vertex colors and both
    color assignments are tried, so part swaps give the same certificate.
    """
    if isinstance(g, BipartiteGraph):
        a_first = [0 if v in g.part_a else 1 for v in range(g.order)]
        b_first = [1 - c for c in a_first]
        f1 = _Search(g.graph, a_first).run()
        f2 = _Search(g.graph, b_first).run()
        return min(f1, f2, key=lambda f: f.certificate)
    if colors is None:
        colors = [0] * g.order
    return _Search(g, list(colors)).run()


def certificate(g: MultiGraph | BipartiteGraph) -> bytes:
    return canonical_form(g).certificate


def canonical_graph(g: MultiGraph | BipartiteGraph) -> MultiGraph:
    """The representative of ``g``'s class under its canonical labeling."""
    f = canonical_form(g)
    return as_multigraph(g).relabel(f.labeling)


def is_isomorphic(g: MultiGraph | BipartiteGraph, h: MultiGraph | BipartiteGraph) -> bool:
    g, h = as_multigraph(g), as_multigraph(h)
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return certificate(g) == certificate(h)


def brute_force_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    """Try every bijection; an oracle for tiny graphs only."""
    g, h = as_multigraph(g), as_multigraph(h)
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    target = h.mult_map()
    src = g.mult_map()
    for perm in permutations(range(g.order)):
        if all(target.get(_k(perm[u], perm[v])) == m for (u, v), m in src.items()):
            return True
    return False


def _k(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def find_isomorphism(g: MultiGraph, h: MultiGraph) -> list[int] | None:
    """A vertex map ``g -> h`` if the graphs are isomorphic."""
    if not is_isomorphic(g, h):
        return None
    fg, fh = canonical_form(g), canonical_form(h)
    inv_h = [0] * h.order
    for v, lab in enumerate(fh.labeling):
        inv_h[lab] = v
    return [inv_h[fg.labeling[v]] for v in range(g.order)]
