"""Slow, independent cross-checks for the fast code paths.

Nothing here calls the canonical labeling or the orderly generator, so the
two can be compared against these results.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial, prod
from typing import Sequence

from .graph import BipartiteGraph, MultiGraph


def labeled_matrix_count(row_degs: Sequence[int], col_degs: Sequence[int]) -> int:
    """Number of 0/1 matrices with the given row and column sums."""
    if sum(row_degs) != sum(col_degs):
        return 0
    rows = tuple(row_degs)

    @lru_cache(maxsize=None)
    def count(i: int, cols: tuple[int, ...]) -> int:
        if i == len(rows):
            return 1 if not any(cols) else 0
        groups = Counter(c for c in cols if c > 0)
        zeros = sum(1 for c in cols if c == 0)
        values = sorted(groups)
        total = 0

        def pick(k: int, need: int, ways: int, taken: list[int]):
            nonlocal total
            if k == len(values):
                if need == 0:
                    new = [0] * zeros
                    for v, x in zip(values, taken):
                        new += [v - 1] * x + [v] * (groups[v] - x)
                    total += ways * count(i + 1, tuple(sorted(new)))
                return
            v = values[k]
            for x in range(min(groups[v], need) + 1):
                pick(k + 1, need - x, ways * comb(groups[v], x), taken + [x])

        pick(0, rows[i], 1, [])
        return total

    return count(0, tuple(sorted(col_degs)))


def automorphism_count(g: MultiGraph, colors: Sequence[int] | None = None) -> int:
    """Color-preserving automorphisms by plain backtracking."""
    n = g.order
    colors = list(colors) if colors is not None else [0] * n
    deg = g.degrees()
    mat = g.matrix()
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    image = [-1] * n
    used = [False] * n

    def rec(k: int) -> int:
        if k == n:
            return 1
        v = order[k]
        total = 0
        for w in range(n):
            if used[w] or colors[w] != colors[v] or deg[w] != deg[v]:
                continue
            if all(mat[v][u] == mat[w][image[u]] for u in order[:k]):
                image[v] = w
                used[w] = True
                total += rec(k + 1)
                used[w] = False
        image[v] = -1
        return total

    return rec(0)


def _part_colors(g: BipartiteGraph) -> list[int]:
    return [0 if v in g.part_a else 1 for v in range(g.order)]


def swap_equivalent(g: BipartiteGraph) -> bool:
    """Is ``g`` isomorphic to itself with the parts exchanged? (brute force)"""
    a, b = sorted(g.part_a), sorted(g.part_b)
    if len(a) != len(b):
        return False
    rows = [[g.graph.multiplicity(x, y) for y in b] for x in a]
    return _matrix_class(rows) == _matrix_class([list(c) for c in zip(*rows)])


def _matrix_class(rows: list[list[int]]) -> tuple:
    best = None
    for perm in permutations(range(len(rows))):
        cols = tuple(sorted(zip(*(rows[p] for p in perm))))
        if best is None or cols < best:
            best = cols
    return best


def orbit_sum(graphs: Sequence[BipartiteGraph], symmetric: bool) -> int:
    """Sum of orbit sizes |S_rows x S_cols| / |Aut| over class representatives.

    Equals the labeled matrix count exactly when the representatives cover
    every class once.  With ``symmetric`` profiles each representative stands
    for itself and its part-swapped twin.
    """
    total = 0
    for g in graphs:
        degs = g.graph.degrees()
        group = prod(
            factorial(k)
            for part in (g.part_a, g.part_b)
            for k in Counter(degs[v] for v in part).values()
        )
        orbit, rem = divmod(group, automorphism_count(g.graph, _part_colors(g)))
        assert rem == 0
        total += orbit * (1 if not symmetric or swap_equivalent(g) else 2)
    return total


def brute_force_classes(row_degs: Sequence[int], col_degs: Sequence[int], connected_only: bool = False) -> int:
    """Classes of biadjacency matrices under row/column permutations (and
    transposition when the degree lists coincide), by exhaustive listing."""
    from .graph import is_connected

    nc = len(col_degs)
    options = [list(combinations(range(nc), d)) for d in row_degs]
    classes = set()
    symmetric = sorted(row_degs) == sorted(col_degs)
    for choice in product(*options):
        sums = [0] * nc
        for c in choice:
            for j in c:
                sums[j] += 1
        if sums != list(col_degs):
            continue
        rows = [[1 if j in c else 0 for j in range(nc)] for c in choice]
        if connected_only and not is_connected(BipartiteGraph.from_biadjacency(rows).graph):
            continue
        key = _matrix_class(rows)
        if symmetric:
            key = min(key, _matrix_class([list(c) for c in zip(*rows)]))
        classes.add(key)
    return len(classes)
