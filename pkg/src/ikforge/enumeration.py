"""Isomorph-free generation of bipartite graphs with prescribed part degrees.

Graphs are built as biadjacency matrices, rows for part A and columns for
part B, each sorted by degree.  Rows of equal degree are generated in
non-increasing lexicographic order and columns of equal degree are kept in
non-increasing lexicographic order as well; every matrix has such a form
(its lexicographically largest row/column permutation), so the pruning
never loses a class.  Remaining duplicates are removed by canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .canon import canonical_form
from .graph import BipartiteGraph, DegreeProfile, is_connected

TOTAL_EDGES = 22


@dataclass(frozen=True)
class ProfilePair:
    a: DegreeProfile
    b: DegreeProfile

    def __post_init__(self):
        if self.a.degree_sum != self.b.degree_sum:
            raise ValueError(f"profiles {self.a} and {self.b} have different degree sums")

    @classmethod
    def normalized(cls, p: DegreeProfile, q: DegreeProfile) -> "ProfilePair":
        return cls(p, q) if p.sort_key() >= q.sort_key() else cls(q, p)

    @classmethod
    def parse(cls, a: str, b: str) -> "ProfilePair":
        return cls.normalized(DegreeProfile.parse(a), DegreeProfile.parse(b))

    @property
    def max_degree(self) -> int:
        return max(self.a.max_degree, self.b.max_degree)

    @property
    def symmetric(self) -> bool:
        return self.a == self.b

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def part_profiles(max_degree: int, total: int = TOTAL_EDGES) -> list[DegreeProfile]:
    if not 3 <= max_degree <= 7:
        raise ValueError("max_degree must lie in 3..7")
    out = []

    def rec(d: int, remaining: int, counts: dict[int, int]):
        if d < 3:
            if remaining == 0:
                out.append(DegreeProfile(*(counts.get(k, 0) for k in (7, 6, 5, 4, 3))))
            return
        top = remaining // d if d <= max_degree else 0
        for k in range(top, -1, -1):
            counts[d] = k
            rec(d - 1, remaining - k * d, counts)
        counts[d] = 0

    rec(7, total, {})
    return sorted(out, key=lambda p: p.sort_key(), reverse=True)


def admissible_profiles(max_degree: int = 5, total: int = TOTAL_EDGES) -> list[ProfilePair]:
    """All normalized profile pairs with vertex degrees in ``3..max_degree``."""
    profs = part_profiles(max_degree, total)
    return [ProfilePair(p, q) for i, p in enumerate(profs) for q in profs[i:]]


def _biadjacency_search(row_degs: Sequence[int], col_degs: Sequence[int]) -> Iterator[list[int]]:
    """Yield row bitmasks (column 0 = most significant bit) in double-lex form.

    ``row_degs`` and ``col_degs`` must be sorted non-increasingly.
    """
    nr, nc = len(row_degs), len(col_degs)
    if sum(row_degs) != sum(col_degs):
        return
    if nr and max(row_degs) > nc or nc and max(col_degs) > nr:
        return
    bit = [1 << (nc - 1 - j) for j in range(nc)]
    # bit positions p(j) where columns j and j+1 share a degree
    same_col = 0
    for j in range(nc - 1):
        if col_degs[j] == col_degs[j + 1]:
            same_col |= bit[j]
    masks_by_deg: dict[int, list[int]] = {}
    for d in set(row_degs):
        ms = [sum(bit[j] for j in c) for c in combinations(range(nc), d)]
        masks_by_deg[d] = sorted(ms, reverse=True)
    full = (1 << nc) - 1
    rows = [0] * nr
    rem = list(col_degs)

    def rec(i: int, eq: int, prev: int):
        if i == nr:
            yield list(rows)
            return
        d = row_degs[i]
        bound = prev if i > 0 and row_degs[i - 1] == d else full
        left_after = nr - i - 1
        avail = 0
        must = 0
        for j in range(nc):
            if rem[j] > 0:
                avail |= bit[j]
            if rem[j] > left_after:
                must |= bit[j]
        for r in masks_by_deg[d]:
            if r > bound:
                continue
            if r & ~avail or must & ~r:
                continue
            if eq & ~r & (r << 1):
                continue
            for j in range(nc):
                if r & bit[j]:
                    rem[j] -= 1
            rows[i] = r
            yield from rec(i + 1, eq & ~(r ^ (r << 1)) & full, r)
            for j in range(nc):
                if r & bit[j]:
                    rem[j] += 1

    yield from rec(0, same_col, full)


def _to_graph(rows: list[int], nc: int) -> BipartiteGraph:
    return BipartiteGraph.from_biadjacency([[(r >> (nc - 1 - j)) & 1 for j in range(nc)] for r in rows])


def generate_from_degrees(
    row_degs: Sequence[int], col_degs: Sequence[int], connected_only: bool = True
) -> Iterator[BipartiteGraph]:
    """One bipartite graph per class with part degrees ``row_degs`` / ``col_degs``.

    Classes are taken up to exchanging the parts, which only matters when
    the two degree multisets coincide.  Vertices ``0..len(row_degs)-1`` form
    part A with degrees non-increasing; the rest form part B.
    """
    row_degs = sorted(row_degs, reverse=True)
    col_degs = sorted(col_degs, reverse=True)
    seen: set[bytes] = set()
    for rows in _biadjacency_search(row_degs, col_degs):
        g = _to_graph(rows, len(col_degs))
        if connected_only and not is_connected(g):
            continue
        key = canonical_form(g).certificate
        if key in seen:
            continue
        seen.add(key)
        yield g


def generate(pair: ProfilePair, connected_only: bool = True) -> Iterator[BipartiteGraph]:
    """Every connected simple bipartite graph realizing ``pair``, one per class."""
    return generate_from_degrees(pair.a.degrees(), pair.b.degrees(), connected_only)


def generate_all(max_degree: int = 5, connected_only: bool = True) -> Iterator[tuple[ProfilePair, BipartiteGraph]]:
    for pair in admissible_profiles(max_degree):
        for g in generate(pair, connected_only):
            yield pair, g
