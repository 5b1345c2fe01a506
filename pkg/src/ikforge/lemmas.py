"""Exhaustive checks of the structural lemmas on their (tiny) universes."""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import is_isomorphic
from .catalog import heawood, k33_tilde, p10_tilde
from .enumeration import ProfilePair, generate, generate_from_degrees
from .formats import graph6_encode
from .graph import BipartiteGraph, MultiGraph, four_cycles
from .oracles import labeled_matrix_count, orbit_sum
from .planarity import is_planar, is_planar_by_minors
from .reduction import obstruction_scan, suppress


@dataclass
class LemmaReport:
    lemma: str
    universe: int
    exceptions: list[str] = field(default_factory=list)
    witnesses: list[str] = field(default_factory=list)
    # independent count: labeled matrices vs. orbit sizes of the universe
    labeled_count: int | None = None
    orbit_total: int | None = None
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        universe_ok = self.labeled_count is None or self.labeled_count == self.orbit_total
        return not self.exceptions and universe_ok

    def as_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "status": "PASS" if self.ok else "FAIL",
            "universe": self.universe,
            "labeled_count": self.labeled_count,
            "orbit_total": self.orbit_total,
            "exceptions": self.exceptions,
            "witnesses": self.witnesses,
            **({"notes": self.notes} if self.notes else {}),
        }


def _nonplanar_universe(lemma: str, row_degs, col_degs, target: MultiGraph) -> LemmaReport:
    universe = list(generate_from_degrees(row_degs, col_degs, connected_only=False))
    report = LemmaReport(
        lemma,
        len(universe),
        labeled_count=labeled_matrix_count(sorted(row_degs, reverse=True), sorted(col_degs, reverse=True)),
        orbit_total=orbit_sum(universe, symmetric=False),
    )
    for h in universe:
        planar = is_planar(h)
        if planar != is_planar_by_minors(h):
            report.exceptions.append(f"planarity disagreement on {graph6_encode(h.graph)}")
            continue
        if planar:
            continue
        code = graph6_encode(h.graph)
        report.witnesses.append(code)
        if not is_isomorphic(h, target):
            report.exceptions.append(code)
            core, _, _ = suppress(h.graph)
            report.notes[code] = (
                f"degree-2 suppression gives {core.order} vertices, {core.edge_count} edges, "
                f"{'simple' if core.is_simple() else 'with parallel edges'}"
            )
    return report


def verify_lemma_h() -> LemmaReport:
    """Nonplanar (3,3,3,3 | 3,3,2,2,2) bipartite graphs are all K~_{3,3}."""
    return _nonplanar_universe("K33-tilde", [3, 3, 3, 3], [3, 3, 2, 2, 2], k33_tilde())


def verify_lemma_p() -> LemmaReport:
    """Nonplanar (4,4,3,3 | 3,3,2,2,2,2) bipartite graphs are all P~_{10}."""
    return _nonplanar_universe("P10-tilde", [4, 4, 3, 3], [3, 3, 2, 2, 2, 2], p10_tilde())


def _degree4_pair(g: BipartiteGraph) -> tuple[int, int]:
    degs = g.graph.degrees()
    (b,) = [v for v in g.part_a if degs[v] == 4]
    (b2,) = [v for v in g.part_b if degs[v] == 4]
    return b, b2


def verify_four_cycle_lemma() -> LemmaReport:
    """Among ([0,1,6],[0,1,6]) candidates, only graphs whose degree-4
    vertices are adjacent and whose 4-cycles all use that edge survive the
    obstruction scan; the survivors minus that edge are the Heawood graph."""
    pair = ProfilePair.parse("0,1,6", "0,1,6")
    universe = list(generate(pair))
    report = LemmaReport("four-cycle", len(universe))
    nonadjacent = adjacent = avoiding = 0
    hw = heawood()
    for g in universe:
        b, b2 = _degree4_pair(g)
        code = graph6_encode(g.graph)
        survives = obstruction_scan(g) is None
        if not g.graph.has_edge(b, b2):
            nonadjacent += 1
            if survives:
                report.exceptions.append(f"{code}: nonadjacent degree-4 vertices survive")
            continue
        adjacent += 1
        has_avoiding = any(
            not _consecutive(cyc, b, b2) for cyc in four_cycles(g.graph)
        )
        avoiding += has_avoiding
        if has_avoiding and survives:
            report.exceptions.append(f"{code}: a 4-cycle avoids e but no pair eliminates")
        if survives:
            report.witnesses.append(code)
            if not is_isomorphic(g.graph.without_edge(b, b2), hw):
                report.exceptions.append(f"{code}: survivor minus e is not Heawood")
    report.notes = {
        "nonadjacent_degree4": nonadjacent,
        "adjacent_degree4": adjacent,
        "with_4cycle_avoiding_e": avoiding,
        "survivors": len(report.witnesses),
    }
    return report


def _consecutive(cyc: tuple[int, ...], u: int, v: int) -> bool:
    n = len(cyc)
    return any({cyc[i], cyc[(i + 1) % n]} == {u, v} for i in range(n))


def all_lemmas() -> list[LemmaReport]:
    return [verify_lemma_h(), verify_lemma_p(), verify_four_cycle_lemma()]
