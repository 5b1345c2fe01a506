"""End-to-end verification runs and their JSON reports.

Each ``verify_*`` function returns a report section: a dict with a
``status`` of ``PASS`` or ``FAIL`` and a list of named ``checks``.  A
failing check never stops the run; every requested section is completed.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Any, Callable

from . import __version__
from .canon import canonical_form, certificate, is_isomorphic
from .catalog import cousin89, cousin110, heawood, heawood_distance3_pairs, k3311, k7, named
from .enumeration import ProfilePair, admissible_profiles, generate
from .formats import graph6_decode, graph6_encode, graph_to_record, read_jsonl, write_json, write_jsonl
from .graph import MultiGraph, bipartition
from .lemmas import all_lemmas
from .moves import family_closure, nabla_descendants, one_step_minors, vertex_splits
from .planarity import DEFAULT_BUDGET, MinorSearchExhausted, contains_minor, is_planar, is_planar_by_minors
from .reduction import RULE_EDGE_COUNT, elimination_rule, obstruction_scan, reduce

log = logging.getLogger(__name__)

SCHEMA = 1
SECTIONS = ("families", "main3", "deg6", "lemmas", "minimality")


@dataclass
class Config:
    threads: int = 1
    budget: int = DEFAULT_BUDGET
    out: Path | None = None

    @classmethod
    def from_env(cls, **kw) -> "Config":
        if kw.get("threads") is None:
            kw["threads"] = int(os.environ.get("IKFORGE_THREADS", "1"))
        return cls(**{k: v for k, v in kw.items() if v is not None})

    def echo(self) -> dict:
        return {"threads": self.threads, "budget": self.budget, "out": str(self.out) if self.out else None}


@dataclass
class Section:
    name: str
    checks: list[dict] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def check(self, name: str, ok: bool, **detail: Any) -> bool:
        self.checks.append({"check": name, "status": "PASS" if ok else "FAIL", **detail})
        return ok

    @property
    def ok(self) -> bool:
        return all(c["status"] == "PASS" for c in self.checks)

    def as_dict(self) -> dict:
        return {"status": "PASS" if self.ok else "FAIL", "checks": self.checks, **self.data}


# candidate scanning -------------------------------------------------------------


def _scan_pair(pair: ProfilePair) -> dict:
    """Generate every candidate for ``pair`` and run the obstruction scan on each."""
    eliminated, survivors, reduced = [], [], {}
    strict_survivors = 0
    for g in generate(pair):
        G = g.graph
        code = graph6_encode(G)
        canon = canonical_form(g).hex()
        hit = None
        strict_hit = False
        for a, b in combinations(G.vertices(), 2):
            r = reduce(G, a, b, with_breakdown=False)
            reduced.setdefault(certificate(r.reduced).hex(), [r.reduced.order, r.reduced.edges()])
            rule = elimination_rule(r.reduced)
            if rule and hit is None:
                hit = (a, b, rule)
            if rule == RULE_EDGE_COUNT:
                strict_hit = True
            if hit and strict_hit:
                break
        strict_survivors += not strict_hit
        rec = {"graph6": code, "canonical": canon, "profile": str(pair)}
        if hit is None:
            survivors.append(rec)
            continue
        a, b, rule = hit
        res = reduce(G, a, b)
        rec.update(
            pair=[a, b],
            rule=rule,
            reduced_edges=res.edge_count,
            trace_digest=res.trace_digest(),
            count_equation=res.breakdown.as_dict(),
        )
        eliminated.append(rec)
    return {
        "profile": str(pair),
        "max_degree": pair.max_degree,
        "candidates": len(eliminated) + len(survivors),
        "eliminated": eliminated,
        "survivors": survivors,
        "strict_survivors": strict_survivors,
        "reduced": reduced,
    }


def scan_profiles(pairs: list[ProfilePair], threads: int = 1) -> list[dict]:
    if threads > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_scan_pair, pairs))
    return [_scan_pair(p) for p in pairs]


def replay_certificate(rec: dict) -> bool:
    """Re-run the recorded reduction and confirm it still eliminates."""
    g = graph6_decode(rec["graph6"])
    a, b = rec["pair"]
    r = reduce(g, a, b)
    return r.edge_count == rec["reduced_edges"] and elimination_rule(r.reduced) is not None and r.trace_digest() == rec["trace_digest"]


def _planarity_cross_check(reduced: dict[str, list], budget: int) -> tuple[int, list[str]]:
    from .graph import build_graph

    mismatches = []
    for key, (order, edges) in sorted(reduced.items()):
        g = build_graph(order, [tuple(e) for e in edges])
        if is_planar(g) != is_planar_by_minors(g, budget):
            mismatches.append(key)
    return len(reduced), mismatches


def _scan_section(name: str, pairs: list[ProfilePair], cfg: Config) -> tuple[Section, list[dict]]:
    sec = Section(name)
    results = scan_profiles(pairs, cfg.threads)
    reduced: dict[str, list] = {}
    for res in results:
        reduced.update(res.pop("reduced"))
    eliminated = [rec for res in results for rec in res["eliminated"]]
    survivors = [rec for res in results for rec in res["survivors"]]
    keys = [rec["canonical"] for rec in eliminated + survivors]
    sec.check("no duplicate candidates across profiles", len(keys) == len(set(keys)), candidates=len(keys))
    replay_bad = [rec["graph6"] for rec in eliminated if not replay_certificate(rec)]
    sec.check("certificates replay", not replay_bad, certificates=len(eliminated), failures=replay_bad)
    total, mismatches = _planarity_cross_check(reduced, cfg.budget)
    sec.check(
        "planarity agrees with K5/K33-minor oracle on reduced graphs",
        not mismatches,
        distinct_reduced_graphs=total,
        mismatches=mismatches,
    )
    rules: dict[str, int] = {}
    for rec in eliminated:
        rules[rec["rule"]] = rules.get(rec["rule"], 0) + 1
    sec.data.update(
        profiles=[
            {k: res[k] for k in ("profile", "candidates", "strict_survivors")}
            | {"survivors": len(res["survivors"])}
            for res in results
        ],
        candidates=len(keys),
        eliminated=len(eliminated),
        eliminated_by_rule=rules,
        strict_survivors=sum(res["strict_survivors"] for res in results),
        survivors=survivors,
    )
    return sec, eliminated


def verify_main3(cfg: Config) -> tuple[Section, list[dict]]:
    pairs = admissible_profiles(5)
    sec, eliminated = _scan_section("main3", pairs, cfg)
    survivors = [graph6_decode(r["graph6"]) for r in sec.data["survivors"]]
    matched = {
        name: sum(is_isomorphic(s, ref) for s in survivors)
        for name, ref in (("cousin89", cousin89()), ("cousin110", cousin110()))
    }
    sec.check(
        "survivors are exactly Cousins 89 and 110",
        len(survivors) == 2 and matched == {"cousin89": 1, "cousin110": 1},
        survivors=[r["graph6"] for r in sec.data["survivors"]],
        matched=matched,
    )
    by_profile = {}
    for rec in sec.data["survivors"] + eliminated:
        by_profile.setdefault(rec["profile"], []).append(rec)
    forced = by_profile.get(str(ProfilePair.parse("3,1,1", "3,1,1")), [])
    sec.check(
        "([3,1,1],[3,1,1]) yields one graph, Cousin 110",
        len(forced) == 1 and is_isomorphic(graph6_decode(forced[0]["graph6"]), cousin110()),
        count=len(forced),
    )
    p230 = by_profile.get(str(ProfilePair.parse("2,3,0", "2,3,0")), [])
    sec.check(
        "([2,3,0],[2,3,0]) yields one graph, eliminated",
        len(p230) == 1 and "pair" in p230[0],
        count=len(p230),
        certificate=p230[0] if p230 else None,
    )
    c89 = [s for s in survivors if is_isomorphic(s, cousin89())]
    try:
        minor = bool(c89) and contains_minor(c89[0], heawood(), cfg.budget)
        sec.check("Cousin 89 survivor has a Heawood minor", minor)
    except MinorSearchExhausted as exc:
        sec.check("Cousin 89 survivor has a Heawood minor", False, error=str(exc))
    return sec, eliminated


def verify_deg6(cfg: Config) -> tuple[Section, list[dict]]:
    pairs = [p for p in admissible_profiles(7) if p.max_degree >= 6]
    sec, eliminated = _scan_section("deg6", pairs, cfg)
    sec.check("no candidate with a vertex of degree >= 6 survives", not sec.data["survivors"])
    bad = []
    deg7 = 0
    for rec in eliminated:
        g = graph6_decode(rec["graph6"])
        degs = g.degrees()
        a, b = bipartition(g)
        for part, other in ((a, b), (b, a)):
            if any(degs[v] == 7 for v in part):
                deg7 += 1
                if len(other) != 7:
                    bad.append(rec["graph6"])
    sec.check("a degree-7 vertex forces seven vertices on the other side", not bad, degree7_candidates=deg7)
    sec.data["max_reduced_edges"] = max((r["reduced_edges"] for r in eliminated), default=None)
    sec.data["example"] = eliminated[0] if eliminated else None
    return sec, eliminated


def verify_families(cfg: Config) -> Section:
    sec = Section("families")
    expected = {"k7": 20, "k3311": 58, "cousin110": 110}
    closures = {}
    for seed, size in expected.items():
        fam = family_closure(named(seed).graph)
        closures[seed] = fam
        edges = {g.edge_count for g in fam.graphs()}
        sec.check(f"{seed} family has {size} members", len(fam) == size, members=len(fam), edge_counts=sorted(edges))
        sec.check(f"{seed} family needs no edge-merging wye-delta move", fam.simplified_moves == 0, simplified=fam.simplified_moves)
    ks = nabla_descendants(k7())
    sec.check("K7 has 14 delta-wye descendants (KS graphs)", len(ks) == 14, members=len(ks))
    sec.check("KS graphs lie in the K7 family", set(ks) <= set(closures["k7"].members))

    def bipartite(fam):
        return [g for g in fam.graphs() if bipartition(g) is not None]

    b7 = bipartite(closures["k7"])
    sec.check("only bipartite K7-family member is Heawood", len(b7) == 1 and is_isomorphic(b7[0], heawood()))
    b110 = bipartite(closures["cousin110"])
    ok = len(b110) == 2 and {is_isomorphic(g, cousin89()) for g in b110} == {True, False} and any(
        is_isomorphic(g, cousin110()) for g in b110
    )
    sec.check("bipartite E9+e-family members are Cousins 89 and 110", ok, bipartite=[graph6_encode(g) for g in b110])
    sec.check("K3311 family has no bipartite member", not bipartite(closures["k3311"]))
    sec.data["closures"] = {k: len(v) for k, v in closures.items()}
    if cfg.out:
        for seed, fam in closures.items():
            write_jsonl(cfg.out / f"closure_{seed}.jsonl", (graph_to_record(g, family=seed) for g in fam.graphs()))
    return sec


def verify_lemmas(cfg: Config) -> Section:
    sec = Section("lemmas")
    reports = all_lemmas()
    for rep in reports:
        sec.check(f"lemma {rep.lemma}", rep.ok, **{k: v for k, v in rep.as_dict().items() if k != "status"})
    return sec


def verify_minimality(cfg: Config) -> Section:
    sec = Section("minimality")
    ks = list(nabla_descendants(k7()).values())
    ks_keys = {certificate(g) for g in ks}
    bipartite_splits = []
    other_bipartite = []
    splits = 0
    for g in ks:
        new = g.order
        for v in g.vertices():
            for h in vertex_splits(g, v):
                if bipartition(h) is None:
                    continue
                # only splits leaving a degree-2 vertex undo a contraction at a degree-2 vertex
                if min(h.degree(v), h.degree(new)) == 2:
                    bipartite_splits.append(graph6_encode(h))
                else:
                    other_bipartite.append(graph6_encode(h))
            splits += sum(1 for h in vertex_splits(g, v) if min(h.degree(v), h.degree(new)) == 2)
    sec.check(
        "no vertex split of a KS graph with a degree-2 vertex is bipartite",
        not bipartite_splits,
        splits=splits,
        ks_graphs=len(ks),
        bipartite=bipartite_splits,
    )
    sec.data["bipartite_splits_without_degree2"] = {
        "graphs": other_bipartite,
        "cousin110": [is_isomorphic(graph6_decode(c), cousin110()) for c in other_bipartite],
    }
    c110 = cousin110()
    try:
        sec.check("Cousin 110 has no Heawood minor", not contains_minor(c110, heawood(), cfg.budget))
    except MinorSearchExhausted as exc:
        sec.check("Cousin 110 has no Heawood minor", False, error=str(exc))
    minors = one_step_minors(c110)
    ks_minors = [m for m in minors if certificate(m) in ks_keys]
    sec.check(
        "no bipartite one-step minor of Cousin 110 is a KS graph",
        not any(bipartition(m) is not None for m in ks_minors),
        one_step_minors=len(minors),
        max_edges=max(m.edge_count for m in minors),
        ks_minors=[graph6_encode(m) for m in ks_minors],
    )
    hw = heawood()
    chords = heawood_distance3_pairs()
    classes = {certificate(hw.with_edge(u, v)) for u, v in chords}
    sec.check(
        "Heawood plus any distance-3 chord is Cousin 89",
        len(classes) == 1 and classes == {certificate(cousin89())},
        chords=len(chords),
        classes=len(classes),
    )
    return sec


# orchestration ----------------------------------------------------------------------


def run(sections: list[str], cfg: Config) -> dict:
    report: dict[str, Any] = {
        "schema": SCHEMA,
        "tool": "ikforge",
        "version": __version__,
        "config": cfg.echo(),
        "sections": {},
        "timings": {},
    }
    certs: dict[str, list[dict]] = {}
    runners: dict[str, Callable[[Config], Any]] = {
        "families": verify_families,
        "main3": verify_main3,
        "deg6": verify_deg6,
        "lemmas": verify_lemmas,
        "minimality": verify_minimality,
    }
    for name in sections:
        t0 = time.perf_counter()
        log.info("running %s", name)
        out = runners[name](cfg)
        if isinstance(out, tuple):
            out, certs[name] = out
        report["sections"][name] = out.as_dict()
        report["timings"][name] = round(time.perf_counter() - t0, 3)
        log.info("%s: %s", name, "PASS" if out.ok else "FAIL")
    report["status"] = "PASS" if all(s["status"] == "PASS" for s in report["sections"].values()) else "FAIL"
    if cfg.out:
        write_json(cfg.out / "report.json", report)
        for name, recs in certs.items():
            write_jsonl(cfg.out / f"certificates_{name}.jsonl", recs)
            write_jsonl(cfg.out / f"survivors_{name}.jsonl", report["sections"][name]["survivors"])
    return report


def load_certificates(path: str | os.PathLike) -> list[dict]:
    return list(read_jsonl(path))
