"""graph6 strings and JSON-lines persistence of graph collections."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Iterable, Iterator

from .canon import canonical_form
from .graph import GraphError, MultiGraph, build_graph


class FormatError(ValueError):
    pass


def graph6_encode(g: MultiGraph) -> str:
    """Standard graph6 (short form, order <= 62)."""
    if not g.is_simple():
        raise FormatError("graph6 cannot carry edge multiplicities")
    n = g.order
    if n > 62:
        raise FormatError(f"order {n} needs the long graph6 form")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def graph6_decode(s: str) -> MultiGraph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise FormatError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise FormatError(f"invalid graph6 character in {s!r}")
    n = ord(s[0]) - 63
    if n > 62:
        raise FormatError("long-form graph6 is not supported")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body length {len(body)} wrong for order {n}")
    bits = []
    for c in body:
        val = ord(c) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def graph_to_record(g: MultiGraph, **meta: Any) -> dict[str, Any]:
    """JSON-ready record; simple graphs use graph6, multigraphs an edge list."""
    rec: dict[str, Any] = {}
    if g.is_simple():
        rec["graph6"] = graph6_encode(g)
    else:
        rec["order"] = g.order
        rec["edges"] = [list(e) for e in g.edges()]
    rec["canonical"] = canonical_form(g).hex()
    if meta:
        rec["meta"] = meta
    return rec


def record_to_graph(rec: dict[str, Any], verify: bool = True) -> MultiGraph:
    try:
        if "graph6" in rec:
            g = graph6_decode(rec["graph6"])
        else:
            g = build_graph(rec["order"], [tuple(e) for e in rec["edges"]])
    except (KeyError, TypeError, GraphError) as exc:
        raise FormatError(f"malformed record: {exc}") from exc
    if verify and canonical_form(g).hex() != rec.get("canonical"):
        raise FormatError("canonical form does not match the stored graph")
    return g


def write_jsonl(path: str | os.PathLike, records: Iterable[dict[str, Any]]) -> None:
    """Write records atomically (temp file + rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            for rec in records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_jsonl(path: str | os.PathLike) -> Iterator[dict[str, Any]]:
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                yield json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError(f"{path}:{lineno}: {exc}") from exc


def store_graphs(path: str | os.PathLike, graphs: Iterable[MultiGraph], **meta: Any) -> None:
    write_jsonl(path, (graph_to_record(g, **meta) for g in graphs))


def load_graphs(path: str | os.PathLike) -> list[MultiGraph]:
    """Load and re-verify every stored canonical form."""
    out = []
    for i, rec in enumerate(read_jsonl(path), 1):
        try:
            out.append(record_to_graph(rec))
        except FormatError as exc:
            raise FormatError(f"{path}: record {i}: {exc}") from exc
    return out


def write_json(path: str | os.PathLike, obj: Any) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")
    os.replace(tmp, path)
