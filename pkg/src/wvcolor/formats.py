"""Graph file formats: extended DIMACS text and a JSON document.

DIMACS: ``p edge <n> <m>`` header, ``e <u> <v>`` lines (1-based), and the
weight extension ``w <v> <weight>`` (default 1); ``c`` lines are comments.
JSON: ``{"n": int, "edges": [[u, v], ...], "weights": {"v": w, ...}}``
with 0-based indices.  Parsing then serializing then parsing is the
identity on the normalized form (sorted, deduplicated edges).
"""

from __future__ import annotations

import json

from .errors import GraphFormatError
from .graphs import WeightedGraph, build


def parse_dimacs(text: str) -> WeightedGraph:
    n = None
    m_declared = None
    edges: list[tuple[int, int]] = []
    weights: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise GraphFormatError(
                    f"expected 'p edge <n> <m>', got {line!r}", lineno
                )
            try:
                n = int(fields[2])
                m_declared = int(fields[3])
            except ValueError:
                raise GraphFormatError(f"non-integer sizes in {line!r}", lineno)
            if n < 0 or m_declared < 0:
                raise GraphFormatError("negative size in problem line", lineno)
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(fields) != 3:
                raise GraphFormatError(f"expected 'e <u> <v>', got {line!r}", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(f"non-integer endpoint in {line!r}", lineno)
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise GraphFormatError(
                    f"endpoint out of range 1..{n} in {line!r}", lineno
                )
            if u == v:
                raise GraphFormatError(f"self-loop in {line!r}", lineno)
            edges.append((u - 1, v - 1))
        elif tag == "w":
            if n is None:
                raise GraphFormatError("weight line before problem line", lineno)
            if len(fields) != 3:
                raise GraphFormatError(f"expected 'w <v> <weight>', got {line!r}", lineno)
            try:
                v, wt = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(f"non-integer field in {line!r}", lineno)
            if not (1 <= v <= n):
                raise GraphFormatError(f"vertex out of range 1..{n} in {line!r}", lineno)
            if wt < 1:
                raise GraphFormatError(f"nonpositive weight in {line!r}", lineno)
            weights[v - 1] = wt
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line")
    return build(n, edges, weights)


def to_dimacs(g: WeightedGraph) -> str:
    lines = [f"p edge {g.n} {g.edge_count()}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    for v in range(g.n):
        if g.weights[v] != 1:
            lines.append(f"w {v + 1} {g.weights[v]}")
    return "\n".join(lines) + "\n"


def graph_to_dict(g: WeightedGraph) -> dict:
    return {
        "n": g.n,
        "edges": [[u, v] for u, v in g.edges()],
        "weights": {str(v): g.weights[v] for v in range(g.n) if g.weights[v] != 1},
    }


def graph_from_dict(doc: dict) -> WeightedGraph:
    try:
        n = doc["n"]
        edges = [tuple(e) for e in doc.get("edges", [])]
        weights = {int(k): v for k, v in doc.get("weights", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"malformed JSON graph document: {exc}")
    return build(n, edges, weights)


def parse_json_graph(text: str) -> WeightedGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc.msg}", exc.lineno)
    if not isinstance(doc, dict):
        raise GraphFormatError("top-level JSON value must be an object")
    return graph_from_dict(doc)


def to_json_graph(g: WeightedGraph) -> str:
    return json.dumps(graph_to_dict(g), sort_keys=True) + "\n"


def parse_graph(text: str, fmt: str) -> WeightedGraph:
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "json":
        return parse_json_graph(text)
    raise GraphFormatError(f"unknown format {fmt!r}")


def serialize_graph(g: WeightedGraph, fmt: str) -> str:
    if fmt == "dimacs":
        return to_dimacs(g)
    if fmt == "json":
        return to_json_graph(g)
    raise GraphFormatError(f"unknown format {fmt!r}")


def sniff_format(path: str, text: str) -> str:
    if path.endswith(".json"):
        return "json"
    stripped = text.lstrip()
    return "json" if stripped.startswith("{") else "dimacs"
