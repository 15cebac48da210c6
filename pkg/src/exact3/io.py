"""Graph text formats: edge list, graph6 and DOT.

Edge list: a header ``n m`` followed by ``m`` lines ``u v r`` with
0-based vertex ids and multiplicity ``r >= 1``.  Blank lines and lines
starting with ``#`` are ignored.  graph6 covers simple graphs only.
"""

from __future__ import annotations

import re

import networkx as nx

from .errors import ArgumentError, FormatError
from .multigraph import Multigraph

__all__ = [
    "parse_edge_list",
    "format_edge_list",
    "parse_graph6",
    "format_graph6",
    "format_dot",
    "read_graph",
]

_HEADER = re.compile(r"^\s*\d+\s+\d+\s*$")


def parse_edge_list(text: str) -> Multigraph:
    """Parse the edge-list format; errors carry the 1-based line number."""
    header = None
    edges: dict[tuple[int, int], int] = {}
    seen = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise FormatError("expected header 'n m'", lineno)
            header = (int(parts[0]), int(parts[1]))
            continue
        if len(parts) != 3:
            raise FormatError(f"expected 'u v r', got {line!r}", lineno)
        try:
            u, v, r = (int(p) for p in parts)
        except ValueError:
            raise FormatError(f"non-integer field in {line!r}", lineno) from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex id outside 0..{n - 1}", lineno)
        if u == v:
            raise FormatError(f"self-loop at {u}", lineno)
        if r < 1:
            raise FormatError("multiplicity must be >= 1", lineno)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise FormatError(f"pair {key} listed twice", lineno)
        edges[key] = r
        seen += 1
    if header is None:
        raise FormatError("empty input: missing header 'n m'")
    if seen != header[1]:
        raise FormatError(f"header announces {header[1]} edge lines, found {seen}")
    return Multigraph(range(header[0]), edges)


def format_edge_list(g: Multigraph) -> str:
    """Edge-list text; vertex ids are renumbered to ``0..n-1`` in id order."""
    h, _ = g.normalized()
    edges = h.edges()
    lines = [f"{h.order} {len(edges)}"] + [f"{u} {v} {r}" for u, v, r in edges]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Multigraph:
    data = text.strip().encode()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    try:
        nxg = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise FormatError(f"invalid graph6: {exc}", 1) from None
    return Multigraph(list(nxg.nodes), list(nxg.edges()))


def format_graph6(g: Multigraph) -> str:
    if not g.is_simple():
        raise ArgumentError("graph6 holds simple graphs only")
    h, _ = g.normalized()
    nxg = nx.Graph()
    nxg.add_nodes_from(h.vertices)
    nxg.add_edges_from((u, v) for u, v, _ in h.edges())
    return nx.to_graph6_bytes(nxg, header=False).decode().strip()


def format_dot(g: Multigraph, name: str = "G") -> str:
    """DOT text with one ``--`` line per parallel edge copy."""
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in g.vertices]
    for u, v, r in g.edges():
        lines += [f"  {u} -- {v};"] * r
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(text: str, fmt: str = "auto") -> Multigraph:
    """Parse ``text`` as ``edgelist`` or ``graph6``; ``auto`` sniffs the header."""
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt != "auto":
        raise ArgumentError(f"unknown format {fmt!r}")
    first = next((ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
    if _HEADER.match(first):
        return parse_edge_list(text)
    stripped = first.strip()
    if stripped.startswith(">>graph6<<") or (
        stripped and all(63 <= ord(ch) <= 126 for ch in stripped)
    ):
        return parse_graph6(stripped)
    return parse_edge_list(text)
