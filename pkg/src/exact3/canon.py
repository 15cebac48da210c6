"""Exact isomorphism testing through canonical labeling."""

from __future__ import annotations

import ast

from ._backend import kernels
from .errors import ArgumentError
from .multigraph import Multigraph

__all__ = [
    "canonical_code",
    "canonical_labeling",
    "is_isomorphic",
    "automorphism_orbits",
    "encode_matrix",
    "graph_from_code",
]


def encode_matrix(n: int, flat, lab, colors=None) -> bytes:
    """Byte string for the matrix ``flat`` permuted by ``lab``.

    Layout: order, then the color of each canonical position (only when
    colored), then the upper triangle row by row.  Values above 254 switch
    to a textual fallback so the code stays injective.
    """
    tri = [flat[lab[i] * n + lab[j]] for i in range(n) for j in range(i + 1, n)]
    head = [n]
    if colors is not None:
        head += [colors[v] for v in lab]
    if n < 255 and max(tri + head[1:], default=0) < 255:
        return bytes(head) + (b"\xfe" if colors is not None else b"") + bytes(tri)
    return b"\xff" + repr((n, head[1:], tri)).encode()


def graph_from_code(code: bytes) -> Multigraph:
    """The canonical representative (vertices 0..n-1) of an uncolored code."""
    if not code:
        raise ArgumentError("empty canonical code")
    if code[:1] == b"\xff":
        try:
            n, colors, tri = ast.literal_eval(code[1:].decode())
        except (ValueError, SyntaxError, UnicodeDecodeError):
            raise ArgumentError("malformed canonical code") from None
        if colors:
            raise ArgumentError("colored codes carry no plain graph")
    else:
        n, tri = code[0], code[1:]
    if len(tri) != n * (n - 1) // 2:
        raise ArgumentError("not an uncolored canonical code")
    edges = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if tri[k]:
                edges[(i, j)] = tri[k]
            k += 1
    return Multigraph(range(n), edges)


def _flat(g: Multigraph) -> tuple[list[int], list[int]]:
    labels, mat = g.to_matrix()
    return labels, [x for row in mat for x in row]


def canonical_labeling(g: Multigraph, colors=None):
    """Return ``(code, order, generators)`` for ``g``.

    ``order`` lists g's vertices in canonical position order; ``generators``
    are automorphisms as dicts over g's vertex ids.  ``colors`` optionally
    maps vertex -> int and is respected by the labeling.
    """
    labels, flat = _flat(g)
    n = len(labels)
    col = None if colors is None else [colors[v] for v in labels]
    lab, gens = kernels.canon(n, flat, col)
    code = encode_matrix(n, flat, lab, col)
    order = [labels[i] for i in lab]
    autos = [{labels[i]: labels[p[i]] for i in range(n)} for p in gens]
    return code, order, autos


def canonical_code(g: Multigraph) -> bytes:
    """Relabeling-invariant byte string; equal iff isomorphic."""
    labels, flat = _flat(g)
    n = len(labels)
    lab, _ = kernels.canon(n, flat, None)
    return encode_matrix(n, flat, lab)


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    if sorted(g.degrees().values()) != sorted(h.degrees().values()):
        return False
    return canonical_code(g) == canonical_code(h)


def automorphism_orbits(g: Multigraph, colors=None) -> list[list[int]]:
    """Vertex orbits of the group generated by the search's automorphisms."""
    _, _, autos = canonical_labeling(g, colors)
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in autos:
        for x, y in a.items():
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    orbits: dict[int, list[int]] = {}
    for v in g.vertices:
        orbits.setdefault(find(v), []).append(v)
    return sorted(orbits.values())
