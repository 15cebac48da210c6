"""Named graph families used in examples and tests."""

from __future__ import annotations

from .errors import ArgumentError
from .multigraph import Multigraph

__all__ = ["complete", "cycle", "complete_bipartite", "harary", "petersen", "prism", "thick_path"]


def complete(n: int) -> Multigraph:
    return Multigraph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise ArgumentError("a simple cycle needs n >= 3")
    return Multigraph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(range(a + b), [(i, a + j) for i in range(a) for j in range(b)])


def harary(k: int, n: int) -> Multigraph:
    """Harary graph H_{k,n}: k-connected with ceil(kn/2) edges (2 <= k < n)."""
    if not 2 <= k < n:
        raise ArgumentError("Harary graphs need 2 <= k < n")
    r = k // 2
    edges = set()
    for i in range(n):
        for s in range(1, r + 1):
            j = (i + s) % n
            edges.add((min(i, j), max(i, j)))
    if k % 2:
        if n % 2 == 0:
            chords = [(i, i + n // 2) for i in range(n // 2)]
        else:
            chords = [(i, (i + (n + 1) // 2) % n) for i in range((n - 1) // 2 + 1)]
        for i, j in chords:
            edges.add((min(i, j), max(i, j)))
    return Multigraph(range(n), sorted(edges))


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(range(10), outer + spokes + inner)


def prism(n: int) -> Multigraph:
    """C_n x K_2."""
    if n < 3:
        raise ArgumentError("prism needs n >= 3")
    top = [(i, (i + 1) % n) for i in range(n)]
    bottom = [(n + i, n + (i + 1) % n) for i in range(n)]
    return Multigraph(range(2 * n), top + bottom + [(i, n + i) for i in range(n)])


def thick_path(length: int) -> Multigraph:
    """``length`` dumbbells glued end to end (a 3-thick path)."""
    if length < 1:
        raise ArgumentError("length must be >= 1")
    return Multigraph(range(length + 1), {(i, i + 1): 3 for i in range(length)})
