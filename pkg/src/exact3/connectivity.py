"""Local edge-connectivity, exactness verification and minimum cuts.

lambda(u, v) is computed as a max-flow where each vertex pair carries
capacity equal to its multiplicity.  All-pairs questions go through a
Gusfield equivalent flow tree (n - 1 flows); the contract is still the
all-pairs definition and the tests check it against direct enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ._backend import kernels
from .errors import ArgumentError, DomainError, InvariantViolation
from .multigraph import Multigraph

__all__ = [
    "EdgeCut",
    "ConnectivityReport",
    "local_connectivity",
    "connectivity_matrix",
    "is_exactly_k",
    "is_k_edge_connected",
    "exact_level",
    "minimum_cuts",
    "collapse_supernodes",
]


@dataclass(frozen=True)
class EdgeCut:
    """A bipartition ``side_a | side_b`` with its crossing edges.

    ``crossing`` holds ``(a, b, r)`` with ``a`` in side_a and ``b`` in side_b.
    """

    side_a: frozenset[int]
    side_b: frozenset[int]
    crossing: tuple[tuple[int, int, int], ...]

    @property
    def trivial(self) -> bool:
        return len(self.side_a) == 1 or len(self.side_b) == 1

    @property
    def size(self) -> int:
        return sum(r for _, _, r in self.crossing)

    @classmethod
    def of(cls, g: Multigraph, side_a) -> "EdgeCut":
        side_a = frozenset(side_a)
        side_b = frozenset(g.vertices) - side_a
        if not side_a or not side_b or not side_a <= set(g.vertices):
            raise ArgumentError("a cut needs two non-empty sides inside the graph")
        crossing = []
        for a in sorted(side_a):
            for b, r in sorted(g.neighbors(a).items()):
                if b in side_b:
                    crossing.append((a, b, r))
        return cls(side_a, side_b, tuple(crossing))


@dataclass(frozen=True)
class ConnectivityReport:
    """Outcome of an exactness check.

    ``witness`` is ``(u, v, lambda)`` for the first pair (lexicographic)
    whose local connectivity differs from ``k``; ``None`` when exact.
    """

    k: int
    exact: bool
    witness: Optional[tuple[int, int, int]] = None

    def __bool__(self) -> bool:
        return self.exact


def _capacity(g: Multigraph):
    labels, mat = g.to_matrix()
    return labels, [x for row in mat for x in row]


def local_connectivity(g: Multigraph, u: int, v: int) -> int:
    """Maximum number of pairwise edge-disjoint u-v paths."""
    if u == v:
        raise ArgumentError("local connectivity needs two distinct vertices")
    for x in (u, v):
        if x not in g:
            raise ArgumentError(f"vertex {x} not in graph")
    labels, flat = _capacity(g)
    index = {x: i for i, x in enumerate(labels)}
    value, _ = kernels.max_flow(len(labels), flat, index[u], index[v], -1)
    return value


def _tree_pairs(labels, parent, weight):
    """All-pairs lambda from an equivalent flow tree."""
    n = len(labels)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for s in range(1, n):
        adj[s].append((parent[s], weight[s]))
        adj[parent[s]].append((s, weight[s]))
    out: dict[tuple[int, int], int] = {}
    for src in range(n):
        best = {src: None}
        stack = [src]
        while stack:
            x = stack.pop()
            for y, w in adj[x]:
                if y not in best:
                    b = best[x]
                    best[y] = w if b is None else min(b, w)
                    stack.append(y)
        for dst in range(src + 1, n):
            out[(labels[src], labels[dst])] = best[dst]
    return out


def connectivity_matrix(g: Multigraph) -> dict[tuple[int, int], int]:
    """lambda(u, v) for every pair ``u < v``."""
    labels, flat = _capacity(g)
    parent, weight = kernels.flow_tree(len(labels), flat, -1)
    return _tree_pairs(labels, parent, weight)


def is_exactly_k(g: Multigraph, k: int) -> ConnectivityReport:
    """Check that every pair of distinct vertices has lambda exactly ``k``.

    Raises:
        DomainError: for graphs of order < 2, where exactness is undefined.
    """
    if k < 1:
        raise ArgumentError("k must be positive")
    if g.order < 2:
        raise DomainError("exactness is defined over pairs; order must be >= 2")
    labels, flat = _capacity(g)
    n = len(labels)
    _, weight = kernels.flow_tree(n, flat, k + 1)
    if all(weight[s] == k for s in range(1, n)):
        return ConnectivityReport(k, True, None)
    parent, weight = kernels.flow_tree(n, flat, -1)
    pairs = _tree_pairs(labels, parent, weight)
    for (u, v), lam in sorted(pairs.items()):
        if lam != k:
            return ConnectivityReport(k, False, (u, v, lam))
    raise InvariantViolation("capped and uncapped flow trees disagree")


def is_k_edge_connected(g: Multigraph, k: int) -> bool:
    """lambda(u, v) >= k for every pair (vacuous below order 2)."""
    if g.order < 2:
        return True
    labels, flat = _capacity(g)
    _, weight = kernels.flow_tree(len(labels), flat, k)
    return all(w >= k for w in weight[1:])


def exact_level(g: Multigraph) -> int | None:
    """The k for which ``g`` is exactly k-edge-connected, if any."""
    if g.order < 2:
        return None
    labels, flat = _capacity(g)
    _, weight = kernels.flow_tree(len(labels), flat, -1)
    ws = set(weight[1:])
    return ws.pop() if len(ws) == 1 else None


def minimum_cuts(g: Multigraph, nontrivial_only: bool = False) -> list[EdgeCut]:
    """Every minimum-cardinality edge cut (multiplicity counted).

    ``side_a`` always contains the smallest vertex; results are sorted by
    ``sorted(side_a)``.
    """
    if g.order < 2:
        raise DomainError("minimum cuts need order >= 2")
    g.require_connected()
    labels, flat = _capacity(g)
    _, masks = kernels.min_cut_masks(len(labels), flat)
    cuts = []
    for mask in masks:
        side = [labels[i] for i in range(len(labels)) if mask >> i & 1]
        cut = EdgeCut.of(g, side)
        if nontrivial_only and cut.trivial:
            continue
        cuts.append(cut)
    cuts.sort(key=lambda c: sorted(c.side_a))
    return cuts


def collapse_supernodes(g: Multigraph, k: int) -> Multigraph:
    """Merge every class of vertices joined by more than ``k`` paths.

    The classes are the connected components of the relation
    lambda(u, v) > k; each class becomes its smallest vertex, parallel
    edges add up and edges inside a class vanish.  The result is a single
    vertex or exactly k-edge-connected, which is checked before returning.

    Raises:
        DomainError: when ``g`` is not k-edge-connected.
    """
    if g.order == 0:
        raise ArgumentError("empty graph")
    g.require_connected()
    if g.order == 1:
        return g
    lam = connectivity_matrix(g)
    low = min(lam.values())
    if low < k:
        (u, v), val = min((p for p in lam.items() if p[1] < k), key=lambda p: p[0])
        raise DomainError(f"not {k}-edge-connected: lambda({u},{v}) = {val}")

    rep = {v: v for v in g.vertices}

    def find(x):
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for (u, v), val in lam.items():
        if val > k:
            a, b = find(u), find(v)
            if a != b:
                rep[max(a, b)] = min(a, b)
    classes: dict[int, list[int]] = {}
    for v in g.vertices:
        classes.setdefault(find(v), []).append(v)
    for members in classes.values():
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if lam[(u, v) if u < v else (v, u)] <= k:
                    raise InvariantViolation(
                        f"supernode relation not transitive at ({u},{v})"
                    )

    edges: dict[tuple[int, int], int] = {}
    for u, v, r in g.edges():
        a, b = find(u), find(v)
        if a != b:
            key = (a, b) if a < b else (b, a)
            edges[key] = edges.get(key, 0) + r
    out = Multigraph(classes.keys(), edges)
    if out.order > 1 and not is_exactly_k(out, k).exact:
        raise InvariantViolation("collapsed graph is not exactly k-edge-connected")
    return out
