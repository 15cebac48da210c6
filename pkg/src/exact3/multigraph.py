"""Loopless undirected multigraphs and their structural queries.

A :class:`Multigraph` stores each unordered vertex pair once together with
its multiplicity.  Operations that must tell parallel copies apart (vertex
gluing, cycle expansion, rotation systems) address edge ends as
:class:`Dart` triples ``(tail, head, index)`` where ``index`` runs over
``0 .. multiplicity - 1`` and is shared by the two ends of one copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import ArgumentError, DisconnectedGraphError, DomainError

__all__ = [
    "Dart",
    "Multigraph",
    "Cycle",
    "BlockDecomposition",
    "blocks",
    "is_biconnected",
    "articulation_points",
    "chordless_cycles",
    "smooth_degree2",
]


class Dart(NamedTuple):
    """One end of one edge copy, seen from ``tail``."""

    tail: int
    head: int
    index: int

    def reverse(self) -> "Dart":
        return Dart(self.head, self.tail, self.index)

    def __str__(self) -> str:
        return f"{self.tail}~{self.head}#{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Dart":
        try:
            ends, index = text.strip().split("#")
            tail, head = ends.split("~")
            return cls(int(tail), int(head), int(index))
        except ValueError:
            raise ArgumentError(f"malformed dart {text!r}") from None


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Multigraph:
    """Immutable loopless multigraph on integer vertices.

    ``edges`` may be a mapping ``(u, v) -> multiplicity`` or an iterable of
    ``(u, v)`` pairs (multiplicity 1 each, repeats accumulate) or
    ``(u, v, r)`` triples.  Endpoints are added to the vertex set
    automatically.
    """

    __slots__ = ("_adj", "_hash", "_size")

    def __init__(self, vertices: Iterable[int] = (), edges=()):
        adj: dict[int, dict[int, int]] = {}
        for v in vertices:
            if not isinstance(v, int):
                raise ArgumentError(f"vertex ids must be integers, got {v!r}")
            adj.setdefault(v, {})
        items = edges.items() if isinstance(edges, Mapping) else edges
        for item in items:
            if isinstance(edges, Mapping):
                (u, v), r = item
            elif len(item) == 2:
                (u, v), r = item, 1
            else:
                u, v, r = item
            if u == v:
                raise ArgumentError(f"self-loop at vertex {u}")
            if r < 0:
                raise ArgumentError(f"negative multiplicity on ({u},{v})")
            if r == 0:
                continue
            for x in (u, v):
                if not isinstance(x, int):
                    raise ArgumentError(f"vertex ids must be integers, got {x!r}")
            adj.setdefault(u, {})
            adj.setdefault(v, {})
            adj[u][v] = adj[u].get(v, 0) + r
            adj[v][u] = adj[v].get(u, 0) + r
        self._init(adj)

    def _init(self, adj: dict[int, dict[int, int]]) -> None:
        self._adj = adj
        self._hash = None
        self._size = sum(sum(nb.values()) for nb in adj.values()) // 2

    @classmethod
    def _from_adj(cls, adj: dict[int, dict[int, int]]) -> "Multigraph":
        g = cls.__new__(cls)
        g._init(adj)
        return g

    @classmethod
    def from_matrix(cls, matrix) -> "Multigraph":
        """Build a graph on ``0..n-1`` from a square multiplicity matrix."""
        n = len(matrix)
        adj: dict[int, dict[int, int]] = {v: {} for v in range(n)}
        for u in range(n):
            row = matrix[u]
            for v in range(n):
                r = row[v]
                if r and u != v:
                    adj[u][v] = r
        return cls._from_adj(adj)

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def size(self) -> int:
        """Number of edges counted with multiplicity."""
        return self._size

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def edges(self) -> list[tuple[int, int, int]]:
        """Sorted ``(u, v, r)`` triples with ``u < v``."""
        out = []
        for u, nb in self._adj.items():
            for v, r in nb.items():
                if u < v:
                    out.append((u, v, r))
        out.sort()
        return out

    def multiplicity(self, u: int, v: int) -> int:
        return self._adj.get(u, {}).get(v, 0)

    def neighbors(self, v: int) -> Mapping[int, int]:
        """Read-only map ``neighbor -> multiplicity``."""
        try:
            return MappingProxyType(self._adj[v])
        except KeyError:
            raise ArgumentError(f"vertex {v} not in graph") from None

    def degree(self, v: int) -> int:
        try:
            return sum(self._adj[v].values())
        except KeyError:
            raise ArgumentError(f"vertex {v} not in graph") from None

    def degrees(self) -> dict[int, int]:
        return {v: sum(nb.values()) for v, nb in self._adj.items()}

    def darts(self, v: int) -> list[Dart]:
        """All darts leaving ``v``, sorted by head then copy index."""
        nb = self.neighbors(v)
        return [Dart(v, w, i) for w in sorted(nb) for i in range(nb[w])]

    def has_dart(self, d: Dart) -> bool:
        return 0 <= d.index < self.multiplicity(d.tail, d.head)

    def is_simple(self) -> bool:
        return all(r == 1 for nb in self._adj.values() for r in nb.values())

    def max_multiplicity(self) -> int:
        return max((r for nb in self._adj.values() for r in nb.values()), default=0)

    def fresh_vertex(self, offset: int = 0) -> int:
        """Smallest id above every existing id, plus ``offset``."""
        return (max(self._adj) + 1 if self._adj else 0) + offset

    def components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        comps = []
        for s in sorted(self._adj):
            if s in seen:
                continue
            stack = [s]
            seen.add(s)
            comp = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def require_connected(self) -> None:
        comps = self.components()
        if len(comps) > 1:
            raise DisconnectedGraphError(min(comps[0]), min(comps[1]))

    # -- derived graphs --------------------------------------------------

    def adjacency_copy(self) -> dict[int, dict[int, int]]:
        return {v: dict(nb) for v, nb in self._adj.items()}

    def subgraph(self, keep: Iterable[int]) -> "Multigraph":
        keep = set(keep)
        missing = keep - self._adj.keys()
        if missing:
            raise ArgumentError(f"vertices {sorted(missing)} not in graph")
        return Multigraph._from_adj(
            {v: {w: r for w, r in self._adj[v].items() if w in keep} for v in keep}
        )

    def without(self, drop: Iterable[int]) -> "Multigraph":
        drop = set(drop)
        return self.subgraph(v for v in self._adj if v not in drop)

    def relabel(self, mapping: Mapping[int, int]) -> "Multigraph":
        """Rename vertices; ids absent from ``mapping`` keep their name."""
        f = lambda v: mapping.get(v, v)  # noqa: E731
        adj = {f(v): {f(w): r for w, r in nb.items()} for v, nb in self._adj.items()}
        if len(adj) != len(self._adj):
            raise ArgumentError("relabeling is not injective")
        return Multigraph._from_adj(adj)

    def normalized(self) -> tuple["Multigraph", dict[int, int]]:
        """Relabel onto ``0..n-1`` preserving id order; returns graph and map."""
        mapping = {v: i for i, v in enumerate(sorted(self._adj))}
        return self.relabel(mapping), mapping

    def to_matrix(self) -> tuple[list[int], list[list[int]]]:
        """Sorted vertex labels and the multiplicity matrix in that order."""
        labels = sorted(self._adj)
        index = {v: i for i, v in enumerate(labels)}
        n = len(labels)
        mat = [[0] * n for _ in range(n)]
        for v, nb in self._adj.items():
            row = mat[index[v]]
            for w, r in nb.items():
                row[index[w]] = r
        return labels, mat

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._adj), tuple(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        es = ", ".join(
            f"({u},{v})" if r == 1 else f"({u},{v})^{r}" for u, v, r in self.edges()
        )
        return f"Multigraph(n={self.order}, edges=[{es}])"


@dataclass(frozen=True)
class Cycle:
    """A cycle stored in normalized rotation.

    The first vertex is the smallest; the second is the smaller of its two
    cycle neighbours.  A length-2 cycle stands for a double edge.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) < 2:
            raise ArgumentError("a cycle needs at least two vertices")
        if len(set(vs)) != len(vs):
            raise ArgumentError(f"cycle repeats a vertex: {vs}")
        object.__setattr__(self, "vertices", _normalize_rotation(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.vertices

    def pairs(self) -> list[tuple[int, int]]:
        """Consecutive vertex pairs; a 2-cycle yields its single pair once."""
        vs = self.vertices
        if len(vs) == 2:
            return [_key(*vs)]
        return [_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_cycle_of(self, g: Multigraph) -> bool:
        if not all(v in g for v in self.vertices):
            return False
        if len(self) == 2:
            return g.multiplicity(*self.vertices) >= 2
        return all(g.multiplicity(u, v) >= 1 for u, v in self.pairs())

    def is_chordless_in(self, g: Multigraph) -> bool:
        if not self.is_cycle_of(g):
            return False
        vs = self.vertices
        if len(vs) == 2:
            return True
        on = set(self.pairs())
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                r = g.multiplicity(u, v)
                if _key(u, v) in on:
                    if r != 1:
                        return False
                elif r:
                    return False
        return True

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.vertices)) + ")"


def _normalize_rotation(vs: tuple[int, ...]) -> tuple[int, ...]:
    i = vs.index(min(vs))
    rot = vs[i:] + vs[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


# ---------------------------------------------------------------------------
# blocks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices and the bipartite block-cut tree.

    ``block_cut_tree`` lists edges ``(block_index, articulation_vertex)``.
    """

    blocks: tuple[frozenset[int], ...]
    articulation_points: frozenset[int]
    block_cut_tree: tuple[tuple[int, int], ...]

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


def _tarjan_blocks(g: Multigraph) -> tuple[list[frozenset[int]], set[int]]:
    """Biconnected components of the underlying simple graph (iterative)."""
    adj = {v: sorted(g.neighbors(v)) for v in g.vertices}
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    comps: list[frozenset[int]] = []
    cuts: set[int] = set()
    counter = 0
    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        if not adj[root]:
            comps.append(frozenset([root]))
            continue
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(adj[root]))]
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(adj[w])))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                if p != root:
                    cuts.add(p)
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.add(a)
                    comp.add(b)
                    if (a, b) == (p, v):
                        break
                comps.append(frozenset(comp))
        if root_children > 1:
            cuts.add(root)
    return comps, cuts


def blocks(g: Multigraph) -> BlockDecomposition:
    """Blocks (maximal biconnected subgraphs) of a connected multigraph.

    Parallel edges do not matter for vertex biconnectivity, so the search
    runs on the underlying simple graph; a bridge is a 2-vertex block.

    Raises:
        DisconnectedGraphError: naming two mutually unreachable vertices.
    """
    if g.order == 0:
        raise ArgumentError("blocks of the empty graph are undefined")
    g.require_connected()
    comps, cuts = _tarjan_blocks(g)
    comps.sort(key=lambda b: (min(b), sorted(b)))
    tree = tuple(
        (i, a) for i, b in enumerate(comps) for a in sorted(b & cuts)
    )
    return BlockDecomposition(tuple(comps), frozenset(cuts), tree)


def articulation_points(g: Multigraph) -> frozenset[int]:
    return blocks(g).articulation_points


def is_biconnected(g: Multigraph) -> bool:
    """Connected with no articulation point (a single edge counts)."""
    if g.order == 0 or not g.is_connected():
        return False
    return not _tarjan_blocks(g)[1]


# ---------------------------------------------------------------------------
# chordless cycles
# ---------------------------------------------------------------------------


def chordless_cycles(
    g: Multigraph, through: int | None = None, avoiding: int | None = None
) -> Iterator[Cycle]:
    """Every chordless cycle of ``g``, shortest first.

    A pair of multiplicity >= 2 is reported once as a length-2 cycle.  In a
    longer cycle a doubled consecutive pair counts as a chord.  Ties within
    a length are broken by the normalized vertex tuple.
    """
    if through is not None and through == avoiding:
        raise ArgumentError("'through' and 'avoiding' name the same vertex")
    for v in (through, avoiding):
        if v is not None and v not in g:
            raise ArgumentError(f"vertex {v} not in graph")

    adj = {v: g.neighbors(v) for v in g.vertices}
    if avoiding is not None:
        allowed = [v for v in adj if v != avoiding]
    else:
        allowed = list(adj)
    found: list[tuple[int, ...]] = []

    for u, v, r in g.edges():
        if r >= 2 and avoiding not in (u, v):
            if through is None or through in (u, v):
                found.append((u, v))

    # induced-path extension from the smallest vertex of each cycle
    def extend(s: int, path: list[int], on_path: set[int]) -> None:
        x = path[-1]
        for y, r in adj[x].items():
            if y <= s or y in on_path or y == avoiding or r != 1:
                continue
            touches_start = False
            for z in path[:-1]:
                if y in adj[z]:
                    if z != s:
                        break
                    touches_start = True
            else:
                if touches_start:
                    if len(path) >= 2 and adj[y][s] == 1 and path[1] < y:
                        if through is None or through == y or through in on_path:
                            found.append(tuple(path) + (y,))
                    continue
                path.append(y)
                on_path.add(y)
                extend(s, path, on_path)
                path.pop()
                on_path.discard(y)

    for s in sorted(allowed):
        extend(s, [s], {s})

    cycles = sorted({_normalize_rotation(c) for c in found}, key=lambda c: (len(c), c))
    for c in cycles:
        yield Cycle(c)


# ---------------------------------------------------------------------------
# smoothing
# ---------------------------------------------------------------------------


def smooth_degree2(g: Multigraph) -> Multigraph:
    """Suppress degree-2 vertices until none can be suppressed.

    A degree-2 vertex with two distinct neighbours is replaced by an edge
    joining them.  One whose two edge ends go to the same neighbour ``w``
    would become a loop, so it is deleted together with its double edge,
    unless ``w`` has no other edges (the graph is then a bare double edge,
    which is kept as a 2-cycle).
    """
    adj = g.adjacency_copy()
    deg = {v: sum(nb.values()) for v, nb in adj.items()}
    changed = True
    while changed:
        changed = False
        for x in sorted(adj):
            if deg[x] != 2:
                continue
            nb = adj[x]
            if len(nb) == 2:
                a, b = nb
                for w in (a, b):
                    del adj[w][x]
                adj[a][b] = adj[a].get(b, 0) + 1
                adj[b][a] = adj[b].get(a, 0) + 1
            else:
                (w,) = nb
                if deg[w] == 2:
                    continue
                del adj[w][x]
                deg[w] -= 2
            del adj[x]
            del deg[x]
            changed = True
            break
    return Multigraph._from_adj(adj)


def require_vertex(g: Multigraph, v: int) -> None:
    if v not in g:
        raise ArgumentError(f"vertex {v} not in graph")


def require_order(g: Multigraph, n: int, what: str) -> None:
    if g.order < n:
        raise DomainError(f"{what} requires order >= {n}, got {g.order}")
