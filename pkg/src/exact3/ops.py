"""Operations that preserve exact edge-connectivity.

Gluing and splitting are generic in k.  Cycle expansion and contraction
are the k = 3 operations of the synthesis.  Every operation returns a new
graph; kept vertices keep their ids and created vertices get fresh ids
above the current maximum.  With debug assertions on (see
:mod:`exact3._debug`) each operation re-verifies its preservation
guarantee and raises :class:`InvariantViolation` if it fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._debug import debug_enabled
from .connectivity import EdgeCut, exact_level, is_exactly_k, minimum_cuts
from .errors import ArgumentError, DomainError, InvariantViolation
from .multigraph import (
    Cycle,
    Dart,
    Multigraph,
    blocks,
    is_biconnected,
    require_vertex,
    smooth_degree2,
)
from .partition import c_partition

__all__ = [
    "CycleExpansionSpec",
    "VertexGluingSpec",
    "dumbbell",
    "block_glue",
    "glue_relabeling",
    "k_bridge_add",
    "vertex_glue",
    "natural_pairing",
    "vertex_split",
    "split_pairing",
    "cycle_expand",
    "block_respecting_cycle_expand",
    "expansion_cycle",
    "cycle_contract",
    "contraction_expansion",
    "is_quasi_regular",
    "high_degree_vertex",
]


def dumbbell(k: int = 3) -> Multigraph:
    return Multigraph([0, 1], [(0, 1, k)])


def is_quasi_regular(g: Multigraph, k: int = 3) -> bool:
    return sum(1 for d in g.degrees().values() if d != k) <= 1


def high_degree_vertex(g: Multigraph, k: int = 3) -> int | None:
    """The unique vertex of degree != k in a quasi k-regular graph, if any."""
    odd = [v for v, d in sorted(g.degrees().items()) if d != k]
    return odd[0] if len(odd) == 1 else None


def _assert_exact(g: Multigraph, k: int, what: str) -> None:
    report = is_exactly_k(g, k)
    if not report.exact:
        raise InvariantViolation(f"{what}: result not exactly {k}: {report.witness}")


# ---------------------------------------------------------------------------
# block gluing
# ---------------------------------------------------------------------------


def glue_relabeling(g1: Multigraph, g2: Multigraph, u2: int, onto: int | None) -> dict[int, int]:
    """Fresh ids for ``g2`` next to ``g1``.

    ``g2``'s vertices other than ``u2`` go, in id order, to
    ``max(g1) + 1, max(g1) + 2, ...``; ``u2`` maps to ``onto`` when given.
    """
    base = g1.fresh_vertex()
    mapping = {}
    i = 0
    for v in g2.vertices:
        if v == u2 and onto is not None:
            mapping[v] = onto
        elif v != u2:
            mapping[v] = base + i
            i += 1
    return mapping


def block_glue(g1: Multigraph, u1: int, g2: Multigraph, u2: int) -> Multigraph:
    """Identify ``u1`` and ``u2`` into one vertex (keeping the id ``u1``).

    The glued vertex is an articulation point whenever both inputs have at
    least two vertices.
    """
    require_vertex(g1, u1)
    require_vertex(g2, u2)
    mapping = glue_relabeling(g1, g2, u2, u1)
    adj = g1.adjacency_copy()
    for u, v, r in g2.edges():
        a, b = mapping[u], mapping[v]
        adj.setdefault(a, {})[b] = r
        adj.setdefault(b, {})[a] = r
    for v in g2.vertices:
        adj.setdefault(mapping[v], {})
    out = Multigraph._from_adj(adj)
    if debug_enabled():
        k1, k2 = exact_level(g1), exact_level(g2)
        if k1 is not None and k1 == k2:
            _assert_exact(out, k1, "block_glue")
    return out


def k_bridge_add(g: Multigraph, v: int, k: int) -> Multigraph:
    """Attach a fresh vertex to ``v`` by ``k`` parallel edges."""
    require_vertex(g, v)
    if k < 1:
        raise ArgumentError("k must be positive")
    adj = g.adjacency_copy()
    u = g.fresh_vertex()
    adj[u] = {v: k}
    adj[v][u] = k
    out = Multigraph._from_adj(adj)
    if debug_enabled() and g.order >= 2 and exact_level(g) == k:
        _assert_exact(out, k, "k_bridge_add")
    return out


# ---------------------------------------------------------------------------
# vertex gluing and splitting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VertexGluingSpec:
    """Which dart of ``u1`` joins which dart of ``u2``."""

    u1: int
    u2: int
    pairing: tuple[tuple[Dart, Dart], ...]


def natural_pairing(g1: Multigraph, u1: int, g2: Multigraph, u2: int) -> VertexGluingSpec:
    """Pair the darts of ``u1`` and ``u2`` in sorted order."""
    return VertexGluingSpec(u1, u2, tuple(zip(g1.darts(u1), g2.darts(u2))))


def vertex_glue(
    g1: Multigraph, g2: Multigraph, spec: VertexGluingSpec, k: int | None = None
) -> Multigraph:
    """Delete ``u1`` and ``u2`` and join their dangling edge ends pairwise.

    ``g2`` is relabeled with :func:`glue_relabeling` (``u2`` disappears).

    Raises:
        DomainError: the two vertices do not both have degree ``k``
            (``k`` defaults to the degree of ``u1``).
    """
    u1, u2 = spec.u1, spec.u2
    require_vertex(g1, u1)
    require_vertex(g2, u2)
    d1, d2 = g1.degree(u1), g2.degree(u2)
    if k is None:
        k = d1
    if d1 != k or d2 != k:
        raise DomainError(f"vertex gluing needs degree {k} at both ends, got {d1} and {d2}")
    left = [a for a, _ in spec.pairing]
    right = [b for _, b in spec.pairing]
    if sorted(left) != g1.darts(u1) or sorted(right) != g2.darts(u2):
        raise ArgumentError("pairing is not a bijection between the two dart sets")
    mapping = glue_relabeling(g1, g2, u2, None)
    adj = g1.adjacency_copy()
    for w in adj.pop(u1):
        del adj[w][u1]
    for u, v, r in g2.edges():
        if u2 in (u, v):
            continue
        a, b = mapping[u], mapping[v]
        adj.setdefault(a, {})[b] = r
        adj.setdefault(b, {})[a] = r
    for v in g2.vertices:
        if v != u2:
            adj.setdefault(mapping[v], {})
    for a, b in spec.pairing:
        x, y = a.head, mapping[b.head]
        adj[x][y] = adj[x].get(y, 0) + 1
        adj[y][x] = adj[y].get(x, 0) + 1
    out = Multigraph._from_adj(adj)
    if debug_enabled():
        l1, l2 = exact_level(g1), exact_level(g2)
        if l1 == l2 == k:
            _assert_exact(out, k, "vertex_glue")
    return out


def _check_split_cut(g: Multigraph, cut: EdgeCut) -> EdgeCut:
    fresh = EdgeCut.of(g, cut.side_a)
    if fresh.side_b != cut.side_b or fresh.crossing != cut.crossing:
        raise ArgumentError("cut does not describe a bipartition of this graph")
    if fresh.trivial:
        raise DomainError("vertex splitting needs a non-trivial cut")
    cuts = minimum_cuts(g)
    if fresh.size != cuts[0].size:
        raise DomainError(
            f"cut of size {fresh.size} is not minimum (minimum is {cuts[0].size})"
        )
    return fresh


def vertex_split(g: Multigraph, cut: EdgeCut) -> tuple[Multigraph, Multigraph]:
    """Cap both sides of a non-trivial minimum cut with a new vertex.

    ``G1`` is side_a plus ``x1 = max(g) + 1``; ``G2`` is side_b plus
    ``x2 = max(g) + 2``; each new vertex takes over the crossing edges of
    its side with their multiplicities.
    """
    cut = _check_split_cut(g, cut)
    x1, x2 = g.fresh_vertex(), g.fresh_vertex(1)
    g1 = g.subgraph(cut.side_a).adjacency_copy()
    g2 = g.subgraph(cut.side_b).adjacency_copy()
    g1[x1] = {}
    g2[x2] = {}
    for a, b, r in cut.crossing:
        g1[x1][a] = g1[x1].get(a, 0) + r
        g1[a][x1] = g1[a].get(x1, 0) + r
        g2[x2][b] = g2[x2].get(b, 0) + r
        g2[b][x2] = g2[b].get(x2, 0) + r
    out1, out2 = Multigraph._from_adj(g1), Multigraph._from_adj(g2)
    if debug_enabled():
        k = exact_level(g)
        if k is not None:
            _assert_exact(out1, k, "vertex_split")
            _assert_exact(out2, k, "vertex_split")
    return out1, out2


def split_pairing(g: Multigraph, cut: EdgeCut) -> VertexGluingSpec:
    """The gluing that undoes :func:`vertex_split` for this cut."""
    x1, x2 = g.fresh_vertex(), g.fresh_vertex(1)
    seen1: dict[int, int] = {}
    seen2: dict[int, int] = {}
    pairs = []
    for a, b, r in cut.crossing:
        for _ in range(r):
            i, j = seen1.get(a, 0), seen2.get(b, 0)
            seen1[a], seen2[b] = i + 1, j + 1
            pairs.append((Dart(x1, a, i), Dart(x2, b, j)))
    return VertexGluingSpec(x1, x2, tuple(pairs))


# ---------------------------------------------------------------------------
# cycle expansion / contraction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleExpansionSpec:
    """Replace ``target`` by a cycle of ``cycle_size`` new vertices.

    ``assignment`` orders the target's darts: cycle vertex ``i`` (1-based,
    ``i < cycle_size``) receives dart ``i`` and the last cycle vertex
    receives all remaining darts.  ``attach`` is only used by
    block-respecting expansion at an articulation point: it sends darts of
    other blocks to a cycle position (default: the last one).
    """

    target: int
    cycle_size: int
    assignment: tuple[Dart, ...]
    attach: tuple[tuple[Dart, int], ...] = field(default=())

    def groups(self) -> list[list[Dart]]:
        d = self.cycle_size
        out = [[a] for a in self.assignment[: d - 1]]
        out.append(list(self.assignment[d - 1:]))
        for dart, pos in self.attach:
            out[pos - 1].append(dart)
        return out


def _validate_assignment(g: Multigraph, spec: CycleExpansionSpec, darts: list[Dart]) -> None:
    require_vertex(g, spec.target)
    if sorted(spec.assignment) != darts:
        raise ArgumentError(
            f"assignment must be a permutation of the darts at {spec.target}"
        )
    if not 2 <= spec.cycle_size <= len(darts):
        raise ArgumentError(
            f"cycle size {spec.cycle_size} outside [2, {len(darts)}]"
        )


def expansion_cycle(g: Multigraph, spec: CycleExpansionSpec) -> Cycle:
    """The cycle that expanding ``g`` by ``spec`` creates (new vertex ids)."""
    base = g.fresh_vertex()
    return Cycle(tuple(range(base, base + spec.cycle_size)))


def _expand_raw(g: Multigraph, target: int, groups: list[list[Dart]]) -> Multigraph:
    adj = g.adjacency_copy()
    for w in adj.pop(target):
        del adj[w][target]
    base = g.fresh_vertex()
    d = len(groups)
    ids = [base + i for i in range(d)]
    for x in ids:
        adj[x] = {}
    if d == 2:
        adj[ids[0]][ids[1]] = adj[ids[1]][ids[0]] = 2
    else:
        for i in range(d):
            a, b = ids[i], ids[(i + 1) % d]
            adj[a][b] = adj[b][a] = 1
    for x, group in zip(ids, groups):
        for dart in group:
            w = dart.head
            adj[x][w] = adj[x].get(w, 0) + 1
            adj[w][x] = adj[w].get(x, 0) + 1
    return Multigraph._from_adj(adj)


def cycle_expand(g: Multigraph, spec: CycleExpansionSpec) -> Multigraph:
    """Replace a vertex of a biconnected graph by a cycle.

    Order grows by ``cycle_size - 1`` and size by ``cycle_size``.  The new
    cycle vertices are ``max(g) + 1 .. max(g) + cycle_size`` in cycle order.

    Raises:
        ArgumentError: unknown target or malformed assignment.
        DomainError: ``g`` is not biconnected.
    """
    require_vertex(g, spec.target)
    _validate_assignment(g, spec, g.darts(spec.target))
    if spec.attach:
        raise ArgumentError("attach positions only apply to block-respecting expansion")
    if not is_biconnected(g):
        raise DomainError("cycle expansion needs a biconnected graph")
    out = _expand_raw(g, spec.target, spec.groups())
    if debug_enabled() and is_exactly_k(g, 3).exact:
        _assert_exact(out, 3, "cycle_expand")
        if not is_biconnected(out):
            raise InvariantViolation("cycle_expand: result not biconnected")
    return out


def block_respecting_cycle_expand(g: Multigraph, spec: CycleExpansionSpec) -> Multigraph:
    """Cycle expansion confined to one block.

    Equivalent to splitting ``g`` into blocks, expanding the target inside
    the block that holds every assigned dart, and gluing the other blocks
    back; blocks that met the target reattach at the cycle position given
    by ``spec.attach`` (default: the last cycle vertex).

    Raises:
        DomainError: the assigned darts lie in more than one block, or one
            foreign block is sent to two different positions.
    """
    require_vertex(g, spec.target)
    u = spec.target
    bd = blocks(g)
    if u not in bd.articulation_points:
        _validate_assignment(g, spec, g.darts(u))
        if spec.attach:
            raise ArgumentError("attach positions given for a non-articulation vertex")
        if bd.blocks and len(bd.blocks) == 1:
            return cycle_expand(g, spec)
        out = _expand_raw(g, u, spec.groups())
    else:
        block_of = {}
        for i in bd.blocks_at(u):
            for w in bd.blocks[i]:
                if w != u:
                    block_of[w] = i
        used = {block_of[d.head] for d in spec.assignment if d.head in block_of}
        if len(used) != 1 or any(d.head not in block_of for d in spec.assignment):
            raise DomainError("assigned darts span more than one block")
        (home,) = used
        inside = [d for d in g.darts(u) if block_of[d.head] == home]
        _validate_assignment(g, spec, inside)
        foreign = [d for d in g.darts(u) if block_of[d.head] != home]
        pos_of = {d: spec.cycle_size for d in foreign}
        for dart, pos in spec.attach:
            if dart not in pos_of:
                raise ArgumentError(f"attach names {dart}, which is not a foreign dart")
            if not 1 <= pos <= spec.cycle_size:
                raise ArgumentError(f"attach position {pos} outside the cycle")
            pos_of[dart] = pos
        per_block: dict[int, set[int]] = {}
        for dart, pos in pos_of.items():
            per_block.setdefault(block_of[dart.head], set()).add(pos)
        if any(len(p) > 1 for p in per_block.values()):
            raise DomainError("a foreign block would be split across cycle vertices")
        groups = [[a] for a in spec.assignment[: spec.cycle_size - 1]]
        groups.append(list(spec.assignment[spec.cycle_size - 1:]))
        for dart, pos in sorted(pos_of.items()):
            groups[pos - 1].append(dart)
        out = _expand_raw(g, u, groups)
    if debug_enabled() and g.order >= 2 and is_exactly_k(g, 3).exact:
        _assert_exact(out, 3, "block_respecting_cycle_expand")
    return out


def cycle_contract(g: Multigraph, c: Cycle) -> Multigraph:
    """Collapse a chordless cycle into one fresh vertex ``max(g) + 1``.

    Edges between cycle vertices disappear; every other edge at a cycle
    vertex moves to the new vertex.

    Raises:
        ArgumentError: ``c`` is not a cycle of ``g``.
        DomainError: ``c`` has a chord.
    """
    if not c.is_cycle_of(g):
        raise ArgumentError(f"{c} is not a cycle of the graph")
    if not c.is_chordless_in(g):
        raise DomainError(f"{c} has a chord")
    on = set(c.vertices)
    u = g.fresh_vertex()
    adj = g.adjacency_copy()
    new: dict[int, int] = {}
    for x in c.vertices:
        for w, r in adj.pop(x).items():
            if w in on:
                continue
            del adj[w][x]
            new[w] = new.get(w, 0) + r
    adj[u] = new
    for w, r in new.items():
        adj[w][u] = r
    out = Multigraph._from_adj(adj)
    if debug_enabled():
        h = high_degree_vertex(g)
        if (
            is_quasi_regular(g)
            and (h is None or h in on)
            and is_biconnected(g)
            and is_exactly_k(g, 3).exact
        ):
            if out.order >= 2:
                _assert_exact(out, 3, "cycle_contract")
            if not is_quasi_regular(out):
                raise InvariantViolation("cycle_contract: result not quasi 3-regular")
    return out


def contraction_expansion(g: Multigraph, c: Cycle, block: frozenset[int]) -> Multigraph:
    """Keep ``c`` plus one component of its C-partition, then smooth.

    Raises:
        DomainError: ``block`` is not a component of the C-partition.
    """
    part = c_partition(g, c)
    block = frozenset(block)
    if block not in part.components:
        raise DomainError("block is not a component of the cycle's C-partition")
    if not c.is_chordless_in(g):
        raise DomainError(f"{c} has a chord")
    out = smooth_degree2(g.subgraph(block | set(c.vertices)))
    if debug_enabled() and is_exactly_k(g, 3).exact:
        _assert_exact(out, 3, "contraction_expansion")
        degs = g.degrees()
        if all(d == 3 for d in degs.values()) and not all(
            d == 3 for d in out.degrees().values()
        ):
            raise InvariantViolation("contraction_expansion: 3-regularity lost")
        h = high_degree_vertex(g)
        if h is not None and h in c and h in out:
            if not is_quasi_regular(out):
                raise InvariantViolation("contraction_expansion: quasi-regularity lost")
    return out
