"""Reduce exactly 3-edge-connected graphs to replayable synthesis scripts.

A script starts from dumbbells and applies block gluings and cycle
expansions.  :func:`decompose` runs the synthesis backwards: split at
articulation points, otherwise contract a collapsible cycle, and record
the inverse operation.  :func:`replay` rebuilds the graph.

Script text format, one record per line (``#`` starts a comment)::

    DUMBBELL <id>
    GLUE <ga> <ua> <gb> <ub> <result-id>
    EXPAND <g> <u> <d'> <dart>,<dart>,...  [<dart>@<pos>,...]

Darts are written ``tail~head#copy``.  The optional last EXPAND field
places darts of other blocks on a cycle position (block-respecting
expansion at an articulation point).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ._debug import debug_enabled
from .canon import canonical_code
from .connectivity import is_exactly_k
from .errors import (
    ArgumentError,
    DomainError,
    FormatError,
    InvariantViolation,
    NotExactError,
)
from .multigraph import (
    Cycle,
    Dart,
    Multigraph,
    blocks,
    chordless_cycles,
    is_biconnected,
    require_vertex,
)
from .ops import (
    CycleExpansionSpec,
    block_glue,
    block_respecting_cycle_expand,
    cycle_contract,
    cycle_expand,
    dumbbell,
    glue_relabeling,
)
from .partition import CPartition, c_partition

__all__ = [
    "CPartition",
    "c_partition",
    "ColoredCycle",
    "color_cycle",
    "is_collapsible",
    "find_collapsible_cycle",
    "Dumbbell",
    "BlockGlue",
    "CycleExpand",
    "SynthesisScript",
    "decompose",
    "replay",
    "thick_tree_factor",
    "counting_identity",
]


# ---------------------------------------------------------------------------
# collapsible cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColoredCycle:
    """A cycle whose vertices are marked red when adjacent to ``block``."""

    cycle: Cycle
    block: frozenset[int]
    red: frozenset[int]

    def bicolored_edges(self) -> int:
        vs = self.cycle.vertices
        if len(vs) == 2:
            return 2 * ((vs[0] in self.red) != (vs[1] in self.red))
        return sum(
            (vs[i] in self.red) != (vs[(i + 1) % len(vs)] in self.red)
            for i in range(len(vs))
        )


def color_cycle(g: Multigraph, c: Cycle, block) -> ColoredCycle:
    block = frozenset(block)
    red = frozenset(x for x in c.vertices if any(w in block for w in g.neighbors(x)))
    return ColoredCycle(c, block, red)


def _require_exact_biconnected(g: Multigraph) -> None:
    if g.order < 2:
        raise DomainError("graph must have order >= 2")
    report = is_exactly_k(g, 3)
    if not report.exact:
        raise NotExactError(3, *report.witness)
    if not is_biconnected(g):
        raise DomainError("graph must be biconnected")


def _collapsible(g: Multigraph, c: Cycle, degs: dict[int, int]) -> bool:
    if not c.is_chordless_in(g):
        return False
    if sum(1 for x in c.vertices if degs[x] != 3) > 1:
        return False
    if c_partition(g, c).size > 1:
        return False
    contracted = cycle_contract(g, c)
    return contracted.order >= 2 and is_exactly_k(contracted, 3).exact


def is_collapsible(g: Multigraph, c: Cycle) -> bool:
    """Chordless, quasi 3-regular, non-articulation, and exactness survives.

    The last condition is checked by contracting and verifying.

    Raises:
        DomainError: ``g`` is not biconnected and exactly 3-edge-connected.
    """
    _require_exact_biconnected(g)
    if not c.is_cycle_of(g):
        raise ArgumentError(f"{c} is not a cycle of the graph")
    return _collapsible(g, c, g.degrees())


def _find_collapsible(g: Multigraph, avoid: int) -> Cycle:
    degs = g.degrees()
    for c in chordless_cycles(g, avoiding=avoid):
        if _collapsible(g, c, degs):
            return c
    raise InvariantViolation(
        f"no collapsible cycle avoiding {avoid}; the input violates the "
        "existence guarantee or the search is broken"
    )


def find_collapsible_cycle(g: Multigraph, avoid: int) -> Cycle:
    """Shortest collapsible cycle not through ``avoid`` (a degree-3 vertex).

    Candidates are tried shortest first; existence is guaranteed for
    biconnected exactly 3-edge-connected graphs of order >= 3, so running
    out of candidates raises :class:`InvariantViolation`.
    """
    _require_exact_biconnected(g)
    require_vertex(g, avoid)
    if g.order < 3:
        raise DomainError("collapsible cycles need order >= 3")
    if g.degree(avoid) != 3:
        raise DomainError(f"vertex {avoid} has degree {g.degree(avoid)}, not 3")
    return _find_collapsible(g, avoid)


# ---------------------------------------------------------------------------
# scripts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Dumbbell:
    gid: int

    def to_text(self) -> str:
        return f"DUMBBELL {self.gid}"


@dataclass(frozen=True)
class BlockGlue:
    ga: int
    ua: int
    gb: int
    ub: int
    result: int

    def to_text(self) -> str:
        return f"GLUE {self.ga} {self.ua} {self.gb} {self.ub} {self.result}"


@dataclass(frozen=True)
class CycleExpand:
    gid: int
    target: int
    cycle_size: int
    assignment: tuple[Dart, ...]
    attach: tuple[tuple[Dart, int], ...] = field(default=())

    @property
    def spec(self) -> CycleExpansionSpec:
        return CycleExpansionSpec(self.target, self.cycle_size, self.assignment, self.attach)

    def to_text(self) -> str:
        text = (
            f"EXPAND {self.gid} {self.target} {self.cycle_size} "
            + ",".join(map(str, self.assignment))
        )
        if self.attach:
            text += " " + ",".join(f"{d}@{p}" for d, p in self.attach)
        return text


Op = Union[Dumbbell, BlockGlue, CycleExpand]


@dataclass(frozen=True)
class SynthesisScript:
    ops: tuple[Op, ...]
    provenance: bytes | None = None

    @property
    def expansions(self) -> int:
        return sum(isinstance(op, CycleExpand) for op in self.ops)

    @property
    def gluings(self) -> int:
        return sum(isinstance(op, BlockGlue) for op in self.ops)

    @property
    def dumbbells(self) -> int:
        return sum(isinstance(op, Dumbbell) for op in self.ops)

    def to_text(self, provenance: bool = True) -> str:
        lines = []
        if provenance and self.provenance is not None:
            lines.append(f"# provenance {self.provenance.hex()}")
        lines += [op.to_text() for op in self.ops]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SynthesisScript":
        ops: list[Op] = []
        provenance = None
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) == 2 and parts[0] == "provenance":
                    try:
                        provenance = bytes.fromhex(parts[1])
                    except ValueError:
                        raise FormatError("bad provenance hex", lineno) from None
                continue
            ops.append(_parse_op(line, lineno))
        return cls(tuple(ops), provenance)


def _parse_op(line: str, lineno: int) -> Op:
    parts = line.split()
    try:
        if parts[0] == "DUMBBELL" and len(parts) == 2:
            return Dumbbell(int(parts[1]))
        if parts[0] == "GLUE" and len(parts) == 6:
            return BlockGlue(*map(int, parts[1:]))
        if parts[0] == "EXPAND" and len(parts) in (5, 6):
            darts = tuple(Dart.parse(t) for t in parts[4].split(","))
            attach: tuple[tuple[Dart, int], ...] = ()
            if len(parts) == 6:
                items = []
                for t in parts[5].split(","):
                    d, pos = t.split("@")
                    items.append((Dart.parse(d), int(pos)))
                attach = tuple(items)
            return CycleExpand(int(parts[1]), int(parts[2]), int(parts[3]), darts, attach)
    except (ValueError, ArgumentError) as exc:
        raise FormatError(f"malformed record {line!r}: {exc}", lineno) from None
    raise FormatError(f"unknown or malformed record {line!r}", lineno)


def replay(script: SynthesisScript) -> Multigraph:
    """Rebuild the graph a script describes.

    Exactly one graph must remain live at the end; that graph is returned.

    Raises:
        FormatError: dangling or reused graph ids, or an EXPAND record whose
            spec is invalid for the current state (``line`` holds the
            1-based record index).
    """
    live: dict[int, Multigraph] = {}
    for i, op in enumerate(script.ops, 1):
        if isinstance(op, Dumbbell):
            if op.gid in live:
                raise FormatError(f"graph id {op.gid} already in use", i)
            live[op.gid] = dumbbell()
        elif isinstance(op, BlockGlue):
            if op.ga == op.gb or op.ga not in live or op.gb not in live:
                raise FormatError("GLUE references a missing graph", i)
            ga, gb = live.pop(op.ga), live.pop(op.gb)
            if op.result in live:
                raise FormatError(f"graph id {op.result} already in use", i)
            try:
                live[op.result] = block_glue(ga, op.ua, gb, op.ub)
            except ArgumentError as exc:
                raise FormatError(str(exc), i) from None
        elif isinstance(op, CycleExpand):
            if op.gid not in live:
                raise FormatError(f"EXPAND references missing graph {op.gid}", i)
            g = live[op.gid]
            try:
                if op.attach or not is_biconnected(g):
                    live[op.gid] = block_respecting_cycle_expand(g, op.spec)
                else:
                    live[op.gid] = cycle_expand(g, op.spec)
            except (ArgumentError, DomainError) as exc:
                raise FormatError(f"invalid expansion: {exc}", i) from None
        else:  # pragma: no cover - guarded by the Op union
            raise FormatError(f"unknown op {op!r}", i)
    if len(live) != 1:
        raise FormatError(f"script leaves {len(live)} graphs instead of one")
    (g,) = live.values()
    if debug_enabled() and not is_exactly_k(g, 3).exact:
        raise InvariantViolation("replayed graph is not exactly 3-edge-connected")
    return g


# ---------------------------------------------------------------------------
# decomposition
# ---------------------------------------------------------------------------


class _Recorder:
    def __init__(self):
        self.ops: list[Op] = []
        self._gid = 0

    def gid(self) -> int:
        self._gid += 1
        return self._gid - 1


def _expansion_record(
    H: Multigraph,
    phi: dict[int, int],
    c: int,
    ring: list[int],
    inner: list[list[int]],
    outer: list[list[int]],
):
    """Spec on ``H`` that re-creates ``ring`` where ``c`` was contracted.

    ``inner[j]`` are the (source-graph) neighbours of ring vertex j inside
    its block, ``outer[j]`` neighbours in other blocks.  Returns the spec
    and the updated isomorphism ``H' -> source``.
    """
    inv = {x: h for h, x in phi.items()}
    t = inv[c]
    used: dict[int, int] = {}

    def dart_to(w: int) -> Dart:
        y = inv[w]
        i = used.get(y, 0)
        used[y] = i + 1
        return Dart(t, y, i)

    assignment = []
    for j, ws in enumerate(inner):
        if j < len(ring) - 1 and len(ws) != 1:
            raise InvariantViolation("ring vertex with more than one outside edge")
        assignment.extend(dart_to(w) for w in ws)
    attach = []
    for j, ws in enumerate(outer):
        attach.extend((dart_to(w), j + 1) for w in ws)
    spec = CycleExpansionSpec(t, len(ring), tuple(assignment), tuple(attach))
    base = H.fresh_vertex()
    phi2 = {h: x for h, x in phi.items() if h != t}
    for j, x in enumerate(ring):
        phi2[base + j] = x
    return spec, phi2


def _ring_order(g: Multigraph, c: Cycle, degs: dict[int, int]) -> list[int]:
    ring = list(c.vertices)
    odd = [i for i, x in enumerate(ring) if degs[x] != 3]
    last = odd[0] if odd else len(ring) - 1
    return ring[last + 1:] + ring[: last + 1]


def _outside(g: Multigraph, x: int, exclude: set[int]) -> list[int]:
    out = []
    for w, r in sorted(g.neighbors(x).items()):
        if w not in exclude:
            out.extend([w] * r)
    return out


def _build(g: Multigraph, rec: _Recorder):
    """Returns ``(gid, H, phi)`` with ``phi`` an isomorphism H -> g."""
    if g.order == 2:
        gid = rec.gid()
        rec.ops.append(Dumbbell(gid))
        a, b = g.vertices
        return gid, dumbbell(), {0: a, 1: b}
    bd = blocks(g)
    if len(bd.blocks) > 1:
        built = [_build(g.subgraph(b), rec) for b in bd.blocks]
        cur, H, phi = built[0]
        placed = set(bd.blocks[0])
        done = {0}
        while len(done) < len(bd.blocks):
            for j, b in enumerate(bd.blocks):
                if j in done:
                    continue
                shared = b & placed
                if not shared:
                    continue
                (a,) = shared
                gid_j, H_j, phi_j = built[j]
                ua = next(h for h, x in phi.items() if x == a)
                ub = next(h for h, x in phi_j.items() if x == a)
                mapping = glue_relabeling(H, H_j, ub, ua)
                H = block_glue(H, ua, H_j, ub)
                new = rec.gid()
                rec.ops.append(BlockGlue(cur, ua, gid_j, ub, new))
                for h, x in phi_j.items():
                    phi[mapping[h]] = x
                cur = new
                placed |= b
                done.add(j)
        return cur, H, phi
    degs = g.degrees()
    avoid = min(v for v, d in degs.items() if d == 3)
    c = _find_collapsible(g, avoid)
    contracted = cycle_contract(g, c)
    if not is_biconnected(contracted):
        raise InvariantViolation(f"contracting {c} created an articulation point")
    gid, H, phi = _build(contracted, rec)
    ring = _ring_order(g, c, degs)
    on = set(ring)
    inner = [_outside(g, x, on) for x in ring]
    spec, phi2 = _expansion_record(H, phi, g.fresh_vertex(), ring, inner, [[]] * len(ring))
    H2 = cycle_expand(H, spec)
    rec.ops.append(CycleExpand(gid, spec.target, spec.cycle_size, spec.assignment))
    return gid, H2, phi2


def decompose(g: Multigraph) -> SynthesisScript:
    """A synthesis script whose replay is isomorphic to ``g``.

    Raises:
        NotExactError: ``g`` is not exactly 3-edge-connected (with witness).
    """
    if g.order < 2:
        raise DomainError("decompose needs order >= 2")
    report = is_exactly_k(g, 3)
    if not report.exact:
        raise NotExactError(3, *report.witness)
    rec = _Recorder()
    _build(g, rec)
    return SynthesisScript(tuple(rec.ops), canonical_code(g))


def thick_tree_factor(script: SynthesisScript) -> SynthesisScript:
    """Reorder a script so that all gluings come before all expansions.

    The gluings then build a 3-thick tree of dumbbells, and every
    expansion is block-respecting.  Scripts without gluings are returned
    unchanged.
    """
    if not any(isinstance(op, BlockGlue) for op in script.ops):
        return script
    g = replay(script)
    cur = g
    records = []
    while True:
        bd = blocks(cur)
        big = next((b for b in bd.blocks if len(b) >= 3), None)
        if big is None:
            break
        gb = cur.subgraph(big)
        degs = gb.degrees()
        avoid = min(v for v, d in degs.items() if d == 3)
        c = _find_collapsible(gb, avoid)
        ring = _ring_order(gb, c, degs)
        on = set(ring)
        inner = [[w for w in _outside(cur, x, on) if w in big] for x in ring]
        outer = [[w for w in _outside(cur, x, on) if w not in big] for x in ring]
        c_new = cur.fresh_vertex()
        cur = cycle_contract(cur, c)
        records.append((c_new, ring, inner, outer))
    rec = _Recorder()
    gid, H, phi = _build(cur, rec)
    for c_new, ring, inner, outer in reversed(records):
        spec, phi = _expansion_record(H, phi, c_new, ring, inner, outer)
        H = block_respecting_cycle_expand(H, spec)
        rec.ops.append(CycleExpand(gid, spec.target, spec.cycle_size, spec.assignment, spec.attach))
    return SynthesisScript(tuple(rec.ops), script.provenance)


def counting_identity(script: SynthesisScript, g: Multigraph | None = None) -> dict:
    """Edge/vertex/block/expansion counts of a script and its replay.

    ``holds`` is true when m = n + 2B + E - 1 and the number of gluings
    plus expansions equals m - n - B.
    """
    if g is None:
        g = replay(script)
    n, m = g.order, g.size
    b = len(blocks(g).blocks)
    e = script.expansions
    ops = script.gluings + script.expansions
    return {
        "n": n,
        "m": m,
        "B": b,
        "E": e,
        "N": ops,
        "holds": m == n + 2 * b + e - 1 and ops == m - n - b,
    }
