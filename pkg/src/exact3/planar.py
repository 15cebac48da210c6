"""Embedded synthesis: rotation systems, faces and order-preserving expansion.

An embedding is a rotation system: for every vertex the cyclic order of
its darts.  Faces are the orbits of ``next(d) = successor(reverse(d))``
where the successor is taken in the rotation at the head of ``d``.  A
connected graph is embedded in the plane iff V - E + F = 2.

Expanding a vertex in order means that each cycle vertex takes a
contiguous stretch of the old rotation: ``u_j`` (j < d') holds the stretch
from assigned dart ``a_j`` up to ``a_{j+1}`` and the last cycle vertex the
rest.  Darts of other blocks simply travel with the stretch that holds
them.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from ._debug import debug_enabled
from .canon import canonical_code, encode_matrix
from .connectivity import is_exactly_k
from .decompose import BlockGlue, CycleExpand, Dumbbell, SynthesisScript
from .errors import ArgumentError, DomainError, FormatError, InvariantViolation
from .multigraph import Cycle, Dart, Multigraph, blocks, is_biconnected
from .ops import (
    CycleExpansionSpec,
    _expand_raw,
    block_glue,
    block_respecting_cycle_expand,
    cycle_contract,
    cycle_expand,
    dumbbell,
    glue_relabeling,
)

__all__ = [
    "RotationSystem",
    "dumbbell_rotation",
    "faces",
    "euler_characteristic",
    "block_euler_characteristics",
    "is_planar_embedding",
    "order_preserving_spec",
    "order_preserving_expand",
    "order_preserving_contract",
    "glue_embeddings",
    "planar_synthesize",
    "planar_replay_steps",
    "EmbeddedStep",
    "embedding_code",
    "random_order_preserving_script",
]


class RotationSystem:
    """Cyclic dart order at every vertex."""

    __slots__ = ("_rot", "_pos")

    def __init__(self, rotation: Mapping[int, Iterable[Dart]]):
        self._rot = {v: tuple(ds) for v, ds in rotation.items()}
        self._pos = {}
        for v, ds in self._rot.items():
            for i, d in enumerate(ds):
                if d.tail != v:
                    raise FormatError(f"dart {d} listed at vertex {v}")
                if d in self._pos:
                    raise FormatError(f"dart {d} listed twice")
                self._pos[d] = i

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._rot))

    def at(self, v: int) -> tuple[Dart, ...]:
        return self._rot[v]

    def darts(self) -> list[Dart]:
        return sorted(self._pos)

    def successor(self, d: Dart) -> Dart:
        ds = self._rot[d.tail]
        return ds[(self._pos[d] + 1) % len(ds)]

    def restricted(self, keep) -> "RotationSystem":
        keep = set(keep)
        return RotationSystem(
            {v: [d for d in ds if d.head in keep] for v, ds in self._rot.items() if v in keep}
        )

    def mirrored(self) -> "RotationSystem":
        return RotationSystem({v: ds[::-1] for v, ds in self._rot.items()})

    def equivalent(self, other: "RotationSystem") -> bool:
        """Equal up to a cyclic shift of every vertex's order."""
        if self.vertices != other.vertices:
            return False
        for v in self.vertices:
            a, b = self._rot[v], other.at(v)
            if len(a) != len(b):
                return False
            if a and not any(a == b[i:] + b[:i] for i in range(len(b))):
                return False
        return True

    def validate(self, g: Multigraph) -> None:
        if set(self._rot) != set(g.vertices):
            raise FormatError("rotation and graph have different vertex sets")
        for v in g.vertices:
            if sorted(self._rot[v]) != g.darts(v):
                raise FormatError(f"rotation at {v} does not list exactly its darts")

    def to_text(self) -> str:
        return "".join(
            f"{v}: {' '.join(map(str, self._rot[v]))}\n" for v in self.vertices
        )

    @classmethod
    def from_text(cls, text: str) -> "RotationSystem":
        rot = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            head, sep, rest = line.partition(":")
            try:
                if not sep:
                    raise ValueError("missing ':'")
                v = int(head)
                rot[v] = [Dart.parse(t) for t in rest.split()]
            except (ValueError, ArgumentError) as exc:
                raise FormatError(f"bad rotation line: {exc}", lineno) from None
        return cls(rot)

    def __eq__(self, other) -> bool:
        return isinstance(other, RotationSystem) and self._rot == other._rot

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._rot.items())))

    def __repr__(self) -> str:
        return f"RotationSystem({self._rot!r})"


def dumbbell_rotation() -> RotationSystem:
    """The unique embedding of the dumbbell on vertices 0 and 1."""
    return RotationSystem(
        {0: [Dart(0, 1, i) for i in range(3)], 1: [Dart(1, 0, i) for i in (2, 1, 0)]}
    )


# ---------------------------------------------------------------------------
# faces and Euler
# ---------------------------------------------------------------------------


def _faces(rot: RotationSystem) -> list[list[Dart]]:
    seen = set()
    out = []
    for start in rot.darts():
        if start in seen:
            continue
        face = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            d = rot.successor(d.reverse())
        out.append(face)
    return out


def faces(g: Multigraph, rot: RotationSystem) -> list[list[Dart]]:
    """Faces as dart cycles, each starting at its smallest dart, sorted.

    Raises:
        FormatError: ``rot`` does not match ``g``.
    """
    rot.validate(g)
    return _faces(rot)


def euler_characteristic(g: Multigraph, rot: RotationSystem) -> int:
    return g.order - g.size + len(faces(g, rot))


def block_euler_characteristics(g: Multigraph, rot: RotationSystem) -> list[int]:
    """V - E + F of every block under the induced rotation."""
    rot.validate(g)
    out = []
    for b in blocks(g).blocks:
        sub = g.subgraph(b)
        out.append(sub.order - sub.size + len(_faces(rot.restricted(b))))
    return out


def is_planar_embedding(g: Multigraph, rot: RotationSystem) -> bool:
    if g.order == 1:
        return True
    return euler_characteristic(g, rot) == 2 and all(
        x == 2 for x in block_euler_characteristics(g, rot)
    )


def _assert_planar(g: Multigraph, rot: RotationSystem, what: str) -> None:
    if not is_planar_embedding(g, rot):
        raise InvariantViolation(f"{what}: Euler check failed")


# ---------------------------------------------------------------------------
# order-preserving expansion and contraction
# ---------------------------------------------------------------------------


def _home_darts(g: Multigraph, rot: RotationSystem, u: int, near: int | None) -> list[Dart]:
    """Darts at ``u`` inside one block, in rotation order."""
    bd = blocks(g)
    if u not in bd.articulation_points:
        return list(rot.at(u))
    choices = bd.blocks_at(u)
    if near is None:
        raise ArgumentError(f"vertex {u} is an articulation point; name a block neighbour")
    home = next((bd.blocks[i] for i in choices if near in bd.blocks[i]), None)
    if home is None:
        raise ArgumentError(f"{near} is not a neighbour of {u}")
    return [d for d in rot.at(u) if d.head in home]


def order_preserving_spec(
    g: Multigraph,
    rot: RotationSystem,
    u: int,
    start: int,
    cycle_size: int,
    near: int | None = None,
) -> CycleExpansionSpec:
    """The order-preserving spec starting at the ``start``-th block dart.

    At an articulation point ``near`` picks the block (any neighbour of
    ``u`` in it); darts of other blocks get attach positions from the
    stretch that contains them.
    """
    home = _home_darts(g, rot, u, near)
    k = start % len(home)
    assignment = tuple(home[k:] + home[:k])
    attach = _arc_attach(rot.at(u), assignment, cycle_size)
    return CycleExpansionSpec(u, cycle_size, assignment, attach)


def _arcs(full: tuple[Dart, ...], assignment: tuple[Dart, ...], cycle_size: int):
    """Stretch of the full rotation held by each cycle vertex."""
    pos = {d: i for i, d in enumerate(full)}
    n = len(full)
    heads = [pos[a] for a in assignment[: cycle_size - 1]] + [pos[assignment[cycle_size - 1]]]
    out = []
    for j in range(cycle_size):
        s = heads[j]
        e = heads[0] if j == cycle_size - 1 else heads[j + 1]
        arc = []
        i = s
        while True:
            arc.append(full[i])
            i = (i + 1) % n
            if i == e:
                break
        out.append(arc)
    return out


def _arc_attach(full, assignment, cycle_size):
    own = set(assignment)
    attach = []
    for j, arc in enumerate(_arcs(full, assignment, cycle_size), 1):
        attach.extend((d, j) for d in arc if d not in own)
    return tuple(sorted(attach))


def _is_rotation_of(seq, cyc) -> bool:
    if len(seq) != len(cyc) or not seq:
        return False
    if seq[0] not in cyc:
        return False
    k = cyc.index(seq[0])
    return tuple(seq) == tuple(cyc[k:] + cyc[:k])


def _embedded_expand(g: Multigraph, rot: RotationSystem, spec: CycleExpansionSpec):
    """Expand in order; returns (graph, rotation, dart map old -> new)."""
    u, dp = spec.target, spec.cycle_size
    full = rot.at(u)
    own = set(spec.assignment)
    home = [d for d in full if d in own]
    if len(home) != len(spec.assignment) or not _is_rotation_of(spec.assignment, tuple(home)):
        raise DomainError("assignment does not follow the rotation at the target")
    foreign = [d for d in full if d not in own]
    if foreign or spec.attach:
        if tuple(sorted(spec.attach)) != _arc_attach(full, spec.assignment, dp):
            raise DomainError("attach positions do not follow the rotation at the target")
        out = block_respecting_cycle_expand(g, spec)
    elif is_biconnected(g):
        out = cycle_expand(g, spec)
    else:
        out = block_respecting_cycle_expand(g, spec)

    base = g.fresh_vertex()
    ids = [base + j for j in range(dp)]
    arcs = _arcs(full, spec.assignment, dp)
    dmap: dict[Dart, Dart] = {}
    used: dict[tuple[int, int], int] = {}
    new_rot: dict[int, list[Dart]] = {}
    for j, arc in enumerate(arcs):
        x = ids[j]
        ext = []
        for d in arc:
            i = used.get((x, d.head), 0)
            used[(x, d.head)] = i + 1
            nd = Dart(x, d.head, i)
            dmap[d] = nd
            dmap[d.reverse()] = nd.reverse()
            ext.append(nd)
        nxt, prv = ids[(j + 1) % dp], ids[(j - 1) % dp]
        if dp == 2:
            # copy 0 runs u_1 -> u_2, copy 1 runs u_2 -> u_1
            tail = [Dart(x, nxt, j), Dart(x, prv, 1 - j)]
        else:
            tail = [Dart(x, nxt, 0), Dart(x, prv, 0)]
        new_rot[x] = ext + tail
    for v in g.vertices:
        if v == u:
            continue
        new_rot[v] = [dmap.get(d, d) for d in rot.at(v)]
    for d in rot.darts():
        if d.tail != u and d.head != u:
            dmap[d] = d
    rot2 = RotationSystem(new_rot)
    rot2.validate(out)
    _assert_planar(out, rot2, "order_preserving_expand")
    return out, rot2, dmap


def order_preserving_expand(
    g: Multigraph, rot: RotationSystem, spec: CycleExpansionSpec
) -> tuple[Multigraph, RotationSystem]:
    """Cycle expansion that keeps the embedding planar.

    Raises:
        DomainError: the assignment is not a rotation of the target's dart
            order (restricted to its block), or the input embedding is not
            planar.
    """
    rot.validate(g)
    if not is_planar_embedding(g, rot):
        raise DomainError("input rotation is not a planar embedding")
    out, rot2, _ = _embedded_expand(g, rot, spec)
    if debug_enabled() and not is_exactly_k(out, 3).exact:
        raise InvariantViolation("order_preserving_expand: result not exactly 3")
    return out, rot2


def _cycle_darts(c: Cycle, forward: bool):
    """(dart to next, dart to previous) per cycle vertex for one orientation."""
    vs = list(c.vertices) if forward else [c.vertices[0]] + list(c.vertices[:0:-1])
    k = len(vs)
    out = {}
    for j, x in enumerate(vs):
        nxt, prv = vs[(j + 1) % k], vs[(j - 1) % k]
        if k == 2:
            a, b = (0, 1) if forward else (1, 0)
            out[x] = (Dart(x, nxt, a if j == 0 else b), Dart(x, prv, b if j == 0 else a))
        else:
            out[x] = (Dart(x, nxt, 0), Dart(x, prv, 0))
    return vs, out


def order_preserving_contract(g: Multigraph, rot: RotationSystem, c: Cycle):
    """Contract a facial chordless cycle, inheriting the embedding.

    Returns ``(graph, rotation, dart map)``; the graph equals
    ``cycle_contract(g, c)``.  Every cycle vertex must see its two cycle
    darts consecutively, in the same orientation all around the cycle.

    Raises:
        DomainError: the cycle does not bound a face in this way.
    """
    rot.validate(g)
    out = cycle_contract(g, c)
    new = g.fresh_vertex()
    for forward in (True, False):
        vs, cd = _cycle_darts(c, forward)
        ok = True
        stretches = []
        for x in vs:
            nxt_d, prv_d = cd[x]
            ds = rot.at(x)
            i = ds.index(nxt_d)
            if ds[(i + 1) % len(ds)] != prv_d:
                ok = False
                break
            k = (i + 2) % len(ds)
            stretch = [ds[(k + t) % len(ds)] for t in range(len(ds) - 2)]
            stretches.append(stretch)
        if ok:
            break
    else:
        raise DomainError(f"{c} does not bound a face of the embedding")
    dmap: dict[Dart, Dart] = {}
    used: dict[int, int] = {}
    rot_new = []
    for stretch in stretches:
        for d in stretch:
            i = used.get(d.head, 0)
            used[d.head] = i + 1
            nd = Dart(new, d.head, i)
            dmap[d] = nd
            dmap[d.reverse()] = nd.reverse()
            rot_new.append(nd)
    on = set(c.vertices)
    rot2 = {new: rot_new}
    for v in g.vertices:
        if v not in on:
            rot2[v] = [dmap.get(d, d) for d in rot.at(v)]
    r = RotationSystem(rot2)
    r.validate(out)
    return out, r, dmap


# ---------------------------------------------------------------------------
# gluing and scripts
# ---------------------------------------------------------------------------


def glue_embeddings(
    g1: Multigraph,
    rot1: RotationSystem,
    u1: int,
    g2: Multigraph,
    rot2: RotationSystem,
    u2: int,
    corner: int = 0,
) -> tuple[Multigraph, RotationSystem]:
    """Block gluing; u2's dart cycle is spliced into u1's before position ``corner``."""
    out = block_glue(g1, u1, g2, u2)
    mapping = glue_relabeling(g1, g2, u2, u1)

    def moved(d: Dart) -> Dart:
        return Dart(mapping[d.tail], mapping[d.head], d.index)

    rot = {v: list(rot1.at(v)) for v in g1.vertices}
    for v in g2.vertices:
        if v != u2:
            rot[mapping[v]] = [moved(d) for d in rot2.at(v)]
    k = corner % max(1, len(rot[u1])) if rot[u1] else 0
    rot[u1] = rot[u1][:k] + [moved(d) for d in rot2.at(u2)] + rot[u1][k:]
    r = RotationSystem(rot)
    r.validate(out)
    return out, r


@dataclass(frozen=True)
class EmbeddedStep:
    """One replayed record: the graph it produced and, for EXPAND, its input."""

    index: int
    op: object
    graph: Multigraph
    rotation: RotationSystem
    before: tuple[Multigraph, RotationSystem] | None = None
    dart_map: dict | None = None


def planar_replay_steps(script: SynthesisScript) -> Iterator[EmbeddedStep]:
    """Replay a script with embeddings, yielding every intermediate state.

    Raises:
        DomainError: an EXPAND record is not order-preserving; the message
            names the 1-based record index.
        FormatError: the script itself is malformed.
    """
    live: dict[int, tuple[Multigraph, RotationSystem]] = {}
    for i, op in enumerate(script.ops, 1):
        before = dmap = None
        if isinstance(op, Dumbbell):
            if op.gid in live:
                raise FormatError(f"graph id {op.gid} already in use", i)
            live[op.gid] = (dumbbell(), dumbbell_rotation())
            key = op.gid
        elif isinstance(op, BlockGlue):
            if op.ga == op.gb or op.ga not in live or op.gb not in live:
                raise FormatError("GLUE references a missing graph", i)
            (ga, ra), (gb, rb) = live.pop(op.ga), live.pop(op.gb)
            if op.result in live:
                raise FormatError(f"graph id {op.result} already in use", i)
            try:
                live[op.result] = glue_embeddings(ga, ra, op.ua, gb, rb, op.ub)
            except ArgumentError as exc:
                raise FormatError(str(exc), i) from None
            key = op.result
        elif isinstance(op, CycleExpand):
            if op.gid not in live:
                raise FormatError(f"EXPAND references missing graph {op.gid}", i)
            before = live[op.gid]
            try:
                g2, rot2, dmap = _embedded_expand(*before, op.spec)
            except DomainError as exc:
                raise DomainError(f"record {i}: {exc}") from None
            except (ArgumentError, KeyError, ValueError) as exc:
                raise FormatError(f"invalid expansion: {exc}", i) from None
            live[op.gid] = (g2, rot2)
            key = op.gid
        else:  # pragma: no cover
            raise FormatError(f"unknown op {op!r}", i)
        yield EmbeddedStep(i, op, *live[key], before, dmap)
    if len(live) != 1:
        raise FormatError(f"script leaves {len(live)} graphs instead of one")


def planar_synthesize(script: SynthesisScript) -> tuple[Multigraph, RotationSystem]:
    """Replay a script while carrying an embedding.

    Gluing splices rotations at corner 0; every EXPAND record must follow
    the current rotation.  The final embedding is checked with Euler's
    formula, globally and per block.

    Raises:
        DomainError: an EXPAND record is not order-preserving; the message
            names the 1-based record index.
        FormatError: the script itself is malformed.
    """
    last = None
    for last in planar_replay_steps(script):
        pass
    if last is None:
        raise FormatError("empty script")
    g, rot = last.graph, last.rotation
    _assert_planar(g, rot, "planar_synthesize")
    if debug_enabled() and not is_exactly_k(g, 3).exact:
        raise InvariantViolation("planar_synthesize: result not exactly 3")
    return g, rot


def random_order_preserving_script(rng: random.Random, max_order: int = 10) -> SynthesisScript:
    """A random script of order-preserving expansions and gluings.

    Graph pieces are created, expanded at random vertices/starting darts and
    glued until one graph of order <= ``max_order`` remains.
    """
    if max_order < 2:
        raise ArgumentError("max_order must be >= 2")
    ops = []
    live: dict[int, tuple[Multigraph, RotationSystem]] = {}
    next_id = 0
    total = 0  # order of the final graph if all live pieces were glued

    def new_piece():
        nonlocal next_id, total
        live[next_id] = (dumbbell(), dumbbell_rotation())
        ops.append(Dumbbell(next_id))
        next_id += 1
        total += 2 if len(live) == 1 else 1

    new_piece()
    while True:
        room = max_order - total
        moves = []
        if room >= 1:
            moves += ["expand"] * 4 + ["piece"]
        if len(live) > 1:
            moves.append("glue")
        if not moves:
            break
        if len(live) == 1 and room >= 1 and rng.random() < 0.12:
            break
        move = rng.choice(moves)
        if move == "piece":
            new_piece()
        elif move == "glue":
            ga, gb = rng.sample(sorted(live), 2)
            (g1, r1), (g2, r2) = live.pop(ga), live.pop(gb)
            u1, u2 = rng.choice(g1.vertices), rng.choice(g2.vertices)
            live[next_id] = glue_embeddings(g1, r1, u1, g2, r2, u2)
            ops.append(BlockGlue(ga, u1, gb, u2, next_id))
            next_id += 1
        else:
            gid = rng.choice(sorted(live))
            g, rot = live[gid]
            u = rng.choice(g.vertices)
            near = rng.choice(sorted(g.neighbors(u)))
            home = _home_darts(g, rot, u, near)
            dp = rng.randint(2, min(len(home), room + 1))
            spec = order_preserving_spec(g, rot, u, rng.randrange(len(home)), dp, near)
            g2, rot2, _ = _embedded_expand(g, rot, spec)
            live[gid] = (g2, rot2)
            ops.append(CycleExpand(gid, u, dp, spec.assignment, spec.attach))
            total += dp - 1
    while len(live) > 1:
        ga, gb = sorted(live)[:2]
        (g1, r1), (g2, r2) = live.pop(ga), live.pop(gb)
        u1, u2 = rng.choice(g1.vertices), rng.choice(g2.vertices)
        live[next_id] = glue_embeddings(g1, r1, u1, g2, r2, u2)
        ops.append(BlockGlue(ga, u1, gb, u2, next_id))
        next_id += 1
    return SynthesisScript(tuple(ops))


# ---------------------------------------------------------------------------
# embedded canonical form and planar enumeration
# ---------------------------------------------------------------------------


def _map_code_from(rot: dict[int, tuple[Dart, ...]], pos, start: Dart, mirror: bool):
    num = {start.tail: 0}
    entry = {start.tail: start}
    order = [start.tail]
    q = deque([start.tail])
    while q:
        v = q.popleft()
        ds = rot[v]
        k = pos[entry[v]]
        n = len(ds)
        for t in range(n):
            d = ds[(k - t) % n] if mirror else ds[(k + t) % n]
            w = d.head
            if w not in num:
                num[w] = len(order)
                entry[w] = d.reverse()
                order.append(w)
                q.append(w)
    code = []
    for v in order:
        ds = rot[v]
        k = pos[entry[v]]
        n = len(ds)
        code.append(n)
        for t in range(n):
            d = ds[(k - t) % n] if mirror else ds[(k + t) % n]
            r = d.reverse()
            m = len(rot[r.tail])
            off = (pos[r] - pos[entry[r.tail]]) % m
            if mirror:
                off = (-off) % m
            code.append(num[d.head])
            code.append(off)
    return tuple(code)


def embedding_code(g: Multigraph, rot: RotationSystem) -> tuple:
    """Canonical form of a connected embedded graph up to homeomorphism and mirror."""
    rot.validate(g)
    r = {v: rot.at(v) for v in g.vertices}
    pos = {}
    for v, ds in r.items():
        for i, d in enumerate(ds):
            pos[d] = i
    best = None
    for d in rot.darts():
        for mirror in (False, True):
            c = _map_code_from(r, pos, d, mirror)
            if best is None or c < best:
                best = c
    return (g.order,) + best


def _embedded_children(g: Multigraph, rot: RotationSystem, max_n: int, prune):
    from .enumerate import _flat_of

    n, m = g.order, g.size
    for u in g.vertices:
        ds = rot.at(u)
        d = len(ds)
        for dp in range(2, min(d, max_n - n + 1) + 1):
            n2, m2 = n + dp - 1, m + dp
            final = n2 == max_n
            if final and prune.minimum and 2 * m2 > 3 * n2 + 1:
                continue
            if final and prune.simple and dp == 2:
                continue
            starts = range(1) if dp == d else range(d)
            for s in starts:
                spec = CycleExpansionSpec(u, dp, tuple(ds[s:] + ds[:s]))
                g2, rot2, _ = _embedded_expand(g, rot, spec)
                if final:
                    if prune.simple and not g2.is_simple():
                        continue
                elif not prune.viable(n2, m2, _flat_of(g2)):
                    continue
                yield g2, rot2


def planar_biconnected_levels(q, on_level, clock, pool=None):
    """Planar counterpart of the biconnected sweep, carried over embeddings.

    Classes are (graph, embedding) pairs keyed by :func:`embedding_code`;
    ``on_level`` receives the distinct graph codes of each order.
    """
    from .enumerate import _Prune, _Stop

    prune = _Prune(q.max_vertices, q.require_simple, q.require_minimum)
    levels: dict[int, dict[tuple, tuple[Multigraph, RotationSystem]]] = {
        n: {} for n in range(2, q.max_vertices + 1)
    }
    g0, r0 = dumbbell(), dumbbell_rotation()
    levels[2][embedding_code(g0, r0)] = (g0, r0)
    for n in range(2, q.max_vertices + 1):
        on_level(n, {canonical_code(g) for g, _ in levels[n].values()})
        if n == q.max_vertices:
            break
        for key in sorted(levels[n]):
            g, rot = levels[n][key]
            for g2, rot2 in _embedded_children(g, rot, q.max_vertices, prune):
                levels[g2.order].setdefault(embedding_code(g2, rot2), (g2, rot2))
            if clock.expired():
                raise _Stop()
        levels[n] = {}
