"""Exhaustive generation of exactly 3-edge-connected graphs.

The biconnected classes are the closure of the dumbbell under cycle
expansion; every class of order n >= 3 has a collapsible cycle whose
contraction is again biconnected and exactly 3, so a breadth-first sweep
by increasing order reaches all of them.  Graphs with articulation points
are then built by gluing a biconnected leaf block onto a smaller class.

Levels hold canonical codes only; the representative of a class is the
graph decoded from its code, so the result does not depend on discovery
order or on the number of worker processes.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ._backend import kernels
from .canon import automorphism_orbits, canonical_code, encode_matrix, graph_from_code
from .connectivity import is_exactly_k, is_k_edge_connected
from .errors import ArgumentError, BudgetExceeded, DomainError
from .multigraph import Multigraph, is_biconnected
from .ops import CycleExpansionSpec, block_glue

__all__ = [
    "EnumerationQuery",
    "EnumerationResult",
    "enumerate_graphs",
    "brute_force_census",
    "simple_graph_classes",
    "minimum_assertions",
    "check_minimum_equivalence",
    "minimum_filter_admits",
    "expansion_children",
]


@dataclass(frozen=True)
class EnumerationQuery:
    max_vertices: int
    require_simple: bool = False
    require_biconnected: bool = False
    require_minimum: bool = False
    require_planar: bool = False
    emit: str = "count"
    jobs: int = 1
    budget_seconds: float | None = None

    def __post_init__(self):
        if isinstance(self.max_vertices, bool) or not isinstance(self.max_vertices, int):
            raise ArgumentError("max_vertices must be an integer")
        if self.max_vertices < 2:
            raise ArgumentError("max_vertices must be >= 2")
        if self.emit not in ("count", "stream"):
            raise ArgumentError("emit must be 'count' or 'stream'")
        if self.jobs < 1:
            raise ArgumentError("jobs must be >= 1")
        if self.budget_seconds is not None and self.budget_seconds <= 0:
            raise ArgumentError("budget_seconds must be positive")


@dataclass
class EnumerationResult:
    """Class counts per order; ``graphs`` maps order -> sorted codes when streamed."""

    counts_by_order: dict[int, int]
    graphs: dict[int, list[bytes]] | None = None

    @property
    def total(self) -> int:
        return sum(self.counts_by_order.values())

    def summary_lines(self) -> list[str]:
        return [f"{n}\t{c}" for n, c in sorted(self.counts_by_order.items())]

    def stream_lines(self) -> Iterator[str]:
        for n in sorted(self.graphs or {}):
            for code in self.graphs[n]:
                g = graph_from_code(code)
                edges = ";".join(f"{u} {v} {r}" for u, v, r in g.edges())
                yield f"{n}\t{code.hex()}\t{edges}"

    def representatives(self, order: int | None = None) -> Iterator[Multigraph]:
        if self.graphs is None:
            raise ArgumentError("result was computed with emit='count'")
        for n in sorted(self.graphs):
            if order is None or n == order:
                for code in self.graphs[n]:
                    yield graph_from_code(code)


# ---------------------------------------------------------------------------
# minimum graphs
# ---------------------------------------------------------------------------


def minimum_assertions(g: Multigraph, k: int) -> tuple[bool, bool, bool]:
    """(minimum, almost k-regular, exactly k and almost k-regular)."""
    if g.order < 2 or not is_k_edge_connected(g, k):
        raise DomainError(f"graph is not {k}-edge-connected")
    degs = g.degrees().values()
    minimum = g.size == math.ceil(k * g.order / 2)
    almost = sum(1 for d in degs if d != k) <= 1 and max(degs) <= k + 1
    return minimum, almost, almost and is_exactly_k(g, k).exact


def check_minimum_equivalence(g: Multigraph, k: int) -> bool:
    """True iff the three characterizations of minimum graphs agree on ``g``."""
    a, b, c = minimum_assertions(g, k)
    return a == b == c


def minimum_filter_admits(g: Multigraph, spec: CycleExpansionSpec) -> bool:
    """Whether expanding ``g`` by ``spec`` keeps the degree sum at most 3n' + 1.

    Expansion adds ``d' - 1`` vertices and ``d'`` edges whatever the
    assignment, so only the cycle size matters.
    """
    d = spec.cycle_size
    return 2 * (g.size + d) <= 3 * (g.order + d - 1) + 1


# ---------------------------------------------------------------------------
# expansion children on flat matrices
# ---------------------------------------------------------------------------


def _multiset_perms(items: list[int]) -> Iterator[tuple[int, ...]]:
    counts: dict[int, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    out: list[int] = []

    def rec():
        if len(out) == len(items):
            yield tuple(out)
            return
        for x in keys:
            if counts[x]:
                counts[x] -= 1
                out.append(x)
                yield from rec()
                out.pop()
                counts[x] += 1

    yield from rec()


def _arrangements(ms: list[int], dprime: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(sequence for u_1..u_{d'-1}, multiset for u_{d'}) up to cycle symmetry."""
    d = len(ms)
    if dprime == d:
        # every cycle vertex gets one dart; rotate so ms[0] sits last
        rests = [tuple(ms[1:])]
        lasts = [(ms[0],)]
        pairs = zip(lasts, rests)
    else:
        seen = set()
        pairs = []
        for idx in itertools.combinations(range(d), d - dprime + 1):
            last = tuple(ms[i] for i in idx)
            if last in seen:
                continue
            seen.add(last)
            chosen = set(idx)
            pairs.append((last, tuple(ms[i] for i in range(d) if i not in chosen)))
    for last, rest in pairs:
        for seq in _multiset_perms(list(rest)):
            if seq <= seq[::-1]:
                yield seq, last


def _greedy_multi_matching(n: int, flat: list[int]) -> int:
    used = [False] * n
    size = 0
    for i in range(n):
        if used[i]:
            continue
        row = i * n
        for j in range(i + 1, n):
            if not used[j] and flat[row + j] >= 2:
                used[i] = used[j] = True
                size += 1
                break
    return size


@dataclass(frozen=True)
class _Prune:
    max_n: int
    simple: bool
    minimum: bool

    def viable(self, n: int, m: int, flat: list[int]) -> bool:
        room = self.max_n - n
        if self.simple and 2 * _greedy_multi_matching(n, flat) > room:
            return False
        if self.minimum:
            excess = 2 * m - 3 * n
            if excess > 1 and excess + 1 > room:
                return False
        return True


def _child_flat(n, flat, u, seq, last):
    dp = len(seq) + 1
    n2 = n + dp - 1
    idx = [0] * n
    k = 0
    for x in range(n):
        if x != u:
            idx[x] = k
            k += 1
    out = [0] * (n2 * n2)
    for x in range(n):
        if x == u:
            continue
        row = x * n
        r2 = idx[x] * n2
        for y in range(n):
            if y != u and flat[row + y]:
                out[r2 + idx[y]] = flat[row + y]
    base = n - 1
    if dp == 2:
        out[base * n2 + base + 1] = out[(base + 1) * n2 + base] = 2
    else:
        for i in range(dp):
            a, b = base + i, base + (i + 1) % dp
            out[a * n2 + b] += 1
            out[b * n2 + a] += 1
    for i, w in enumerate(seq):
        a, b = base + i, idx[w]
        out[a * n2 + b] += 1
        out[b * n2 + a] += 1
    a = base + dp - 1
    for w in last:
        b = idx[w]
        out[a * n2 + b] += 1
        out[b * n2 + a] += 1
    return n2, out


def _flat_of(g: Multigraph) -> list[int]:
    _, mat = g.to_matrix()
    return [x for row in mat for x in row]


def expansion_children(code: bytes, prune: _Prune | None = None) -> set[bytes]:
    """Canonical codes of all cycle expansions of the class ``code``.

    One target per automorphism orbit; assignments up to the reflection
    symmetry of the cycle.  With ``prune`` children beyond ``max_n`` are
    skipped, and so are children that cannot lead to a graph satisfying
    the requested filters; at the last order the filters are applied
    exactly before canonicalizing.
    """
    g = graph_from_code(code)
    n, m = g.order, g.size
    flat = _flat_of(g)
    max_n = prune.max_n if prune is not None else None
    out: set[bytes] = set()
    for orbit in automorphism_orbits(g):
        u = orbit[0]
        ms = []
        for w, r in sorted(g.neighbors(u).items()):
            ms.extend([w] * r)
        d = len(ms)
        top = d if max_n is None else min(d, max_n - n + 1)
        for dp in range(2, top + 1):
            n2 = n + dp - 1
            m2 = m + dp
            final = max_n is not None and n2 == max_n
            if final and prune.minimum and 2 * m2 > 3 * n2 + 1:
                continue
            if final and prune.simple and dp == 2:
                continue
            for seq, last in _arrangements(ms, dp):
                if final and prune.simple and len(set(last)) != len(last):
                    continue
                n2, f2 = _child_flat(n, flat, u, seq, last)
                if prune is not None:
                    if final:
                        if prune.simple and max(f2) > 1:
                            continue
                    elif not prune.viable(n2, m2, f2):
                        continue
                lab, _ = kernels.canon(n2, f2, None)
                out.add(encode_matrix(n2, f2, lab))
    return out


def _expand_job(args):
    code, prune = args
    return expansion_children(code, prune)


# ---------------------------------------------------------------------------
# enumeration driver
# ---------------------------------------------------------------------------


def _emit_ok(g: Multigraph, q: EnumerationQuery) -> bool:
    if q.require_simple and not g.is_simple():
        return False
    if q.require_minimum and 2 * g.size > 3 * g.order + 1:
        return False
    return True


class _Clock:
    def __init__(self, budget: float | None):
        self.deadline = None if budget is None else time.monotonic() + budget

    def expired(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline


def _biconnected_levels(q: EnumerationQuery, on_level, clock: _Clock, pool=None):
    """Breadth-first closure; calls ``on_level(n, codes)`` once level n is complete."""
    prune = _Prune(q.max_vertices, q.require_simple, q.require_minimum)
    levels: dict[int, set[bytes]] = {n: set() for n in range(2, q.max_vertices + 1)}
    levels[2].add(canonical_code(Multigraph([0, 1], {(0, 1): 3})))
    for n in range(2, q.max_vertices + 1):
        on_level(n, levels[n])
        if n == q.max_vertices:
            break
        frontier = sorted(levels[n])
        if pool is not None:
            results = pool.imap(_expand_job, [(c, prune) for c in frontier], chunksize=4)
        else:
            results = (expansion_children(c, prune) for c in frontier)
        for children in results:
            for child in children:
                levels[_code_order(child)].add(child)
            if clock.expired():
                raise _Stop()


class _Stop(Exception):
    pass


def _code_order(code: bytes) -> int:
    return code[0] if code[:1] != b"\xff" else graph_from_code(code).order


def _glue_level(
    n: int,
    blocks_by_order: dict[int, list[Multigraph]],
    classes_by_order: dict[int, list[Multigraph]],
    clock: _Clock,
) -> set[bytes]:
    """Codes of order-n graphs with an articulation point."""
    out: set[bytes] = set()
    orbit_cache: dict[int, list[int]] = {}

    def reps(g: Multigraph) -> list[int]:
        key = id(g)
        if key not in orbit_cache:
            orbit_cache[key] = [o[0] for o in automorphism_orbits(g)]
        return orbit_cache[key]

    for n2 in range(2, n):
        n1 = n - n2 + 1
        for leaf in blocks_by_order.get(n2, ()):
            for base in classes_by_order.get(n1, ()):
                for x in reps(base):
                    for y in reps(leaf):
                        out.add(canonical_code(block_glue(base, x, leaf, y)))
                if clock.expired():
                    raise _Stop()
    return out


def enumerate_graphs(query: EnumerationQuery) -> EnumerationResult:
    """All isomorphism classes of exactly 3-edge-connected graphs passing the filters.

    Raises:
        BudgetExceeded: the time budget ran out; ``partial`` holds the
            orders completed so far.
    """
    q = query
    if q.require_planar:
        from .planar import planar_biconnected_levels

        level_source = planar_biconnected_levels
    else:
        level_source = _biconnected_levels
    counts: dict[int, int] = {}
    graphs: dict[int, list[bytes]] | None = {} if q.emit == "stream" else None
    blocks_by_order: dict[int, list[Multigraph]] = {}
    classes_by_order: dict[int, list[Multigraph]] = {}
    clock = _Clock(q.budget_seconds)
    # gluing never yields a minimum graph: each articulation point adds 3
    # to the degree excess 2m - 3n
    glue = not q.require_biconnected and not q.require_minimum

    def on_level(n: int, codes: set[bytes]) -> None:
        reps = [graph_from_code(c) for c in sorted(codes)]
        emitted = [c for c, g in zip(sorted(codes), reps) if _emit_ok(g, q)]
        if glue:
            usable = [g for g in reps if not q.require_simple or g.is_simple()]
            blocks_by_order[n] = usable
            glued = _glue_level(n, blocks_by_order, classes_by_order, clock)
            glued_graphs = [graph_from_code(c) for c in sorted(glued)]
            classes_by_order[n] = usable + [
                g for g in glued_graphs if not q.require_simple or g.is_simple()
            ]
            emitted += [c for c, g in zip(sorted(glued), glued_graphs) if _emit_ok(g, q)]
            emitted.sort()
        counts[n] = len(emitted)
        if graphs is not None:
            graphs[n] = emitted

    pool = None
    if q.jobs > 1:
        import multiprocessing

        pool = multiprocessing.get_context("fork").Pool(q.jobs)
    try:
        level_source(q, on_level, clock, pool)
    except _Stop:
        partial = EnumerationResult(dict(counts), graphs)
        raise BudgetExceeded(
            f"time budget exhausted after order {max(counts, default=1)}", partial
        ) from None
    finally:
        if pool is not None:
            pool.terminate()
    return EnumerationResult(counts, graphs)


# ---------------------------------------------------------------------------
# independent oracle
# ---------------------------------------------------------------------------


def simple_graph_classes(n: int) -> list[Multigraph]:
    """All simple graphs on ``n`` vertices up to isomorphism (n <= 7).

    Grown one vertex at a time over every neighbourhood subset, deduplicated
    by canonical code.
    """
    if not 1 <= n <= 7:
        raise ArgumentError("simple graph classes are generated for 1 <= n <= 7")
    level = {canonical_code(Multigraph([0])): Multigraph([0])}
    for k in range(1, n):
        nxt: dict[bytes, Multigraph] = {}
        for g in level.values():
            for mask in range(1 << k):
                h = Multigraph(
                    range(k + 1),
                    list(g.edges()) + [(i, k) for i in range(k) if mask >> i & 1],
                )
                nxt.setdefault(canonical_code(h), h)
        level = nxt
    return [level[c] for c in sorted(level)]


def brute_force_census(max_vertices: int) -> EnumerationResult:
    """Simple, biconnected, exactly 3-edge-connected classes by brute force.

    Independent of the synthesis machinery: every simple graph class is
    generated and tested with the all-pairs connectivity check.
    """
    if isinstance(max_vertices, bool) or not isinstance(max_vertices, int):
        raise ArgumentError("max_vertices must be an integer")
    if not 2 <= max_vertices <= 7:
        raise ArgumentError("brute-force census is limited to 2 <= max_vertices <= 7")
    counts = {}
    graphs = {}
    for n in range(2, max_vertices + 1):
        codes = []
        for g in simple_graph_classes(n):
            if g.is_connected() and is_exactly_k(g, 3).exact and is_biconnected(g):
                codes.append(canonical_code(g))
        counts[n] = len(codes)
        graphs[n] = sorted(codes)
    return EnumerationResult(counts, graphs)
