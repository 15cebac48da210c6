"""C-partitions: the components left after deleting a cycle's vertices."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArgumentError
from .multigraph import Cycle, Multigraph

__all__ = ["CPartition", "c_partition"]


@dataclass(frozen=True)
class CPartition:
    cycle: Cycle
    components: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        return len(self.components)

    @property
    def is_articulation(self) -> bool:
        return self.size > 1


def c_partition(g: Multigraph, c: Cycle) -> CPartition:
    """Components of ``g`` minus the vertices of ``c``, ordered by least vertex."""
    if not c.is_cycle_of(g):
        raise ArgumentError(f"{c} is not a cycle of the graph")
    rest = g.without(c.vertices)
    return CPartition(c, tuple(sorted(rest.components(), key=min)))
