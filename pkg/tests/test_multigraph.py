import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exact3 import (
    ArgumentError,
    Cycle,
    Dart,
    DisconnectedGraphError,
    Multigraph,
    articulation_points,
    block_glue,
    blocks,
    chordless_cycles,
    dumbbell,
    is_biconnected,
    is_isomorphic,
    smooth_degree2,
)
from exact3.families import complete, cycle, thick_path


def test_basic_accessors():
    g = Multigraph([0, 1, 2], [(0, 1, 2), (1, 2)])
    assert g.order == 3 and g.size == 3
    assert g.multiplicity(0, 1) == 2 and g.multiplicity(0, 2) == 0
    assert g.degrees() == {0: 2, 1: 3, 2: 1}
    assert g.darts(0) == [Dart(0, 1, 0), Dart(0, 1, 1)]
    assert not g.is_simple() and g.max_multiplicity() == 2


def test_mapping_constructor_and_equality():
    a = Multigraph([0, 1], {(0, 1): 3})
    assert a == dumbbell()
    assert hash(a) == hash(dumbbell())


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1, -1)], [("a", 1)]])
def test_rejects_bad_edges(edges):
    with pytest.raises(ArgumentError):
        Multigraph([0, 1], edges)


def test_dart_text_roundtrip():
    d = Dart(3, 7, 2)
    assert Dart.parse(str(d)) == d
    assert d.reverse() == Dart(7, 3, 2)
    with pytest.raises(ArgumentError):
        Dart.parse("3-7#2")


def test_disconnected_error_names_two_vertices():
    g = Multigraph([0, 1, 2, 3], [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError) as info:
        blocks(g)
    u, v = info.value.u, info.value.v
    assert {u, v} & {0, 1} and {u, v} & {2, 3}


def test_blocks_of_dumbbell():
    bd = blocks(dumbbell())
    assert len(bd.blocks) == 1 and not bd.articulation_points


def test_blocks_of_two_glued_dumbbells():
    g = block_glue(dumbbell(), 0, dumbbell(), 0)
    bd = blocks(g)
    assert len(bd.blocks) == 2 and bd.articulation_points == {0}
    assert articulation_points(g) == frozenset({0})


def test_k4_single_block():
    assert len(blocks(complete(4)).blocks) == 1
    assert is_biconnected(complete(4))


def test_thick_path_blocks():
    g = thick_path(3)
    assert len(blocks(g).blocks) == 3
    assert len(articulation_points(g)) == 2


def test_chordless_cycles_dumbbell():
    assert list(chordless_cycles(dumbbell())) == [Cycle((0, 1))]


def test_chordless_cycles_k4():
    cs = list(chordless_cycles(complete(4)))
    assert len(cs) == 4 and all(len(c) == 3 for c in cs)


def test_chordless_cycles_avoiding():
    assert list(chordless_cycles(complete(4), avoiding=0)) == [Cycle((1, 2, 3))]
    assert all(0 in c for c in chordless_cycles(complete(4), through=0))


def test_through_equals_avoiding():
    with pytest.raises(ArgumentError):
        list(chordless_cycles(complete(4), through=1, avoiding=1))


def test_chordless_cycles_of_cycle_and_prism():
    assert list(chordless_cycles(cycle(6))) == [Cycle(tuple(range(6)))]
    from exact3.families import prism
    lengths = sorted(len(c) for c in chordless_cycles(prism(3)))
    assert lengths == [3, 3, 4, 4, 4]


def test_smooth_examples():
    g = Multigraph([0, 1, 2], [(0, 2), (2, 1), (0, 1, 2)])
    assert smooth_degree2(g) == Multigraph([0, 1], [(0, 1, 3)])
    assert smooth_degree2(complete(4)) == complete(4)
    c4 = Multigraph([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert is_isomorphic(smooth_degree2(c4), Multigraph([0, 1], [(0, 1, 2)]))


def test_cycle_validation():
    g = complete(4)
    assert Cycle((0, 1, 2)).is_cycle_of(g)
    assert Cycle((0, 1, 2)).is_chordless_in(g)
    assert not Cycle((0, 1, 2, 3)).is_chordless_in(g)
    with pytest.raises(ArgumentError):
        Cycle((0, 0, 1))


@st.composite
def multigraphs(draw, max_n=7):
    n = draw(st.integers(2, max_n))
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            r = draw(st.integers(0, 2))
            if r:
                edges.append((a, b, r))
    return Multigraph(range(n), edges)


@given(multigraphs())
@settings(max_examples=200, deadline=None)
def test_relabel_preserves_structure(g):
    perm = {v: 100 - v for v in g.vertices}
    h = g.relabel(perm)
    assert h.size == g.size
    assert sorted(h.degrees().values()) == sorted(g.degrees().values())
    assert h.relabel({v: k for k, v in perm.items()}) == g


@given(multigraphs())
@settings(max_examples=200, deadline=None)
def test_blocks_cover_every_edge_once(g):
    if not g.is_connected():
        return
    bd = blocks(g)
    total = sum(g.subgraph(b).size for b in bd.blocks)
    assert total == g.size
    for v in bd.articulation_points:
        assert not g.without([v]).is_connected()
