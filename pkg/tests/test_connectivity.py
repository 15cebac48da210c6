import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exact3 import (
    ArgumentError,
    DomainError,
    Multigraph,
    collapse_supernodes,
    connectivity_matrix,
    dumbbell,
    exact_level,
    is_exactly_k,
    is_isomorphic,
    is_k_edge_connected,
    local_connectivity,
    minimum_cuts,
    vertex_glue,
)
from exact3.families import complete, complete_bipartite, cycle, harary, petersen
from exact3.ops import natural_pairing
from oracles import all_pairs_by_cuts, cut_bound, random_connected_multigraph


def k4_plus():
    return Multigraph(range(4), list(complete(4).edges()) + [(0, 1)])


def test_local_connectivity_examples(backend):
    assert local_connectivity(dumbbell(), 0, 1) == 3
    assert local_connectivity(cycle(4), 0, 2) == 2
    assert local_connectivity(k4_plus(), 0, 1) == 4


def test_local_connectivity_errors():
    with pytest.raises(ArgumentError):
        local_connectivity(dumbbell(), 0, 0)
    with pytest.raises(ArgumentError):
        local_connectivity(dumbbell(), 0, 9)


def test_exactness_examples(backend):
    assert is_exactly_k(dumbbell(), 3).exact
    rep = is_exactly_k(k4_plus(), 3)
    assert not rep.exact and rep.witness == (0, 1, 4)
    assert is_exactly_k(complete_bipartite(3, 3), 3).exact
    assert is_exactly_k(petersen(), 3).exact


def test_exactness_needs_two_vertices():
    with pytest.raises(DomainError):
        is_exactly_k(Multigraph([0]), 3)


def test_witness_is_lexicographically_first(backend):
    g = Multigraph(range(4), [(0, 1, 2), (1, 2, 3), (2, 3, 3), (3, 0)])
    lam = connectivity_matrix(g)
    first = min(p for p, val in lam.items() if val != 3)
    assert is_exactly_k(g, 3).witness == (*first, lam[first])


def test_exact_level():
    assert exact_level(cycle(5)) == 2
    assert exact_level(complete(5)) == 4
    assert exact_level(k4_plus()) is None


def test_minimum_cuts_examples(backend):
    assert minimum_cuts(dumbbell(), nontrivial_only=True) == []
    k4 = complete(4)
    cuts = minimum_cuts(k4)
    assert len(cuts) == 4 and all(c.trivial and c.size == 3 for c in cuts)
    glued = vertex_glue(k4, k4, natural_pairing(k4, 0, k4, 0))
    nontrivial = minimum_cuts(glued, nontrivial_only=True)
    assert len(nontrivial) == 1 and nontrivial[0].size == 3
    assert {len(nontrivial[0].side_a), len(nontrivial[0].side_b)} == {3}


def test_minimum_cuts_match_brute_force(backend):
    rng = random.Random(5)
    for _ in range(200):
        g = random_connected_multigraph(rng, rng.randint(2, 7), 2)
        cuts = minimum_cuts(g)
        sides = {frozenset(c.side_a) for c in cuts}
        rest = [v for v in g.vertices if v != 0]
        best, want = None, set()
        for mask in range(1 << len(rest)):
            side = frozenset({0} | {rest[i] for i in range(len(rest)) if mask >> i & 1})
            if len(side) == g.order:
                continue
            size = sum(r for a, b, r in g.edges() if (a in side) != (b in side))
            if best is None or size < best:
                best, want = size, {side}
            elif size == best:
                want.add(side)
        assert sides == want


def test_collapse_examples():
    assert is_isomorphic(collapse_supernodes(complete(4), 3), complete(4))
    out = collapse_supernodes(k4_plus(), 3)
    assert is_isomorphic(out, Multigraph(range(3), [(0, 1, 2), (0, 2, 2), (1, 2)]))
    assert is_exactly_k(out, 3).exact
    assert collapse_supernodes(cycle(4), 1).order == 1
    with pytest.raises(DomainError):
        collapse_supernodes(cycle(4), 3)


@pytest.mark.parametrize("n", range(4, 13))
def test_harary_is_exact(n):
    h = harary(3, n)
    assert is_exactly_k(h, 3).exact and is_k_edge_connected(h, 3)


@given(st.integers(0, 10**6), st.integers(2, 7))
@settings(max_examples=150, deadline=None)
def test_matrix_agrees_with_cut_oracle(seed, n):
    g = random_connected_multigraph(random.Random(seed), n)
    assert connectivity_matrix(g) == all_pairs_by_cuts(g)


@given(st.integers(0, 10**6), st.integers(3, 8))
@settings(max_examples=100, deadline=None)
def test_exact_iff_all_pairs_equal(seed, n):
    g = random_connected_multigraph(random.Random(seed), n, 2)
    lam = connectivity_matrix(g)
    for k in (2, 3):
        assert is_exactly_k(g, k).exact == all(v == k for v in lam.values())
        assert is_k_edge_connected(g, k) == (min(lam.values()) >= k)


def test_local_agrees_with_cut_bound_on_petersen():
    g = petersen()
    for a, b in itertools.combinations(range(10), 2):
        assert local_connectivity(g, a, b) == cut_bound(g, a, b) == 3
