"""The compiled and pure-Python kernels must agree exactly."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exact3 import _backend
from oracles import random_connected_multigraph

compiled = _backend.compiled_kernels
python = _backend.python_kernels
needs_compiled = pytest.mark.skipif(compiled is None, reason="extension not built")


def flat(g):
    _, mat = g.to_matrix()
    return [x for row in mat for x in row]


def test_backend_name_is_known():
    assert _backend.BACKEND in ("compiled", "python")
    assert python.BACKEND == "python"


@needs_compiled
@given(st.integers(0, 10**6), st.integers(1, 10))
@settings(max_examples=300, deadline=None)
def test_canon_identical(seed, n):
    rng = random.Random(seed)
    g = random_connected_multigraph(rng, n) if n > 1 else None
    f = flat(g) if g else [0]
    lab_c, _ = compiled.canon(n, f, None)
    lab_p, _ = python.canon(n, f, None)
    key = lambda lab: [f[lab[i] * n + lab[j]] for i in range(n) for j in range(i + 1, n)]
    assert key(lab_c) == key(lab_p)
    colors = [rng.randint(0, 2) for _ in range(n)]
    lab_c, _ = compiled.canon(n, f, colors)
    lab_p, _ = python.canon(n, f, colors)
    assert [colors[v] for v in lab_c] == [colors[v] for v in lab_p]
    assert key(lab_c) == key(lab_p)


@needs_compiled
@given(st.integers(0, 10**6), st.integers(2, 12), st.integers(-1, 4))
@settings(max_examples=300, deadline=None)
def test_flows_identical(seed, n, limit):
    rng = random.Random(seed)
    g = random_connected_multigraph(rng, n)
    f = flat(g)
    s, t = rng.sample(range(n), 2)
    assert compiled.max_flow(n, f, s, t, limit)[0] == python.max_flow(n, f, s, t, limit)[0]
    assert list(compiled.flow_tree(n, f, limit)[1]) == list(python.flow_tree(n, f, limit)[1])
    assert list(compiled.flow_tree(n, f, limit)[0]) == list(python.flow_tree(n, f, limit)[0])


@needs_compiled
@given(st.integers(0, 10**6), st.integers(2, 9))
@settings(max_examples=150, deadline=None)
def test_min_cut_masks_identical(seed, n):
    g = random_connected_multigraph(random.Random(seed), n)
    f = flat(g)
    vc, mc = compiled.min_cut_masks(n, f)
    vp, mp = python.min_cut_masks(n, f)
    assert vc == vp and sorted(mc) == sorted(mp)


@needs_compiled
def test_large_graph_falls_back():
    n = 70
    f = [0] * (n * n)
    for i in range(n):
        j = (i + 1) % n
        f[i * n + j] = f[j * n + i] = 1
    assert compiled.max_flow(n, f, 0, 35, -1)[0] == 2
    lab, _ = compiled.canon(n, f, None)
    assert sorted(lab) == list(range(n))


def test_max_flow_cap():
    n = 2
    f = [0, 5, 5, 0]
    for impl in _backend.available().values():
        assert impl.max_flow(n, f, 0, 1, 3)[0] == 3
        assert impl.max_flow(n, f, 0, 1, -1)[0] == 5
