import os
import subprocess
import sys

import pytest

from exact3 import CycleExpansionSpec, Multigraph, decompose, dumbbell, replay
from exact3._debug import debug_assertions, debug_enabled
from exact3.families import complete, petersen
from exact3.ops import cycle_expand, vertex_glue, natural_pairing


def test_context_manager_restores_flag():
    before = debug_enabled()
    with debug_assertions():
        assert debug_enabled()
    assert debug_enabled() == before


def test_operations_run_with_assertions(corpus8):
    with debug_assertions():
        for g in corpus8[::50]:
            replay(decompose(g))
        k4 = complete(4)
        vertex_glue(k4, petersen(), natural_pairing(k4, 0, petersen(), 0))


def test_env_var_enables_assertions():
    code = "from exact3._debug import debug_enabled; print(debug_enabled())"
    env = dict(os.environ, EXACT3_DEBUG_ASSERT="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "True"
