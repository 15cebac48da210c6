import sys

import pytest

import exact3  # noqa: F401
from exact3 import _backend
from exact3.enumerate import EnumerationQuery, enumerate_graphs

_KERNEL_USERS = ("exact3.canon", "exact3.connectivity", "exact3.enumerate")

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--skip-slow", action="store_true", help="skip tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--skip-slow"):
        skip = pytest.mark.skip(reason="--skip-slow given")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}")


@pytest.fixture(params=sorted(_backend.available()))
def backend(request, monkeypatch):
    """Run the test once per kernel implementation."""
    impl = _backend.available()[request.param]
    for name in _KERNEL_USERS:
        monkeypatch.setattr(sys.modules[name], "kernels", impl)
    return request.param


def _corpus(max_n, **flags):
    q = EnumerationQuery(max_n, emit="stream", **flags)
    return list(enumerate_graphs(q).representatives())


@pytest.fixture(scope="session")
def corpus8():
    """Every exactly 3-edge-connected multigraph class of order <= 8."""
    return _corpus(8)


@pytest.fixture(scope="session")
def corpus9():
    return _corpus(9)


@pytest.fixture(scope="session")
def small_corpus():
    return _corpus(6)
