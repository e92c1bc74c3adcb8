import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from forestsplit import ForestPair, build_forest  # noqa: E402

ACCEPTANCE = {}


@st.composite
def forest_edges(draw, n=None, max_n=30):
    """A forest as (n, edges): random tree by parent pointers, edges randomly kept."""
    if n is None:
        n = draw(st.integers(1, max_n))
    perm = draw(st.permutations(range(n)))
    edges = []
    for i in range(1, n):
        j = draw(st.integers(0, i - 1))
        if draw(st.booleans()) or draw(st.booleans()):
            edges.append((perm[i], perm[j]))
    return n, edges


@st.composite
def forests(draw, max_n=30):
    n, edges = draw(forest_edges(max_n=max_n))
    return build_forest(n, edges)


@st.composite
def forest_pairs(draw, max_n=30):
    n = draw(st.integers(1, max_n))
    _, e1 = draw(forest_edges(n=n))
    _, e2 = draw(forest_edges(n=n))
    return ForestPair.from_edges(n, e1, e2)


@pytest.fixture
def acceptance():
    return ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
