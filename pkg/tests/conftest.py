from collections import deque

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hanoigasket.core import hanoi_neighbors
from hanoigasket.gasket import sg_neighbors

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def gasket_words(min_size=0, max_size=12):
    return st.text(alphabet="TLR", min_size=min_size, max_size=max_size)


def hanoi_words(min_size=0, max_size=12):
    return st.lists(st.integers(0, 2), min_size=min_size, max_size=max_size).map(tuple)


@st.composite
def gasket_pairs(draw, min_size=0, max_size=12):
    n = draw(st.integers(min_size, max_size))
    w = st.text(alphabet="TLR", min_size=n, max_size=n)
    return draw(w), draw(w)


@st.composite
def hanoi_pairs(draw, min_size=0, max_size=12):
    n = draw(st.integers(min_size, max_size))
    w = st.lists(st.integers(0, 2), min_size=n, max_size=n).map(tuple)
    return draw(w), draw(w)


def bfs(source, target, neighbors):
    """Plain BFS over a neighbour function; the independent ground truth in tests."""
    if source == target:
        return 0
    seen = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in neighbors(u):
            if v not in seen:
                seen[v] = seen[u] + 1
                if v == target:
                    return seen[v]
                queue.append(v)
    raise AssertionError("unreachable")


@pytest.fixture
def sg_bfs():
    return lambda x, y: bfs(x, y, sg_neighbors)


@pytest.fixture
def hanoi_bfs():
    return lambda x, y: bfs(tuple(x), tuple(y), hanoi_neighbors)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
