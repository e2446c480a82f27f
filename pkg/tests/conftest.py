import random

import pytest
from hypothesis import strategies as st

from coverpebble.graph import build_graph, path_graph


@st.composite
def connected_graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    if n > 1:
        pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
        edges += [(a, b) for a, b in draw(st.lists(pairs, max_size=2 * n)) if a != b]
    perm = draw(st.permutations(range(n)))
    return build_graph(n, [(perm[a], perm[b]) for a, b in edges])


def distributions(n, max_count=6):
    return st.tuples(*[st.integers(0, max_count) for _ in range(n)])


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4):
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    edges += [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[a], perm[b]) for a, b in edges])


@pytest.fixture
def p2():
    return path_graph(2)


@pytest.fixture
def p3():
    return path_graph(3)


# --- acceptance lines ------------------------------------------------------

ACCEPTANCE = {}


class Criterion:
    def __init__(self, number):
        self.number = number

    def record(self, ok, detail):
        ACCEPTANCE[self.number] = (bool(ok), detail)
        print(f"criterion {self.number}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail


@pytest.fixture
def criterion(request):
    number = request.node.get_closest_marker("criterion").args[0]
    yield Criterion(number)
    ACCEPTANCE.setdefault(number, (False, "did not finish"))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
