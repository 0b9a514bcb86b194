import random

import pytest

from mixedmoore.mixedgraph import MixedGraph


def random_mixed_graph(rng: random.Random, max_n: int = 12) -> MixedGraph:
    n = rng.randint(1, max_n)
    edges, arcs, used = [], [], set()
    for u in range(n):
        for v in range(u + 1, n):
            roll = rng.random()
            if roll < 0.15:
                edges.append((u, v) if rng.random() < 0.5 else (v, u))
            elif roll < 0.25:
                arcs.append((u, v))
            elif roll < 0.35:
                arcs.append((v, u))
            elif roll < 0.40:
                arcs += [(u, v), (v, u)]
    return MixedGraph(n, edges, arcs)


@pytest.fixture
def rng():
    return random.Random(20140611)


_acceptance_lines: list[str] = []


@pytest.fixture
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
