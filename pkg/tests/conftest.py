import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rainbowconn.enumeration import enumerate_connected  # noqa: E402
from rainbowconn.graph_core import from_edge_list  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def graphs_by_order():
    """Connected graphs up to isomorphism, n = 1..7."""
    return {n: list(enumerate_connected(n)) for n in range(1, 8)}


@pytest.fixture(scope="session")
def graphs8():
    return list(enumerate_connected(8))


@pytest.fixture
def two_triangles():
    return from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
