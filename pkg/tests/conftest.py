import pytest

from cliquemax.graph_core import Graph, disjoint_union, from_edges

K3 = from_edges([(1, 2), (1, 3), (2, 3)])
K4 = from_edges([(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)])
K4_MINUS = from_edges([(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)])  # K_4 minus 34
C5 = from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
P3 = from_edges([(1, 2), (2, 3)])
K2 = Graph.complete(2)

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def record():
    def _record(name: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE_RESULTS.append((name, passed, detail))

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
