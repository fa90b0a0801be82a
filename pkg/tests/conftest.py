import pytest

from geodetic_lab.graph import Graph
from geodetic_lab.search import enumerate_graphs


@pytest.fixture(scope="session")
def corpus8() -> list[Graph]:
    """Every connected graph on 2..8 vertices, one per isomorphism class."""
    return [g for n in range(2, 9) for g in enumerate_graphs(n)]


@pytest.fixture(scope="session")
def corpus7(corpus8) -> list[Graph]:
    return [g for g in corpus8 if g.vertex_count <= 7]


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE

    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{verdict}] {number:>2}. {title}: {detail}")
