import pytest
from hypothesis import HealthCheck, settings

from dihedral_graphs.graph_core import build_graph

settings.register_profile(
    "repro", derandomize=True, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repro")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def graphs():
    """Intersection graphs of D_2p^2 for p in 2, 3, 5, 7."""
    return {p: build_graph(p * p) for p in (2, 3, 5, 7)}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
