import numpy as np
import pytest

from repvar.acceptance import four_vertex_example, zigzag_example


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(scope="session")
def four_vertex():
    return four_vertex_example()


@pytest.fixture(scope="session")
def zigzag():
    return zigzag_example()


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
