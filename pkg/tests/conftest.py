import random

import pytest

from lensgem.graph import ColouredGraph
from lensgem.lens import ferri_crystallization


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20131001, help="seed for randomized property tests")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed):
    return random.Random(seed)


@pytest.fixture
def s3():
    """The order-2 gem of the 3-sphere."""
    return ColouredGraph(2, [[1, 0]] * 4)


@pytest.fixture
def k4_example():
    """Colours 0 and 1 coincide; the {1,2,3}-residue is K4 (a projective plane)."""
    return ColouredGraph(4, [[1, 0, 3, 2], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])


@pytest.fixture(scope="session")
def lens_21_8():
    return ferri_crystallization(21, 8)



def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
