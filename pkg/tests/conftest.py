import sys

import pytest

from elastic_matroids import catalog
from elastic_matroids.core import GluedMatroid, LinearMatroid, UniformMatroid


def small_corpus():
    """3-connected matroids with at most 8 elements, used by the exhaustive property suites."""
    return {
        "U24": catalog.uniform(2, 4),
        "U25": catalog.uniform(2, 5),
        "U35": catalog.uniform(3, 5),
        "U36": catalog.uniform(3, 6),
        "U48": catalog.uniform(4, 8),
        "MK4": catalog.mk4(),
        "wheel4": catalog.wheel(4),
        "whirl4": catalog.whirl(4),
        "theta4": catalog.theta(4),
        "rand7": catalog.random_linear(3, 3, 7, seed=1),
        "rand8": catalog.random_linear(5, 4, 8, seed=2),
    }


@pytest.fixture(scope="session")
def corpus8():
    return small_corpus()


@pytest.fixture(scope="session")
def glued():
    return catalog.glued_theta(4, 5)


@pytest.fixture(scope="session")
def theta_minus_host(glued):
    from elastic_matroids.core import delete

    return delete(glued, glued.subset(["w4"]))


def pytest_terminal_summary(terminalreporter):
    gate = sys.modules.get("test_acceptance")
    if gate is None or not gate.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for text in gate.summary_lines():
        terminalreporter.write_line(text)
