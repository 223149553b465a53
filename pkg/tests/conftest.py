import functools
from fractions import Fraction

import pytest
from hypothesis import settings

from isochar.rootsys import build_root_system
from isochar.weightlat import Weight, WeightPoly

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def rs_of(family, rank):
    return build_root_system(family, rank)


@pytest.fixture
def A1():
    return rs_of("A", 1)


@pytest.fixture
def A2():
    return rs_of("A", 2)


def W(*coords):
    return Weight(Fraction(c) for c in coords)


def poly(dim, *terms):
    """poly(2, ((1, -1), 3), ((0, 0), 1)) -> 3 e^(1,-1) + 1."""
    return WeightPoly(dim, {W(*lam): c for lam, c in terms})


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
