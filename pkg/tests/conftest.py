import random
import sys
from fractions import Fraction

import pytest
from hypothesis import settings

from sgpencil.cyclofield import CycloElement

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def rand_fraction(rng, span=5, denom=6):
    return Fraction(rng.randint(-span * denom, span * denom), rng.randint(1, denom))


def rand_element(rng, order, span=5, denom=6, density=0.6):
    coeffs = [rand_fraction(rng, span, denom) if rng.random() < density else 0 for _ in range(order)]
    return CycloElement(order, coeffs)


def rand_gaussian(rng, span=5, denom=6):
    return CycloElement.gaussian(rand_fraction(rng, span, denom), rand_fraction(rng, span, denom))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
