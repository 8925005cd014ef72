import logging
from fractions import Fraction

import pytest

import xlaguerre.cli  # noqa - this register the cli cmds
from xlaguerre import config
from xlaguerre.logger import stop_sentry
from xlaguerre.maya import DiagramPair, MayaDiagram, parse_diagram, type_one_pair

log = logging.getLogger("xlaguerre")

# the worked example: M1=(∅|3,2), M2=(1,0|∅)
WORKED_M1 = "(|3,2)"
WORKED_M2 = "(1,0|)"
# the Type I operator at α=1/2 is the pair (∅|∅), (∅|1) at parameter −1/2
TYPE_ONE_ALPHA = Fraction(1, 2)
TYPE_ONE_PAIR_ALPHA = Fraction(-1, 2)


@pytest.fixture(autouse=True, scope="session")
def setup():
    config.override(TESTING=True, SENTRY_DSN=None)
    # prevent sentry from sending events in tests (config override is not enough)
    stop_sentry()


@pytest.fixture
def worked_pair() -> DiagramPair:
    return DiagramPair(parse_diagram(WORKED_M1), parse_diagram(WORKED_M2))


@pytest.fixture
def empty_pair() -> DiagramPair:
    return DiagramPair(MayaDiagram(), MayaDiagram())


@pytest.fixture
def type_one() -> DiagramPair:
    return type_one_pair(1)


@pytest.fixture
def odd_pair() -> DiagramPair:
    """μ = (1): not admissible"""
    return DiagramPair(parse_diagram("(|1)"), MayaDiagram())
