import pytest

from rough_biheyting.space import parse_class_notation, space_s4, space_s6


@pytest.fixture(scope="session")
def s4():
    return space_s4()


@pytest.fixture(scope="session")
def s6():
    return space_s6()


@pytest.fixture(scope="session")
def rs6(s6):
    """Class-notation reader for S6, e.g. ``rs6("X1 ∪ {x2}")``."""
    return lambda text: parse_class_notation(s6, text)


@pytest.fixture(scope="session")
def rs4(s4):
    return lambda text: parse_class_notation(s4, text)
