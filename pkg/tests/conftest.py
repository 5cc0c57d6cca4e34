import random

import pytest

from transversals.constructions import (
    bose_sts,
    cyclic_square,
    half_sum_square,
    steiner_square,
)
from transversals.core import validate_latin_square, validate_sts
from transversals.engine import family_from_cols
from transversals.fixtures import (
    EXAMPLE_FAMILY,
    EXAMPLE_SQUARE,
    fano_triples,
    get_known_system,
)


@pytest.fixture
def example_square():
    return validate_latin_square(EXAMPLE_SQUARE)


@pytest.fixture
def example_family(example_square):
    return family_from_cols(example_square, EXAMPLE_FAMILY)


@pytest.fixture
def fano():
    return validate_sts(7, fano_triples())


@pytest.fixture
def sts3():
    return validate_sts(3, [[0, 1, 2]])


@pytest.fixture
def sts9():
    return bose_sts(half_sum_square(3))


@pytest.fixture
def sts13():
    return get_known_system(13)


@pytest.fixture
def b2():
    return cyclic_square(2)


@pytest.fixture
def b3():
    return cyclic_square(3)


@pytest.fixture
def rng():
    return random.Random(20160)


@pytest.fixture
def steiner9(sts9):
    return steiner_square(sts9)
