import logging
import random

import pytest

from semicovers.config import get_settings
from semicovers.core.cone import Cone
from semicovers.core.orders import OrderKind, TotalOrderSpec
from semicovers.semigroup.models import CSemigroup, GeneratedSemigroup
from semicovers.semigroup.operations import minimal_generators

STAR_RAYS = ((4, 1), (9, 5))
STAR_GAPS = ((2, 1), (3, 1))
STAR_GENERATORS = [(4, 1), (5, 2), (7, 2), (9, 5), (4, 2), (6, 2), (6, 3), (7, 3), (11, 6)]
CORPUS_RAYS = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (3, 2), (4, 1), (9, 5)]


@pytest.fixture(scope="session", autouse=True)
def configure_logging():
    """Configure logging for tests."""
    logging.basicConfig(level=logging.INFO)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Rebuild settings from a clean environment for every test."""
    for name in (
        "SEMICOVERS_COORD_LIMIT",
        "SEMICOVERS_DEGREE_CEILING",
        "SEMICOVERS_ORACLE_MAX_CANDIDATES",
        "SEMICOVERS_DEFAULT_ORDER",
        "LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def order():
    return TotalOrderSpec(kind=OrderKind.GRADED_REVCOORDLEX)


@pytest.fixture
def star_cone():
    return Cone(rays=STAR_RAYS)


@pytest.fixture
def sstar(star_cone, order):
    """The running two-dimensional example: cone over (4,1), (9,5) minus (2,1) and (3,1)."""
    return CSemigroup(cone=star_cone, gaps=frozenset(STAR_GAPS), order=order)


@pytest.fixture
def line():
    return Cone(rays=((1,),))


@pytest.fixture
def star_generators():
    return list(STAR_GENERATORS)


@pytest.fixture
def numerical(line):
    """Factory for numerical semigroups given by their gaps."""

    def make(gaps):
        return CSemigroup(cone=line, gaps=frozenset((h,) for h in gaps), order=TotalOrderSpec())

    return make


@pytest.fixture
def generated():
    """Factory for generated semigroups; ints stand for one-dimensional points."""

    def make(*gens):
        return GeneratedSemigroup(generators=tuple(g if isinstance(g, tuple) else (g,) for g in gens))

    return make


@pytest.fixture
def random_semigroups():
    """
    Factory for seeded two-dimensional C-semigroups.

    Each one starts from the cone over two random rays and loses between one
    and ``max_gaps`` minimal generators, one at a time.
    """

    def make(seed, count, max_gaps=10):
        rng = random.Random(seed)
        out = []
        for _ in range(count):
            s = CSemigroup(cone=Cone(rays=tuple(rng.sample(CORPUS_RAYS, 2))), order=TotalOrderSpec())
            for _ in range(rng.randint(1, max_gaps)):
                s = s.with_gaps(s.gaps | {rng.choice(minimal_generators(s))})
            out.append(s)
        return out

    return make
