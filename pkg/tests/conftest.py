from functools import lru_cache

import pytest

from taulattice.algebra import build_algebra
from taulattice.corpus import corpus, linear_a, truncated_polynomial, base_field
from taulattice.linalg import Field
from taulattice.modules import projective, simple
from taulattice.tau_tilting import enumerate_mutation_graph


def corpus_algebra(name, p=2):
    return _algebra(name, p)


def corpus_graph(name, p=2):
    return _graph(name, p)


@lru_cache(maxsize=None)
def _algebra(name, p):
    return build_algebra(corpus(Field(p))[name])


@lru_cache(maxsize=None)
def _graph(name, p):
    return enumerate_mutation_graph(_algebra(name, p))


CORPUS_NAMES = list(corpus())
BOOLEAN_NAMES = [n for n, pres in corpus().items() if all(a.source == a.target for a in pres.arrows)]
NON_BOOLEAN_NAMES = [n for n in CORPUS_NAMES if n not in BOOLEAN_NAMES]


@pytest.fixture
def A2():
    return build_algebra(linear_a(2))


@pytest.fixture
def A3():
    return build_algebra(linear_a(3))


@pytest.fixture
def dual_numbers():
    return build_algebra(truncated_polynomial(2))


@pytest.fixture
def KxK():
    from taulattice.algebra import product

    return build_algebra(product(base_field(vertex="1"), base_field(vertex="2")))


@pytest.fixture
def a2_modules(A2):
    """P1 (the 2-dimensional projective), P2 = S2, S1."""
    return projective(A2, "1"), projective(A2, "2"), simple(A2, "1"), simple(A2, "2")


# -- acceptance criteria summary ---------------------------------------------------------

CRITERIA: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        title, ok = CRITERIA[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}")
