import pytest
from hypothesis import given, settings, strategies as st

from conftest import corpus_algebra
from taulattice.algebra import build_algebra
from taulattice.corpus import kronecker, linear_a, truncated_polynomial
from taulattice.lattice import boolean_cube, chain, find_isomorphism, pentagon
from taulattice.linalg import Field
from taulattice.modules import projective
from taulattice.oracle import (
    NoFixture,
    OracleTooLarge,
    bruteforce_torsion_classes,
    indecomposables,
    oracle_for,
    submodules,
    subspaces,
)


def gaussian_binomial(d, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@given(d=st.integers(0, 4), p=st.sampled_from([2, 3]))
@settings(max_examples=20, deadline=None)
def test_subspace_count_is_gaussian_binomial(d, p):
    f = Field(p)
    subs = list(subspaces(f, d))
    assert len(subs) == sum(gaussian_binomial(d, k, p) for k in range(d + 1))
    assert all(f.rank(s) == s.shape[1] for s in subs)


def test_subspaces_need_finite_field():
    with pytest.raises(OracleTooLarge):
        list(subspaces(Field(0), 1))


def test_uniserial_projective_has_chain_of_submodules():
    A = build_algebra(truncated_polynomial(3, Field(3)))
    assert len(list(submodules(projective(A, "1")))) == 4


def test_interval_counts():
    assert len(indecomposables(corpus_algebra("A3"))) == 6
    assert len(indecomposables(corpus_algebra("A3/(a1a2)"))) == 5
    assert len(indecomposables(corpus_algebra("K[x]/(x^4)"))) == 4


@pytest.mark.parametrize("name,expected", [("A2", pentagon()), ("K x K", boolean_cube(2)), ("K", chain(2))])
def test_oracle_shapes(name, expected):
    assert find_isomorphism(oracle_for(corpus_algebra(name)), expected) is not None


def test_a3_oracle_size():
    assert len(oracle_for(corpus_algebra("A3"))) == 14


def test_oracle_limits():
    A = build_algebra(linear_a(3))
    with pytest.raises(OracleTooLarge):
        oracle_for(A, dim_limit=1)
    with pytest.raises(OracleTooLarge):
        oracle_for(A, submodule_limit=1)
    with pytest.raises(ValueError):
        bruteforce_torsion_classes([])


def test_kronecker_has_no_fixture():
    with pytest.raises(NoFixture):
        indecomposables(build_algebra(kronecker()))
