import pytest

from taulattice.algebra import (
    Arrow,
    BoundQuiverPresentation,
    InfiniteDimensional,
    InvalidPresentation,
    Path,
    build_algebra,
    opposite_algebra,
    product,
)
from taulattice.corpus import corpus, kronecker, linear_a, truncated_polynomial
from taulattice.linalg import Field


def count_paths(pres, max_len=12):
    """Relation-avoiding paths, by expanding arrow words directly."""
    arrows = pres.arrows
    rels = [tuple(r) for r in pres.relations]

    def bad(word):
        return any(word[i : i + len(r)] == r for r in rels for i in range(len(word) - len(r) + 1))

    total = len(pres.vertices)
    layer = [(a.name,) for a in arrows]
    by_name = pres.arrow_map
    for _ in range(max_len):
        layer = [w for w in layer if not bad(w)]
        total += len(layer)
        layer = [w + (a.name,) for w in layer for a in arrows if by_name[w[-1]].target == a.source]
    assert not [w for w in layer if not bad(w)], "not finite within max_len"
    return total


def test_a2_dimension():
    assert build_algebra(linear_a(2)).dimension == 3


def test_dual_numbers_dimension():
    assert build_algebra(truncated_polynomial(2)).dimension == 2


def test_a3_with_relation_dimension():
    assert build_algebra(linear_a(3, relations=(("a1", "a2"),))).dimension == 5


@pytest.mark.parametrize("name", list(corpus()))
def test_basis_matches_independent_path_count(name):
    pres = corpus()[name]
    assert build_algebra(pres).dimension == count_paths(pres)


def test_multiplication_follows_path_order():
    A = build_algebra(linear_a(3))
    a1, a2 = A.arrow_path("a1"), A.arrow_path("a2")
    assert A.multiply(a1, a2) == Path("1", "3", ("a1", "a2"))
    assert A.multiply(a2, a1) is None
    A_rel = build_algebra(linear_a(3, relations=(("a1", "a2"),)))
    assert A_rel.multiply(A_rel.arrow_path("a1"), A_rel.arrow_path("a2")) is None


def test_idempotents_are_orthogonal():
    A = build_algebra(linear_a(3))
    e = {v: Path(v, v) for v in A.vertices}
    for v in A.vertices:
        assert A.multiply(e[v], e[v]) == e[v]
        for w in A.vertices:
            if v != w:
                assert A.multiply(e[v], e[w]) is None


def test_arrow_ideal_is_nilpotent():
    for pres in corpus().values():
        A = build_algebra(pres)
        longest = max(p.length for p in A.basis)
        assert A.nilpotency_index == longest + 1


def test_unbounded_loop_is_infinite_dimensional():
    pres = BoundQuiverPresentation(("1",), (Arrow("x", "1", "1"),), ())
    with pytest.raises(InfiniteDimensional):
        build_algebra(pres)


def test_kronecker_is_finite_dimensional():
    assert build_algebra(kronecker()).dimension == 4


def test_invalid_presentations():
    with pytest.raises(InvalidPresentation):
        BoundQuiverPresentation(("1", "1"), ())
    with pytest.raises(InvalidPresentation):
        BoundQuiverPresentation(("1",), (Arrow("a", "1", "3"),))
    with pytest.raises(InvalidPresentation):
        BoundQuiverPresentation(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "1", "2")), (("a", "b"),))
    with pytest.raises(InvalidPresentation):
        BoundQuiverPresentation(("1",), (Arrow("x", "1", "1"),), (("x",),))


def test_opposite_of_a2_reverses_arrow():
    op = opposite_algebra(linear_a(2))
    assert op.arrows == (Arrow("a1", "2", "1"),)


def test_opposite_of_loop_is_itself():
    pres = truncated_polynomial(2)
    op = opposite_algebra(pres)
    assert op.arrows == pres.arrows and op.relations == pres.relations


def test_opposite_reverses_relations():
    op = opposite_algebra(linear_a(3, relations=(("a1", "a2"),)))
    assert op.relations == (("a2", "a1"),)
    assert {a.name: (a.source, a.target) for a in op.arrows} == {"a1": ("2", "1"), "a2": ("3", "2")}
    assert build_algebra(op).dimension == 5


def test_opposite_algebra_is_cached_and_involutive():
    A = build_algebra(linear_a(3))
    assert A.opposite.opposite is A
    assert A.opposite.dimension == A.dimension


def test_product_dimensions_add():
    a, b = truncated_polynomial(2, vertex="1"), truncated_polynomial(3, vertex="2", arrow="y")
    assert build_algebra(product(a, b)).dimension == 5
    with pytest.raises(InvalidPresentation):
        product(a, truncated_polynomial(2, Field(3), vertex="3", arrow="z"))
