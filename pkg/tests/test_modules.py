import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from taulattice.algebra import build_algebra
from taulattice.corpus import corpus, linear_a, truncated_polynomial
from taulattice.linalg import Field
from taulattice.modules import (
    Representation,
    ZeroModule,
    cokernel,
    direct_sum,
    hom_dim,
    hom_space,
    image,
    in_fac,
    injective,
    injectives,
    kernel,
    projective,
    projectives,
    radical_spaces,
    simple,
    simples,
    socle_spaces,
    top,
)


def random_rep(algebra, seed, max_dim=2):
    """Random module over a path algebra with no relations, or over K[x]/(x^m)."""
    rng = np.random.default_rng(seed)
    f = algebra.field
    p = f.p or 5
    dims = [int(rng.integers(0, max_dim + 1)) for _ in algebra.vertices]
    maps = {}
    for a in algebra.arrows:
        s, t = algebra.vertex_index[a.source], algebra.vertex_index[a.target]
        if a.source == a.target:
            # conjugate of a strictly lower triangular matrix
            d = dims[s]
            low = np.tril(rng.integers(0, p, (d, d)), -1)
            while True:
                g = rng.integers(0, p, (d, d))
                if f.is_invertible(f.array(g) if d else f.zeros(0, 0)):
                    break
            g = f.array(g) if d else f.zeros(0, 0)
            maps[a.name] = f.matmul(f.matmul(g, f.array(low) if d else f.zeros(0, 0)), f.inverse(g)) if d else g
        else:
            maps[a.name] = f.array(rng.integers(0, p, (dims[t], dims[s]))) if dims[s] and dims[t] \
                else f.zeros(dims[t], dims[s])
    return Representation(algebra, dims, maps)


def brute_hom_dim(M, N):
    """Count intertwiners over GF(2) by enumerating every family of matrices."""
    alg = M.algebra
    shapes = [(N.dims[i], M.dims[i]) for i in range(alg.n)]
    sizes = [r * c for r, c in shapes]
    count = 0
    for bits in itertools.product((0, 1), repeat=sum(sizes)):
        blocks, pos = [], 0
        for (r, c), k in zip(shapes, sizes):
            blocks.append(np.array(bits[pos : pos + k], dtype=np.int64).reshape(r, c))
            pos += k
        ok = True
        for a in alg.arrows:
            s, t = alg.vertex_index[a.source], alg.vertex_index[a.target]
            if ((N.maps[a.name] @ blocks[s]) % 2 != (blocks[t] @ M.maps[a.name]) % 2).any():
                ok = False
                break
        count += ok
    return int(round(np.log2(count)))


@pytest.fixture
def A2():
    return build_algebra(linear_a(2))


def test_a2_projective_dimensions(A2):
    assert projective(A2, "1").dims == (1, 1)
    assert projective(A2, "2").dims == (0, 1)


def test_dual_numbers_projective_and_simple():
    A = build_algebra(truncated_polynomial(2))
    assert projective(A, "1").dimension == 2
    assert simple(A, "1").dimension == 1


def test_semisimple_projectives_are_simple():
    A = build_algebra(corpus()["K x K"])
    for v in A.vertices:
        assert projective(A, v).dims == simple(A, v).dims


def test_distinct_simples_have_no_maps(A2):
    S1, S2 = simples(A2)
    assert hom_dim(S1, S2) == 0 and hom_dim(S2, S1) == 0


def test_a2_hom_examples(A2):
    P1 = projective(A2, "1")
    assert hom_dim(P1, P1) == 1
    assert hom_dim(P1, top(P1)[0]) == 1


def test_hom_basis_elements_intertwine(A2):
    P1, P2 = projectives(A2)
    for phi in hom_space(P2, P1):
        assert phi.is_intertwiner()


@pytest.mark.parametrize("name", ["A2", "A3", "A3[><]", "K[x]/(x^3)", "K[x]/(x^2) x K"])
@pytest.mark.parametrize("seed", range(4))
def test_hom_from_projective_is_vertex_space(name, seed):
    A = build_algebra(corpus()[name])
    M = random_rep(A, seed)
    for v in A.vertices:
        assert hom_dim(projective(A, v), M) == M.dim_at(v)
        assert hom_dim(M, injective(A, v)) == M.dim_at(v)


@pytest.mark.parametrize("seed", range(6))
def test_hom_dimension_matches_enumeration(seed):
    A = build_algebra(linear_a(3))
    M, N = random_rep(A, seed, 1), random_rep(A, seed + 100, 2)
    if sum(a * b for a, b in zip(M.dims, N.dims)) <= 10:
        assert hom_dim(M, N) == brute_hom_dim(M, N)


def test_relations_annihilate_projectives_and_injectives():
    for pres in corpus().values():
        A = build_algebra(pres)
        for M in projectives(A) + injectives(A):
            for rel in pres.relations:
                mat = M.path_matrix(_path(A, rel))
                assert not mat.any()


def _path(A, rel):
    from taulattice.algebra import Path

    src = A.presentation.arrow_map[rel[0]].source
    tgt = A.presentation.arrow_map[rel[-1]].target
    return Path(src, tgt, tuple(rel))


def test_relations_are_enforced():
    A = build_algebra(truncated_polynomial(2))
    f = A.field
    with pytest.raises(ValueError):
        Representation(A, [2], {"x": f.array([[0, 1], [1, 0]])})


def test_kernel_cokernel_dimensions(A2):
    P1, P2, = projectives(A2)
    inc = hom_space(P2, P1)[0]
    K, _ = kernel(inc)
    C, _ = cokernel(inc)
    assert K.is_zero()
    assert C.dims == (1, 0)
    assert image(inc)[0].dims == (0, 1)


def test_radical_and_socle(A2):
    P1 = projective(A2, "1")
    assert [s.shape[1] for s in radical_spaces(P1)] == [0, 1]
    assert [s.shape[1] for s in socle_spaces(P1)] == [0, 1]


def test_in_fac_examples(A2):
    P1 = projective(A2, "1")
    S1, S2 = simples(A2)
    assert in_fac(P1, P1)
    assert in_fac(P1, top(P1)[0])
    assert not in_fac(P1, S2)


def test_direct_sum_projections_split_inclusions(A2):
    S, incs, projs = direct_sum(projectives(A2))
    for i, inc in enumerate(incs):
        for j, pr in enumerate(projs):
            comp = pr.compose(inc)
            assert comp.is_iso() if i == j else comp.is_zero()


@given(seed=st.integers(0, 2**16), p=st.sampled_from([2, 3]))
@settings(max_examples=25, deadline=None)
def test_kernel_and_cokernel_dimensions_add_up(seed, p):
    A = build_algebra(linear_a(3, Field(p)))
    M, N = random_rep(A, seed), random_rep(A, seed + 1)
    homs = hom_space(M, N)
    if not homs:
        return
    phi = homs[0]
    K, _ = kernel(phi)
    C, _ = cokernel(phi)
    I, _ = image(phi)
    assert all(k + i == m for k, i, m in zip(K.dims, I.dims, M.dims))
    assert all(c + i == n for c, i, n in zip(C.dims, I.dims, N.dims))
