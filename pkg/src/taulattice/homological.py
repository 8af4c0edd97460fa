"""Projective presentations, the Nakayama functor, transpose and the AR translate."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import Path, PathAlgebra
from .modules import (
    Morphism,
    Representation,
    direct_sum,
    dual,
    injective,
    kernel,
    cokernel,
    projective,
    radical_spaces,
    submodule,
    zero_module,
)

# An algebra element of e_u A e_v, as {path: coefficient}.
Element = dict


def projective_sum(algebra: PathAlgebra, vertices: Sequence[str]) -> Representation:
    if not vertices:
        return zero_module(algebra)
    return direct_sum([projective(algebra, v) for v in vertices])[0]


def injective_sum(algebra: PathAlgebra, vertices: Sequence[str]) -> Representation:
    if not vertices:
        return zero_module(algebra)
    return direct_sum([injective(algebra, v) for v in vertices])[0]


def element_morphism(algebra: PathAlgebra, src: Sequence[str], tgt: Sequence[str],
                     entries: Sequence[Sequence[Element]]) -> Morphism:
    """The map ``(+) P_src -> (+) P_tgt`` sending ``e_src[s]`` to ``sum_t entries[t][s]``.

    ``entries[t][s]`` lies in ``e_tgt[t] A e_src[s]`` and acts by left multiplication.
    """
    f = algebra.field
    P, Q = projective_sum(algebra, src), projective_sum(algebra, tgt)
    blocks = []
    for k in algebra.vertices:
        col_paths = [(s, q) for s, v in enumerate(src) for q in algebra.paths(v, k)]
        row_index = {}
        for t, u in enumerate(tgt):
            for q in algebra.paths(u, k):
                row_index[(t, q)] = len(row_index)
        mat = f.zeros(len(row_index), len(col_paths))
        for c, (s, q) in enumerate(col_paths):
            for t in range(len(tgt)):
                for p, coeff in entries[t][s].items():
                    pq = algebra.multiply(p, q)
                    if pq is not None:
                        r = row_index[(t, pq)]
                        mat[r, c] = f.add(mat[r, c], f.scalar(coeff))
        blocks.append(mat)
    return Morphism(P, Q, tuple(blocks))


def nakayama_morphism(algebra: PathAlgebra, src: Sequence[str], tgt: Sequence[str],
                      entries: Sequence[Sequence[Element]]) -> Morphism:
    """nu applied to :func:`element_morphism`: a map ``(+) I_src -> (+) I_tgt``.

    On ``D(A e_i) -> D(A e_j)`` the component is ``phi -> phi(- . a)``.
    """
    f = algebra.field
    I, J = injective_sum(algebra, src), injective_sum(algebra, tgt)
    blocks = []
    for k in algebra.vertices:
        col_index = {}
        for s, v in enumerate(src):
            for q in algebra.paths(k, v):
                col_index[(s, q)] = len(col_index)
        row_paths = [(t, q) for t, u in enumerate(tgt) for q in algebra.paths(k, u)]
        mat = f.zeros(len(row_paths), len(col_index))
        for r, (t, q2) in enumerate(row_paths):
            for s in range(len(src)):
                for p, coeff in entries[t][s].items():
                    prod = algebra.multiply(q2, p)
                    if prod is not None:
                        c = col_index[(s, prod)]
                        mat[r, c] = f.add(mat[r, c], f.scalar(coeff))
        blocks.append(mat)
    return Morphism(I, J, tuple(blocks))


@dataclass(frozen=True)
class ProjectivePresentation:
    """``P1 --map--> P0 --cover--> M -> 0`` with P0 and P1 projective covers."""

    module: Representation
    p1_vertices: tuple[str, ...]
    p0_vertices: tuple[str, ...]
    entries: tuple[tuple[Element, ...], ...]  # entries[t][s] in e_{p0[t]} A e_{p1[s]}
    cover: Morphism
    map: Morphism

    @property
    def P0(self) -> Representation:
        return self.cover.source

    @property
    def P1(self) -> Representation:
        return self.map.source


def _top_generators(M: Representation) -> list[tuple[str, np.ndarray]]:
    """(vertex, vector) pairs whose images form a basis of top M."""
    f = M.field
    gens = []
    for v, rad, d in zip(M.algebra.vertices, radical_spaces(M), M.dims):
        comp = f.complement(rad, d)
        for k in range(comp.shape[1]):
            gens.append((v, comp[:, k : k + 1]))
    return gens


def projective_cover(M: Representation) -> tuple[tuple[str, ...], Morphism]:
    """Vertices of the summands of P0 and the cover map P0 -> M."""
    alg = M.algebra
    f = M.field
    gens = _top_generators(M)
    vertices = tuple(v for v, _ in gens)
    P0 = projective_sum(alg, vertices)
    blocks = []
    for k in alg.vertices:
        cols = []
        for v, g in gens:
            for q in alg.paths(v, k):
                cols.append(f.matmul(M.path_matrix(q), g))
        if cols:
            blocks.append(np.concatenate(cols, axis=1))
        else:
            blocks.append(f.zeros(M.dim_at(k), 0))
    return vertices, Morphism(P0, M, tuple(blocks))


def minimal_projective_presentation(M: Representation) -> ProjectivePresentation:
    alg = M.algebra
    f = M.field
    p0, cover = projective_cover(M)
    K, inc = kernel(cover)
    gens = _top_generators(K)
    p1 = tuple(v for v, _ in gens)
    entries = [[{} for _ in p1] for _ in p0]
    for s, (v, g) in enumerate(gens):
        vec = f.matmul(inc(v), g).reshape(-1)
        pos = 0
        for t, u in enumerate(p0):
            for q in alg.paths(u, v):
                c = vec[pos]
                if c != 0:
                    entries[t][s][q] = c
                pos += 1
        assert pos == len(vec)
    frozen = tuple(tuple(row) for row in entries)
    phi = element_morphism(alg, p1, p0, frozen)
    return ProjectivePresentation(M, p1, p0, frozen, cover, phi)


def is_projective(M: Representation) -> bool:
    _, cover = projective_cover(M)
    return cover.source.dimension == M.dimension


def tau(M: Representation) -> Representation:
    """Auslander-Reiten translate, as the kernel of nu(P1) -> nu(P0)."""
    pres = minimal_projective_presentation(M)
    if not pres.p1_vertices:
        return zero_module(M.algebra)
    nu = nakayama_morphism(M.algebra, pres.p1_vertices, pres.p0_vertices, pres.entries)
    return kernel(nu)[0]


def is_tau_rigid(M: Representation) -> bool:
    """Hom(M, tau M) = 0."""
    from .modules import hom_dim

    T = tau(M)
    return T.is_zero() or hom_dim(M, T) == 0


def transpose(M: Representation) -> Representation:
    """Auslander-Bridger transpose, a module over the opposite algebra."""
    alg = M.algebra
    op = alg.opposite
    pres = minimal_projective_presentation(M)
    if not pres.p1_vertices:
        return zero_module(op)
    rev = PathAlgebra.reverse
    entries = tuple(
        tuple({rev(p): c for p, c in pres.entries[t][s].items()} for t in range(len(pres.p0_vertices)))
        for s in range(len(pres.p1_vertices))
    )
    star = element_morphism(op, pres.p0_vertices, pres.p1_vertices, entries)
    return cokernel(star)[0]


def tau_via_transpose(M: Representation) -> Representation:
    """``D Tr M``, an independent route to the AR translate."""
    return dual(transpose(M), M.algebra)


def tau_inverse(M: Representation) -> Representation:
    """``Tr D M``."""
    return transpose(dual(M, M.algebra.opposite))
