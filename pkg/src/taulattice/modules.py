"""Finite-dimensional right modules as quiver representations, and their morphisms.

An arrow ``a: s -> t`` acts on a representation ``M`` by a matrix of shape
``(dim M_t, dim M_s)``, so a path acts by the product of its arrow matrices
taken right to left.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .algebra import Path, PathAlgebra
from .linalg import Field


class ZeroModule(ValueError):
    pass


class Representation:
    """A right module over a path algebra, given by vertex dimensions and arrow matrices."""

    def __init__(self, algebra: PathAlgebra, dims: Sequence[int], maps: Optional[Mapping[str, np.ndarray]] = None,
                 check: bool = True, name: str = ""):
        self.algebra = algebra
        self.field: Field = algebra.field
        self.dims = tuple(int(d) for d in dims)
        self.name = name
        if len(self.dims) != algebra.n:
            raise ValueError(f"expected {algebra.n} dimensions, got {len(self.dims)}")
        maps = dict(maps or {})
        self.maps: dict[str, np.ndarray] = {}
        for a in algebra.arrows:
            s, t = self.dim_at(a.source), self.dim_at(a.target)
            m = maps.pop(a.name, None)
            if m is None:
                m = self.field.zeros(t, s)
            else:
                m = self.field.reduce(np.asarray(m, dtype=object).reshape(t, s)) if check else m
            if m.shape != (t, s):
                raise ValueError(f"arrow {a.name}: matrix shape {m.shape}, expected {(t, s)}")
            self.maps[a.name] = m
        if maps:
            raise ValueError(f"unknown arrows {sorted(maps)}")
        if check:
            for rel in algebra.presentation.relations:
                if self.path_matrix(Path(algebra.arrow_map[rel[0]].source, algebra.arrow_map[rel[-1]].target, rel)).any():
                    raise ValueError(f"relation {' '.join(rel)} does not act as zero")

    # -- basic data ---------------------------------------------------------
    def dim_at(self, vertex: str) -> int:
        return self.dims[self.algebra.vertex_index[vertex]]

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    @property
    def dimension_vector(self) -> tuple[int, ...]:
        return self.dims

    def is_zero(self) -> bool:
        return self.dimension == 0

    @cached_property
    def offsets(self) -> list[int]:
        out, acc = [], 0
        for d in self.dims:
            out.append(acc)
            acc += d
        return out

    def support(self) -> list[str]:
        return [v for v, d in zip(self.algebra.vertices, self.dims) if d]

    def path_matrix(self, path: Path) -> np.ndarray:
        mat = self.field.eye(self.dim_at(path.start))
        for name in path.arrows:
            mat = self.field.matmul(self.maps[name], mat)
        return mat

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<Representation{label} dim={list(self.dims)}>"

    def __eq__(self, other):
        if not isinstance(other, Representation) or other.algebra is not self.algebra or other.dims != self.dims:
            return False
        return all(np.array_equal(self.maps[a], other.maps[a]) for a in self.maps)

    def __hash__(self):
        return hash((self.dims, tuple(tuple(np.asarray(m).reshape(-1).tolist()) for m in self.maps.values())))

    def key(self) -> tuple:
        """Exact matrix data, usable as a dictionary key for this presentation."""
        return (self.dims, tuple(tuple(str(x) for x in np.asarray(self.maps[a.name]).reshape(-1))
                                 for a in self.algebra.arrows))


@dataclass(frozen=True)
class Morphism:
    source: Representation
    target: Representation
    blocks: tuple[np.ndarray, ...]

    @property
    def field(self) -> Field:
        return self.source.field

    def is_zero(self) -> bool:
        return not any(b.any() for b in self.blocks)

    def __call__(self, vertex: str) -> np.ndarray:
        return self.blocks[self.source.algebra.vertex_index[vertex]]

    def total(self) -> np.ndarray:
        """Block-diagonal matrix on the total spaces."""
        f = self.field
        out = f.zeros(self.target.dimension, self.source.dimension)
        for i, b in enumerate(self.blocks):
            r, c = self.target.offsets[i], self.source.offsets[i]
            out[r : r + b.shape[0], c : c + b.shape[1]] = b
        return out

    def compose(self, other: "Morphism") -> "Morphism":
        """``self o other`` (first ``other``, then ``self``)."""
        f = self.field
        return Morphism(other.source, self.target,
                        tuple(f.matmul(a, b) for a, b in zip(self.blocks, other.blocks)))

    def __add__(self, other: "Morphism") -> "Morphism":
        f = self.field
        return Morphism(self.source, self.target, tuple(f.add(a, b) for a, b in zip(self.blocks, other.blocks)))

    def scale(self, c) -> "Morphism":
        f = self.field
        return Morphism(self.source, self.target, tuple(f.scale(c, b) for b in self.blocks))

    def is_iso(self) -> bool:
        f = self.field
        return all(b.shape[0] == b.shape[1] and f.is_invertible(b) for b in self.blocks)

    def is_intertwiner(self) -> bool:
        f = self.field
        alg = self.source.algebra
        for a in alg.arrows:
            s, t = alg.vertex_index[a.source], alg.vertex_index[a.target]
            lhs = f.matmul(self.target.maps[a.name], self.blocks[s])
            rhs = f.matmul(self.blocks[t], self.source.maps[a.name])
            if not np.array_equal(f.sub(lhs, rhs), f.zeros(*lhs.shape)):
                return False
        return True


def from_total(source: Representation, target: Representation, total: np.ndarray) -> Morphism:
    blocks = []
    for i in range(source.algebra.n):
        r, c = target.offsets[i], source.offsets[i]
        blocks.append(total[r : r + target.dims[i], c : c + source.dims[i]].copy())
    return Morphism(source, target, tuple(blocks))


def identity(M: Representation) -> Morphism:
    return Morphism(M, M, tuple(M.field.eye(d) for d in M.dims))


def zero_morphism(M: Representation, N: Representation) -> Morphism:
    return Morphism(M, N, tuple(M.field.zeros(b, a) for a, b in zip(M.dims, N.dims)))


def zero_module(algebra: PathAlgebra) -> Representation:
    return Representation(algebra, [0] * algebra.n)


# ---------------------------------------------------------------------------
# Hom spaces

def hom_space(M: Representation, N: Representation) -> list[Morphism]:
    """A basis of Hom_A(M, N), solved from the intertwining equations."""
    if M.algebra is not N.algebra:
        raise ValueError("modules over different algebras")
    f = M.field
    alg = M.algebra
    sizes = [n * m for m, n in zip(M.dims, N.dims)]
    offs = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    total = int(offs[-1])
    if total == 0:
        return []
    rows = []
    for a in alg.arrows:
        s, t = alg.vertex_index[a.source], alg.vertex_index[a.target]
        ms, mt, ns, nt = M.dims[s], M.dims[t], N.dims[s], N.dims[t]
        if nt * ms == 0:
            continue
        block = f.zeros(nt * ms, total)
        # N_a f_s - f_t M_a = 0, with each f_v vectorised row-major
        if ns:
            block[:, offs[s] : offs[s + 1]] = _kron(f, N.maps[a.name], f.eye(ms))
        if mt:
            block[:, offs[t] : offs[t + 1]] = f.sub(block[:, offs[t] : offs[t + 1]],
                                                    _kron(f, f.eye(nt), M.maps[a.name].T))
        rows.append(block)
    system = np.concatenate(rows, axis=0) if rows else f.zeros(0, total)
    kernel = f.nullspace(system)
    out = []
    for k in range(kernel.shape[1]):
        vec = kernel[:, k]
        blocks = tuple(vec[offs[i] : offs[i + 1]].reshape(N.dims[i], M.dims[i]) for i in range(alg.n))
        out.append(Morphism(M, N, blocks))
    return out


def _kron(f: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = f.zeros(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            if a[i, j] != 0:
                out[i * b.shape[0] : (i + 1) * b.shape[0], j * b.shape[1] : (j + 1) * b.shape[1]] = f.scale(a[i, j], b)
    return out


def hom_dim(M: Representation, N: Representation) -> int:
    return len(hom_space(M, N))


# ---------------------------------------------------------------------------
# submodules, quotients, kernels, cokernels

def _span(f: Field, mat: np.ndarray) -> np.ndarray:
    return f.column_basis(mat) if mat.shape[1] else mat


def generated_subspaces(M: Representation, gens: Sequence[np.ndarray]) -> list[np.ndarray]:
    """Per-vertex bases of the submodule generated by column vectors ``gens[v]``."""
    f = M.field
    alg = M.algebra
    spaces = [_span(f, g) for g in gens]
    changed = True
    while changed:
        changed = False
        for a in alg.arrows:
            s, t = alg.vertex_index[a.source], alg.vertex_index[a.target]
            if spaces[s].shape[1] == 0 or M.dims[t] == 0:
                continue
            img = f.matmul(M.maps[a.name], spaces[s])
            trial = np.concatenate([spaces[t], img], axis=1)
            if f.rank(trial) > spaces[t].shape[1]:
                spaces[t] = _span(f, trial)
                changed = True
    return spaces


def submodule(M: Representation, spaces: Sequence[np.ndarray]) -> tuple[Representation, Morphism]:
    """The submodule with the given (arrow-stable) per-vertex bases and its inclusion."""
    f = M.field
    alg = M.algebra
    maps = {}
    for a in alg.arrows:
        s, t = alg.vertex_index[a.source], alg.vertex_index[a.target]
        img = f.matmul(M.maps[a.name], spaces[s])
        x = f.solve(spaces[t], img)
        if x is None:
            raise ValueError(f"subspaces are not stable under arrow {a.name}")
        maps[a.name] = x
    N = Representation(alg, [s.shape[1] for s in spaces], maps, check=False)
    return N, Morphism(N, M, tuple(s.copy() for s in spaces))


def quotient(M: Representation, spaces: Sequence[np.ndarray]) -> tuple[Representation, Morphism]:
    """``M / N`` for the submodule with per-vertex bases ``spaces``, with its projection."""
    f = M.field
    alg = M.algebra
    projs, lifts = [], []
    for i, sp in enumerate(spaces):
        d = M.dims[i]
        comp = f.complement(sp, d)
        basis = np.concatenate([sp, comp], axis=1) if d else f.zeros(0, 0)
        inv = f.inverse(basis) if d else f.zeros(0, 0)
        projs.append(inv[sp.shape[1]:, :])
        lifts.append(comp)
    maps = {}
    for a in alg.arrows:
        s, t = alg.vertex_index[a.source], alg.vertex_index[a.target]
        maps[a.name] = f.matmul(projs[t], f.matmul(M.maps[a.name], lifts[s]))
    Q = Representation(alg, [c.shape[1] for c in lifts], maps, check=False)
    return Q, Morphism(M, Q, tuple(projs))


def kernel(phi: Morphism) -> tuple[Representation, Morphism]:
    f = phi.field
    spaces = [f.nullspace(b) if b.shape[1] else f.zeros(0, 0) for b in phi.blocks]
    spaces = [s if s.shape[0] == d else f.zeros(d, 0) for s, d in zip(spaces, phi.source.dims)]
    return submodule(phi.source, spaces)


def image_spaces(phi: Morphism) -> list[np.ndarray]:
    f = phi.field
    return [_span(f, b) if b.shape[1] else f.zeros(b.shape[0], 0) for b in phi.blocks]


def image(phi: Morphism) -> tuple[Representation, Morphism]:
    return submodule(phi.target, image_spaces(phi))


def cokernel(phi: Morphism) -> tuple[Representation, Morphism]:
    return quotient(phi.target, image_spaces(phi))


def sum_of_images(target: Representation, maps: Iterable[Morphism]) -> list[np.ndarray]:
    """Per-vertex bases of the sum of the images of ``maps`` inside ``target``."""
    f = target.field
    cols = [[f.zeros(d, 0)] for d in target.dims]
    for phi in maps:
        for i, b in enumerate(phi.blocks):
            if b.shape[1]:
                cols[i].append(b)
    return [_span(f, np.concatenate(c, axis=1)) for c in cols]


def radical_spaces(M: Representation) -> list[np.ndarray]:
    """rad M: the span of the images of all arrows."""
    f = M.field
    alg = M.algebra
    cols = [[f.zeros(d, 0)] for d in M.dims]
    for a in alg.arrows:
        t = alg.vertex_index[a.target]
        if M.dims[t]:
            cols[t].append(M.maps[a.name])
    return [_span(f, np.concatenate(c, axis=1)) for c in cols]


def socle_spaces(M: Representation) -> list[np.ndarray]:
    """soc M: vectors killed by every arrow."""
    f = M.field
    alg = M.algebra
    out = []
    for i, v in enumerate(alg.vertices):
        outs = [M.maps[a.name] for a in alg.arrows if a.source == v and M.dim_at(a.target)]
        if not outs or M.dims[i] == 0:
            out.append(f.eye(M.dims[i]))
        else:
            out.append(f.nullspace(np.concatenate(outs, axis=0)))
    return out


def top(M: Representation) -> tuple[Representation, Morphism]:
    return quotient(M, radical_spaces(M))


def direct_sum(modules: Sequence[Representation]) -> tuple[Representation, list[Morphism], list[Morphism]]:
    """``(S, inclusions, projections)`` for the direct sum of ``modules``."""
    if not modules:
        raise ValueError("empty direct sum")
    alg = modules[0].algebra
    f = alg.field
    dims = [sum(M.dims[i] for M in modules) for i in range(alg.n)]
    maps = {}
    for a in alg.arrows:
        s, t = alg.vertex_index[a.source], alg.vertex_index[a.target]
        mat = f.zeros(dims[t], dims[s])
        r = c = 0
        for M in modules:
            mat[r : r + M.dims[t], c : c + M.dims[s]] = M.maps[a.name]
            r += M.dims[t]
            c += M.dims[s]
        maps[a.name] = mat
    S = Representation(alg, dims, maps, check=False)
    incs, projs = [], []
    offs = [0] * alg.n
    for M in modules:
        inc, proj = [], []
        for i in range(alg.n):
            e = f.zeros(dims[i], M.dims[i])
            for k in range(M.dims[i]):
                e[offs[i] + k, k] = f.scalar(1)
            inc.append(e)
            proj.append(e.T.copy())
            offs[i] += M.dims[i]
        incs.append(Morphism(M, S, tuple(inc)))
        projs.append(Morphism(S, M, tuple(proj)))
    return S, incs, projs


def trace_spaces(M: Representation, X: Representation) -> list[np.ndarray]:
    """Per-vertex bases of the trace of M in X (sum of images of all maps M -> X)."""
    return sum_of_images(X, hom_space(M, X))


def in_fac(M: Representation, X: Representation) -> bool:
    """Whether X is a quotient of a finite direct sum of copies of M."""
    if X.is_zero():
        return True
    return all(s.shape[1] == d for s, d in zip(trace_spaces(M, X), X.dims))


def in_fac_of(summands: Sequence[Representation], X: Representation) -> bool:
    if X.is_zero():
        return True
    maps = [phi for M in summands for phi in hom_space(M, X)]
    return all(s.shape[1] == d for s, d in zip(sum_of_images(X, maps), X.dims))


# ---------------------------------------------------------------------------
# simples, projectives, injectives

def simple(algebra: PathAlgebra, vertex: str) -> Representation:
    dims = [1 if v == vertex else 0 for v in algebra.vertices]
    return Representation(algebra, dims, name=f"S{vertex}")


def simples(algebra: PathAlgebra) -> list[Representation]:
    return [simple(algebra, v) for v in algebra.vertices]


def projective(algebra: PathAlgebra, vertex: str) -> Representation:
    """``P_v = e_v A``: basis at ``w`` is the nonzero paths from ``v`` to ``w``."""
    f = algebra.field
    bases = {w: algebra.paths(vertex, w) for w in algebra.vertices}
    maps = {}
    for a in algebra.arrows:
        src, tgt = bases[a.source], bases[a.target]
        mat = f.zeros(len(tgt), len(src))
        tindex = {p: k for k, p in enumerate(tgt)}
        ap = algebra.arrow_path(a.name)
        for c, p in enumerate(src):
            q = algebra.multiply(p, ap)
            if q is not None:
                mat[tindex[q], c] = f.scalar(1)
        maps[a.name] = mat
    dims = [len(bases[w]) for w in algebra.vertices]
    return Representation(algebra, dims, maps, name=f"P{vertex}")


def projectives(algebra: PathAlgebra) -> list[Representation]:
    return [projective(algebra, v) for v in algebra.vertices]


def injective(algebra: PathAlgebra, vertex: str) -> Representation:
    """``I_v = D(A e_v)``: basis at ``w`` is dual to the nonzero paths from ``w`` to ``v``."""
    f = algebra.field
    bases = {w: algebra.paths(w, vertex) for w in algebra.vertices}
    maps = {}
    for a in algebra.arrows:
        src, tgt = bases[a.source], bases[a.target]
        mat = f.zeros(len(tgt), len(src))
        sindex = {p: k for k, p in enumerate(src)}
        ap = algebra.arrow_path(a.name)
        # (p* . a)(q) = p*(a q): p* maps to q* exactly when p = a q
        for r, q in enumerate(tgt):
            p = algebra.multiply(ap, q)
            if p is not None:
                mat[r, sindex[p]] = f.scalar(1)
        maps[a.name] = mat
    dims = [len(bases[w]) for w in algebra.vertices]
    return Representation(algebra, dims, maps, name=f"I{vertex}")


def injectives(algebra: PathAlgebra) -> list[Representation]:
    return [injective(algebra, v) for v in algebra.vertices]


def regular_module(algebra: PathAlgebra) -> Representation:
    return direct_sum(projectives(algebra))[0]


def dual(N: Representation, algebra: PathAlgebra) -> Representation:
    """Vector-space dual: a module over the opposite of N's algebra becomes one over ``algebra``."""
    maps = {name: m.T.copy() for name, m in N.maps.items()}
    return Representation(algebra, N.dims, maps, check=False)
