"""Endomorphism algebras, Fitting splittings, direct-sum decomposition and isomorphism.

A module is split by finding an endomorphism ``g`` that is neither nilpotent
nor invertible; Fitting's lemma then gives ``M = ker g^N (+) im g^N``.  A
module is certified indecomposable by exhibiting its endomorphism algebra as
``K.1 + J`` with ``J`` a nilpotent ideal, which also yields the radical used by
the brick and approximation code.  Endomorphism algebras whose semisimple
quotient is a proper extension of the base field are not handled.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .linalg import Field
from .modules import Morphism, Representation, from_total, hom_space, submodule

EXHAUSTIVE_LIMIT = 4096


class DecompositionFailure(RuntimeError):
    pass


class NonSplitEndomorphisms(DecompositionFailure):
    """The semisimple quotient of End(M) is not a product of copies of the base field."""


@dataclass(frozen=True)
class LocalStructure:
    """End(M) = K.1 (+) J for an indecomposable M."""

    basis: tuple[np.ndarray, ...]  # total matrices of an End(M) basis
    radical: tuple[np.ndarray, ...]  # basis of J


def endomorphism_basis(M: Representation) -> list[np.ndarray]:
    return [phi.total() for phi in hom_space(M, M)]


def _span_contains(f: Field, basis: Sequence[np.ndarray], x: np.ndarray) -> bool:
    if not basis:
        return not x.any()
    cols = np.stack([b.reshape(-1) for b in basis], axis=1)
    return f.solve(cols, x.reshape(-1, 1)) is not None


def _independent(f: Field, mats: Sequence[np.ndarray]) -> list[np.ndarray]:
    if not mats:
        return []
    cols = np.stack([m.reshape(-1) for m in mats], axis=1)
    _, pivots = f.rref(cols)
    return [mats[i] for i in pivots]


def _nilpotent_span(f: Field, mats: Sequence[np.ndarray], dim: int) -> bool:
    """Whether the (associative) powers of span(mats) reach zero."""
    power = _independent(f, list(mats))
    for _ in range(dim + 1):
        if not power:
            return True
        power = _independent(f, [f.matmul(a, b) for a in power for b in mats])
    return not power


def _fitting_split(M: Representation, g: np.ndarray):
    """Summands ker g^N and im g^N if both are nonzero, else None."""
    f = M.field
    h = f.power(g, max(1, M.dimension))
    phi = from_total(M, M, h)
    kers = [f.nullspace(b) if b.shape[0] else f.zeros(0, 0) for b in phi.blocks]
    kers = [k if k.shape[0] == d else f.zeros(d, 0) for k, d in zip(kers, M.dims)]
    ims = [f.column_basis(b) if b.shape[1] else f.zeros(b.shape[0], 0) for b in phi.blocks]
    dk = sum(k.shape[1] for k in kers)
    if dk == 0 or dk == M.dimension:
        return None
    return submodule(M, kers)[0], submodule(M, ims)[0]


def _examine(M: Representation, g: np.ndarray):
    """Classify an endomorphism.

    Returns ``("split", (N1, N2))``, ``("eigen", lam)`` when ``g - lam`` is
    nilpotent, or ``("nonsplit", None)`` when the characteristic polynomial is
    a power of an irreducible of degree > 1.
    """
    f = M.field
    d = g.shape[0]
    if f.is_nilpotent(g):
        return "eigen", f.scalar(0)
    if f.is_rational or d % f.p:
        lam = f.scalar(sum(g[i, i] for i in range(d))) * f.inv(d)
        lam = f.scalar(lam)
        if f.is_nilpotent(f.sub(g, f.scale(lam, f.eye(d)))):
            return "eigen", lam
    factors = f.charpoly_factors(g)
    if len(factors) > 1:
        split = _fitting_split(M, f.poly_eval(factors[0][0], g))
        assert split is not None, "distinct characteristic factors must split"
        return "split", split
    coeffs, _ = factors[0]
    if len(coeffs) == 2:
        return "eigen", f.neg(coeffs[1])
    return "nonsplit", None


def split_or_local(M: Representation):
    """``("split", (N1, N2))`` with ``M = N1 (+) N2``, or ``("local", LocalStructure)``."""
    if M.is_zero():
        raise ValueError("the zero module has no decomposition")
    f = M.field
    d = M.dimension
    basis = endomorphism_basis(M)
    eye = f.eye(d)
    nil = []
    nonsplit = False
    for b in basis:
        kind, data = _examine(M, b)
        if kind == "split":
            return "split", data
        if kind == "nonsplit":
            nonsplit = True
            continue
        nil.append(f.sub(b, f.scale(data, eye)))
    radical = _independent(f, nil)
    if not nonsplit and len(radical) == len(basis) - 1:
        closed = all(_span_contains(f, radical, f.matmul(a, b)) for a in radical for b in radical)
        if closed and _nilpotent_span(f, radical, d):
            return "local", LocalStructure(tuple(basis), tuple(radical))
    # the cheap certificate failed: look for a splitting endomorphism among combinations
    candidates = [f.add(a, b) for a, b in itertools.combinations(nil, 2)]
    candidates += [f.matmul(a, b) for a in nil for b in nil]
    candidates += [f.add(a, f.matmul(a, b)) for a in nil for b in nil]
    for c in candidates:
        kind, data = _examine(M, c)
        if kind == "split":
            return kind, data
    if not f.is_rational and f.p ** len(basis) <= EXHAUSTIVE_LIMIT:
        for coeffs in itertools.product(range(f.p), repeat=len(basis)):
            g = f.zeros(d, d)
            for c, b in zip(coeffs, basis):
                if c:
                    g = f.add(g, f.scale(c, b))
            split = _fitting_split(M, g)
            if split is not None:
                return "split", split
    if nonsplit:
        raise NonSplitEndomorphisms(f"End of {M!r} has a non-split semisimple quotient")
    raise DecompositionFailure(f"could not split or certify {M!r} as indecomposable")


def local_structure(M: Representation) -> LocalStructure:
    cached = getattr(M, "_local_structure", None)
    if cached is not None:
        return cached
    kind, data = split_or_local(M)
    if kind != "local":
        raise ValueError(f"{M!r} is decomposable")
    M._local_structure = data
    return data


def is_indecomposable(M: Representation) -> bool:
    if M.is_zero():
        return False
    kind, data = split_or_local(M)
    if kind == "local":
        M._local_structure = data
        return True
    return False


def _indecomposable_summands(M: Representation) -> list[Representation]:
    stack, out = [M], []
    bound = M.dimension + 1
    while stack:
        X = stack.pop()
        kind, data = split_or_local(X)
        if kind == "local":
            X._local_structure = data
            out.append(X)
        else:
            stack.extend(data)
        bound -= 1
        if bound < -M.dimension:
            raise DecompositionFailure("splitting did not terminate")
    return out


def is_isomorphic(X: Representation, Y: Representation) -> bool:
    """Isomorphism test for indecomposable X and Y."""
    if X.dims != Y.dims:
        return False
    if X.is_zero():
        return True
    f = X.field
    forward = hom_space(X, Y)
    if not forward:
        return False
    backward = hom_space(Y, X)
    for g in backward:
        for h in forward:
            if not f.is_nilpotent(g.compose(h).total()):
                return True
    return False


def radical_image(M: Representation) -> list[np.ndarray]:
    """Per-vertex bases of J(End M) . M for indecomposable M."""
    f = M.field
    J = local_structure(M).radical
    from .modules import sum_of_images

    return sum_of_images(M, [from_total(M, M, j) for j in J])


def sort_key(M: Representation) -> tuple:
    return (M.dimension, tuple(-d for d in M.dims), M.key())


def decompose(M: Representation) -> list[tuple[Representation, int]]:
    """Indecomposable summands with multiplicities, in canonical order."""
    if M.is_zero():
        return []
    pieces = _indecomposable_summands(M)
    classes: list[list[Representation]] = []
    for X in pieces:
        for cls in classes:
            if is_isomorphic(cls[0], X):
                cls.append(X)
                break
        else:
            classes.append([X])
    out = [(min(cls, key=sort_key), len(cls)) for cls in classes]
    out.sort(key=lambda xm: sort_key(xm[0]))
    return out


def is_brick(M: Representation) -> bool:
    """Every nonzero endomorphism is invertible (End(M) is a division algebra)."""
    from .modules import ZeroModule

    if M.is_zero():
        raise ZeroModule("the zero module is not a brick")
    f = M.field
    basis = endomorphism_basis(M)
    if len(basis) == 1:
        return True
    for b in basis:
        kind, _ = _examine(M, b)
        if kind == "split":
            return False
    try:
        kind, data = split_or_local(M)
    except NonSplitEndomorphisms:
        return _is_division_algebra(f, basis, M.dimension)
    if kind == "split":
        return False
    return not data.radical


def _is_division_algebra(f: Field, basis: Sequence[np.ndarray], dim: int) -> bool:
    """A finite-dimensional algebra over a finite field is a division algebra iff it is
    a field, iff it is generated by one element with irreducible minimal polynomial."""
    if f.is_rational:
        raise NonSplitEndomorphisms("division-algebra test over QQ is not implemented")
    for b in basis:
        powers = _independent(f, [f.power(b, k) for k in range(len(basis))])
        if len(powers) == len(basis):
            factors = f.charpoly_factors(b)
            return len(factors) == 1 and len(factors[0][0]) - 1 == len(basis)
    for coeffs in itertools.product(range(f.p), repeat=len(basis)):
        if f.p ** len(basis) > EXHAUSTIVE_LIMIT:
            break
        g = f.zeros(dim, dim)
        for c, b in zip(coeffs, basis):
            g = f.add(g, f.scale(c, b))
        if g.any() and not f.is_invertible(g):
            return False
    if f.p ** len(basis) <= EXHAUSTIVE_LIMIT:
        return True
    raise NonSplitEndomorphisms("could not decide whether End is a division algebra")


class ModuleRegistry:
    """Indecomposables seen so far, identified up to isomorphism in discovery order."""

    def __init__(self):
        self.modules: list[Representation] = []
        self._by_dims: dict[tuple, list[int]] = {}

    def lookup(self, X: Representation) -> Optional[int]:
        for k in self._by_dims.get(X.dims, []):
            Y = self.modules[k]
            if Y is X or is_isomorphic(Y, X):
                return k
        return None

    def add(self, X: Representation) -> int:
        k = self.lookup(X)
        if k is None:
            k = len(self.modules)
            self.modules.append(X)
            self._by_dims.setdefault(X.dims, []).append(k)
        return k

    def __getitem__(self, k):
        return self.modules[k]

    def __len__(self):
        return len(self.modules)
