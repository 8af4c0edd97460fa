"""Brute-force torsion classes from a complete list of indecomposables.

Independent of tau-tilting theory: a set of indecomposables is closed under
quotients by enumerating every submodule of every member, and the smallest
torsion class containing it is the set of modules filtered by those quotients.
Only practical over small finite fields and small dimensions.
"""
from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence

import numpy as np

from .algebra import PathAlgebra
from .decompose import decompose, is_isomorphic
from .lattice import FinitePoset
from .linalg import Field
from .modules import Representation, quotient, simple, submodule

DEFAULT_DIM_LIMIT = 6
DEFAULT_SUBMODULE_LIMIT = 20_000


class OracleTooLarge(RuntimeError):
    pass


class NoFixture(LookupError):
    """No indecomposable generator applies to this algebra."""


class OracleIncomplete(RuntimeError):
    """A computed summand is missing from the supplied indecomposable list."""


# ---------------------------------------------------------------------------
# indecomposable generators

def _components(algebra: PathAlgebra) -> list[list[str]]:
    parent = {v: v for v in algebra.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in algebra.arrows:
        parent[find(a.source)] = find(a.target)
    groups: dict[str, list[str]] = {}
    for v in algebra.vertices:
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def _thin(algebra: PathAlgebra, support: set[str]) -> Representation:
    f = algebra.field
    dims = [1 if v in support else 0 for v in algebra.vertices]
    maps = {a.name: f.eye(1) for a in algebra.arrows if a.source in support and a.target in support}
    return Representation(algebra, dims, maps)


def _jordan(algebra: PathAlgebra, vertex: str, arrow: str, j: int) -> Representation:
    f = algebra.field
    dims = [j if v == vertex else 0 for v in algebra.vertices]
    mat = f.zeros(j, j)
    for i in range(j - 1):
        mat[i + 1, i] = f.scalar(1)
    return Representation(algebra, dims, {arrow: mat})


def _path_order(algebra: PathAlgebra, comp: list[str]) -> Optional[list[str]]:
    """The vertices of a type A component in path order, or None."""
    cset = set(comp)
    arrows = [a for a in algebra.arrows if a.source in cset]
    if any(a.source == a.target for a in arrows) or len(arrows) != len(comp) - 1:
        return None
    nbrs: dict[str, list[str]] = {v: [] for v in comp}
    for a in arrows:
        nbrs[a.source].append(a.target)
        nbrs[a.target].append(a.source)
    if any(len(set(x)) != len(x) or len(x) > 2 for x in nbrs.values()):
        return None
    ends = [v for v in comp if len(nbrs[v]) <= 1]
    start = min(ends, key=algebra.vertex_index.__getitem__)
    order, prev = [start], None
    while len(order) < len(comp):
        nxt = [w for w in nbrs[order[-1]] if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def indecomposables(algebra: PathAlgebra) -> list[Representation]:
    """All indecomposables, for products of type A quivers with monomial relations and
    truncated polynomial rings.  Raises :class:`NoFixture` otherwise."""
    out = []
    rels = [set(r) for r in algebra.presentation.relations]
    for comp in _components(algebra):
        cset = set(comp)
        arrows = [a for a in algebra.arrows if a.source in cset]
        if len(comp) == 1 and not arrows:
            out.append(simple(algebra, comp[0]))
            continue
        if len(comp) == 1 and len(arrows) == 1:
            x = arrows[0].name
            powers = [len(r) for r in algebra.presentation.relations if set(r) == {x}]
            if not powers:
                raise NoFixture("loop without a nilpotency relation")
            out.extend(_jordan(algebra, comp[0], x, j) for j in range(1, min(powers) + 1))
            continue
        order = _path_order(algebra, comp)
        if order is None:
            raise NoFixture(f"component {comp} is neither a point, a single loop nor of type A")
        arrow_between = {frozenset((a.source, a.target)): a.name for a in arrows}
        for i in range(len(order)):
            for j in range(i, len(order)):
                support = order[i : j + 1]
                inside = {arrow_between[frozenset(p)] for p in zip(support, support[1:])}
                if any(r <= inside for r in rels):
                    continue
                out.append(_thin(algebra, set(support)))
    return out


# ---------------------------------------------------------------------------
# submodule enumeration

def subspaces(fld: Field, d: int) -> Iterator[np.ndarray]:
    """Every subspace of GF(p)^d, as a d x k matrix of basis columns in reduced echelon form."""
    if fld.is_rational:
        raise OracleTooLarge("subspace enumeration needs a finite field")
    for k in range(d + 1):
        for pivots in itertools.combinations(range(d), k):
            free = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, d) if c not in pivots]
            for values in itertools.product(range(fld.p), repeat=len(free)):
                rows = fld.zeros(k, d)
                for i, pc in enumerate(pivots):
                    rows[i, pc] = 1
                for (i, c), val in zip(free, values):
                    rows[i, c] = val
                yield rows.T.copy()


def submodules(M: Representation, limit: int = DEFAULT_SUBMODULE_LIMIT) -> Iterator[list[np.ndarray]]:
    """Every submodule of M, as per-vertex basis matrices."""
    f = M.field
    alg = M.algebra
    per_vertex = [list(subspaces(f, d)) for d in M.dims]
    total = int(np.prod([len(s) for s in per_vertex]))
    if total > limit:
        raise OracleTooLarge(f"{total} candidate subspace tuples for {M!r}")
    for choice in itertools.product(*per_vertex):
        ok = True
        for a in alg.arrows:
            s, t = alg.vertex_index[a.source], alg.vertex_index[a.target]
            if choice[s].shape[1] == 0:
                continue
            img = f.matmul(M.maps[a.name], choice[s])
            if f.rank(np.concatenate([choice[t], img], axis=1)) > choice[t].shape[1]:
                ok = False
                break
        if ok:
            yield list(choice)


# ---------------------------------------------------------------------------
# torsion classes

def _identify(mods: Sequence[Representation], X: Representation) -> frozenset[int]:
    ids = set()
    for Y, _ in decompose(X):
        for i, Z in enumerate(mods):
            if is_isomorphic(Y, Z):
                ids.add(i)
                break
        else:
            raise OracleIncomplete(f"summand {Y!r} is not in the indecomposable list")
    return frozenset(ids)


def bruteforce_torsion_classes(mods: Sequence[Representation], dim_limit: int = DEFAULT_DIM_LIMIT,
                               submodule_limit: int = DEFAULT_SUBMODULE_LIMIT) -> FinitePoset:
    """All torsion classes, each as the frozenset of indices of its indecomposables,
    ordered by inclusion.  ``mods`` must list every indecomposable up to isomorphism."""
    if not mods:
        raise ValueError("empty module list")
    for M in mods:
        if M.dimension > dim_limit:
            raise OracleTooLarge(f"{M!r} exceeds the dimension limit {dim_limit}")
    k = len(mods)
    # (summands of N, summands of M / N) for every nonzero submodule N of every M
    splits: list[list[tuple[frozenset[int], frozenset[int]]]] = []
    quotients: list[frozenset[int]] = []
    for M in mods:
        rows, quots = [], set()
        for spaces in submodules(M, submodule_limit):
            sub_dim = sum(s.shape[1] for s in spaces)
            Q = quotient(M, spaces)[0]
            q_ids = _identify(mods, Q) if not Q.is_zero() else frozenset()
            quots |= q_ids
            if sub_dim:
                N = submodule(M, spaces)[0]
                rows.append((_identify(mods, N), q_ids))
        splits.append(rows)
        quotients.append(frozenset(quots))

    classes = set()
    for mask in range(2**k):
        chosen = [i for i in range(k) if mask >> i & 1]
        closed = set(chosen)
        for i in chosen:
            closed |= quotients[i]
        filt = set(closed)
        changed = True
        while changed:
            changed = False
            for e in range(k):
                if e in filt:
                    continue
                if any(sub <= closed and quot <= filt for sub, quot in splits[e]):
                    filt.add(e)
                    changed = True
        classes.add(frozenset(filt))
    elems = sorted(classes, key=lambda c: (len(c), sorted(c)))
    leq = [[a <= b for b in elems] for a in elems]
    return FinitePoset(elems, leq)


def oracle_for(algebra: PathAlgebra, **limits) -> FinitePoset:
    return bruteforce_torsion_classes(indecomposables(algebra), **limits)
