"""Finite posets and lattices with exhaustive property checks.

Orders are stored as a dense boolean table ``leq[i, j] == (x_i <= x_j)``.
Every check scans the whole structure and returns the first counterexample
found under the fixed element order, so failures are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Hashable, Iterable, Optional, Sequence

import numpy as np


class NotALattice(ValueError):
    """Raised when a pair of elements has no meet or no join."""

    def __init__(self, pair, missing: str):
        self.pair = pair
        self.missing = missing
        super().__init__(f"elements {pair[0]!r} and {pair[1]!r} have no {missing}")


class SizeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class PropertyReport:
    name: str
    verdict: bool
    witness: Optional[tuple] = None
    complement: Optional[dict] = None

    def __bool__(self):
        return self.verdict


class FinitePoset:
    """A finite partially ordered set on opaque, hashable element ids."""

    def __init__(self, elements: Sequence[Hashable], leq, check: bool = True):
        self.elements = list(elements)
        self.leq = np.array(leq, dtype=bool)
        self.index = {x: i for i, x in enumerate(self.elements)}
        n = len(self.elements)
        if len(self.index) != n:
            raise ValueError("duplicate elements")
        if self.leq.shape != (n, n):
            raise ValueError(f"order table has shape {self.leq.shape}, expected {(n, n)}")
        if check:
            self._check()

    def _check(self):
        L = self.leq
        if not L.diagonal().all():
            raise ValueError("order is not reflexive")
        off = L & L.T
        np.fill_diagonal(off, False)
        if off.any():
            i, j = map(int, np.argwhere(off)[0])
            raise ValueError(f"order is not antisymmetric at {self.elements[i]!r}, {self.elements[j]!r}")
        Li = L.astype(np.int64)
        if ((Li @ Li > 0) & ~L).any():
            raise ValueError("order is not transitive")

    @classmethod
    def from_relation(cls, elements: Sequence[Hashable], pairs: Iterable[tuple]) -> "FinitePoset":
        """Reflexive-transitive closure of ``a <= b`` for each ``(a, b)``."""
        elements = list(elements)
        idx = {x: i for i, x in enumerate(elements)}
        n = len(elements)
        leq = np.eye(n, dtype=bool)
        for a, b in pairs:
            leq[idx[a], idx[b]] = True
        return cls(elements, transitive_closure(leq))

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FinitePoset({len(self)} elements)"

    def le(self, a, b) -> bool:
        return bool(self.leq[self.index[a], self.index[b]])

    @cached_property
    def cover_table(self) -> np.ndarray:
        """``cov[i, j]`` is True when element i covers element j."""
        lt = self.leq.T & ~np.eye(len(self), dtype=bool)  # lt[i, j]: x_j < x_i
        lti = lt.astype(np.int64)
        between = (lti @ lti) > 0
        return lt & ~between

    def covers(self) -> set[tuple]:
        return {(self.elements[i], self.elements[j]) for i, j in np.argwhere(self.cover_table)}

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.elements, self.leq.T.copy(), check=False)

    def hasse_degrees(self) -> np.ndarray:
        cov = self.cover_table
        return cov.sum(axis=0) + cov.sum(axis=1)

    def minimal(self) -> list:
        lt = self.leq & ~np.eye(len(self), dtype=bool)
        return [self.elements[j] for j in range(len(self)) if not lt[:, j].any()]

    def maximal(self) -> list:
        lt = self.leq & ~np.eye(len(self), dtype=bool)
        return [self.elements[i] for i in range(len(self)) if not lt[i, :].any()]


def transitive_closure(leq: np.ndarray) -> np.ndarray:
    closure = np.array(leq, dtype=bool)
    n = closure.shape[0]
    for k in range(n):
        closure |= closure[:, k : k + 1] & closure[k : k + 1, :]
    return closure


def covers(P: FinitePoset) -> set[tuple]:
    return P.covers()


class FiniteLattice:
    """A finite lattice given by its order together with meet/join tables (indices)."""

    def __init__(self, poset: FinitePoset, meet: np.ndarray, join: np.ndarray):
        self.poset = poset
        self.meet_table = meet
        self.join_table = join
        n = len(poset)
        self.bottom_index = int(np.argmax(poset.leq.sum(axis=1) == n))
        self.top_index = int(np.argmax(poset.leq.sum(axis=0) == n))

    @property
    def elements(self):
        return self.poset.elements

    @property
    def leq(self):
        return self.poset.leq

    @property
    def bottom(self):
        return self.elements[self.bottom_index]

    @property
    def top(self):
        return self.elements[self.top_index]

    def __len__(self):
        return len(self.poset)

    def __repr__(self):
        return f"FiniteLattice({len(self)} elements)"

    def meet(self, a, b):
        i, j = self.poset.index[a], self.poset.index[b]
        return self.elements[self.meet_table[i, j]]

    def join(self, a, b):
        i, j = self.poset.index[a], self.poset.index[b]
        return self.elements[self.join_table[i, j]]

    def meet_all(self, items: Iterable) -> Any:
        k = self.top_index
        for x in items:
            k = int(self.meet_table[k, self.poset.index[x]])
        return self.elements[k]

    def join_all(self, items: Iterable) -> Any:
        k = self.bottom_index
        for x in items:
            k = int(self.join_table[k, self.poset.index[x]])
        return self.elements[k]

    def dual(self) -> "FiniteLattice":
        return FiniteLattice(self.poset.dual(), self.join_table, self.meet_table)


def as_lattice(P: FinitePoset) -> FiniteLattice:
    """Build meet and join tables, or raise :class:`NotALattice`."""
    n = len(P)
    if n == 0:
        raise ValueError("the empty poset is not a lattice")
    L = P.leq
    meet = np.empty((n, n), dtype=np.int64)
    join = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            lower = np.flatnonzero(L[:, i] & L[:, j])
            upper = np.flatnonzero(L[i, :] & L[j, :])
            m = _extremum(L, lower, greatest=True)
            if m is None:
                raise NotALattice((P.elements[i], P.elements[j]), "meet")
            u = _extremum(L, upper, greatest=False)
            if u is None:
                raise NotALattice((P.elements[i], P.elements[j]), "join")
            meet[i, j] = meet[j, i] = m
            join[i, j] = join[j, i] = u
    return FiniteLattice(P, meet, join)


def _extremum(L, candidates, greatest):
    if len(candidates) == 0:
        return None
    sub = L[np.ix_(candidates, candidates)]
    # greatest: an element every candidate lies below
    hits = np.flatnonzero(sub.all(axis=0) if greatest else sub.all(axis=1))
    return int(candidates[hits[0]]) if len(hits) else None


# ---------------------------------------------------------------------------
# property checks

def is_upper_semimodular(L: FiniteLattice) -> PropertyReport:
    """a, b covering a ^ b forces a v b to cover a and b."""
    return _semimodular(L, L.poset.cover_table, L.meet_table, L.join_table, "upper semimodular")


def is_lower_semimodular(L: FiniteLattice) -> PropertyReport:
    """a v b covering a and b forces a and b to cover a ^ b."""
    return _semimodular(L, L.poset.cover_table.T, L.join_table, L.meet_table, "lower semimodular")


def _semimodular(L, cov, lower_op, upper_op, name):
    n = len(L)
    for a in range(n):
        for b in range(a + 1, n):
            m = lower_op[a, b]
            if cov[a, m] and cov[b, m]:
                u = upper_op[a, b]
                if not (cov[u, a] and cov[u, b]):
                    return PropertyReport(name, False, (L.elements[a], L.elements[b]))
    return PropertyReport(name, True)


def is_distributive(L: FiniteLattice) -> PropertyReport:
    M, J = L.meet_table, L.join_table
    n = len(L)
    for c in range(n):
        lhs = M[J, c]
        mc = M[:, c]
        rhs = J[mc[:, None], mc[None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            a, b = map(int, bad[0])
            return PropertyReport("distributive", False, (L.elements[a], L.elements[b], L.elements[c]))
    return PropertyReport("distributive", True)


def complements(L: FiniteLattice) -> dict:
    """Map each element to the list of its complements."""
    M, J = L.meet_table, L.join_table
    out = {}
    for a in range(len(L)):
        hits = np.flatnonzero((J[a] == L.top_index) & (M[a] == L.bottom_index))
        out[L.elements[a]] = [L.elements[b] for b in hits]
    return out


def is_boolean(L: FiniteLattice) -> PropertyReport:
    dist = is_distributive(L)
    if not dist:
        return PropertyReport("boolean", False, dist.witness)
    comp = complements(L)
    for x in L.elements:
        if not comp[x]:
            return PropertyReport("boolean", False, (x,))
    return PropertyReport("boolean", True, complement={x: c[0] for x, c in comp.items()})


def atoms(L: FiniteLattice) -> list:
    cov = L.poset.cover_table
    return [L.elements[i] for i in np.flatnonzero(cov[:, L.bottom_index])]


def boolean_subset_isomorphism(L: FiniteLattice) -> Optional[tuple[int, dict]]:
    """``(n, phi)`` with ``phi`` an order isomorphism onto the subsets of {1..n}, or None."""
    atom_idx = [L.poset.index[a] for a in atoms(L)]
    n = len(atom_idx)
    if len(L) != 2**n:
        return None
    leq = L.leq
    phi = {}
    for k, x in enumerate(L.elements):
        phi[x] = frozenset(pos + 1 for pos, a in enumerate(atom_idx) if leq[a, k])
    if len(set(phi.values())) != len(L):
        return None
    for i, x in enumerate(L.elements):
        for j, y in enumerate(L.elements):
            if bool(leq[i, j]) != (phi[x] <= phi[y]):
                return None
    return n, phi


def is_join_semidistributive(L: FiniteLattice) -> PropertyReport:
    """x v y = z for all y in S implies x v (meet S) = z."""
    return _semidistributive(L, L.join_table, L.meet_table, L.top_index, "join semidistributive")


def is_meet_semidistributive(L: FiniteLattice) -> PropertyReport:
    """x ^ y = z for all y in S implies x ^ (join S) = z."""
    return _semidistributive(L, L.meet_table, L.join_table, L.bottom_index, "meet semidistributive")


def _semidistributive(L, op, dual_op, dual_unit, name):
    n = len(L)
    for x in range(n):
        row = op[x]
        for z in np.unique(row):
            S = np.flatnonzero(row == z)
            m = dual_unit
            for y in S:
                m = dual_op[m, y]
            if op[x, m] != z:
                return PropertyReport(name, False, (L.elements[x], L.elements[int(z)]))
    return PropertyReport(name, True)


def join_irreducibles(L: FiniteLattice) -> list:
    """Elements covering exactly one element (the finite form of complete join irreducibility)."""
    cov = L.poset.cover_table
    return [L.elements[i] for i in range(len(L)) if cov[i].sum() == 1]


def meet_irreducibles(L: FiniteLattice) -> list:
    cov = L.poset.cover_table
    return [L.elements[j] for j in range(len(L)) if cov[:, j].sum() == 1]


def is_hasse_regular(P: FinitePoset, n: int) -> PropertyReport:
    degrees = P.hasse_degrees()
    for i, d in enumerate(degrees):
        if d != n:
            return PropertyReport("hasse regular", False, (P.elements[i], int(d)))
    return PropertyReport("hasse regular", True)


# ---------------------------------------------------------------------------
# (anti-)isomorphism search

def _profiles(P: FinitePoset):
    L = P.leq
    cov = P.cover_table
    return [
        (int(L[:, i].sum()), int(L[i, :].sum()), int(cov[i].sum()), int(cov[:, i].sum()))
        for i in range(len(P))
    ]


def find_isomorphism(P1: FinitePoset, P2: FinitePoset) -> Optional[dict]:
    """An order isomorphism P1 -> P2 by pruned backtracking, or None."""
    n = len(P1)
    if n != len(P2):
        raise SizeMismatch(f"{n} != {len(P2)} elements")
    prof1, prof2 = _profiles(P1), _profiles(P2)
    if sorted(prof1) != sorted(prof2):
        return None
    L1, L2 = P1.leq, P2.leq
    # assign along a linear extension, rarest profiles resolved first within a rank
    order = sorted(range(n), key=lambda i: (prof1[i][0], prof1[i]))
    candidates = {i: [j for j in range(n) if prof2[j] == prof1[i]] for i in range(n)}
    assign: dict[int, int] = {}
    used = set()

    def consistent(i, j):
        for a, b in assign.items():
            if L1[i, a] != L2[j, b] or L1[a, i] != L2[b, j]:
                return False
        return True

    def search(k):
        if k == n:
            return True
        i = order[k]
        for j in candidates[i]:
            if j in used or not consistent(i, j):
                continue
            assign[i] = j
            used.add(j)
            if search(k + 1):
                return True
            del assign[i]
            used.discard(j)
        return False

    if not search(0):
        return None
    return {P1.elements[i]: P2.elements[j] for i, j in assign.items()}


def is_antiisomorphic(L1, L2) -> Optional[dict]:
    """An order-reversing bijection L1 -> L2, or None.  Accepts posets or lattices."""
    P1 = L1.poset if isinstance(L1, FiniteLattice) else L1
    P2 = L2.poset if isinstance(L2, FiniteLattice) else L2
    return find_isomorphism(P1, P2.dual())


# ---------------------------------------------------------------------------
# small named lattices used throughout the tests and demos

def chain(k: int) -> FinitePoset:
    """The k-element chain 0 < 1 < ... < k-1."""
    return FinitePoset(list(range(k)), np.triu(np.ones((k, k), dtype=bool)))


def boolean_cube(k: int) -> FinitePoset:
    elems = [frozenset(i for i in range(k) if m >> i & 1) for m in range(2**k)]
    leq = [[a <= b for b in elems] for a in elems]
    return FinitePoset(elems, leq)


def pentagon() -> FinitePoset:
    """N5: 0 < a < 1 and 0 < b < c < 1."""
    return FinitePoset.from_relation(
        ["0", "a", "b", "c", "1"], [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")]
    )


def diamond() -> FinitePoset:
    """M3: three pairwise incomparable atoms between 0 and 1."""
    return FinitePoset.from_relation(
        ["0", "x", "y", "z", "1"],
        [("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1")],
    )
