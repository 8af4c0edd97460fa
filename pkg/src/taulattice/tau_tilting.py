"""Support tau-tilting pairs, mutation, enumeration and the brick-labelled Hasse quiver.

Enumeration walks left mutations down from ``(A, 0)``.  Every functorially
finite torsion class lies below ``mod A``, and any strict inclusion of such
classes can be refined by a left mutation of the larger one, so when the walk
closes up it has found all of them.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .algebra import PathAlgebra
from .decompose import (
    ModuleRegistry,
    decompose,
    is_brick,
    is_isomorphic,
    local_structure,
    radical_image,
    sort_key,
)
from .homological import is_projective, is_tau_rigid, transpose
from .lattice import FiniteLattice, FinitePoset, as_lattice, transitive_closure
from .modules import (
    Morphism,
    Representation,
    cokernel,
    direct_sum,
    from_total,
    hom_space,
    in_fac_of,
    projective,
    quotient,
    sum_of_images,
    zero_module,
)

DEFAULT_NODE_BOUND = 100_000
DEFAULT_DIM_BOUND = 512


class NotASummand(IndexError):
    pass


class ApproximationFailure(RuntimeError):
    pass


class InconsistentOrder(RuntimeError):
    pass


class NotABrick(RuntimeError):
    pass


class NotASemibrick(RuntimeError):
    pass


class LabelNotUnique(RuntimeError):
    pass


class LabelMissing(RuntimeError):
    pass


class BoundExceeded(RuntimeError):
    pass


class TauTiltingContext:
    """Per-algebra registry of indecomposable tau-rigid modules and cached Hom data."""

    def __init__(self, algebra: PathAlgebra):
        self.algebra = algebra
        self.registry = ModuleRegistry()
        self._hom: dict[tuple[int, int], list[Morphism]] = {}
        self._fac: dict[tuple[tuple[int, ...], int], bool] = {}
        self._projective_ids: dict[str, int] = {}
        self._projective_flag: dict[int, Optional[str]] = {}
        self._transpose: dict[int, tuple[str, int]] = {}

    @property
    def field(self):
        return self.algebra.field

    def module(self, k: int) -> Representation:
        return self.registry[k]

    def register(self, X: Representation) -> int:
        return self.registry.add(X)

    def projective_id(self, v: str) -> int:
        if v not in self._projective_ids:
            k = self.register(projective(self.algebra, v))
            self._projective_ids[v] = k
            self._projective_flag[k] = v
        return self._projective_ids[v]

    def projective_vertex(self, k: int) -> Optional[str]:
        """The vertex v with module k isomorphic to P_v, or None."""
        if k not in self._projective_flag:
            X = self.module(k)
            self._projective_flag[k] = None
            if is_projective(X):
                for v in self.algebra.vertices:
                    if self.projective_id(v) == k:
                        self._projective_flag[k] = v
        return self._projective_flag[k]

    def hom(self, i: int, j: int) -> list[Morphism]:
        key = (i, j)
        if key not in self._hom:
            self._hom[key] = hom_space(self.module(i), self.module(j))
        return self._hom[key]

    def radical_maps(self, i: int, j: int) -> list[Morphism]:
        """A basis of rad(U_i, U_j) for indecomposables U_i, U_j."""
        if i != j:
            return self.hom(i, j)
        X = self.module(i)
        return [from_total(X, X, r) for r in local_structure(X).radical]

    def in_fac(self, summands: Sequence[int], k: int) -> bool:
        key = (tuple(sorted(summands)), k)
        if key not in self._fac:
            if k in key[0]:
                self._fac[key] = True
            else:
                self._fac[key] = in_fac_of([self.module(i) for i in key[0]], self.module(k))
        return self._fac[key]

    def fingerprint(self, k: int) -> str:
        """Dimension vector, disambiguated by discovery rank among equal dimension vectors."""
        X = self.module(k)
        same = [i for i in range(len(self.registry)) if self.registry[i].dims == X.dims]
        base = "(" + ",".join(map(str, X.dims)) + ")"
        return base if same.index(k) == 0 else f"{base}#{same.index(k)}"


def context(algebra: PathAlgebra) -> TauTiltingContext:
    ctx = algebra.__dict__.get("_tau_context")
    if ctx is None:
        ctx = TauTiltingContext(algebra)
        algebra.__dict__["_tau_context"] = ctx
    return ctx


@dataclass(frozen=True)
class SupportTauTiltingPair:
    """``(M, P)``: basic tau-rigid M (summand ids) and the vertices of the projective P."""

    summands: tuple[int, ...]
    projectives: tuple[str, ...]
    ctx: TauTiltingContext = field(compare=False, hash=False, repr=False)

    @property
    def algebra(self) -> PathAlgebra:
        return self.ctx.algebra

    @property
    def modules(self) -> list[Representation]:
        return [self.ctx.module(k) for k in self.summands]

    def module(self) -> Representation:
        """M as a single representation (zero when M = 0)."""
        if not self.summands:
            return zero_module(self.algebra)
        return direct_sum(self.modules)[0]

    def __len__(self):
        return len(self.summands) + len(self.projectives)

    @property
    def is_tau_tilting(self) -> bool:
        """Full support: P = 0."""
        return not self.projectives

    def name(self) -> str:
        parts = [self.ctx.fingerprint(k) for k in self.summands]
        m = "+".join(parts) if parts else "0"
        p = "+".join(f"P{v}" for v in self.projectives) if self.projectives else "0"
        return f"({m} | {p})"

    def __str__(self):
        return self.name()


def _canonical_pair(ctx: TauTiltingContext, summands, projectives) -> SupportTauTiltingPair:
    order = {v: i for i, v in enumerate(ctx.algebra.vertices)}
    ms = tuple(sorted(set(summands), key=lambda k: (sort_key(ctx.module(k)), k)))
    ps = tuple(sorted(set(projectives), key=order.__getitem__))
    return SupportTauTiltingPair(ms, ps, ctx)


def initial_pair(algebra: PathAlgebra) -> SupportTauTiltingPair:
    """``(A, 0)``."""
    ctx = context(algebra)
    return _canonical_pair(ctx, [ctx.projective_id(v) for v in algebra.vertices], [])


def bottom_pair(algebra: PathAlgebra) -> SupportTauTiltingPair:
    """``(0, A)``."""
    return _canonical_pair(context(algebra), [], algebra.vertices)


def validate_pair(pair: SupportTauTiltingPair) -> list[str]:
    """Violated support tau-tilting conditions (empty when the pair is valid)."""
    problems = []
    alg = pair.algebra
    if len(pair) != alg.n:
        problems.append(f"{len(pair)} summands, expected {alg.n}")
    if pair.summands:
        M = pair.module()
        if not is_tau_rigid(M):
            problems.append("M is not tau-rigid")
        for v in pair.projectives:
            if M.dim_at(v):
                problems.append(f"Hom(P{v}, M) != 0")
    return problems


# ---------------------------------------------------------------------------
# approximations and mutation

def minimal_left_approximation(X: Representation, targets: Sequence[Representation],
                               radicals: Optional[dict] = None) -> tuple[Morphism, list[int]]:
    """Minimal left add(U)-approximation ``X -> U'`` for pairwise non-isomorphic indecomposables U.

    The multiplicity of ``U_k`` in ``U'`` is the dimension of
    ``Hom(X, U_k) / rad_{add U}(X, U_k)``; a complement basis of the radical
    part gives the components of the map.  Returns the map and, for each summand
    of ``U'``, the index of the ``U_k`` it copies.
    """
    f = X.field
    homs = [hom_space(X, U) for U in targets]
    chosen: list[tuple[int, Morphism]] = []
    for k, Uk in enumerate(targets):
        if not homs[k]:
            continue
        rad = []
        for l, Ul in enumerate(targets):
            if radicals is not None:
                rmaps = radicals[(l, k)]
            elif l != k:
                rmaps = hom_space(Ul, Uk)
            else:
                rmaps = [from_total(Uk, Uk, r) for r in local_structure(Uk).radical]
            for r in rmaps:
                for h in homs[l]:
                    rad.append(r.compose(h).total().reshape(-1))
        width = X.dimension * Uk.dimension
        current = np.stack(rad, axis=1) if rad else f.zeros(width, 0)
        current = f.column_basis(current) if current.shape[1] else current
        for h in homs[k]:
            trial = np.concatenate([current, h.total().reshape(-1, 1)], axis=1)
            if f.rank(trial) == trial.shape[1]:
                current = trial
                chosen.append((k, h))
    if not chosen:
        return Morphism(X, zero_module(X.algebra), tuple(f.zeros(0, d) for d in X.dims)), []
    target, incs, _ = direct_sum([targets[k] for k, _ in chosen])
    phi = None
    for inc, (_, h) in zip(incs, chosen):
        term = inc.compose(h)
        phi = term if phi is None else phi + term
    return phi, [k for k, _ in chosen]


def _left_mutation(pair: SupportTauTiltingPair, pos: int) -> SupportTauTiltingPair:
    ctx = pair.ctx
    alg = ctx.algebra
    x_id = pair.summands[pos]
    u_ids = [k for i, k in enumerate(pair.summands) if i != pos]
    X = ctx.module(x_id)
    radicals = {(l, k): ctx.radical_maps(u_ids[l], u_ids[k])
                for l in range(len(u_ids)) for k in range(len(u_ids))}
    f, _ = minimal_left_approximation(X, [ctx.module(k) for k in u_ids], radicals)
    Y, _ = cokernel(f)
    if Y.is_zero():
        support = {v for k in u_ids for v in ctx.module(k).support()}
        free = [v for v in alg.vertices if v not in support and v not in pair.projectives]
        if len(free) != 1:
            raise ApproximationFailure(f"zero cokernel but {len(free)} vertices leave the support")
        return _canonical_pair(ctx, u_ids, list(pair.projectives) + free)
    parts = decompose(Y)
    if len(parts) != 1:
        raise ApproximationFailure(f"cokernel has {len(parts)} non-isomorphic summands")
    Y1 = parts[0][0]
    y_id = ctx.register(Y1)
    if y_id == x_id or y_id in u_ids:
        raise ApproximationFailure("cokernel summand already present in the pair")
    return _canonical_pair(ctx, u_ids + [y_id], pair.projectives)


def is_left_mutable(pair: SupportTauTiltingPair, pos: int) -> bool:
    """Mutation at summand ``pos`` of M is a left mutation iff X is not in Fac(U)."""
    u_ids = [k for i, k in enumerate(pair.summands) if i != pos]
    return not pair.ctx.in_fac(u_ids, pair.summands[pos])


def dagger(pair: SupportTauTiltingPair) -> tuple[SupportTauTiltingPair, dict[int, int]]:
    """The order-reversing bijection to support tau-tilting pairs of the opposite algebra.

    ``(M, P)`` goes to ``(Tr M (+) P*, M_pr*)``.  The returned dict maps each
    position of ``pair`` (summands first, then projectives) to the position of
    the corresponding summand in the image.
    """
    ctx = pair.ctx
    op_ctx = context(ctx.algebra.opposite)
    new_m: list[tuple[int, int]] = []  # (old position, op id)
    new_p: list[tuple[int, str]] = []
    for pos, k in enumerate(pair.summands):
        v = ctx.projective_vertex(k)
        if v is not None:
            new_p.append((pos, v))
            continue
        if k not in ctx._transpose:
            T = transpose(ctx.module(k))
            parts = decompose(T)
            if len(parts) != 1 or parts[0][1] != 1:
                raise ApproximationFailure("transpose of an indecomposable is not indecomposable")
            ctx._transpose[k] = ("op", op_ctx.register(parts[0][0]))
        new_m.append((pos, ctx._transpose[k][1]))
    offset = len(pair.summands)
    for j, v in enumerate(pair.projectives):
        new_m.append((offset + j, op_ctx.projective_id(v)))
    image = _canonical_pair(op_ctx, [k for _, k in new_m], [v for _, v in new_p])
    where = {}
    for old, k in new_m:
        where[old] = image.summands.index(k)
    for old, v in new_p:
        where[old] = len(image.summands) + image.projectives.index(v)
    return image, where


def mutate(pair: SupportTauTiltingPair, index: int) -> SupportTauTiltingPair:
    """Exchange one indecomposable summand of the pair.

    ``index`` runs over the summands of M and then over the vertices of P.
    Left mutations use a minimal left approximation by the complement; right
    mutations are left mutations on the opposite algebra transported through
    :func:`dagger`.
    """
    if not 0 <= index < len(pair):
        raise NotASummand(f"index {index} out of range for a pair with {len(pair)} summands")
    if index < len(pair.summands) and is_left_mutable(pair, index):
        return _left_mutation(pair, index)
    op_pair, where = dagger(pair)
    j = where[index]
    if j >= len(op_pair.summands) or not is_left_mutable(op_pair, j):
        raise ApproximationFailure("dual summand is not left mutable")
    mutated = _left_mutation(op_pair, j)
    back, _ = dagger(mutated)
    return back


# ---------------------------------------------------------------------------
# enumeration

@dataclass
class MutationGraph:
    algebra: PathAlgebra
    nodes: list[SupportTauTiltingPair]
    edges: list[tuple[int, int, str]]  # (source, target, exchanged summand); Fac(target) < Fac(source)
    complete: bool
    reason: str = ""

    @property
    def n(self) -> int:
        return self.algebra.n

    def index(self, pair: SupportTauTiltingPair) -> int:
        return self.nodes.index(pair)

    def degrees(self) -> list[int]:
        deg = [0] * len(self.nodes)
        for s, t, _ in self.edges:
            deg[s] += 1
            deg[t] += 1
        return deg


def enumerate_mutation_graph(algebra: PathAlgebra, node_bound: int = DEFAULT_NODE_BOUND,
                             dim_bound: int = DEFAULT_DIM_BOUND) -> MutationGraph:
    """Breadth-first closure of ``(A, 0)`` under left mutation."""
    if node_bound < 1 or dim_bound < 1:
        raise ValueError("bounds must be positive")
    top = initial_pair(algebra)
    ctx = top.ctx
    nodes = [top]
    seen = {top: 0}
    edges = []
    queue = deque([0])
    complete, reason = True, ""
    while queue:
        i = queue.popleft()
        pair = nodes[i]
        for pos in range(len(pair.summands)):
            if not is_left_mutable(pair, pos):
                continue
            new = _left_mutation(pair, pos)
            if any(ctx.module(k).dimension > dim_bound for k in new.summands):
                complete, reason = False, f"module dimension exceeded {dim_bound}"
                continue
            j = seen.get(new)
            if j is None:
                if len(nodes) >= node_bound:
                    complete, reason = False, f"more than {node_bound} nodes"
                    continue
                j = len(nodes)
                nodes.append(new)
                seen[new] = j
                queue.append(j)
            edges.append((i, j, ctx.fingerprint(pair.summands[pos])))
        if not complete and len(nodes) >= node_bound:
            break
    if not complete:
        return MutationGraph(algebra, nodes, edges, False, reason)
    return _canonicalize(MutationGraph(algebra, nodes, edges, True))


def _canonicalize(g: MutationGraph) -> MutationGraph:
    """Order nodes by decreasing torsion class size (then name) for schedule-free output."""
    depth = [0] * len(g.nodes)
    children: dict[int, list[int]] = {}
    for s, t, _ in g.edges:
        children.setdefault(s, []).append(t)
    # longest path from the top; edges go downwards so a topological sweep works
    indeg = [0] * len(g.nodes)
    for _, t, _ in g.edges:
        indeg[t] += 1
    queue = deque(i for i in range(len(g.nodes)) if indeg[i] == 0)
    while queue:
        s = queue.popleft()
        for t in children.get(s, []):
            depth[t] = max(depth[t], depth[s] + 1)
            indeg[t] -= 1
            if indeg[t] == 0:
                queue.append(t)
    order = sorted(range(len(g.nodes)), key=lambda i: (depth[i], g.nodes[i].name()))
    pos = {old: new for new, old in enumerate(order)}
    nodes = [g.nodes[i] for i in order]
    edges = sorted((pos[s], pos[t], lab) for s, t, lab in g.edges)
    return MutationGraph(g.algebra, nodes, edges, g.complete, g.reason)


# ---------------------------------------------------------------------------
# torsion classes

@dataclass(frozen=True)
class TorsionClassNode:
    """The torsion class Fac(M) of a support tau-tilting pair."""

    pair: SupportTauTiltingPair

    @property
    def name(self) -> str:
        return self.pair.name()

    def contains(self, X: Representation) -> bool:
        if X.is_zero():
            return True
        return in_fac_of(self.pair.modules, X)

    def __str__(self):
        return f"Fac{self.name}"


def torsion_poset(g: MutationGraph, check: bool = True) -> FinitePoset:
    """Nodes ordered by inclusion of Fac classes, cross-checked against the mutation edges."""
    if not g.complete:
        raise BoundExceeded("torsion poset needs a complete mutation graph")
    ctx = context(g.algebra)
    n = len(g.nodes)
    leq = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(g.nodes):
        for j, b in enumerate(g.nodes):
            leq[i, j] = all(ctx.in_fac(b.summands, k) for k in a.summands)
    if check:
        closure = np.eye(n, dtype=bool)
        for s, t, _ in g.edges:
            closure[t, s] = True
        closure = transitive_closure(closure)
        if not np.array_equal(closure, leq):
            i, j = map(int, np.argwhere(closure != leq)[0])
            raise InconsistentOrder(f"Fac inclusion and mutation order disagree at {g.nodes[i]} vs {g.nodes[j]}")
    return FinitePoset([TorsionClassNode(p) for p in g.nodes], leq)


def torsion_lattice(g: MutationGraph) -> FiniteLattice:
    return as_lattice(torsion_poset(g))


# ---------------------------------------------------------------------------
# bricks and semibricks

def brick_of(X: Representation) -> Representation:
    """``X / rad_{End X} X`` for an indecomposable X."""
    return quotient(X, radical_image(X))[0]


def _dedupe(mods: Sequence[Representation]) -> list[Representation]:
    out: list[Representation] = []
    for B in mods:
        if not any(is_isomorphic(B, C) for C in out):
            out.append(B)
    out.sort(key=sort_key)
    return out


def enumerate_bricks(g: MutationGraph) -> list[Representation]:
    """Images of the indecomposable tau-rigid summands under ``X -> X / rad_{End X} X``."""
    ctx = context(g.algebra)
    ids = sorted({k for p in g.nodes for k in p.summands})
    images = []
    for k in ids:
        B = brick_of(ctx.module(k))
        if B.is_zero() or not is_brick(B):
            raise NotABrick(f"image of {ctx.fingerprint(k)} is not a brick")
        images.append(B)
    return _dedupe(images)


def brick_index(bricks: Sequence[Representation], B: Representation) -> int:
    for i, C in enumerate(bricks):
        if is_isomorphic(B, C):
            return i
    raise KeyError("brick not in list")


def hom_orthogonality(bricks: Sequence[Representation]) -> np.ndarray:
    """``orth[i, j]``: Hom(B_i, B_j) = 0."""
    n = len(bricks)
    orth = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            if i != j:
                orth[i, j] = not hom_space(bricks[i], bricks[j])
    return orth


def enumerate_semibricks(bricks: Sequence[Representation]) -> list[frozenset[int]]:
    """All sets of pairwise Hom-orthogonal bricks (as index sets), the empty set included."""
    orth = hom_orthogonality(bricks)
    both = orth & orth.T
    out: list[frozenset[int]] = []

    def extend(current: list[int], start: int):
        out.append(frozenset(current))
        for k in range(start, len(bricks)):
            if all(both[k, c] for c in current):
                current.append(k)
                extend(current, k + 1)
                current.pop()

    extend([], 0)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def stau_to_semibrick(pair: SupportTauTiltingPair) -> list[Representation]:
    """Brick summands of ``M / rad_{End M} M``.

    For basic M with indecomposable summands X_k, ``rad_{End M} M`` meets X_k in
    the images of all maps from the other summands together with ``J(End X_k) X_k``.
    """
    ctx = pair.ctx
    out = []
    for k in pair.summands:
        X = ctx.module(k)
        maps = [phi for l in pair.summands if l != k for phi in ctx.hom(l, k)]
        maps += [from_total(X, X, r) for r in local_structure(X).radical]
        B = quotient(X, sum_of_images(X, maps))[0]
        if B.is_zero():
            continue
        if not is_brick(B):
            raise NotASemibrick(f"summand quotient of {ctx.fingerprint(k)} is not a brick")
        out.append(B)
    for B, C in itertools.permutations(out, 2):
        if hom_space(B, C):
            raise NotASemibrick("quotients are not Hom-orthogonal")
    return out


def brick_label(upper: TorsionClassNode, lower: TorsionClassNode, bricks: Sequence[Representation]) -> int:
    """Index of the unique brick in the upper class that is Hom-orthogonal to the lower one."""
    hits = [
        i for i, B in enumerate(bricks)
        if upper.contains(B) and not any(hom_space(X, B) for X in lower.pair.modules)
    ]
    if not hits:
        raise LabelMissing(f"no brick labels {upper} > {lower}")
    if len(hits) > 1:
        raise LabelNotUnique(f"{len(hits)} bricks label {upper} > {lower}")
    return hits[0]


@dataclass
class LabeledHasseQuiver:
    poset: FinitePoset
    bricks: list[Representation]
    labels: dict[tuple[TorsionClassNode, TorsionClassNode], int]

    def arrows(self) -> list[tuple[TorsionClassNode, TorsionClassNode, int]]:
        idx = self.poset.index
        return sorted(((u, l, b) for (u, l), b in self.labels.items()), key=lambda e: (idx[e[0]], idx[e[1]]))


def labeled_hasse_quiver(g: MutationGraph, bricks: Optional[Sequence[Representation]] = None) -> LabeledHasseQuiver:
    P = torsion_poset(g)
    bricks = list(bricks) if bricks is not None else enumerate_bricks(g)
    labels = {}
    for upper, lower in sorted(P.covers(), key=lambda c: (P.index[c[0]], P.index[c[1]])):
        labels[(upper, lower)] = brick_label(upper, lower, bricks)
    return LabeledHasseQuiver(P, bricks, labels)
