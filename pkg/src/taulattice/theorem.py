"""Deciding the Boolean-lattice conditions for an algebra and cross-checking the theory.

Eight conditions are decided independently for an algebra A with n simples:

    a   tors A is upper semimodular          a'  f-tors A is an upper semimodular lattice
    b   tors A is lower semimodular          b'  f-tors A is a lower semimodular lattice
    c   tors A is the Boolean lattice of {1..n}
    d   every brick is simple
    e   A has exactly one basic tau-tilting module
    f   A is a product of local algebras (every arrow is a loop)

They are equivalent, so a report mixing True and False is flagged.  The first
five need the full torsion lattice and are Inconclusive when enumeration hits a
bound; tors A and f-tors A coincide once enumeration closes up.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Optional, Union

from .algebra import BoundQuiverPresentation, PathAlgebra, build_algebra
from .decompose import is_isomorphic
from .homological import tau, tau_via_transpose
from .lattice import (
    FiniteLattice,
    FinitePoset,
    NotALattice,
    as_lattice,
    boolean_subset_isomorphism,
    find_isomorphism,
    is_antiisomorphic,
    is_hasse_regular,
    is_join_semidistributive,
    is_lower_semimodular,
    is_meet_semidistributive,
    is_upper_semimodular,
    join_irreducibles,
)
from .modules import simple
from .tau_tilting import (
    DEFAULT_DIM_BOUND,
    DEFAULT_NODE_BOUND,
    LabelMissing,
    LabelNotUnique,
    MutationGraph,
    context,
    enumerate_bricks,
    enumerate_mutation_graph,
    enumerate_semibricks,
    brick_index,
    labeled_hasse_quiver,
    stau_to_semibrick,
    torsion_poset,
)

CONDITIONS = ("a", "a'", "b", "b'", "c", "d", "e", "f")

AlgebraLike = Union[BoundQuiverPresentation, PathAlgebra]


class InconsistentWithTheorem(RuntimeError):
    """Two conditions that must agree received the verdicts True and False."""


class Truth(str, enum.Enum):
    TRUE = "True"
    FALSE = "False"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    value: Truth
    evidence: str

    @classmethod
    def of(cls, flag: bool, evidence: str) -> "Verdict":
        return cls(Truth.TRUE if flag else Truth.FALSE, evidence)

    @classmethod
    def inconclusive(cls, evidence: str) -> "Verdict":
        return cls(Truth.INCONCLUSIVE, evidence)

    @property
    def decided(self) -> bool:
        return self.value is not Truth.INCONCLUSIVE

    def to_dict(self) -> dict:
        return {"value": self.value.value, "evidence": self.evidence}


@dataclass(frozen=True)
class ConditionReport:
    verdicts: dict[str, Verdict]
    fingerprint: str
    node_bound: int
    dim_bound: int

    def conflict(self) -> Optional[tuple[str, str]]:
        """A (True, False) pair of condition names, if any."""
        yes = [c for c in CONDITIONS if self.verdicts[c].value is Truth.TRUE]
        no = [c for c in CONDITIONS if self.verdicts[c].value is Truth.FALSE]
        return (yes[0], no[0]) if yes and no else None

    @property
    def inconsistent(self) -> bool:
        return self.conflict() is not None

    def check_consistent(self) -> "ConditionReport":
        pair = self.conflict()
        if pair is not None:
            raise InconsistentWithTheorem(
                f"condition ({pair[0]}) is True but ({pair[1]}) is False for {self.fingerprint}")
        return self

    def values(self) -> dict[str, str]:
        return {c: self.verdicts[c].value.value for c in CONDITIONS}

    def with_verdict(self, name: str, verdict: Verdict) -> "ConditionReport":
        return replace(self, verdicts={**self.verdicts, name: verdict})

    def to_dict(self) -> dict:
        return {
            "fingerprint": self.fingerprint,
            "bounds": {"node_bound": self.node_bound, "dim_bound": self.dim_bound},
            "verdicts": {c: self.verdicts[c].to_dict() for c in CONDITIONS},
            "inconsistent_with_theorem": self.inconsistent,
        }


def as_algebra(A: AlgebraLike) -> PathAlgebra:
    return A if isinstance(A, PathAlgebra) else build_algebra(A)


# ---------------------------------------------------------------------------
# individual conditions

def check_f_structural(p: BoundQuiverPresentation) -> Verdict:
    """Product of local algebras iff every arrow is a loop."""
    for a in p.arrows:
        if a.source != a.target:
            return Verdict.of(False, f"arrow {a.name}: {a.source} -> {a.target} joins distinct vertices")
    return Verdict.of(True, f"all {len(p.arrows)} arrows are loops; {p.n} local factors")


def _names(P: FinitePoset, witness) -> str:
    return ", ".join(str(x) for x in witness)


def _semimodular_verdict(L: FiniteLattice, upper: bool, prefix: str) -> Verdict:
    rep = is_upper_semimodular(L) if upper else is_lower_semimodular(L)
    if rep:
        return Verdict.of(True, f"{prefix}{rep.name} on {len(L)} classes")
    return Verdict.of(False, f"{prefix}not {rep.name}: witness {_names(L.poset, rep.witness)}")


def _lattice_condition(P: FinitePoset, upper: bool) -> Verdict:
    """(a')/(b'): the poset must first be a lattice."""
    try:
        L = as_lattice(P)
    except NotALattice as exc:
        return Verdict.of(False, f"f-tors is not a lattice: {exc}")
    return _semimodular_verdict(L, upper, "f-tors = tors; ")


def _graph_for(alg: PathAlgebra, graph: Optional[MutationGraph], node_bound: int, dim_bound: int) -> MutationGraph:
    if graph is None:
        return enumerate_mutation_graph(alg, node_bound, dim_bound)
    if graph.algebra is not alg:
        raise ValueError("graph was enumerated for a different algebra object")
    return graph


def check_conditions(A: AlgebraLike, node_bound: int = DEFAULT_NODE_BOUND, dim_bound: int = DEFAULT_DIM_BOUND,
                     graph: Optional[MutationGraph] = None) -> ConditionReport:
    """Verdicts for the eight conditions.  ``graph`` reuses an existing enumeration."""
    if node_bound < 1 or dim_bound < 1:
        raise ValueError("bounds must be positive")
    alg = as_algebra(A)
    g = _graph_for(alg, graph, node_bound, dim_bound)
    verdicts: dict[str, Verdict] = {"f": check_f_structural(alg.presentation)}
    if not g.complete:
        why = f"enumeration incomplete ({g.reason}) after {len(g.nodes)} nodes"
        for c in CONDITIONS[:-1]:
            verdicts[c] = Verdict.inconclusive(why)
    else:
        P = torsion_poset(g)
        L = as_lattice(P)
        verdicts["a"] = _semimodular_verdict(L, True, "")
        verdicts["b"] = _semimodular_verdict(L, False, "")
        verdicts["a'"] = _lattice_condition(P, True)
        verdicts["b'"] = _lattice_condition(P, False)

        iso = boolean_subset_isomorphism(L)
        if iso is None:
            verdicts["c"] = Verdict.of(False, f"{len(L)} classes do not form a Boolean lattice")
        elif iso[0] != alg.n:
            verdicts["c"] = Verdict.of(False, f"Boolean on {iso[0]} atoms but {alg.n} simples")
        else:
            verdicts["c"] = Verdict.of(True, f"isomorphic to the subsets of {{1..{alg.n}}}")

        bricks = enumerate_bricks(g)
        big = [B for B in bricks if B.dimension != 1]
        if big:
            verdicts["d"] = Verdict.of(False, f"non-simple brick with dimension vector {big[0].dims}")
        else:
            verdicts["d"] = Verdict.of(True, f"all {len(bricks)} bricks are simple")

        full = [p for p in g.nodes if p.is_tau_tilting]
        detail = ", ".join(p.name() for p in full[:2])
        verdicts["e"] = Verdict.of(len(full) == 1, f"{len(full)} basic tau-tilting modules: {detail}")
    return ConditionReport({c: verdicts[c] for c in CONDITIONS}, alg.presentation.fingerprint(),
                           node_bound, dim_bound)


def _smallest_containing(P: FinitePoset, members: list[int]) -> Optional[int]:
    """Index of the least element among ``members``, or None."""
    for i in members:
        if all(P.leq[i, j] for j in members):
            return i
    return None


def check_simple_generated(g: MutationGraph) -> Verdict:
    """Every torsion class is the smallest class containing the simples it contains."""
    if not g.complete:
        return Verdict.inconclusive(f"enumeration incomplete ({g.reason})")
    P = torsion_poset(g)
    alg = g.algebra
    S = [simple(alg, v) for v in alg.vertices]
    holds = [[T.contains(s) for s in S] for T in P.elements]
    for i, T in enumerate(P.elements):
        want = [k for k, h in enumerate(holds[i]) if h]
        above = [j for j in range(len(P)) if all(holds[j][k] for k in want)]
        m = _smallest_containing(P, above)
        if m != i:
            gen = "{" + ",".join(f"S{alg.vertices[k]}" for k in want) + "}"
            other = P.elements[m] if m is not None else "no least class"
            return Verdict.of(False, f"{T} != T({gen}) = {other}")
    return Verdict.of(True, f"all {len(P)} classes are generated by their simples")


# ---------------------------------------------------------------------------
# cross validation

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: Optional[bool]  # None when the check could not run
    detail: str = ""

    @property
    def status(self) -> str:
        return {True: "pass", False: "FAIL", None: "skipped"}[self.passed]


@dataclass
class CrossValidation:
    name: str
    report: ConditionReport
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.passed is False]

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {c.name: {"status": c.status, "detail": c.detail} for c in self.checks}


def _run(name: str, fn) -> CheckResult:
    try:
        out = fn()
    except (LabelNotUnique, LabelMissing, NotALattice, InconsistentWithTheorem) as exc:
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, CheckResult):
        return out
    passed, detail = out
    return CheckResult(name, passed, detail)


def _brick_classes(P: FinitePoset, bricks) -> list[Optional[int]]:
    """For each brick, the smallest enumerated class containing it."""
    out = []
    for B in bricks:
        members = [i for i, T in enumerate(P.elements) if T.contains(B)]
        out.append(_smallest_containing(P, members))
    return out


def cross_validate(A: AlgebraLike, node_bound: int = DEFAULT_NODE_BOUND, dim_bound: int = DEFAULT_DIM_BOUND,
                   oracle: bool = True, graph: Optional[MutationGraph] = None) -> CrossValidation:
    """Condition verdicts plus every structural invariant the theory predicts.

    Failures are returned as data.  Checks needing a complete enumeration are
    skipped when a bound was hit.
    """
    alg = as_algebra(A)
    g = _graph_for(alg, graph, node_bound, dim_bound)
    report = check_conditions(alg, node_bound, dim_bound, graph=g)
    out = CrossValidation(alg.presentation.name or alg.presentation.fingerprint(), report)
    add = out.checks.append

    conflict = report.conflict()
    add(CheckResult("theorem consistency", conflict is None,
                    "verdicts " + " ".join(f"{c}={v}" for c, v in report.values().items())))
    if not g.complete:
        for name in ("hasse regular", "covers are mutations", "join semidistributive", "meet semidistributive",
                     "bricks and join irreducibles", "semibricks and pairs", "classes determined by bricks",
                     "meet is intersection", "brick labels", "simple generated iff boolean",
                     "tau via transpose", "opposite anti-isomorphism", "oracle"):
            add(CheckResult(name, None, f"enumeration incomplete ({g.reason})"))
        return out

    ctx = context(alg)
    P = torsion_poset(g)
    L = as_lattice(P)
    n = alg.n
    bricks = enumerate_bricks(g)

    def hasse():
        rep = is_hasse_regular(P, n)
        return bool(rep), f"every degree is {n}" if rep else f"witness {rep.witness}"

    def covers_vs_edges():
        idx = P.index
        cov = {(idx[a], idx[b]) for a, b in P.covers()}
        edges = {(s, t) for s, t, _ in g.edges}
        return cov == edges, f"{len(cov)} covers, {len(edges)} mutation edges"

    def semidistributive(fn):
        rep = fn(L)
        return bool(rep), "" if rep else f"witness {_names(P, rep.witness)}"

    def brick_bijection():
        classes = _brick_classes(P, bricks)
        ji = {P.index[x] for x in join_irreducibles(L)}
        ok = None not in classes and len(set(classes)) == len(bricks) and set(classes) == ji
        return ok, f"{len(bricks)} bricks, {len(ji)} join irreducibles"

    def semibricks():
        sb = enumerate_semibricks(bricks)
        images = set()
        for pair in g.nodes:
            images.add(frozenset(brick_index(bricks, B) for B in stau_to_semibrick(pair)))
        ok = len(sb) == len(g.nodes) and len(images) == len(g.nodes) and images <= set(sb)
        return ok, f"{len(sb)} semibricks, {len(g.nodes)} pairs, {len(images)} distinct images"

    def determined_by_bricks():
        classes = _brick_classes(P, bricks)
        for i, T in enumerate(P.elements):
            inside = [classes[k] for k, B in enumerate(bricks) if T.contains(B)]
            target = L.join_all([P.elements[c] for c in inside]) if inside else L.bottom
            if target != T:
                return False, f"{T} is not the join of its brick classes"
        return True, f"{len(P)} classes"

    def meet_is_intersection():
        probes = list(ctx.registry.modules) + bricks
        member = [[T.contains(X) for X in probes] for T in P.elements]
        for i in range(len(P)):
            for j in range(i + 1, len(P)):
                m = L.meet_table[i, j]
                for k in range(len(probes)):
                    if member[m][k] != (member[i][k] and member[j][k]):
                        return False, f"meet of {P.elements[i]} and {P.elements[j]}"
        return True, f"{len(probes)} probe modules"

    def labels():
        q = labeled_hasse_quiver(g, bricks)
        used = {b for _, _, b in q.arrows()}
        return True, f"{len(q.labels)} covers labelled by {len(used)} bricks"

    def simple_generated():
        v = check_simple_generated(g)
        return v.value == report.verdicts["c"].value, f"simple generated {v.value.value}, (c) {report.values()['c']}"

    def opposite():
        op = enumerate_mutation_graph(alg.opposite, node_bound, dim_bound)
        if not op.complete:
            return CheckResult("opposite anti-isomorphism", None, f"opposite enumeration incomplete ({op.reason})")
        Q = torsion_poset(op)
        if len(Q) != len(P):
            return False, f"{len(P)} vs {len(Q)} classes"
        return is_antiisomorphic(P, Q) is not None, f"{len(P)} classes"

    def tau_routes():
        for X in ctx.registry.modules:
            T1, T2 = tau(X), tau_via_transpose(X)
            if T1.dims != T2.dims or (not T1.is_zero() and not is_isomorphic(T1, T2)):
                return False, f"tau disagrees on {X.dims}"
        return True, f"{len(ctx.registry)} modules"

    def oracle_check():
        from .oracle import NoFixture, OracleTooLarge, oracle_for

        if not oracle:
            return CheckResult("oracle", None, "disabled")
        try:
            O = oracle_for(alg)
        except (NoFixture, OracleTooLarge) as exc:
            return CheckResult("oracle", None, str(exc))
        if len(O) != len(P):
            return False, f"{len(P)} enumerated vs {len(O)} brute-force classes"
        return find_isomorphism(P, O) is not None, f"{len(O)} classes"

    add(_run("hasse regular", hasse))
    add(_run("covers are mutations", covers_vs_edges))
    add(_run("join semidistributive", lambda: semidistributive(is_join_semidistributive)))
    add(_run("meet semidistributive", lambda: semidistributive(is_meet_semidistributive)))
    add(_run("bricks and join irreducibles", brick_bijection))
    add(_run("semibricks and pairs", semibricks))
    add(_run("classes determined by bricks", determined_by_bricks))
    add(_run("meet is intersection", meet_is_intersection))
    add(_run("brick labels", labels))
    add(_run("simple generated iff boolean", simple_generated))
    add(_run("tau via transpose", tau_routes))
    add(_run("opposite anti-isomorphism", opposite))
    add(_run("oracle", oracle_check))
    return out
