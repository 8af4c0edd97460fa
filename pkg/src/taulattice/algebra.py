"""Bound quiver presentations with monomial relations and their path algebras.

Paths compose left to right: the path ``a b`` first traverses ``a`` and then
``b``.  Modules are right modules, realised as covariant representations, so
the indecomposable projective ``P_i = e_i A`` is spanned by the paths that
start at ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from .linalg import Field


class InvalidPresentation(ValueError):
    pass


class InfiniteDimensional(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class BoundQuiverPresentation:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[tuple[str, ...], ...] = ()
    field: Field = field(default_factory=Field)
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "relations", tuple(tuple(r) for r in self.relations))
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidPresentation("duplicate vertex names")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise InvalidPresentation("duplicate arrow names")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise InvalidPresentation(f"arrow {a.name} has an undeclared endpoint")
        by_name = self.arrow_map
        for rel in self.relations:
            if len(rel) < 2:
                raise InvalidPresentation(f"relation {' '.join(rel)} has length < 2")
            for x, y in zip(rel, rel[1:]):
                if x not in by_name or y not in by_name:
                    raise InvalidPresentation(f"relation {' '.join(rel)} uses an unknown arrow")
                if by_name[x].target != by_name[y].source:
                    raise InvalidPresentation(f"relation {' '.join(rel)} is not composable at {x} {y}")
            if rel[-1] not in by_name:
                raise InvalidPresentation(f"relation {' '.join(rel)} uses an unknown arrow")

    @property
    def arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @property
    def n(self) -> int:
        """Number of vertices, which is the number of simple modules."""
        return len(self.vertices)

    def with_field(self, fld: Field) -> "BoundQuiverPresentation":
        return BoundQuiverPresentation(self.vertices, self.arrows, self.relations, fld, self.name)

    def fingerprint(self) -> str:
        arrows = ",".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        rels = ",".join(" ".join(r) for r in self.relations)
        return f"{self.field}|{','.join(self.vertices)}|{arrows}|{rels}"


@dataclass(frozen=True)
class Path:
    """A path of the quiver; the trivial path at ``v`` has no arrows."""

    start: str
    end: str
    arrows: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __str__(self):
        return " ".join(self.arrows) if self.arrows else f"e{self.start}"


class PathAlgebra:
    """The algebra ``KQ / I`` for a monomial ideal ``I``, with its path basis."""

    def __init__(self, presentation: BoundQuiverPresentation, length_factor: int = 64):
        self.presentation = presentation
        self.field = presentation.field
        self.vertices = presentation.vertices
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.arrows = presentation.arrows
        self.arrow_map = presentation.arrow_map
        self._relations = set(presentation.relations)
        self._max_rel = max((len(r) for r in self._relations), default=0)
        self.basis = self._enumerate_paths(length_factor)
        self.path_index = {p: k for k, p in enumerate(self.basis)}
        self._between = {}
        for p in self.basis:
            self._between.setdefault((p.start, p.end), []).append(p)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __repr__(self):
        name = self.presentation.name or "A"
        return f"PathAlgebra({name}, dim={self.dimension}, over {self.field})"

    def _is_zero(self, arrows: tuple[str, ...]) -> bool:
        # only suffixes need checking when paths grow one arrow at a time
        for k in range(2, min(self._max_rel, len(arrows)) + 1):
            if arrows[-k:] in self._relations:
                return True
        return False

    def _enumerate_paths(self, length_factor: int) -> list[Path]:
        bound = max(1, len(self.arrows)) * length_factor
        out = [Path(v, v) for v in self.vertices]
        frontier = list(out)
        outgoing: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            outgoing[a.source].append(a)
        length = 0
        while frontier:
            length += 1
            if length > bound:
                raise InfiniteDimensional(
                    f"nonzero paths of length > {bound}; add relations to make the algebra finite-dimensional"
                )
            nxt = []
            for p in frontier:
                for a in outgoing[p.end]:
                    arrows = p.arrows + (a.name,)
                    if not self._is_zero(arrows):
                        nxt.append(Path(p.start, a.target, arrows))
            out.extend(nxt)
            frontier = nxt
        return out

    def paths(self, start: str, end: str) -> list[Path]:
        """Basis of ``e_start A e_end``: nonzero paths from ``start`` to ``end``."""
        return self._between.get((start, end), [])

    def paths_from(self, start: str) -> list[Path]:
        return [p for p in self.basis if p.start == start]

    def paths_to(self, end: str) -> list[Path]:
        return [p for p in self.basis if p.end == end]

    def multiply(self, p: Path, q: Path) -> Optional[Path]:
        """The product ``p q`` (first p, then q) as a basis path, or None when zero."""
        if p.end != q.start:
            return None
        arrows = p.arrows + q.arrows
        if not arrows:
            return p
        prod = Path(p.start, q.end, arrows)
        return prod if prod in self.path_index else None

    def arrow_path(self, name: str) -> Path:
        a = self.arrow_map[name]
        return Path(a.source, a.target, (name,))

    @property
    def nilpotency_index(self) -> int:
        """Smallest k with (arrow ideal)^k = 0."""
        return max(p.length for p in self.basis) + 1

    @cached_property
    def opposite(self) -> "PathAlgebra":
        op = PathAlgebra(opposite_algebra(self.presentation))
        op.__dict__["opposite"] = self
        return op

    @staticmethod
    def reverse(p: Path) -> Path:
        return Path(p.end, p.start, tuple(reversed(p.arrows)))


def build_algebra(presentation: BoundQuiverPresentation, length_factor: int = 64) -> PathAlgebra:
    return PathAlgebra(presentation, length_factor)


def opposite_algebra(p: BoundQuiverPresentation) -> BoundQuiverPresentation:
    """Reverse every arrow and every relation path; arrow names are kept."""
    arrows = tuple(Arrow(a.name, a.target, a.source) for a in p.arrows)
    relations = tuple(tuple(reversed(r)) for r in p.relations)
    name = p.name[:-3] if p.name.endswith("^op") else (p.name + "^op" if p.name else "")
    return BoundQuiverPresentation(p.vertices, arrows, relations, p.field, name)


def product(*presentations: BoundQuiverPresentation, name: str = "") -> BoundQuiverPresentation:
    """Disjoint union of quivers, i.e. the product of the algebras.

    Vertex and arrow names must already be distinct across the factors.
    """
    if not presentations:
        raise InvalidPresentation("empty product")
    fld = presentations[0].field
    vertices, arrows, relations = [], [], []
    for q in presentations:
        if q.field != fld:
            raise InvalidPresentation("factors over different fields")
        vertices += q.vertices
        arrows += q.arrows
        relations += q.relations
    name = name or " x ".join(q.name or "?" for q in presentations)
    return BoundQuiverPresentation(tuple(vertices), tuple(arrows), tuple(relations), fld, name)
