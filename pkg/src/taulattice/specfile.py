"""Plain-text algebra description files.

One statement per line; ``#`` starts a comment.

    name K[x]/(x^2) x A2          optional display name (rest of the line)
    field 3                       0 for the rationals, otherwise a prime; default 2
    vertex 1 2 3                  one or more vertex names
    arrow a: 1 -> 2               arrow name, source, target
    relation a b                  the path "first a, then b" is zero
    bound nodes 5000              enumeration bounds: ``nodes`` or ``dim``

Names are made of letters, digits, ``_`` and ``'``.  Vertices must be declared
before arrows that use them, and arrows before relations.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .algebra import Arrow, BoundQuiverPresentation
from .linalg import Field, is_prime

NAME = re.compile(r"[A-Za-z0-9_']+")


class ParseError(ValueError):
    """A diagnostic with a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class SpecSyntaxError(ParseError):
    pass


class UnknownVertex(ParseError):
    pass


class UnknownArrow(ParseError):
    pass


class DuplicateName(ParseError):
    pass


class NonComposablePath(ParseError):
    pass


class NonPrimeCharacteristic(ParseError):
    pass


@dataclass(frozen=True)
class AlgebraSpec:
    presentation: BoundQuiverPresentation
    bounds: dict[str, int] = dc_field(default_factory=dict)

    @property
    def node_bound(self) -> Optional[int]:
        return self.bounds.get("nodes")

    @property
    def dim_bound(self) -> Optional[int]:
        return self.bounds.get("dim")


def _tokens(text: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based columns, ``->`` and ``:`` split out."""
    out = []
    for m in re.finditer(r"->|:|(?:(?!->)[^\s:])+", text):
        out.append((m.group(), m.start() + 1))
    return out


def parse_spec(text: str) -> AlgebraSpec:
    vertices: list[str] = []
    arrows: dict[str, Arrow] = {}
    relations: list[tuple[str, ...]] = []
    bounds: dict[str, int] = {}
    p: Optional[int] = None
    name = ""

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        kw, kcol = toks[0]
        args = toks[1:]
        end_col = len(line.rstrip()) + 1

        def need_name(tok):
            word, col = tok
            if not NAME.fullmatch(word):
                raise SpecSyntaxError(f"invalid name {word!r}", lineno, col)
            return word

        if kw == "name":
            name = line[args[0][1] - 1 :].strip() if args else ""
        elif kw == "field":
            if len(args) != 1:
                col = args[1][1] if len(args) > 1 else end_col
                raise SpecSyntaxError("expected: field <characteristic>", lineno, col)
            word, col = args[0]
            if not word.isdigit():
                raise SpecSyntaxError(f"characteristic {word!r} is not a number", lineno, col)
            value = int(word)
            if value != 0 and not is_prime(value):
                raise NonPrimeCharacteristic(f"{value} is neither 0 nor a prime", lineno, col)
            if p is not None:
                raise SpecSyntaxError("field declared twice", lineno, kcol)
            p = value
        elif kw == "vertex":
            if not args:
                raise SpecSyntaxError("expected at least one vertex name", lineno, end_col)
            for tok in args:
                v = need_name(tok)
                if v in vertices:
                    raise DuplicateName(f"vertex {v} declared twice", lineno, tok[1])
                vertices.append(v)
        elif kw == "arrow":
            shape = [t for t, _ in args]
            if len(args) != 5 or shape[1] != ":" or shape[3] != "->":
                col = args[0][1] if args else end_col
                raise SpecSyntaxError("expected: arrow <name>: <source> -> <target>", lineno, col)
            a = need_name(args[0])
            if a in arrows:
                raise DuplicateName(f"arrow {a} declared twice", lineno, args[0][1])
            for tok in (args[2], args[4]):
                need_name(tok)
                if tok[0] not in vertices:
                    raise UnknownVertex(f"vertex {tok[0]} is not declared", lineno, tok[1])
            arrows[a] = Arrow(a, args[2][0], args[4][0])
        elif kw == "relation":
            if len(args) < 2:
                raise SpecSyntaxError("a relation needs a path of at least two arrows", lineno,
                                      args[0][1] if args else end_col)
            path = []
            for tok in args:
                a = need_name(tok)
                if a not in arrows:
                    raise UnknownArrow(f"arrow {a} is not declared", lineno, tok[1])
                if path and arrows[path[-1]].target != arrows[a].source:
                    raise NonComposablePath(
                        f"{path[-1]} ends at {arrows[path[-1]].target} but {a} starts at {arrows[a].source}",
                        lineno, tok[1])
                path.append(a)
            relations.append(tuple(path))
        elif kw == "bound":
            if len(args) != 2 or args[0][0] not in ("nodes", "dim"):
                raise SpecSyntaxError("expected: bound nodes <k> or bound dim <k>", lineno,
                                      args[0][1] if args else end_col)
            word, col = args[1]
            if not word.isdigit() or int(word) < 1:
                raise SpecSyntaxError(f"bound {word!r} is not a positive integer", lineno, col)
            bounds[args[0][0]] = int(word)
        else:
            raise SpecSyntaxError(f"unknown keyword {kw!r}", lineno, kcol)

    if not vertices:
        raise SpecSyntaxError("no vertices declared", max(1, len(text.splitlines())), 1)
    fld = Field(2 if p is None else p)
    pres = BoundQuiverPresentation(tuple(vertices), tuple(arrows.values()), tuple(relations), fld, name)
    return AlgebraSpec(pres, bounds)


def parse_algebra_spec(text: str) -> BoundQuiverPresentation:
    return parse_spec(text).presentation


def serialize(pres: BoundQuiverPresentation, bounds: Optional[dict[str, int]] = None) -> str:
    lines = []
    if pres.name:
        lines.append(f"name {pres.name}")
    lines.append(f"field {pres.field.p}")
    lines.append("vertex " + " ".join(pres.vertices))
    for a in pres.arrows:
        lines.append(f"arrow {a.name}: {a.source} -> {a.target}")
    for r in pres.relations:
        lines.append("relation " + " ".join(r))
    for key in ("nodes", "dim"):
        if bounds and key in bounds:
            lines.append(f"bound {key} {bounds[key]}")
    return "\n".join(lines) + "\n"
