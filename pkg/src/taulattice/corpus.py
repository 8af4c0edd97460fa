"""Shipped algebras: products of local algebras, type A quivers and their relatives."""
from __future__ import annotations

from .algebra import Arrow, BoundQuiverPresentation, product
from .linalg import Field


def base_field(fld: Field | None = None, vertex: str = "1") -> BoundQuiverPresentation:
    """The field K itself: one vertex, no arrows."""
    return BoundQuiverPresentation((vertex,), (), (), fld or Field(), "K")


def truncated_polynomial(m: int, fld: Field | None = None, vertex: str = "1", arrow: str = "x") -> BoundQuiverPresentation:
    """K[x]/(x^m) as a one-loop quiver."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return base_field(fld, vertex)
    return BoundQuiverPresentation((vertex,), (Arrow(arrow, vertex, vertex),), ((arrow,) * m,),
                                   fld or Field(), f"K[{arrow}]/({arrow}^{m})")


def linear_a(n: int, fld: Field | None = None, relations=(), orientation: str | None = None) -> BoundQuiverPresentation:
    """Type A_n on vertices 1..n; arrow a_i joins i and i+1.

    ``orientation`` is a string of ``>``/``<`` per arrow (default all ``>``, i.e. i -> i+1).
    Relations are given as sequences of arrow names.
    """
    orientation = orientation or ">" * (n - 1)
    if len(orientation) != n - 1:
        raise ValueError("orientation needs one symbol per arrow")
    arrows = []
    for i, o in enumerate(orientation, start=1):
        s, t = (str(i), str(i + 1)) if o == ">" else (str(i + 1), str(i))
        arrows.append(Arrow(f"a{i}", s, t))
    name = f"A{n}" if set(orientation) <= {">"} else f"A{n}[{orientation}]"
    if relations:
        name += "/(" + ",".join("".join(r) for r in relations) + ")"
    return BoundQuiverPresentation(tuple(str(i) for i in range(1, n + 1)), tuple(arrows), tuple(relations),
                                   fld or Field(), name)


def products_of_locals(fld: Field | None = None) -> dict[str, BoundQuiverPresentation]:
    """The Boolean family: products of truncated polynomial rings in up to three factors."""
    fld = fld or Field()
    K = lambda v: base_field(fld, v)
    T = lambda m, v, a: truncated_polynomial(m, fld, v, a)
    return {
        "K": K("1"),
        "K[x]/(x^2)": T(2, "1", "x"),
        "K[x]/(x^3)": T(3, "1", "x"),
        "K[x]/(x^4)": T(4, "1", "x"),
        "K[x]/(x^2) x K": product(T(2, "1", "x"), K("2"), name="K[x]/(x^2) x K"),
        "K x K": product(K("1"), K("2"), name="K x K"),
        "K[x]/(x^2) x K[y]/(y^2)": product(T(2, "1", "x"), T(2, "2", "y"), name="K[x]/(x^2) x K[y]/(y^2)"),
        "K[x]/(x^2) x K[y]/(y^3)": product(T(2, "1", "x"), T(3, "2", "y"), name="K[x]/(x^2) x K[y]/(y^3)"),
        "K x K x K": product(K("1"), K("2"), K("3"), name="K x K x K"),
        "K[x]/(x^2) x K x K[z]/(z^2)": product(T(2, "1", "x"), K("2"), T(2, "3", "z"),
                                               name="K[x]/(x^2) x K x K[z]/(z^2)"),
        "K[x]/(x^2) x K[y]/(y^3) x K[z]/(z^4)": product(T(2, "1", "x"), T(3, "2", "y"), T(4, "3", "z"),
                                                        name="K[x]/(x^2) x K[y]/(y^3) x K[z]/(z^4)"),
    }


def non_boolean(fld: Field | None = None) -> dict[str, BoundQuiverPresentation]:
    """Algebras whose quiver has an arrow between distinct vertices."""
    fld = fld or Field()
    return {
        "A2": linear_a(2, fld),
        "A3": linear_a(3, fld),
        "A3/(a1a2)": linear_a(3, fld, relations=(("a1", "a2"),)),
        "A3[><]": linear_a(3, fld, orientation="><"),
        "A3[<>]": linear_a(3, fld, orientation="<>"),
        "A2 x K[x]/(x^2)": product(linear_a(2, fld), truncated_polynomial(2, fld, "3", "x"),
                                   name="A2 x K[x]/(x^2)"),
    }


def corpus(fld: Field | None = None) -> dict[str, BoundQuiverPresentation]:
    out = dict(products_of_locals(fld))
    out.update(non_boolean(fld))
    return out


def kronecker(fld: Field | None = None) -> BoundQuiverPresentation:
    """Two arrows 1 -> 2: tau-tilting infinite, used to exercise the bounds."""
    return BoundQuiverPresentation(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "1", "2")), (),
                                   fld or Field(), "Kronecker")
