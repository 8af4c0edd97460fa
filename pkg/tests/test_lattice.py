import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from taulattice.lattice import (
    FinitePoset,
    NotALattice,
    SizeMismatch,
    as_lattice,
    boolean_cube,
    boolean_subset_isomorphism,
    chain,
    covers,
    diamond,
    find_isomorphism,
    is_antiisomorphic,
    is_boolean,
    is_distributive,
    is_hasse_regular,
    is_join_semidistributive,
    is_lower_semimodular,
    is_meet_semidistributive,
    is_upper_semimodular,
    join_irreducibles,
    pentagon,
    transitive_closure,
)


def brute_covers(P):
    """Cover pairs by scanning every ordered pair and every middle element."""
    out = set()
    for a, b in itertools.permutations(P.elements, 2):
        if P.le(b, a) and not any(P.le(b, c) and P.le(c, a) and c not in (a, b) for c in P.elements):
            out.add((a, b))
    return out


def downset_lattice(n_points, relations):
    """Order ideals of a small poset, ordered by inclusion: always distributive."""
    leq = np.eye(n_points, dtype=bool)
    for i, j in relations:
        leq[i, j] = True
    leq = transitive_closure(leq)
    ideals = []
    for mask in range(2**n_points):
        s = {i for i in range(n_points) if mask >> i & 1}
        if all(i in s for j in s for i in range(n_points) if leq[i, j]):
            ideals.append(frozenset(s))
    return FinitePoset(ideals, [[a <= b for b in ideals] for a in ideals])


acyclic_relations = st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                                             .filter(lambda ij: ij[0] < ij[1]), max_size=5)))


def random_lattice(seed, size):
    """A random finite lattice: a family of subsets closed under intersection, plus the top."""
    rng = random.Random(seed)
    universe = frozenset(range(4))
    family = {universe}
    for _ in range(size):
        family.add(frozenset(x for x in universe if rng.random() < 0.5))
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(list(family), 2):
            if a & b not in family:
                family.add(a & b)
                changed = True
    elems = sorted(family, key=lambda s: (len(s), sorted(s)))
    return as_lattice(FinitePoset(elems, [[a <= b for b in elems] for a in elems]))


# -- covers -------------------------------------------------------------------

def test_covers_of_three_chain():
    assert covers(chain(3)) == {(1, 0), (2, 1)}


def test_covers_of_square():
    assert len(covers(boolean_cube(2))) == 4


def test_covers_of_pentagon_match_brute_force():
    P = pentagon()
    assert covers(P) == brute_covers(P)
    assert len(covers(P)) == 5


@given(seed=st.integers(0, 10_000), size=st.integers(1, 6))
@settings(max_examples=40, deadline=None)
def test_covers_regenerate_order(seed, size):
    P = random_lattice(seed, size).poset
    cov = np.eye(len(P), dtype=bool)
    for a, b in covers(P):
        cov[P.index[b], P.index[a]] = True
    assert np.array_equal(transitive_closure(cov), P.leq)
    assert covers(P) == brute_covers(P)


# -- lattice construction ----------------------------------------------------------

def test_square_is_lattice():
    L = as_lattice(boolean_cube(2))
    assert L.bottom == frozenset() and len(L.top) == 2


def test_two_maximal_two_minimal_is_not_a_lattice():
    P = FinitePoset.from_relation(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    with pytest.raises(NotALattice) as err:
        as_lattice(P)
    assert set(err.value.pair) in ({"a", "b"}, {"c", "d"})


def test_pentagon_is_lattice():
    L = as_lattice(pentagon())
    assert L.join("a", "b") == "1" and L.meet("a", "c") == "0"


def test_invalid_orders_rejected():
    with pytest.raises(ValueError):
        FinitePoset(["x", "y"], [[True, True], [True, True]])
    with pytest.raises(ValueError):
        FinitePoset(["x", "x"], np.eye(2, dtype=bool))
    with pytest.raises(ValueError):
        FinitePoset(["x", "y", "z"], [[1, 1, 0], [0, 1, 1], [0, 0, 1]])


@given(seed=st.integers(0, 10_000), size=st.integers(1, 6))
@settings(max_examples=50, deadline=None)
def test_meet_join_axioms(seed, size):
    L = random_lattice(seed, size)
    E = L.elements
    for a, b in itertools.product(E, repeat=2):
        m, j = L.meet(a, b), L.join(a, b)
        assert m == a & b  # intersection-closed family: meet is intersection
        assert L.poset.le(m, a) and L.poset.le(a, j) and L.poset.le(b, j)
        assert L.meet(a, j) == a and L.join(a, m) == a
        assert m == L.meet(b, a) and j == L.join(b, a)
        assert L.poset.le(L.bottom, a) and L.poset.le(a, L.top)
    for a, b, c in itertools.product(E, repeat=3):
        assert L.meet(L.meet(a, b), c) == L.meet(a, L.meet(b, c))
        assert L.join(L.join(a, b), c) == L.join(a, L.join(b, c))


# -- semimodularity and distributivity ------------------------------------------------

def test_cube_is_semimodular_both_ways():
    L = as_lattice(boolean_cube(3))
    assert is_upper_semimodular(L) and is_lower_semimodular(L)


def test_pentagon_fails_upper_semimodularity_with_witness():
    L = as_lattice(pentagon())
    rep = is_upper_semimodular(L)
    assert not rep
    a, b = rep.witness
    cov = covers(L.poset)
    m, j = L.meet(a, b), L.join(a, b)
    assert (a, m) in cov and (b, m) in cov
    assert not ((j, a) in cov and (j, b) in cov)
    assert set(rep.witness) == {"a", "b"}
    assert not is_lower_semimodular(L)


def test_diamond_is_semimodular():
    L = as_lattice(diamond())
    assert is_upper_semimodular(L) and is_lower_semimodular(L)


def test_distributivity_examples():
    assert is_distributive(as_lattice(chain(5)))
    for P in (pentagon(), diamond()):
        rep = is_distributive(as_lattice(P))
        assert not rep
        a, b, c = rep.witness
        L = as_lattice(P)
        assert L.meet(L.join(a, b), c) != L.join(L.meet(a, c), L.meet(b, c))


def test_boolean_examples():
    rep = is_boolean(as_lattice(boolean_cube(2)))
    assert rep
    assert rep.complement[frozenset({0})] == frozenset({1})
    assert not is_boolean(as_lattice(chain(3)))
    assert not is_boolean(as_lattice(pentagon()))


def test_boolean_isomorphism_on_scrambled_cube():
    cube = boolean_cube(3)
    rng = random.Random(7)
    labels = [f"v{k}" for k in range(8)]
    rng.shuffle(labels)
    rename = dict(zip(cube.elements, labels))
    order = list(range(8))
    rng.shuffle(order)
    elems = [rename[cube.elements[i]] for i in order]
    leq = cube.leq[np.ix_(order, order)]
    L = as_lattice(FinitePoset(elems, leq))
    n, phi = boolean_subset_isomorphism(L)
    assert n == 3
    assert sorted(map(sorted, phi.values())) == sorted(map(sorted, (frozenset(s) for k in range(4)
                                                                     for s in itertools.combinations((1, 2, 3), k))))
    for x, y in itertools.product(elems, repeat=2):
        assert L.poset.le(x, y) == (phi[x] <= phi[y])


def test_boolean_isomorphism_negative_and_trivial():
    assert boolean_subset_isomorphism(as_lattice(pentagon())) is None
    assert boolean_subset_isomorphism(as_lattice(chain(2)))[0] == 1


def test_semidistributivity_examples():
    N5, M3, B2 = (as_lattice(P) for P in (pentagon(), diamond(), boolean_cube(2)))
    assert is_join_semidistributive(N5) and is_meet_semidistributive(N5)
    assert not is_join_semidistributive(M3) and not is_meet_semidistributive(M3)
    assert is_join_semidistributive(B2) and is_meet_semidistributive(B2)


def test_join_irreducibles():
    assert join_irreducibles(as_lattice(chain(4))) == [1, 2, 3]
    assert set(join_irreducibles(as_lattice(pentagon()))) == {"a", "b", "c"}
    assert sorted(map(sorted, join_irreducibles(as_lattice(boolean_cube(3))))) == [[0], [1], [2]]


def test_hasse_regularity():
    assert not is_hasse_regular(chain(3), 2)
    assert is_hasse_regular(boolean_cube(2), 2)
    assert is_hasse_regular(pentagon(), 2)


@pytest.mark.parametrize("k", range(1, 6))
def test_cube_invariants(k):
    L = as_lattice(boolean_cube(k))
    assert len(join_irreducibles(L)) == k
    assert is_upper_semimodular(L) and is_lower_semimodular(L)
    assert is_hasse_regular(L.poset, k)


@given(seed=st.integers(0, 10_000), size=st.integers(1, 6))
@settings(max_examples=50, deadline=None)
def test_property_implications(seed, size):
    L = random_lattice(seed, size)
    boolean = bool(is_boolean(L))
    if boolean:
        assert is_distributive(L)
    if is_distributive(L):
        assert is_join_semidistributive(L) and is_meet_semidistributive(L)
    assert boolean == (boolean_subset_isomorphism(L) is not None)
    D = L.dual()
    assert bool(is_upper_semimodular(L)) == bool(is_lower_semimodular(D))


@given(acyclic_relations)
@settings(max_examples=40, deadline=None)
def test_order_ideals_form_distributive_lattices(spec):
    n, rels = spec
    L = as_lattice(downset_lattice(n, rels))
    assert is_distributive(L) and is_upper_semimodular(L) and is_lower_semimodular(L)
    # Birkhoff: join irreducibles correspond to the points of the poset
    assert len(join_irreducibles(L)) == n


# -- (anti-)isomorphism ---------------------------------------------------------------

def test_chain_antiisomorphic_to_itself():
    phi = is_antiisomorphic(chain(4), chain(4))
    assert phi == {0: 3, 1: 2, 2: 1, 3: 0}


def test_pentagon_self_dual():
    assert is_antiisomorphic(as_lattice(pentagon()), as_lattice(pentagon())) is not None


def test_square_not_antiisomorphic_to_chain():
    assert is_antiisomorphic(boolean_cube(2), chain(4)) is None


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        is_antiisomorphic(chain(2), chain(3))


@given(seed=st.integers(0, 10_000), size=st.integers(1, 6), shuffle_seed=st.integers(0, 100))
@settings(max_examples=30, deadline=None)
def test_isomorphism_found_after_relabelling(seed, size, shuffle_seed):
    P = random_lattice(seed, size).poset
    order = list(range(len(P)))
    random.Random(shuffle_seed).shuffle(order)
    Q = FinitePoset([("x", i) for i in order], P.leq[np.ix_(order, order)])
    phi = find_isomorphism(P, Q)
    assert phi is not None
    for a, b in itertools.product(P.elements, repeat=2):
        assert P.le(a, b) == Q.le(phi[a], phi[b])
