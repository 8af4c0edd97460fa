"""One test per acceptance criterion.  Each records a PASS/FAIL line that is
printed in the terminal summary."""
import contextlib
import os
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

import taulattice.theorem as theorem_mod
from conftest import (
    BOOLEAN_NAMES,
    CORPUS_NAMES,
    CRITERIA,
    corpus_algebra,
    corpus_graph,
)
from taulattice.decompose import is_isomorphic
from taulattice.lattice import (
    FinitePoset,
    NotALattice,
    as_lattice,
    boolean_subset_isomorphism,
    find_isomorphism,
    is_antiisomorphic,
    is_boolean,
    is_hasse_regular,
    is_join_semidistributive,
    is_lower_semimodular,
    is_meet_semidistributive,
    is_upper_semimodular,
    join_irreducibles,
    pentagon,
)
from taulattice.modules import projective
from taulattice.oracle import oracle_for
from taulattice.tau_tilting import (
    LabelNotUnique,
    brick_index,
    brick_label,
    enumerate_bricks,
    enumerate_mutation_graph,
    enumerate_semibricks,
    labeled_hasse_quiver,
    stau_to_semibrick,
    torsion_poset,
)
from taulattice.theorem import InconsistentWithTheorem, Verdict, check_conditions, cross_validate

ALGEBRAS = Path(__file__).resolve().parent.parent / "algebras"


@contextlib.contextmanager
def criterion(n, title):
    try:
        yield
    except BaseException:
        CRITERIA[n] = (title, False)
        raise
    CRITERIA[n] = (title, True)


def verdict_values(name, p=2):
    return set(check_conditions(corpus_algebra(name, p), graph=corpus_graph(name, p)).values().values())


def test_criterion_01_boolean_family():
    with criterion(1, "products of local algebras give Boolean lattices on 2^n classes, all conditions True"):
        for name in ("K", "K[x]/(x^2)", "K[x]/(x^3)", "K[x]/(x^2) x K", "K[x]/(x^2) x K[y]/(y^3)",
                     "K x K x K", "K[x]/(x^2) x K x K[z]/(z^2)", "K[x]/(x^2) x K[y]/(y^3) x K[z]/(z^4)"):
            assert name in BOOLEAN_NAMES
        for name in BOOLEAN_NAMES:
            g = corpus_graph(name)
            assert g.complete, name
            L = as_lattice(torsion_poset(g))
            n = g.algebra.n
            iso = boolean_subset_isomorphism(L)
            assert iso is not None and iso[0] == n, name
            assert len(L) == 2**n, name
            assert verdict_values(name) == {"True"}, name


def test_criterion_02_non_boolean_controls():
    with criterion(2, "A2 gives N5 with semimodularity witnesses, A3 gives 14 classes, all conditions False"):
        g = corpus_graph("A2")
        P = torsion_poset(g)
        L = as_lattice(P)
        assert len(P) == 5 and find_isomorphism(P, pentagon()) is not None
        up, low = is_upper_semimodular(L), is_lower_semimodular(L)
        assert not up and up.witness is not None
        assert not low and low.witness is not None
        assert len(oracle_for(g.algebra)) == 5

        g3 = corpus_graph("A3")
        P3 = torsion_poset(g3)
        assert len(P3) == 14 and not is_boolean(as_lattice(P3))
        assert len(oracle_for(g3.algebra)) == 14
        for name in ("A2", "A3"):
            assert verdict_values(name) == {"False"}, name


def test_criterion_03_oracle_equivalence():
    with criterion(3, "mutation-enumerated torsion posets are order-isomorphic to brute force"):
        for name in CORPUS_NAMES:
            P = torsion_poset(corpus_graph(name))
            O = oracle_for(corpus_algebra(name))
            assert len(P) == len(O), name
            assert find_isomorphism(P, O) is not None, name


def test_criterion_04_hasse_regular():
    with criterion(4, "every complete mutation graph is n-regular"):
        for name in CORPUS_NAMES:
            g = corpus_graph(name)
            assert g.complete
            assert all(d == g.n for d in g.degrees()), name
            assert is_hasse_regular(torsion_poset(g), g.n), name


def test_criterion_05_semidistributive():
    with criterion(5, "every torsion lattice is join and meet semidistributive"):
        for name in CORPUS_NAMES:
            L = as_lattice(torsion_poset(corpus_graph(name)))
            assert is_join_semidistributive(L) and is_meet_semidistributive(L), name


def test_criterion_06_bricks_and_join_irreducibles():
    with criterion(6, "brick count equals join-irreducible count (3 for A2)"):
        for name in CORPUS_NAMES:
            g = corpus_graph(name)
            assert len(enumerate_bricks(g)) == len(join_irreducibles(as_lattice(torsion_poset(g)))), name
        assert len(enumerate_bricks(corpus_graph("A2"))) == 3
        assert len(join_irreducibles(as_lattice(torsion_poset(corpus_graph("A2"))))) == 3


def test_criterion_07_semibricks_and_pairs():
    with criterion(7, "semibrick count equals pair count (5 for A2) and pairs map injectively to semibricks"):
        for name in CORPUS_NAMES:
            g = corpus_graph(name)
            bricks = enumerate_bricks(g)
            sb = enumerate_semibricks(bricks)
            assert len(sb) == len(g.nodes), name
            images = [frozenset(brick_index(bricks, B) for B in stau_to_semibrick(p)) for p in g.nodes]
            assert len(set(images)) == len(images), name
            assert set(images) == set(sb), name
        g = corpus_graph("A2")
        assert len(g.nodes) == 5 and len(enumerate_semibricks(enumerate_bricks(g))) == 5


def test_criterion_08_opposite_duality():
    with criterion(8, "torsion poset of A is anti-isomorphic to that of the opposite algebra"):
        for name in CORPUS_NAMES:
            A = corpus_algebra(name)
            P = torsion_poset(corpus_graph(name))
            Q = torsion_poset(enumerate_mutation_graph(A.opposite))
            assert len(P) == len(Q), name
            assert is_antiisomorphic(P, Q) is not None, name


A2_LABELS = {
    ("((0,1)+(1,1) | 0)", "((0,1) | P1)"): (1, 0),
    ("((0,1)+(1,1) | 0)", "((1,0)+(1,1) | 0)"): (0, 1),
    ("((1,0)+(1,1) | 0)", "((1,0) | P2)"): (1, 1),
    ("((0,1) | P1)", "(0 | P1+P2)"): (0, 1),
    ("((1,0) | P2)", "(0 | P1+P2)"): (1, 0),
}


def test_criterion_09_brick_labels():
    with criterion(9, "every cover has exactly one brick label; A2 labels match the expected table"):
        for name in CORPUS_NAMES:
            g = corpus_graph(name)
            P = torsion_poset(g)
            bricks = enumerate_bricks(g)
            for upper, lower in P.covers():
                B = bricks[brick_label(upper, lower, bricks)]  # raises unless exactly one
                assert upper.contains(B) and not lower.contains(B)
        q = labeled_hasse_quiver(corpus_graph("A2"))
        got = {(u.name, l.name): q.bricks[b].dims for u, l, b in q.arrows()}
        assert got == A2_LABELS
        A = q.poset.elements[0].pair.algebra
        p1 = [b for (u, l), b in q.labels.items() if q.bricks[b].dims == (1, 1)]
        assert len(p1) == 1 and is_isomorphic(q.bricks[p1[0]], projective(A, "1"))


def _cli(path, extra=(), seed="0"):
    env = dict(os.environ, PYTHONHASHSEED=seed)
    res = subprocess.run([sys.executable, "-m", "taulattice", str(path), "--json", "-", *extra],
                         capture_output=True, env=env, check=True)
    return res.stdout


def test_criterion_10_determinism_and_field_stability(tmp_path):
    with criterion(10, "byte-identical outputs across runs; identical verdicts at p = 2, 3, 5"):
        from taulattice.cli import main

        for name in ("a2", "a3_sink", "two_locals"):
            path = ALGEBRAS / f"{name}.alg"
            assert _cli(path, seed="0") == _cli(path, seed="4242"), name
            dots = []
            for k in range(2):
                out = tmp_path / f"{name}{k}.dot"
                assert main([str(path), "--dot", str(out), "-q"]) == 0
                dots.append(out.read_bytes())
            assert dots[0] == dots[1], name
        for name in CORPUS_NAMES:
            base = check_conditions(corpus_algebra(name, 2), graph=corpus_graph(name, 2)).values()
            for p in (3, 5):
                g = corpus_graph(name, p)
                assert check_conditions(corpus_algebra(name, p), graph=g).values() == base, (name, p)
                assert len(g.nodes) == len(corpus_graph(name, 2).nodes), (name, p)
                assert len(enumerate_bricks(g)) == len(enumerate_bricks(corpus_graph(name, 2))), (name, p)


def test_criterion_11_negative_controls(monkeypatch):
    with criterion(11, "corrupted fixtures trigger LabelNotUnique, InconsistentWithTheorem and NotALattice"):
        # a duplicated brick makes the label ambiguous
        g = corpus_graph("A2")
        bricks = enumerate_bricks(g)
        with pytest.raises(LabelNotUnique):
            labeled_hasse_quiver(g, bricks + bricks[:1])
        with monkeypatch.context() as m:
            m.setattr(theorem_mod, "enumerate_bricks", lambda graph: bricks + bricks)
            cv = cross_validate(corpus_algebra("A2"), graph=g, oracle=False)
            assert cv["brick labels"].passed is False and "LabelNotUnique" in cv["brick labels"].detail

        # a wrong structural verdict contradicts the lattice verdicts
        report = check_conditions(corpus_algebra("A2"), graph=g)
        with pytest.raises(InconsistentWithTheorem):
            report.with_verdict("f", Verdict.of(True, "injected")).check_consistent()
        with monkeypatch.context() as m:
            m.setattr(theorem_mod, "check_f_structural", lambda pres: Verdict.of(True, "injected"))
            cv = cross_validate(corpus_algebra("A2"), graph=g, oracle=False)
            assert cv["theorem consistency"].passed is False and cv.report.inconsistent

        # dropping the top class leaves two maximal classes without a join
        P = torsion_poset(g)
        keep = [i for i in range(len(P)) if P.elements[i] != as_lattice(P).top]
        cut = FinitePoset([P.elements[i] for i in keep], P.leq[np.ix_(keep, keep)])
        with pytest.raises(NotALattice):
            as_lattice(cut)
        assert theorem_mod._lattice_condition(cut, True).value.value == "False"
