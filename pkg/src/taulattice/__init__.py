"""Torsion-class lattices of finite-dimensional algebras via support tau-tilting mutation.

Modules are right modules, written as representations of a bound quiver whose
relations are paths; a path ``a b`` means first ``a``, then ``b``.  All
arithmetic is exact, over a prime field GF(p) or over the rationals (p = 0).
"""
from .algebra import (
    Arrow,
    BoundQuiverPresentation,
    InfiniteDimensional,
    InvalidPresentation,
    PathAlgebra,
    build_algebra,
    opposite_algebra,
    product,
)
from .decompose import decompose, is_brick, is_indecomposable, is_isomorphic
from .homological import minimal_projective_presentation, tau, tau_via_transpose, transpose
from .lattice import (
    FiniteLattice,
    FinitePoset,
    NotALattice,
    PropertyReport,
    as_lattice,
    boolean_subset_isomorphism,
    covers,
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
)
from .linalg import Field
from .modules import Morphism, Representation, hom_dim, hom_space, injective, projective, simple
from .oracle import bruteforce_torsion_classes, indecomposables, oracle_for
from .report import RunReport, render_dot, run_presentation
from .specfile import parse_algebra_spec, parse_spec, serialize
from .tau_tilting import (
    BoundExceeded,
    LabelNotUnique,
    MutationGraph,
    SupportTauTiltingPair,
    brick_label,
    enumerate_bricks,
    enumerate_mutation_graph,
    enumerate_semibricks,
    labeled_hasse_quiver,
    mutate,
    stau_to_semibrick,
    torsion_lattice,
    torsion_poset,
)
from .theorem import (
    ConditionReport,
    InconsistentWithTheorem,
    Verdict,
    check_conditions,
    check_f_structural,
    check_simple_generated,
    cross_validate,
)

__version__ = "0.1.0"
