"""Lattice properties of a few small lattices, with the witnesses that refute them."""
from taulattice.lattice import (
    as_lattice,
    boolean_cube,
    boolean_subset_isomorphism,
    chain,
    diamond,
    is_distributive,
    is_join_semidistributive,
    is_lower_semimodular,
    is_upper_semimodular,
    pentagon,
)

for name, P in [("chain of 3", chain(3)), ("square", boolean_cube(2)), ("pentagon", pentagon()),
                ("diamond", diamond())]:
    L = as_lattice(P)
    print(f"{name}: {len(L)} elements")
    for check in (is_upper_semimodular, is_lower_semimodular, is_distributive, is_join_semidistributive):
        rep = check(L)
        extra = "" if rep else f"  witness {rep.witness}"
        print(f"  {rep.name:<24} {bool(rep)}{extra}")
    iso = boolean_subset_isomorphism(L)
    print(f"  boolean on {iso[0]} atoms" if iso else "  not boolean")
