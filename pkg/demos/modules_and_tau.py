"""Projectives, presentations and the Auslander-Reiten translate over A2 and the dual numbers."""
from taulattice import build_algebra, is_isomorphic, minimal_projective_presentation, tau, tau_via_transpose
from taulattice.corpus import linear_a, truncated_polynomial
from taulattice.homological import is_tau_rigid
from taulattice.modules import projective, simple

A = build_algebra(linear_a(2))
print(A, "basis:", [str(p) for p in A.basis])
for v in A.vertices:
    print(f"P{v} dims {projective(A, v).dims}")

S1 = simple(A, "1")
pres = minimal_projective_presentation(S1)
print("S1 presented by", pres.p1_vertices, "->", pres.p0_vertices)
T = tau(S1)
print("tau S1 dims", T.dims, "equals S2:", is_isomorphic(T, simple(A, "2")),
      "agrees with D Tr:", is_isomorphic(T, tau_via_transpose(S1)))

D = build_algebra(truncated_polynomial(2))
S = simple(D, "1")
print("dual numbers: tau S = S:", is_isomorphic(tau(S), S), " S tau-rigid:", is_tau_rigid(S))
