"""Algebras from structure constants and their associated graded rings.

A cube-zero algebra A has the same socle dimension as gr A, and the
property of interest can be read off from either one.
"""
from cubezero import GF, QQ, PresentedAlgebra, check_gr_equivalence, decide_diamond, gr, serialize_ring
from cubezero.oracle import random_presented_algebras

A = PresentedAlgebra.from_products(QQ, 3, {(1, 1): [0, 0, 1]})
print("Q[x]/(x^3) as a .ring file:")
print(serialize_ring(A))
print("its associated graded ring:")
print(serialize_ring(gr(A)))
print("verdict for A:   ", decide_diamond(A).summary())
print("verdict for gr A:", decide_diamond(gr(A)).summary())
print()

# Over GF(2), m = span(e1, e2) with every product equal to e1 + e2:
# m^2 is the diagonal line, not a coordinate axis.
B = PresentedAlgebra.from_products(GF(2), 3, {(1, 1): [0, 1, 1], (1, 2): [0, 1, 1], (2, 2): [0, 1, 1]})
report = check_gr_equivalence(B)
print(f"diagonal m^2 over GF(2): {report.cases} socle functionals compared, failures: {report.failures}")

# Random cube-zero algebras written in a scrambled basis of m.
bad = 0
for C in random_presented_algebras(GF(3), 5, 20, seed=1):
    G = gr(C)
    r = check_gr_equivalence(C, exhaustive=False)
    bad += len(r.failures)
    print(f"dim {C.dim}: gr = F x F^{G.dim_v} x F^{G.dim_w}, {r.cases} checks")
print("total failures:", bad)
