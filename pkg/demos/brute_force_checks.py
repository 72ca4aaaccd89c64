"""Brute-force checks of the ideal theory on every small ring over GF(2).

Each suite lists all ideals of each ring and compares the linear-algebra
answers with answers computed directly from the definitions.
"""
import time

from cubezero import GF
from cubezero.oracle import all_triple_rings, run_suite, verify_finite_dual_trivext

F = GF(2)
rings = [S for dv in range(3) for dw in range(3) for S in all_triple_rings(F, dv, dw)]
print(f"{len(rings)} triple rings F x V x W with dim V, dim W <= 2")

for lemma in ("correspondence", "krull", "colon-socle", "squarezero"):
    t = time.perf_counter()
    report = run_suite(lemma, rings)
    print(f"{report.summary()}  ({time.perf_counter() - t:.1f}s)")

# In F x V, a functional kills an ideal of codimension at most 2.
print(verify_finite_dual_trivext(5, F, trials=50, seed=3).summary())
