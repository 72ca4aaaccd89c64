"""Countable-dimensional rings F x V x F built from Hankel sequences.

Each ring here has V with basis v_0, v_1, ... and beta(v_i, v_j) = h_{i+j}.
Whether the property holds comes down to the rank of that infinite Hankel form.
"""
from cubezero import (
    Explicit, HankelForm, Hilbert, Recurrence, SequenceTriple, decide_diamond,
    form_rank, hankel_matrix, hilbert_det_formula, minimal_recurrence, QQ,
)


def ring(seq):
    return SequenceTriple(seq.field, HankelForm(seq))


examples = {
    "single term h_0 = 1": Explicit(QQ, [1]),
    "constant 1, 1, 1, ...": Recurrence(QQ, [1], [1]),
    "Fibonacci 0, 1, 1, 2, ...": Recurrence(QQ, [0, 1], [1, 1]),
    "Hilbert 1, 1/2, 1/3, ...": Hilbert(),
}

for name, seq in examples.items():
    print(f"{name}:")
    print("   6x6 window:")
    for row in hankel_matrix(seq, 6).rows:
        print("     " + " ".join(f"{str(x):>5}" for x in row))
    print("   rank of the form:", form_rank(HankelForm(seq), 12))
    print("   shortest recurrence in 13 terms:", minimal_recurrence(seq, 13))
    print("   verdict:", decide_diamond(ring(seq), 12).summary())
    print()

# The Hilbert form never degenerates: every leading block has a closed-form
# nonzero determinant.
for n in range(1, 7):
    print(f"det of the {n}x{n} Hilbert block = {hilbert_det_formula(n)}")
