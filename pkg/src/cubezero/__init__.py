"""Exact computations for commutative quasi-local rings with ``m^3 = 0``.

The property studied throughout is that injective hulls of simple modules
are locally Artinian.  Rings come in three presentations:

* :class:`TripleRing` -- ``F x V x W`` with a symmetric bilinear ``beta``;
* :class:`PresentedAlgebra` -- structure constants with ``e_0 = 1``;
* :class:`SequenceTriple` -- ``F x V x F`` with ``V`` countable and a
  finite or Hankel form.

:func:`decide_diamond` gives a verdict for each of them.
"""
from .algpres import PresentedAlgebra, gr, gr_ideal, m_power, trivial_extension, truncated_polynomial, validate
from .diamond import Outcome, Verdict, check_gr_equivalence, decide_diamond, find_bad_factor, shortcut_lemmas
from .exactalg import GF, QQ, Matrix, Subspace, det_fraction_free, enumerate_subspaces, kernel, rref
from .hankel import (
    BlackBox, Explicit, FiniteSupport, HankelForm, Hilbert, Recurrence, SequenceTriple,
    form_rank, hankel_matrix, hilbert_det_formula, minimal_recurrence,
)
from .ringcore import TripleRing, colon, multiply, socle, v_f_subspace
from .ringfile import parse_ring, serialize_ring

__version__ = "0.1.0"
