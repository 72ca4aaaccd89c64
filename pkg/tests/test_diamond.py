from fractions import Fraction

import pytest

from cubezero import diamond
from cubezero.algpres import PresentedAlgebra, gr, trivial_extension, truncated_polynomial
from cubezero.diamond import (
    ArtinianFiniteDim, BadFactorCert, Outcome, SocleCodimFinite, Verdict, WindowExhausted,
    check_gr_equivalence, decide_diamond, find_bad_factor, shortcut_lemmas, v_f_corank,
)
from cubezero.exactalg import GF, QQ
from cubezero.hankel import (
    AtLeast, BlackBox, Explicit, FiniteRank, FiniteSupport, HankelForm, Hilbert, Recurrence,
    SequenceTriple,
)
from cubezero.oracle import random_presented_algebras
from cubezero.ringcore import TripleRing


def hankel_ring(seq):
    return SequenceTriple(seq.field, HankelForm(seq))


SPARSE = hankel_ring(Explicit(QQ, [1]))
HILBERT = hankel_ring(Hilbert())
CONST = hankel_ring(Recurrence(QQ, [1], [1]))
FIB = hankel_ring(Recurrence(QQ, [0, 1], [1, 1]))


class TestSequenceRings:
    def test_sparse(self):
        v = decide_diamond(SPARSE)
        assert v.outcome is Outcome.HOLDS and v.witness == SocleCodimFinite(1)
        assert v.summary() == "HOLDS (cube-zerolocal(1)): dim m/Soc = 1"

    def test_hilbert(self):
        v = decide_diamond(HILBERT, 10)
        assert v.outcome is Outcome.FAILS
        assert isinstance(v.witness, BadFactorCert)
        assert v.witness.certified_window == 10 and v.witness.closed_form
        assert v.lemma == "badfactor" and v.details["shortcut"] == "cube-zerolocal(2)"

    @pytest.mark.parametrize("ring,codim", [(CONST, 1), (FIB, 2)])
    def test_recurrences(self, ring, codim):
        v = decide_diamond(ring)
        assert v.outcome is Outcome.HOLDS and v.witness == SocleCodimFinite(codim)

    def test_zero_form_is_square_zero(self):
        v = decide_diamond(hankel_ring(Explicit(QQ, [])))
        assert v.outcome is Outcome.HOLDS and v.lemma == "squarezero"

    def test_finite_table(self):
        v = decide_diamond(SequenceTriple(GF(3), FiniteSupport(GF(3), {(0, 0): 1, (1, 2): 2})))
        assert v.witness == SocleCodimFinite(3)

    def test_black_box_is_unknown(self):
        ring = hankel_ring(BlackBox(QQ, lambda n: Fraction(1, (n + 1) ** 2), "1/(n+1)^2"))
        v = decide_diamond(ring, 6)
        assert v.outcome is Outcome.UNKNOWN
        assert v.witness == WindowExhausted(6)
        assert shortcut_lemmas(ring, 6) is None

    def test_find_bad_factor(self):
        assert find_bad_factor(HILBERT, 8).certified_window == 8
        assert find_bad_factor(FIB) is None

    def test_v_f_corank(self):
        assert v_f_corank(FIB, 0) == FiniteRank(0)
        assert v_f_corank(FIB, 3) == FiniteRank(2)
        assert v_f_corank(HILBERT, 1, 6) == AtLeast(6)

    def test_window_must_be_positive(self):
        with pytest.raises(ValueError):
            decide_diamond(SPARSE, 0)


class TestFiniteRings:
    def test_triple_ring_is_artinian(self):
        S = TripleRing.from_entries(GF(2), 2, 1, {(0, 1): [1]})
        v = decide_diamond(S)
        assert v.outcome is Outcome.HOLDS and v.witness == ArtinianFiniteDim(4)
        assert v.details["shortcut"] == "cube-zerolocal(1)"

    def test_square_zero_shortcut(self):
        v = shortcut_lemmas(TripleRing.from_entries(QQ, 3, 0, {}))
        assert v.lemma == "squarezero" and v.witness == ArtinianFiniteDim(4)

    def test_presented_algebra_and_its_graded_ring_agree(self):
        A = truncated_polynomial(QQ, 3)
        assert decide_diamond(A) == decide_diamond(gr(A))

    def test_invalid_algebra(self):
        with pytest.raises(ValueError):
            decide_diamond(truncated_polynomial(QQ, 4))


class TestCoherence:
    def test_disagreeing_shortcut_is_an_error(self, monkeypatch):
        def lying(ring, window=16):
            return Verdict(Outcome.HOLDS, SocleCodimFinite(0), "squarezero")
        monkeypatch.setattr(diamond, "shortcut_lemmas", lying)
        with pytest.raises(AssertionError):
            decide_diamond(HILBERT, 4)

    def test_verdict_rejects_mismatched_witness(self):
        with pytest.raises(ValueError):
            Verdict(Outcome.FAILS, SocleCodimFinite(1))
        with pytest.raises(ValueError):
            Verdict(Outcome.HOLDS, WindowExhausted(3))


class TestGrEquivalence:
    def test_truncated_cubic(self):
        r = check_gr_equivalence(truncated_polynomial(GF(3), 3))
        assert r.ok and r.cases > 0

    def test_trivial_extension(self):
        assert check_gr_equivalence(trivial_extension(GF(2), 2)).ok

    def test_non_coordinate_m_squared(self):
        A = PresentedAlgebra.from_products(GF(2), 3, {(1, 1): [0, 1, 1], (1, 2): [0, 1, 1], (2, 2): [0, 1, 1]})
        assert check_gr_equivalence(A).ok

    def test_random_bases(self):
        for A in random_presented_algebras(GF(3), 4, 10, seed=5):
            r = check_gr_equivalence(A)
            assert r.ok, r.failures
