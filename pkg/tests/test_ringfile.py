from pathlib import Path

import pytest

from cubezero.algpres import PresentedAlgebra, truncated_polynomial
from cubezero.exactalg import GF, QQ
from cubezero.hankel import Explicit, FiniteSupport, HankelForm, Hilbert, Recurrence, SequenceTriple
from cubezero.oracle import random_presented_algebras, random_triple_rings
from cubezero.ringcore import TripleRing
from cubezero.ringfile import RingFileError, load_ring, parse_ring, serialize_ring

RINGS = Path(__file__).resolve().parent.parent / "rings"


def roundtrip(ring):
    text = serialize_ring(ring)
    back = parse_ring(text)
    assert back == ring
    assert serialize_ring(back) == text


class TestParse:
    def test_triple(self):
        S = parse_ring("ring triple\nfield GF 2\ndimV 2\ndimW 1\nbeta 0 1 : 1  # hyperbolic\n")
        assert S == TripleRing.from_entries(GF(2), 2, 1, {(0, 1): [1]})

    def test_struct_fills_unit_and_mirror(self):
        A = parse_ring("ring struct\nfield Q\ndim 3\nmaxideal 1 2\nmul 1 1 : 0 0 1\n")
        assert A == truncated_polynomial(QQ, 3)

    def test_fractions(self):
        S = parse_ring("ring triple\nfield Q\ndimV 1\ndimW 1\nbeta 0 0 : -3/4\n")
        assert S.beta[0][0] == (QQ(-3) / 4,)

    def test_hankel_kinds(self):
        assert parse_ring("ring hankel\nfield Q\nseq hilbert\n").form == HankelForm(Hilbert())
        assert parse_ring("ring hankel\nfield Q\nseq finite 0:1,3:2\n").form == HankelForm(Explicit(QQ, [1, 0, 0, 2]))
        s = parse_ring("ring hankel\nfield GF 5\nseq recurrence init 0 1 coeffs 1 1\n").form.seq
        assert s == Recurrence(GF(5), [0, 1], [1, 1])
        t = parse_ring("ring hankel\nfield Q\nbeta 2 0 : 1\n").form
        assert t == FiniteSupport(QQ, {(0, 2): 1})

    def test_sample_files_load(self):
        files = sorted(RINGS.glob("*.ring"))
        assert files
        for f in files:
            load_ring(f)


class TestErrors:
    @pytest.mark.parametrize("text,line,col,needle", [
        ("field Q\n", 1, 1, "first directive"),
        ("ring triple\ndimV 1\n", 2, 1, "field"),
        ("ring triple\nfield Q\ndimV 1\ndimW 1\nbeta 0 3 : 1\n", 5, 8, "out of range"),
        ("ring triple\nfield Q\ndimV 2\ndimW 2\nbeta 0 1 : 1\n", 5, 1, "dimension mismatch"),
        ("ring triple\nfield Q\ndimV 2\ndimW 1\nbeta 0 1 : 1\nbeta 1 0 : 2\n", 6, 1, "symmetry"),
        ("ring triple\nfield Q\ndimV 1\ndimW 1\nbeta 0 0 : x\n", 5, 12, "bad scalar"),
        ("ring hankel\nfield GF 3\nseq hilbert\n", 3, 5, "bad field"),
        ("ring struct\nfield GF 4\n", 2, 10, "prime"),
        ("ring struct\nfield Q\ndim 3\nmaxideal 0 1\n", 4, 1, "maxideal"),
        ("ring triple\nfield Q\ndimV 1\n", 3, 1, "dimW"),
        ("ring cube\n", 1, 6, "expected"),
        ("ring triple\nfield Q\nfrobnicate\n", 3, 1, "unknown directive"),
        ("ring hankel\nfield GF 3\nbeta 0 0 : 1/3\n", 3, 12, "no value"),
    ])
    def test_error_positions(self, text, line, col, needle):
        with pytest.raises(RingFileError) as exc:
            parse_ring(text)
        e = exc.value
        assert (e.line, e.col) == (line, col)
        assert needle in str(e)


class TestRoundTrip:
    def test_triple_rings(self):
        for S in random_triple_rings(GF(3), 4, 20, seed=3):
            roundtrip(S)
        roundtrip(TripleRing.from_entries(QQ, 2, 1, {(0, 0): [QQ(1) / 3], (0, 1): [-2]}))

    def test_algebras(self):
        for A in random_presented_algebras(GF(5), 4, 10, seed=3):
            roundtrip(A)
        roundtrip(PresentedAlgebra.from_products(QQ, 1, {}))

    @pytest.mark.parametrize("form", [
        HankelForm(Hilbert()),
        HankelForm(Explicit(QQ, [1, 0, QQ(1) / 2])),
        HankelForm(Explicit(QQ, [])),
        HankelForm(Recurrence(QQ, [0, 1], [1, 1])),
        FiniteSupport(GF(3), {(0, 0): 1, (1, 2): 2}),
    ])
    def test_hankel(self, form):
        roundtrip(SequenceTriple(form.field, form))
