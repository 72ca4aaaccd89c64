import pytest

from cubezero import oracle
from cubezero.exactalg import GF, QQ
from cubezero.oracle import (
    Report, all_triple_rings, enumerate_ideals, is_si_by_lattice, random_triple_rings,
    run_suite, verify_colon_socle, verify_compare_vf, verify_correspondence,
    verify_finite_dual_trivext, verify_krull, verify_squarezero_length,
)
from cubezero.ringcore import Ideal, TripleRing, is_subdirectly_irreducible, maximal_ideal, zero_ideal

GF2 = GF(2)
HYPERBOLIC = TripleRing.from_entries(GF2, 2, 1, {(0, 1): [1]})


def small_rings(dv=1, dw=1):
    return [S for a in range(dv + 1) for b in range(dw + 1) for S in all_triple_rings(GF2, a, b)]


class TestReport:
    def test_summary(self):
        r = Report("krull", rings=2, cases=5)
        assert r.ok and r.summary() == "lemma=krull rings=2 cases=5 failures=0"
        r.seed = 7
        r.fail("S", "I=0", "boom")
        assert not r.ok
        assert r.lines() == ["ring=S lemma=krull case=I=0: boom",
                             "lemma=krull rings=2 cases=5 failures=1 seed=7"]


class TestEnumeration:
    def test_hyperbolic_ideals(self):
        # 0, W, the three lines of V plus W, and m
        dims = sorted(I.space.dim for I in enumerate_ideals(HYPERBOLIC))
        assert dims == [0, 1, 2, 2, 2, 3]

    def test_lattice_si(self):
        ideals = enumerate_ideals(HYPERBOLIC)
        for I in ideals:
            assert is_si_by_lattice(HYPERBOLIC, I, ideals) == is_subdirectly_irreducible(HYPERBOLIC, I)

    def test_all_triple_rings_count(self):
        # dimV = 2 has three symmetric slots, each valued in F^dimW
        assert len(list(all_triple_rings(GF2, 2, 1))) == 8
        assert len(list(all_triple_rings(GF(3), 1, 2))) == 9

    def test_random_rings_are_reproducible(self):
        a = [S.beta for S in random_triple_rings(GF(3), 3, 5, seed=4)]
        b = [S.beta for S in random_triple_rings(GF(3), 3, 5, seed=4)]
        assert a == b

    def test_needs_finite_field(self):
        with pytest.raises(ValueError):
            enumerate_ideals(TripleRing.from_entries(QQ, 1, 0, {}))


class TestSuitesPass:
    @pytest.mark.parametrize("lemma", ["correspondence", "krull", "colon-socle", "squarezero"])
    def test_small_sweep(self, lemma):
        rep = run_suite(lemma, small_rings())
        assert rep.ok, rep.failures
        assert rep.cases > 0

    def test_squarezero_needs_square_zero(self):
        with pytest.raises(ValueError):
            verify_squarezero_length(HYPERBOLIC)

    def test_gf3_random(self):
        rep = run_suite("correspondence", random_triple_rings(GF(3), 3, 10, seed=1))
        assert rep.ok, rep.failures

    def test_finite_dual_exhaustive(self):
        rep = verify_finite_dual_trivext(3, GF2, exhaustive=True)
        assert rep.ok and rep.cases == 2 + 4 + 8 + 16

    def test_compare_vf_dim3(self):
        rep = verify_compare_vf(oracle.all_presented_algebras(GF2, 3))
        assert rep.ok and rep.rings == 4


class TestSuitesCatchBugs:
    """Each check must notice a deliberately broken ingredient."""

    def test_correspondence_catches_wrong_si_test(self, monkeypatch):
        monkeypatch.setattr(oracle, "is_subdirectly_irreducible", lambda S, I: True)
        assert not verify_correspondence(HYPERBOLIC).ok

    def test_correspondence_catches_wrong_v_f(self, monkeypatch):
        monkeypatch.setattr(oracle, "v_f_subspace", lambda S, f: maximal_ideal(S))
        assert not verify_correspondence(HYPERBOLIC).ok

    def test_colon_check_catches_wrong_colon(self, monkeypatch):
        monkeypatch.setattr(oracle, "colon", lambda S, I, K: I)
        assert not verify_colon_socle(HYPERBOLIC).ok

    def test_krull_catches_wrong_product(self, monkeypatch):
        monkeypatch.setattr(oracle, "ideal_product", lambda I, J: I)
        assert not verify_krull(HYPERBOLIC).ok

    def test_squarezero_catches_wrong_length(self, monkeypatch):
        S = TripleRing.from_entries(GF2, 2, 0, {})
        monkeypatch.setattr(oracle, "composition_length", lambda S, I: 5)
        assert not verify_squarezero_length(S).ok

    def test_finite_dual_catches_wrong_form(self, monkeypatch):
        monkeypatch.setattr(oracle, "_largest_ideal_by_form", lambda A, c: 0)
        assert not verify_finite_dual_trivext(2, GF2, exhaustive=True).ok


@pytest.mark.slow
def test_compare_vf_exhaustive_dim4_gf2():
    rep = verify_compare_vf(oracle.all_presented_algebras(GF2, 4, inside_m=True))
    assert rep.ok, rep.failures
    assert rep.rings == 50
