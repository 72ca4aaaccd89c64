import itertools
import random

import pytest

from cubezero.exactalg import GF, QQ, Subspace
from cubezero.oracle import all_triple_rings, enumerate_ideals, random_triple_rings
from cubezero.ringcore import (
    Functional, Ideal, TripleRing, colon, composition_length, full_ring, ideal_generated,
    ideal_product, ideal_sum, is_ideal, is_subdirectly_irreducible, make_ideal,
    maximal_ideal, multiply, radical_square, socle, socle_functional, v_f_subspace,
    zero_ideal,
)


def elements(S):
    F = S.field
    for lam in F.elements():
        for vec in itertools.product(F.elements(), repeat=S.n):
            yield S.element(lam, vec[:S.dim_v], vec[S.dim_v:])


def contains(I, x):
    return I.full or (not x.lam and x.m_vector() in I.space)


def gf2_rings():
    return [S for dv in range(3) for dw in range(3) for S in all_triple_rings(GF(2), dv, dw)]


@pytest.fixture(scope="module")
def hyperbolic():
    # V = F^2, W = F, beta(v0, v1) = 1
    return TripleRing.from_entries(GF(2), 2, 1, {(0, 1): [1]})


class TestRing:
    def test_asymmetric_beta_rejected(self):
        with pytest.raises(ValueError):
            TripleRing(QQ, 2, 1, [[(0,), (1,)], [(0,), (0,)]])

    def test_product_rule(self):
        S = TripleRing.from_entries(QQ, 1, 1, {(0, 0): [3]})
        a = S.element(2, [1], [5])
        b = S.element(-1, [4], [1])
        c = multiply(S, a, b)
        assert (c.lam, c.v, c.w) == (-2, (8 - 1,), (2 - 5 + 12,))

    def test_ring_axioms_exhaustively(self):
        S = TripleRing.from_entries(GF(3), 2, 1, {(0, 0): [1], (0, 1): [2]})
        rng = random.Random(0)
        elts = list(elements(S))
        for _ in range(200):
            a, b, c = (rng.choice(elts) for _ in range(3))
            assert multiply(S, a, b) == multiply(S, b, a)
            assert multiply(S, multiply(S, a, b), c) == multiply(S, a, multiply(S, b, c))
            assert multiply(S, S.one, a) == a
            if not a.lam and not b.lam and not c.lam:
                assert not any(multiply(S, multiply(S, a, b), c).m_vector())

    def test_square_zero(self):
        assert TripleRing.from_entries(GF(2), 2, 1, {}).is_square_zero()


class TestIdeals:
    def test_ideal_test_matches_closure(self, hyperbolic):
        S = hyperbolic
        elts = list(elements(S))
        from cubezero.exactalg import enumerate_subspaces
        for u in enumerate_subspaces(S.field, S.n):
            I = Ideal(S, u)
            closed = all(contains(I, multiply(S, r, S.m_element(b))) for r in elts for b in u.basis)
            assert is_ideal(S, u) == closed

    def test_make_ideal_rejects_non_ideal(self, hyperbolic):
        with pytest.raises(ValueError):
            make_ideal(hyperbolic, Subspace(GF(2), 3, [(1, 0, 0)]))

    def test_generated(self, hyperbolic):
        I = ideal_generated(hyperbolic, [(1, 0, 0)])
        assert I.space == Subspace(GF(2), 3, [(1, 0, 0), (0, 0, 1)])

    def test_socle_is_annihilator_of_m(self):
        for S in gf2_rings():
            m = [S.m_element(b) for b in maximal_ideal(S).space.basis]
            brute = [x.m_vector() for x in elements(S) if not x.lam
                     and all(not any(multiply(S, x, y).m_vector()) for y in m)]
            assert span_set(S, socle(S).space) == set(brute)

    def test_socle_of_hyperbolic(self, hyperbolic):
        assert socle(hyperbolic).space == Subspace(GF(2), 3, [(0, 0, 1)])

    def test_radical_square_is_image_of_beta(self, hyperbolic):
        assert radical_square(hyperbolic).space == Subspace(GF(2), 3, [(0, 0, 1)])
        m = maximal_ideal(hyperbolic)
        assert ideal_product(m, m) == radical_square(hyperbolic)

    def test_sum_and_product(self, hyperbolic):
        S = hyperbolic
        a = ideal_generated(S, [(1, 0, 0)])
        b = ideal_generated(S, [(0, 1, 0)])
        assert ideal_sum(a, b) == maximal_ideal(S)
        assert ideal_product(a, b).space == Subspace(GF(2), 3, [(0, 0, 1)])
        assert ideal_product(a, a).space.dim == 0
        assert ideal_sum(a, full_ring(S)).full


def span_set(S, u):
    F = S.field
    return {tuple(v) for v in itertools.product(F.elements(), repeat=S.n) if v in u}


class TestColon:
    def test_colon_matches_elementwise_definition(self):
        rng = random.Random(4)
        rings = list(random_triple_rings(GF(2), 3, 8, seed=1)) + list(all_triple_rings(GF(3), 1, 1))
        for S in rings:
            ideals = enumerate_ideals(S) + [full_ring(S)]
            elts = list(elements(S))
            for I in rng.sample(ideals, min(4, len(ideals))):
                for K in rng.sample(ideals, min(3, len(ideals))):
                    gens = [S.one] if K.full else [S.m_element(b) for b in K.space.basis]
                    members = [x for x in elts if all(contains(I, multiply(S, x, g)) for g in gens)]
                    C = colon(S, I, K)
                    if C.full:
                        assert len(members) == len(elts)
                    else:
                        assert {x.m_vector() for x in members} == span_set(S, C.space)
                        assert all(not x.lam for x in members)

    def test_colon_with_zero_ideal_is_everything(self, hyperbolic):
        assert colon(hyperbolic, zero_ideal(hyperbolic), zero_ideal(hyperbolic)).full

    def test_zero_colon_m_is_socle(self, hyperbolic):
        S = hyperbolic
        assert colon(S, zero_ideal(S), maximal_ideal(S)) == socle(S)


class TestSubdirectIrreducibility:
    def test_zero_ideal_of_hyperbolic_is_si(self, hyperbolic):
        assert is_subdirectly_irreducible(hyperbolic, zero_ideal(hyperbolic))

    def test_maximal_ideal_is_si(self, hyperbolic):
        assert is_subdirectly_irreducible(hyperbolic, maximal_ideal(hyperbolic))

    def test_full_ring_rejected(self, hyperbolic):
        with pytest.raises(ValueError):
            is_subdirectly_irreducible(hyperbolic, full_ring(hyperbolic))

    def test_square_zero_plane_zero_ideal_not_si(self):
        S = TripleRing.from_entries(GF(2), 2, 0, {})
        assert not is_subdirectly_irreducible(S, zero_ideal(S))

    def test_composition_length(self, hyperbolic):
        S = hyperbolic
        assert composition_length(S, zero_ideal(S)) == 4
        assert composition_length(S, maximal_ideal(S)) == 1
        assert composition_length(S, full_ring(S)) == 0


class TestVf:
    def test_v_f_is_radical_plus_w(self):
        S = TripleRing.from_entries(QQ, 3, 1, {(0, 0): [1], (1, 2): [1]})
        f = socle_functional(S, [1])
        assert v_f_subspace(S, f).space == Subspace(QQ, 4, [(0, 0, 0, 1)])
        S = TripleRing.from_entries(QQ, 2, 1, {(0, 0): [1]})
        # socle basis is v_1, w; f(v_1) = 0 and f(w) = 1
        assert v_f_subspace(S, socle_functional(S, [0, 1])).space == Subspace(QQ, 3, [(0, 1, 0), (0, 0, 1)])

    def test_weighted_form(self):
        # beta = (beta_0, beta_1); f = w_0 - w_1 kills the form on v_0
        S = TripleRing.from_entries(QQ, 2, 2, {(0, 0): [1, 1], (1, 1): [1, 0]})
        soc = socle(S)
        basis = soc.space.basis
        coeffs = [1, -1] if len(basis) == 2 else None
        f = Functional(soc, coeffs)
        vf = v_f_subspace(S, f).space
        assert (1, 0, 0, 0) in vf and (0, 1, 0, 0) not in vf

    def test_domain_must_be_socle(self, hyperbolic):
        S = hyperbolic
        with pytest.raises(ValueError):
            v_f_subspace(S, Functional(maximal_ideal(S), [1, 0, 0]))
