"""Brute-force checks of the structure theory on small rings over GF(p).

Every check enumerates all ideals of a finite triple ring and compares
the linear-algebra answers from :mod:`cubezero.ringcore` against
definitions evaluated directly (element products, lattice searches).
Reports collect one line per failure; an empty failure list is a pass.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Iterator

from .algpres import PresentedAlgebra, is_algebra_ideal, validate
from .diamond import check_gr_equivalence
from .exactalg import Field, Matrix, PrimeField, Subspace, enumerate_subspaces, kernel
from .ringcore import (
    Functional, Ideal, TripleRing, colon, composition_length, full_ring, ideal_product,
    ideal_sum, is_ideal, is_subdirectly_irreducible, maximal_ideal, multiply, socle,
    v_f_subspace, zero_ideal,
)

__all__ = [
    "Report", "enumerate_ideals", "is_si_by_lattice", "verify_correspondence",
    "verify_krull", "verify_colon_socle", "verify_squarezero_length",
    "verify_finite_dual_trivext", "verify_compare_vf", "all_triple_rings",
    "random_triple_rings", "all_presented_algebras", "random_presented_algebras",
    "run_suite", "LEMMAS",
]


@dataclass
class Report:
    lemma: str
    rings: int = 0
    cases: int = 0
    failures: list = dc_field(default_factory=list)
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, ring, what: str, detail: str):
        self.failures.append(f"ring={ring} lemma={self.lemma} case={what}: {detail}")

    def merge(self, other: "Report"):
        self.rings += other.rings
        self.cases += other.cases
        self.failures.extend(other.failures)

    def summary(self) -> str:
        line = f"lemma={self.lemma} rings={self.rings} cases={self.cases} failures={len(self.failures)}"
        if self.seed is not None:
            line += f" seed={self.seed}"
        return line

    def lines(self) -> list[str]:
        return self.failures + [self.summary()]


def _finite(S) -> PrimeField:
    if not S.field.is_finite:
        raise ValueError("brute-force checks need a finite field")
    return S.field


def enumerate_ideals(S: TripleRing, bound: int | None = None) -> list[Ideal]:
    """All proper ideals of ``S`` (subspaces of ``m`` closed under ``S``)."""
    F = _finite(S)
    return [Ideal(S, u) for u in enumerate_subspaces(F, S.n, bound=bound) if is_ideal(S, u)]


def _elements(S: TripleRing):
    F = S.field
    for lam in F.elements():
        for vec in itertools.product(F.elements(), repeat=S.n):
            yield S.element(lam, vec[: S.dim_v], vec[S.dim_v:])


def _in_ideal(I: Ideal, x) -> bool:
    if I.full:
        return True
    return not x.lam and x.m_vector() in I.space


def is_si_by_lattice(S: TripleRing, I: Ideal, ideals: list[Ideal]) -> bool:
    """``S/I`` has a unique minimal nonzero submodule contained in all others."""
    above = [J for J in ideals if I <= J and J.dim > I.dim] + [full_ring(S)]
    minimal = [J for J in above if not any(K.dim < J.dim and K <= J for K in above)]
    return len(minimal) == 1 and all(minimal[0] <= J for J in above)


def _socle_coords_functional(S: TripleRing, soc: Ideal, ker: Subspace, x) -> Functional:
    """The functional on ``soc`` vanishing on ``ker`` (a hyperplane) with ``f(x) = 1``."""
    F = S.field
    ker_coords = [soc.space.coordinates(b) for b in ker.basis]
    ann = kernel(Matrix(F, ker_coords, ncols=soc.space.dim))
    assert ann.dim == 1
    c = ann.basis[0]
    xc = soc.space.coordinates(x)
    val = sum((a * b for a, b in zip(c, xc)), F.zero)
    return Functional(soc, tuple(a / val for a in c))


def verify_correspondence(S: TripleRing, ideals: list[Ideal] | None = None) -> Report:
    """SI ideals avoiding the socle versus nonzero functionals on the socle."""
    F = _finite(S)
    rep = Report("correspondence", rings=1)
    ideals = enumerate_ideals(S) if ideals is None else ideals
    soc = socle(S)
    si = {I.space for I in ideals if is_subdirectly_irreducible(S, I)}

    # forward: I -> f with Soc + I = V_f
    for I in ideals:
        if I.space not in si or soc.space <= I.space:
            continue
        rep.cases += 1
        meet = soc.space & I.space
        if soc.space.dim - meet.dim != 1:
            rep.fail(S, f"I={I.space.basis}", "Soc/(Soc cap I) is not one-dimensional")
            continue
        x = next(b for b in soc.space.basis if b not in meet)
        f = _socle_coords_functional(S, soc, meet, x)
        if (soc.space + I.space) != v_f_subspace(S, f).space:
            rep.fail(S, f"I={I.space.basis}", "Soc + I != V_f")

    # backward: f -> maximal I containing ker f and avoiding x
    d = soc.space.dim
    for coeffs in itertools.product(F.elements(), repeat=d):
        if not any(coeffs):
            continue
        lead = next(c for c in coeffs if c)
        if lead != F.one:
            continue  # one representative per projective class
        rep.cases += 1
        f = Functional(soc, coeffs)
        kerf = f.kernel()
        x = next(b for b in soc.space.basis if f(b))
        cands = [I for I in ideals if kerf <= I.space and x not in I.space]
        maximal = [I for I in cands if not any(I.space < J.space for J in cands)]
        if not maximal:
            rep.fail(S, f"f={coeffs}", "no ideal contains ker f while avoiding x")
        for I in maximal:
            if not is_subdirectly_irreducible(S, I):
                rep.fail(S, f"f={coeffs} I={I.space.basis}", "maximal ideal is not SI")
            if (I.space & soc.space) != kerf:
                rep.fail(S, f"f={coeffs} I={I.space.basis}", "I cap Soc != ker f")
            if (soc.space + I.space) != v_f_subspace(S, f).space:
                rep.fail(S, f"f={coeffs} I={I.space.basis}", "V_f != Soc + I")

    # the colon-dimension SI test against the lattice definition
    for I in ideals:
        rep.cases += 1
        if (I.space in si) != is_si_by_lattice(S, I, ideals):
            rep.fail(S, f"I={I.space.basis}", "SI colon test disagrees with lattice definition")
    return rep


def _m_powers(S: TripleRing) -> list[Ideal]:
    m = maximal_ideal(S)
    powers = [full_ring(S), m]
    while len(powers) < 4:
        powers.append(ideal_product(powers[-1], m))
    return powers


def verify_krull(S: TripleRing, ideals: list[Ideal] | None = None) -> Report:
    """``I`` is the intersection of ``I + m^n`` over ``n``; ``m^3 = 0`` ends the chain."""
    _finite(S)
    rep = Report("krull", rings=1)
    ideals = enumerate_ideals(S) if ideals is None else ideals
    powers = _m_powers(S)
    if powers[3].space.dim != 0:
        rep.fail(S, "m^3", "m^3 is not zero")
    for I in ideals:
        rep.cases += 1
        chain = [ideal_sum(I, P) for P in powers]
        meet = Subspace.full(S.field, S.n)
        for J in chain[1:]:
            meet = meet & J.space
        if meet != I.space:
            rep.fail(S, f"I={I.space.basis}", "intersection of I + m^n is not I")
        if chain[3].space != I.space or chain[3].full:
            rep.fail(S, f"I={I.space.basis}", "I + m^3 != I")
    return rep


def verify_colon_socle(S: TripleRing, ideals: list[Ideal] | None = None) -> Report:
    """``Soc(S/I) = (I:m)/I``, ``(I:m^2) = ((I:m):m)`` and the finite colon ladder."""
    _finite(S)
    rep = Report("colon-socle", rings=1)
    ideals = enumerate_ideals(S) if ideals is None else ideals
    m = maximal_ideal(S)
    m2 = ideal_product(m, m)
    elements = list(_elements(S))
    m_basis = [S.m_element(b) for b in m.space.basis]
    for I in ideals:
        rep.cases += 1
        col = colon(S, I, m)
        # direct: r with t r in I for every t in m
        direct = [r for r in elements if all(_in_ideal(I, multiply(S, t, r)) for t in m_basis)]
        if any(r.lam for r in direct):
            brute_full = True
            brute = Subspace.full(S.field, S.n)
        else:
            brute_full = False
            brute = Subspace(S.field, S.n, [r.m_vector() for r in direct])
        if col.full != brute_full or col.space != brute:
            rep.fail(S, f"I={I.space.basis}", "(I:m) differs from the elementwise socle preimage")
        if colon(S, I, m2) != colon(S, col, m):
            rep.fail(S, f"I={I.space.basis}", "(I:m^2) != ((I:m):m)")
        # ladder I, (I:m), (I:m^2), ... reaches S with successive quotients adding to the length
        step, total, cur = 0, 0, I
        while not cur.full and step < 4:
            nxt = colon(S, cur, m)
            if nxt.dim <= cur.dim:
                rep.fail(S, f"I={I.space.basis}", "colon ladder stalled")
                break
            total += nxt.dim - cur.dim
            cur, step = nxt, step + 1
        if not cur.full or step > 3:
            rep.fail(S, f"I={I.space.basis}", "colon ladder did not reach S within 3 steps")
        elif total != composition_length(S, I):
            rep.fail(S, f"I={I.space.basis}", "ladder length != composition length")
    return rep


def verify_squarezero_length(S: TripleRing, ideals: list[Ideal] | None = None) -> Report:
    """With ``m^2 = 0`` each SI ideal ``K != m`` has ``length(S/K) = 2``."""
    _finite(S)
    if not S.is_square_zero():
        raise ValueError("square-zero check needs beta = 0")
    rep = Report("squarezero", rings=1)
    ideals = enumerate_ideals(S) if ideals is None else ideals
    for K in ideals:
        if not is_subdirectly_irreducible(S, K):
            continue
        rep.cases += 1
        want = 1 if K.space.dim == S.n else 2
        if composition_length(S, K) != want:
            rep.fail(S, f"K={K.space.basis}", f"length {composition_length(S, K)} != {want}")
    return rep


# ---------------------------------------------------------------------------
# trivial extensions and their finite dual


def _largest_ideal_in_kernel(A: PresentedAlgebra, coeffs, ideals: list[Subspace]) -> int:
    """Codimension of the sum of all ideals (including ``A``) killed by ``f``."""
    F = A.field
    kerf = kernel(Matrix(F, [coeffs], ncols=A.dim))
    best = Subspace.zero(F, A.dim)
    for I in ideals:
        if I <= kerf:
            best = best + I
    return A.dim - best.dim


def _largest_ideal_by_form(A: PresentedAlgebra, coeffs) -> int:
    """Rank of the bilinear form ``(a, b) -> f(ab)``."""
    F = A.field
    rows = [[sum((c * x for c, x in zip(coeffs, A.mul[i][j])), F.zero) for j in range(A.dim)]
            for i in range(A.dim)]
    return Matrix(F, rows, ncols=A.dim).rank()


def verify_finite_dual_trivext(max_dim_v: int, field: Field, trials: int = 100,
                               seed: int = 0, exhaustive: bool = False) -> Report:
    """Largest ideal in ``ker f`` has codimension at most 2 in ``A = F x V``."""
    from .algpres import trivial_extension

    if not field.is_finite:
        raise ValueError("enumeration needs a finite field")
    rep = Report("finite-dual", seed=None if exhaustive else seed)
    rng = random.Random(seed)
    cache: dict[int, tuple] = {}

    def setup(dv):
        if dv not in cache:
            A = trivial_extension(field, dv)
            ideals = [u for u in enumerate_subspaces(field, A.dim, bound=max(7, A.dim))
                      if is_algebra_ideal(A, u)]
            ideals.append(Subspace.full(field, A.dim))
            cache[dv] = (A, ideals)
            rep.rings += 1
        return cache[dv]

    if exhaustive:
        jobs = ((dv, coeffs) for dv in range(max_dim_v + 1)
                for coeffs in itertools.product(field.elements(), repeat=1 + dv))
    else:
        def draw():
            for _ in range(trials):
                dv = rng.randint(0, max_dim_v)
                yield dv, tuple(field.random(rng) for _ in range(1 + dv))
        jobs = draw()
    for dv, coeffs in jobs:
        A, ideals = setup(dv)
        rep.cases += 1
        by_lattice = _largest_ideal_in_kernel(A, coeffs, ideals)
        by_form = _largest_ideal_by_form(A, coeffs)
        if by_lattice != by_form:
            rep.fail(f"F x V(dimV={dv})", f"f={tuple(map(str, coeffs))}",
                     f"lattice codim {by_lattice} != form rank {by_form}")
        if by_lattice > 2:
            rep.fail(f"F x V(dimV={dv})", f"f={tuple(map(str, coeffs))}",
                     f"codimension {by_lattice} > 2")
    return rep


# ---------------------------------------------------------------------------
# ring families


def _symmetric_slots(dim_v: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(dim_v) for j in range(i, dim_v)]


def all_triple_rings(field: PrimeField, dim_v: int, dim_w: int) -> Iterator[TripleRing]:
    """Every symmetric ``beta`` with exactly these dimensions."""
    slots = _symmetric_slots(dim_v)
    vals = list(itertools.product(field.elements(), repeat=dim_w))
    for choice in itertools.product(vals, repeat=len(slots)):
        yield TripleRing.from_entries(field, dim_v, dim_w, dict(zip(slots, choice)))


def random_triple_rings(field: PrimeField, max_total: int, count: int,
                        seed: int) -> Iterator[TripleRing]:
    rng = random.Random(seed)
    for _ in range(count):
        total = rng.randint(1, max_total)
        dim_v = rng.randint(0, total)
        dim_w = total - dim_v
        entries = {s: [field.random(rng) for _ in range(dim_w)] for s in _symmetric_slots(dim_v)}
        yield TripleRing.from_entries(field, dim_v, dim_w, entries)


def all_presented_algebras(field: PrimeField, dim: int,
                           inside_m: bool = False) -> Iterator[PresentedAlgebra]:
    """Every valid structure on ``e_0 = 1, e_1..e_{dim-1}`` spanning ``m``.

    The products ``e_i e_j`` (``1 <= i <= j``) run over all of ``F^dim``; the
    validity filter discards the rest.  ``inside_m`` skips products with a
    unit component, which validation would reject anyway.
    """
    slots = _symmetric_slots(dim - 1)
    vecs = list(itertools.product(field.elements(), repeat=dim))
    if inside_m:
        vecs = [v for v in vecs if not v[0]]
    for choice in itertools.product(vecs, repeat=len(slots)):
        A = PresentedAlgebra.from_products(
            field, dim, {(i + 1, j + 1): c for (i, j), c in zip(slots, choice)})
        if validate(A):
            yield A


def random_presented_algebras(field: PrimeField, dim: int, count: int,
                              seed: int) -> Iterator[PresentedAlgebra]:
    """Random cube-zero algebras in a random basis of ``m``.

    A graded structure ``F x V x W`` is drawn and rewritten in a random
    basis of ``m``, so ``m^2`` is generally not a coordinate subspace.
    """
    rng = random.Random(seed)
    n = dim - 1
    made = 0
    while made < count:
        dim_v = rng.randint(0, n)
        dim_w = n - dim_v
        entries = {s: [field.random(rng) for _ in range(dim_w)] for s in _symmetric_slots(dim_v)}
        S = TripleRing.from_entries(field, dim_v, dim_w, entries)
        P = Matrix(field, [[field.random(rng) for _ in range(n)] for _ in range(n)], ncols=n)
        if P.rank() < n:
            continue
        Pinv = _inverse(P)
        # new basis vector e'_a = sum_k P[k][a] e_k (columns of P)
        prods = {}
        for a in range(n):
            for b in range(a, n):
                x = S.m_element(tuple(P[k, a] for k in range(n)))
                y = S.m_element(tuple(P[k, b] for k in range(n)))
                z = multiply(S, x, y).m_vector()
                prods[(a + 1, b + 1)] = (field.zero,) + Pinv.apply(z)
        A = PresentedAlgebra.from_products(field, dim, prods)
        assert validate(A)
        made += 1
        yield A


def _inverse(P: Matrix) -> Matrix:
    F = P.field
    n = P.nrows
    aug = Matrix(F, [list(r) + [F.one if i == j else F.zero for j in range(n)]
                     for i, r in enumerate(P.rows)], ncols=2 * n)
    red, _ = aug.rref()
    return Matrix(F, [r[n:] for r in red.rows], ncols=n)


def verify_compare_vf(algebras: Iterable[PresentedAlgebra]) -> Report:
    rep = Report("compare-vf")
    for A in algebras:
        rep.rings += 1
        r = check_gr_equivalence(A)
        rep.cases += r.cases
        for msg in r.failures:
            rep.fail(f"A(dim={A.dim})", "gr", msg)
    return rep


LEMMAS = {
    "correspondence": verify_correspondence,
    "krull": verify_krull,
    "colon-socle": verify_colon_socle,
    "squarezero": verify_squarezero_length,
}


def run_suite(lemma: str, rings: Iterable[TripleRing]) -> Report:
    """Run one triple-ring check over a family of rings and merge the reports."""
    check = LEMMAS[lemma]
    total = Report(lemma)
    for S in rings:
        if lemma == "squarezero" and not S.is_square_zero():
            continue
        ideals = enumerate_ideals(S)
        total.merge(check(S, ideals))
    return total
