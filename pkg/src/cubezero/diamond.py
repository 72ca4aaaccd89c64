"""Deciding whether injective hulls of simple modules are locally Artinian.

For a quasi-local ring ``(R, m)`` with ``m^3 = 0`` the property holds iff
``m / V_f`` is finite-dimensional for every functional ``f`` on the
socle.  Finite-dimensional rings always have it.  For ``F x V x F`` with
``V`` countable, ``m / V_f`` is ``V / V_perp`` whenever ``f`` is nonzero on
``W = F`` and is zero otherwise, so everything reduces to the rank of the
form on ``V``.

Verdicts are sound: ``FAILS`` is only returned with a proof valid for every
window (the Hilbert closed form), ``HOLDS`` only with an exact finite bound,
and window evidence alone gives ``UNKNOWN``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from typing import Union

from .algpres import (
    GradedSplit, PresentedAlgebra, algebra_socle, gr, gr_ideal, is_algebra_ideal,
    maximal_ideal_space, validate,
)
from .exactalg import Matrix, Subspace, kernel
from .hankel import (
    AtLeast, BlackBox, Explicit, FiniteRank, FiniteSupport, HankelForm, Hilbert,
    Recurrence, SequenceTriple, form_rank, gram_window, hilbert_det_formula,
    nondegeneracy_certificate,
)
from .ringcore import Functional, TripleRing, socle, v_f_subspace

__all__ = [
    "Outcome", "Verdict", "ArtinianFiniteDim", "SocleCodimFinite", "BadFunctional",
    "BadFactorCert", "WindowExhausted", "decide_diamond", "shortcut_lemmas",
    "v_f_corank", "find_bad_factor", "check_gr_equivalence", "GrReport",
    "DEFAULT_WINDOW",
]

DEFAULT_WINDOW = 16

Ring = Union[TripleRing, SequenceTriple, PresentedAlgebra]


class Outcome(enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class ArtinianFiniteDim:
    """Every quotient has length at most ``length``."""

    length: int


@dataclass(frozen=True)
class SocleCodimFinite:
    """``dim m/Soc = codim``; every ``m/V_f`` is a quotient of ``m/Soc``."""

    codim: int


@dataclass(frozen=True)
class BadFunctional:
    description: str


@dataclass(frozen=True)
class BadFactorCert:
    """A factor whose graded ring is ``F x V x F`` with a non-degenerate form.

    ``functional`` is the value of ``f`` on the generator of ``W = F``;
    ``surviving_basis`` indexes the basis of ``V / V_perp`` checked inside
    the window; ``certified_window`` is the largest ``k`` for which all
    leading ``k x k`` blocks were checked invertible by elimination, and
    ``closed_form`` records that the remaining blocks are covered by a
    formula valid for every size.
    """

    functional: object
    corank: AtLeast
    certified_window: int
    surviving_basis: tuple
    closed_form: bool
    description: str


@dataclass(frozen=True)
class WindowExhausted:
    window: int


Witness = Union[ArtinianFiniteDim, SocleCodimFinite, BadFunctional, BadFactorCert, WindowExhausted]


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    witness: Witness
    lemma: str | None = None
    window: int | None = None
    details: dict = dc_field(default_factory=dict, compare=False)

    def __post_init__(self):
        ok = {
            Outcome.FAILS: (BadFunctional, BadFactorCert),
            Outcome.HOLDS: (ArtinianFiniteDim, SocleCodimFinite),
            Outcome.UNKNOWN: (WindowExhausted,),
        }[self.outcome]
        if not isinstance(self.witness, ok):
            raise ValueError(f"{self.outcome.value} cannot carry a {type(self.witness).__name__}")

    def summary(self) -> str:
        w = self.witness
        if isinstance(w, ArtinianFiniteDim):
            return f"HOLDS (Artinian): every quotient has length <= {w.length}"
        if isinstance(w, SocleCodimFinite):
            return f"HOLDS ({self.lemma or 'main'}): dim m/Soc = {w.codim}"
        if isinstance(w, BadFactorCert):
            return "FAILS (badfactor): non-degenerate F×V×F factor, rank unbounded"
        if isinstance(w, BadFunctional):
            return f"FAILS ({self.lemma or 'main'}): {w.description}"
        return f"UNKNOWN (window): no certificate within window {w.window}"


def _form_is_zero(form) -> bool:
    if isinstance(form, FiniteSupport):
        return not form.table
    seq = form.seq
    if isinstance(seq, Explicit):
        return not any(seq.terms)
    if isinstance(seq, Recurrence):
        return not any(seq.init)
    return False


def _hilbert_cert(ring: SequenceTriple, window: int) -> BadFactorCert:
    seq = ring.form.seq
    if not nondegeneracy_certificate(seq, window):
        raise AssertionError("Hilbert window is degenerate; exact arithmetic is broken")
    assert all(hilbert_det_formula(n) for n in range(1, window + 1))
    return BadFactorCert(
        functional=ring.field.one,
        corank=AtLeast(window),
        certified_window=window,
        surviving_basis=tuple(range(window)),
        closed_form=True,
        description=(
            "F×V×F with beta(v_i, v_j) = 1/(i+j+1); every leading Hankel block has "
            "determinant c_n^4/c_2n != 0, so V_perp = 0 and dim V/V_perp is infinite"
        ),
    )


def shortcut_lemmas(ring: Ring, window: int = DEFAULT_WINDOW) -> Verdict | None:
    """Quick verdicts from structural lemmas, or ``None`` when none applies.

    * ``m^2 = 0``: holds (square-zero lemma);
    * ``m/Soc`` finite-dimensional: holds (cube-zero lemma, part 1);
    * ``Soc`` finite-dimensional and ``m/Soc`` infinite: fails (part 2).
    """
    if isinstance(ring, PresentedAlgebra):
        if not validate(ring):
            raise ValueError("invalid algebra")
        ring = gr(ring)
    if isinstance(ring, TripleRing):
        if ring.is_square_zero():
            return Verdict(Outcome.HOLDS, ArtinianFiniteDim(1 + ring.n), "squarezero")
        codim = ring.n - socle(ring).space.dim
        return Verdict(Outcome.HOLDS, SocleCodimFinite(codim), "cube-zerolocal(1)")
    if isinstance(ring, SequenceTriple):
        if _form_is_zero(ring.form):
            return Verdict(Outcome.HOLDS, SocleCodimFinite(0), "squarezero")
        form = ring.form
        if isinstance(form, HankelForm) and isinstance(form.seq, Hilbert):
            # V_perp = 0, so Soc = 0 x 0 x F is one-dimensional while m/Soc = V is not
            return Verdict(Outcome.FAILS, _hilbert_cert(ring, window), "cube-zerolocal(2)", window)
        r = form_rank(form, window)
        if isinstance(r, FiniteRank):
            return Verdict(Outcome.HOLDS, SocleCodimFinite(r.rank), "cube-zerolocal(1)")
        return None
    raise TypeError(f"unsupported ring type {type(ring).__name__}")


def v_f_corank(ring: SequenceTriple, f, window: int = DEFAULT_WINDOW) -> FiniteRank | AtLeast:
    """``dim m/V_f`` for the socle functional whose value on ``W = F`` is ``f``.

    Scaling a form does not change its radical, so any nonzero ``f`` gives
    the rank of the form.
    """
    if not ring.field(f):
        return FiniteRank(0)
    return form_rank(ring.form, window)


def _decide_sequence(ring: SequenceTriple, window: int) -> Verdict:
    form = ring.form
    if isinstance(form, HankelForm) and isinstance(form.seq, Hilbert):
        return Verdict(Outcome.FAILS, _hilbert_cert(ring, window), "badfactor", window)
    r = v_f_corank(ring, ring.field.one, window)
    if isinstance(r, FiniteRank):
        return Verdict(Outcome.HOLDS, SocleCodimFinite(r.rank), "main", window,
                       {"form_rank": r.rank})
    return Verdict(Outcome.UNKNOWN, WindowExhausted(window), None, window,
                   {"window_rank": r.bound})


def decide_diamond(ring: Ring, window: int = DEFAULT_WINDOW) -> Verdict:
    """Decide the property for any of the three ring presentations.

    When a structural shortcut also applies, its verdict must agree and its
    lemma tag is reported.
    """
    if window < 1:
        raise ValueError("window must be at least 1")
    source = ring
    if isinstance(ring, PresentedAlgebra):
        v = validate(ring)
        if not v:
            raise ValueError("invalid algebra: " + "; ".join(v.problems))
        ring = gr(ring)
    if isinstance(ring, TripleRing):
        verdict = Verdict(Outcome.HOLDS, ArtinianFiniteDim(1 + ring.n), "Artinian", None,
                          {"dimV": ring.dim_v, "dimW": ring.dim_w})
    elif isinstance(ring, SequenceTriple):
        verdict = _decide_sequence(ring, window)
    else:
        raise TypeError(f"unsupported ring type {type(ring).__name__}")

    short = shortcut_lemmas(source, window)
    if short is not None:
        if short.outcome != verdict.outcome:
            raise AssertionError(
                f"shortcut {short.lemma} says {short.outcome.value}, "
                f"main criterion says {verdict.outcome.value}"
            )
        if verdict.outcome is Outcome.HOLDS and isinstance(verdict.witness, SocleCodimFinite):
            verdict = Verdict(verdict.outcome, verdict.witness, short.lemma, window, verdict.details)
        else:
            verdict.details["shortcut"] = short.lemma
    return verdict


def find_bad_factor(ring: SequenceTriple, window: int = DEFAULT_WINDOW) -> BadFactorCert | None:
    verdict = decide_diamond(ring, window)
    if verdict.outcome is Outcome.FAILS and isinstance(verdict.witness, BadFactorCert):
        cert = verdict.witness
        # recompute the window radical independently of the certificate
        rad = kernel(gram_window(ring.form, window))
        assert rad.dim == 0 and len(cert.surviving_basis) == window
        return cert
    return None


# ---------------------------------------------------------------------------
# comparing V_f in gr(A) with V_g in A


@dataclass
class GrReport:
    algebra: PresentedAlgebra
    cases: int = 0
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _socle_functionals(G: TripleRing, exhaustive: bool):
    soc = socle(G)
    F = G.field
    d = soc.space.dim
    if F.is_finite and exhaustive:
        import itertools
        for coeffs in itertools.product(F.elements(), repeat=d):
            yield Functional(soc, coeffs)
        return
    for t in range(d):
        yield Functional(soc, tuple(F.one if k == t else F.zero for k in range(d)))
    if d > 1:
        yield Functional(soc, (F.one,) * d)


def _v_g(A: PresentedAlgebra, g) -> Subspace:
    """``{a in m : g(m a) = 0}`` in ``A``-coordinates; ``g`` maps ``m^2`` vectors to scalars."""
    F = A.field
    rows = []
    for i in range(1, A.dim):
        row = [F.zero]
        for j in range(1, A.dim):
            row.append(g(A.product(A.unit_vector(i), A.unit_vector(j))))
        rows.append(row)
    sol = kernel(Matrix(F, rows, ncols=A.dim))
    return sol & maximal_ideal_space(A)


def check_gr_equivalence(A: PresentedAlgebra, exhaustive: bool = True) -> GrReport:
    """Compare ``V_f`` in ``gr(A)`` with ``gr(V_g)`` for socle functionals ``f``.

    ``g(a) = f(0, a + m^2, pi(a))`` on ``Soc(A)``, where ``pi`` projects onto
    ``m^2`` along the complement spanned by the representatives of
    ``m/m^2``.  Over a finite field every ``f`` is tried when ``exhaustive``;
    otherwise a spanning set of the dual.
    """
    v = validate(A)
    if not v:
        raise ValueError("invalid algebra: " + "; ".join(v.problems))
    G = gr(A)
    sp = GradedSplit(A)
    soc_a = algebra_socle(A)
    report = GrReport(A)
    if gr_ideal(A, soc_a).space != socle(G).space:
        report.failures.append("gr(Soc A) != Soc(gr A)")
    for f in _socle_functionals(G, exhaustive):
        report.cases += 1

        def g(a, f=f):
            alpha, gamma = sp.split(a)
            return f(alpha + gamma)

        Vg = _v_g(A, g)
        if not soc_a <= Vg:
            report.failures.append(f"f={f.coeffs}: V_g does not contain Soc(A)")
            continue
        if not is_algebra_ideal(A, Vg):
            report.failures.append(f"f={f.coeffs}: V_g is not an ideal")
            continue
        Vf = v_f_subspace(G, f)
        if gr_ideal(A, Vg).space != Vf.space:
            report.failures.append(f"f={f.coeffs}: V_f != gr(V_g)")
    return report
