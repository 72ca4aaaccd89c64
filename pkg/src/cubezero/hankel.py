"""Rings ``F x V x F`` with ``V`` of countable dimension.

The form on ``V = span(v_0, v_1, ...)`` is either a finite table of
values ``beta(v_i, v_j)`` or a Hankel rule ``beta(v_i, v_j) = h_{i+j}``.
The second case is the form ``f o mu`` on an algebra with multiplicative
basis ``b_n b_m = b_{n+m}`` (for instance ``F[x]``) and ``h_n = f(b_n)``.

Rank statements about an infinite Hankel matrix are only made when a
sequence law allows a proof:

* an explicit prefix followed by zeros has the rank of its finite block;
* a sequence obeying an order-``d`` recurrence has every column beyond the
  ``d``-th a combination of the first ``d``, and a combination of those is
  zero as soon as its first ``d`` entries are, so the rank equals the rank
  of the leading ``d x d`` block;
* the Hilbert sequence ``1/(n+1)`` has every leading minor nonzero by the
  closed form ``c_n^4 / c_{2n}``, so its form is non-degenerate.

Anything else (a :class:`BlackBox` sequence) only ever yields a lower bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Union

from .exactalg import Field, Matrix, QQ, Rationals, det_fraction_free, kernel, leading_minors

__all__ = [
    "Explicit", "Recurrence", "Hilbert", "BlackBox", "HankelSeq",
    "FiniteSupport", "HankelForm", "SeqSpec", "SequenceTriple",
    "FiniteRank", "AtLeast", "InFiniteDual", "NotWitnessed",
    "seq_value", "seq_terms", "hankel_matrix", "hilbert_det_formula",
    "hilbert_c", "form_rank", "minimal_recurrence", "nondegeneracy_certificate",
    "finite_dual_membership", "gram_window",
]


@dataclass(frozen=True)
class Explicit:
    """``h_0, ..., h_{L-1}`` as given, then zero forever."""

    field: Field
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.field(x) for x in self.terms))


@dataclass(frozen=True)
class Recurrence:
    """``h_{n+d} = sum_i coeffs[i] h_{n+i}`` with initial terms ``h_0 .. h_{d-1}``."""

    field: Field
    init: tuple
    coeffs: tuple

    def __post_init__(self):
        if len(self.init) != len(self.coeffs):
            raise ValueError("a recurrence of order d needs d initial terms and d coefficients")
        object.__setattr__(self, "init", tuple(self.field(x) for x in self.init))
        object.__setattr__(self, "coeffs", tuple(self.field(x) for x in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class Hilbert:
    """``h_n = 1/(n+1)``; only defined in characteristic zero."""

    field: Field = QQ

    def __post_init__(self):
        if not isinstance(self.field, Rationals):
            raise ValueError("the Hilbert sequence 1/(n+1) is only used over Q")


@dataclass(frozen=True)
class BlackBox:
    """A sequence known only through its terms; no global conclusions are drawn."""

    field: Field
    term: Callable[[int], object] = dc_field(compare=False)
    name: str = "black-box"


HankelSeq = Union[Explicit, Recurrence, Hilbert, BlackBox]


@dataclass(frozen=True)
class FiniteSupport:
    """``beta(v_i, v_j)`` from a finite symmetric table; every other value is zero."""

    field: Field
    table: tuple  # sorted ((i, j), value) with i <= j and value != 0

    def __init__(self, field: Field, table: dict):
        clean = {}
        for (i, j), x in table.items():
            if i < 0 or j < 0:
                raise ValueError("basis indices are non-negative")
            key = (min(i, j), max(i, j))
            x = field(x)
            if key in clean and clean[key] != x:
                raise ValueError(f"conflicting values for beta{key}")
            clean[key] = x
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "table", tuple(sorted((k, v) for k, v in clean.items() if v)))

    @property
    def support(self) -> int:
        """Number of leading basis vectors touched by the table."""
        return 1 + max((j for (_, j), _ in self.table), default=-1)

    def value(self, i: int, j: int):
        key = (min(i, j), max(i, j))
        return dict(self.table).get(key, self.field.zero)


@dataclass(frozen=True)
class HankelForm:
    seq: HankelSeq

    @property
    def field(self) -> Field:
        return self.seq.field


SeqSpec = Union[FiniteSupport, HankelForm]


@dataclass(frozen=True)
class SequenceTriple:
    """``S = F x V x F`` with ``V`` countably infinite-dimensional."""

    field: Field
    form: SeqSpec

    def __post_init__(self):
        if self.form.field != self.field:
            raise ValueError("form scalars live in a different field")


@dataclass(frozen=True)
class FiniteRank:
    rank: int

    def __str__(self):
        return f"FiniteRank {self.rank}"


@dataclass(frozen=True)
class AtLeast:
    bound: int

    def __str__(self):
        return f"AtLeast {self.bound}"


@dataclass(frozen=True)
class InFiniteDual:
    codim: int

    def __str__(self):
        return f"IN_FINITE_DUAL({self.codim})"


@dataclass(frozen=True)
class NotWitnessed:
    window: int

    def __str__(self):
        return f"NOT_WITNESSED({self.window})"


def seq_value(s: HankelSeq, n: int):
    if n < 0:
        raise ValueError("sequence index must be non-negative")
    return seq_terms(s, n + 1)[n]


def seq_terms(s: HankelSeq, count: int) -> list:
    """``[h_0, ..., h_{count-1}]``."""
    F = s.field
    if isinstance(s, Hilbert):
        return [Fraction(1, n + 1) for n in range(count)]
    if isinstance(s, Explicit):
        return [s.terms[n] if n < len(s.terms) else F.zero for n in range(count)]
    if isinstance(s, Recurrence):
        h = list(s.init[:count])
        d = s.order
        while len(h) < count:
            n = len(h) - d
            h.append(sum((a * h[n + i] for i, a in enumerate(s.coeffs)), F.zero))
        return h
    if isinstance(s, BlackBox):
        return [F(s.term(n)) for n in range(count)]
    raise TypeError(f"not a Hankel sequence: {s!r}")


def hankel_matrix(s: HankelSeq, N: int) -> Matrix:
    """``N x N`` matrix with entry ``(i, j) = h_{i+j}``."""
    if N < 1:
        raise ValueError("Hankel window must be at least 1")
    h = seq_terms(s, 2 * N - 1)
    return Matrix(s.field, ([h[i + j] for j in range(N)] for i in range(N)), ncols=N)


def gram_window(form: SeqSpec, N: int) -> Matrix:
    """Gram matrix of the form on ``v_0, ..., v_{N-1}``."""
    if isinstance(form, HankelForm):
        return hankel_matrix(form.seq, N)
    return Matrix(form.field, ([form.value(i, j) for j in range(N)] for i in range(N)), ncols=N)


def hilbert_c(n: int) -> int:
    """``c_n = prod_{i=1}^{n-1} i^(n-i)``."""
    return math.prod(i ** (n - i) for i in range(1, n))


def hilbert_det_formula(n: int) -> Fraction:
    """Determinant of the ``n x n`` Hilbert matrix as ``c_n^4 / c_{2n}``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction(hilbert_c(n) ** 4, hilbert_c(2 * n))


def form_rank(s: SeqSpec, window: int = 16) -> FiniteRank | AtLeast:
    """Rank of the form on ``V`` (equivalently ``dim V / V_perp``)."""
    if window < 1:
        raise ValueError("window must be at least 1")
    if isinstance(s, FiniteSupport):
        if s.support == 0:
            return FiniteRank(0)
        return FiniteRank(gram_window(s, s.support).rank())
    seq = s.seq if isinstance(s, HankelForm) else s
    if isinstance(seq, Explicit):
        L = len(seq.terms)
        return FiniteRank(hankel_matrix(seq, L).rank() if L else 0)
    if isinstance(seq, Recurrence):
        d = seq.order
        return FiniteRank(hankel_matrix(seq, d).rank() if d else 0)
    r = hankel_matrix(seq, window).rank()
    return AtLeast(r)


def minimal_recurrence(s: HankelSeq, window: int) -> tuple[int, tuple] | None:
    """Lowest-order recurrence fitting ``h_0 .. h_{window-1}``, or ``None``.

    Order ``d`` is tried only while the fit is overdetermined
    (``window >= 2d + 1``); a square system would fit almost any data.
    Returns ``(d, coeffs)`` with ``h_{n+d} = sum_i coeffs[i] h_{n+i}``.
    """
    if window < 2:
        raise ValueError("window must be at least 2")
    F = s.field
    h = seq_terms(s, window)
    for d in range(0, (window - 1) // 2 + 1):
        rows = [[h[n + i] for i in range(d)] + [-h[n + d]] for n in range(window - d)]
        sol = kernel(Matrix(F, rows, ncols=d + 1))
        for b in sol.basis:
            if b[d]:
                coeffs = tuple(x / b[d] for x in b[:d])
                return d, coeffs
    return None


def nondegeneracy_certificate(s: HankelSeq, N: int) -> bool:
    """True iff every leading ``k x k`` Hankel block, ``k = 1..N``, is invertible.

    Then no nonzero vector supported on ``v_0 .. v_{N-1}`` lies in ``V_perp``.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    minors = leading_minors(hankel_matrix(s, N))
    return len(minors) == N and all(minors)


def finite_dual_membership(s: HankelSeq, window: int = 16) -> InFiniteDual | NotWitnessed:
    """Whether ``f`` (with ``f(b_n) = h_n``) kills an ideal of finite codimension.

    The largest ideal inside ``ker f`` is the radical of ``f o mu``, so its
    codimension is the rank of the Hankel form.
    """
    if window < 2:
        raise ValueError("window must be at least 2")
    r = form_rank(HankelForm(s), window)
    if isinstance(r, FiniteRank):
        return InFiniteDual(r.rank)
    return NotWitnessed(window)


def window_determinants(s: HankelSeq, N: int) -> list:
    """``det`` of the leading ``k x k`` Hankel blocks for ``k = 1..N``, each computed separately."""
    return [det_fraction_free(hankel_matrix(s, k)) for k in range(1, N + 1)]
