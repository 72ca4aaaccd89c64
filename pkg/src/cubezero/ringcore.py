"""Finite-dimensional rings ``S = F x V x W`` with a symmetric bilinear ``beta``.

Multiplication is

    (l1, v1, w1)(l2, v2, w2) = (l1 l2, l1 v2 + l2 v1, l1 w2 + l2 w1 + beta(v1, v2))

so ``m = 0 x V x W`` is the unique maximal ideal and ``m^3 = 0``.

Proper ideals live inside ``m`` and are stored as subspaces of the
coordinate space ``V + W`` (V coordinates first).  The whole ring is the
separate value :attr:`Ideal.full`.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .exactalg import Field, Matrix, Subspace, kernel

__all__ = [
    "TripleRing", "RingElement", "Ideal", "Functional",
    "multiply", "is_ideal", "socle", "radical_square", "maximal_ideal",
    "zero_ideal", "full_ring", "ideal_product", "ideal_sum", "colon",
    "is_subdirectly_irreducible", "composition_length", "v_f_subspace",
    "socle_functional",
]


@dataclass(frozen=True)
class TripleRing:
    """``F x V x W`` with ``beta[i][j][k]`` the k-th W-coordinate of beta(v_i, v_j)."""

    field: Field
    dim_v: int
    dim_w: int
    beta: tuple = dc_field(default=None)

    def __post_init__(self):
        F = self.field
        if self.dim_v < 0 or self.dim_w < 0:
            raise ValueError("dimensions must be non-negative")
        if self.beta is None:
            raw = [[[0] * self.dim_w for _ in range(self.dim_v)] for _ in range(self.dim_v)]
        else:
            raw = self.beta
        if len(raw) != self.dim_v or any(len(r) != self.dim_v for r in raw):
            raise ValueError(f"beta must be a {self.dim_v}x{self.dim_v} grid")
        beta = tuple(
            tuple(tuple(F(x) for x in cell) for cell in row) for row in raw
        )
        for i in range(self.dim_v):
            for j in range(self.dim_v):
                if len(beta[i][j]) != self.dim_w:
                    raise ValueError(f"beta({i},{j}) must have {self.dim_w} W-coordinates")
                if beta[i][j] != beta[j][i]:
                    raise ValueError(f"beta is not symmetric at ({i},{j})")
        object.__setattr__(self, "beta", beta)

    @classmethod
    def from_entries(cls, field: Field, dim_v: int, dim_w: int, entries: dict) -> "TripleRing":
        """Build from ``{(i, j): w_coords}``; the mirrored entry is filled in."""
        grid = [[[0] * dim_w for _ in range(dim_v)] for _ in range(dim_v)]
        for (i, j), w in entries.items():
            grid[i][j] = list(w)
            grid[j][i] = list(w)
        return cls(field, dim_v, dim_w, grid)

    @property
    def n(self) -> int:
        """Dimension of the maximal ideal."""
        return self.dim_v + self.dim_w

    def bilinear(self, x: Sequence, y: Sequence) -> tuple:
        F = self.field
        out = [F.zero] * self.dim_w
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, b in enumerate(self.beta[i][j]):
                    if b:
                        out[k] += c * b
        return tuple(out)

    def gram(self, weights: Sequence) -> Matrix:
        """Gram matrix of the scalar form ``sum_k weights[k] * beta_k``."""
        F = self.field
        rows = []
        for i in range(self.dim_v):
            rows.append([
                sum((c * b for c, b in zip(weights, self.beta[i][j])), F.zero)
                for j in range(self.dim_v)
            ])
        return Matrix(F, rows, ncols=self.dim_v)

    def is_square_zero(self) -> bool:
        return not any(x for row in self.beta for cell in row for x in cell)

    def element(self, lam=0, v=None, w=None) -> "RingElement":
        F = self.field
        v = tuple(F(x) for x in (v if v is not None else [0] * self.dim_v))
        w = tuple(F(x) for x in (w if w is not None else [0] * self.dim_w))
        if len(v) != self.dim_v or len(w) != self.dim_w:
            raise ValueError("element coordinates do not match the ring")
        return RingElement(F(lam), v, w)

    @property
    def one(self) -> "RingElement":
        return self.element(1)

    def m_element(self, vec: Sequence) -> "RingElement":
        """The element ``(0, v, w)`` for a coordinate vector of ``m``."""
        return self.element(0, vec[: self.dim_v], vec[self.dim_v:])

    def __str__(self):
        return f"TripleRing({self.field}, dimV={self.dim_v}, dimW={self.dim_w})"


@dataclass(frozen=True)
class RingElement:
    lam: object
    v: tuple
    w: tuple

    def m_vector(self) -> tuple:
        return self.v + self.w


def multiply(S: TripleRing, a: RingElement, b: RingElement) -> RingElement:
    if len(a.v) != S.dim_v or len(b.v) != S.dim_v or len(a.w) != S.dim_w or len(b.w) != S.dim_w:
        raise ValueError("element dimensions do not match the ring")
    bvw = S.bilinear(a.v, b.v)
    return RingElement(
        a.lam * b.lam,
        tuple(a.lam * y + b.lam * x for x, y in zip(a.v, b.v)),
        tuple(a.lam * y + b.lam * x + z for x, y, z in zip(a.w, b.w, bvw)),
    )


@dataclass(frozen=True)
class Ideal:
    """An ideal of a triple ring: a subspace of ``m`` or the whole ring."""

    ring: TripleRing
    space: Subspace
    full: bool = False

    @property
    def dim(self) -> int:
        return self.space.dim + (1 if self.full else 0)

    def __le__(self, other: "Ideal") -> bool:
        if other.full:
            return True
        if self.full:
            return False
        return self.space <= other.space

    def __repr__(self):
        if self.full:
            return "Ideal(R)"
        return f"Ideal({self.space!r})"


def _space(S: TripleRing, vectors=()) -> Subspace:
    return Subspace(S.field, S.n, vectors)


def _beta_image(S: TripleRing, x: Sequence, vec: Sequence) -> tuple:
    """m-coordinates of ``(0, x, *) * (0, v, *)`` = ``(0, 0, beta(x, v))``."""
    return (S.field.zero,) * S.dim_v + S.bilinear(x, vec[: S.dim_v])


def _unit_v(S: TripleRing, i: int) -> tuple:
    F = S.field
    return tuple(F.one if j == i else F.zero for j in range(S.dim_v))


def is_ideal(S: TripleRing, u: Subspace) -> bool:
    if u.ambient != S.n or u.field != S.field:
        raise ValueError(f"expected a subspace of {S.field}^{S.n}")
    for g in u.basis:
        for i in range(S.dim_v):
            if _beta_image(S, _unit_v(S, i), g) not in u:
                return False
    return True


def make_ideal(S: TripleRing, u: Subspace) -> Ideal:
    if not is_ideal(S, u):
        raise ValueError("subspace is not closed under multiplication by S")
    return Ideal(S, u)


def ideal_generated(S: TripleRing, vectors) -> Ideal:
    """Smallest ideal containing the given vectors of ``m``."""
    vectors = [tuple(S.field(x) for x in v) for v in vectors]
    extra = [_beta_image(S, _unit_v(S, i), g) for g in vectors for i in range(S.dim_v)]
    return Ideal(S, _space(S, vectors + extra))


def zero_ideal(S: TripleRing) -> Ideal:
    return Ideal(S, _space(S))


def maximal_ideal(S: TripleRing) -> Ideal:
    return Ideal(S, Subspace.full(S.field, S.n))


def full_ring(S: TripleRing) -> Ideal:
    return Ideal(S, Subspace.full(S.field, S.n), full=True)


def socle(S: TripleRing) -> Ideal:
    """``0 x V_perp x W`` where V_perp is the radical of beta."""
    F = S.field
    rows = []
    for i in range(S.dim_v):
        for k in range(S.dim_w):
            rows.append([S.beta[i][j][k] for j in range(S.dim_v)])
    vperp = kernel(Matrix(F, rows, ncols=S.dim_v))
    zw = (F.zero,) * S.dim_w
    basis = [b + zw for b in vperp.basis]
    basis += [(F.zero,) * S.dim_v + tuple(F.one if k == t else F.zero for k in range(S.dim_w))
              for t in range(S.dim_w)]
    return Ideal(S, _space(S, basis))


def radical_square(S: TripleRing) -> Ideal:
    """``m^2 = 0 x 0 x Im(beta)``."""
    zv = (S.field.zero,) * S.dim_v
    vecs = [zv + S.beta[i][j] for i in range(S.dim_v) for j in range(i, S.dim_v)]
    return Ideal(S, _space(S, vecs))


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.full or J.full:
        return full_ring(I.ring)
    return Ideal(I.ring, I.space + J.space)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    S = I.ring
    if I.full:
        return J
    if J.full:
        return I
    vecs = [_beta_image(S, a[: S.dim_v], c) for a in I.space.basis for c in J.space.basis]
    return Ideal(S, _space(S, vecs))


def _require_ideal(S: TripleRing, I: Ideal):
    if I.ring != S:
        raise ValueError("ideal belongs to a different ring")
    if not I.full and not is_ideal(S, I.space):
        raise ValueError("argument is not an ideal")


def colon(S: TripleRing, I: Ideal, K: Ideal) -> Ideal:
    """``(I : K) = {r in S : K r in I}``.

    With ``r = (l, v, w)`` and a generator ``k = (0, a, b)`` of ``K``,
    ``k r = l k + (0, 0, beta(a, v))``; membership in ``I`` is a linear
    condition on ``(l, v, w)``.  A solution with ``l != 0`` is a unit, in
    which case the colon is the whole ring.
    """
    _require_ideal(S, I)
    _require_ideal(S, K)
    if I.full:
        return full_ring(S)
    if K.full:
        return I
    F = S.field
    eqs = I.space.equations()
    rows = []
    for k in K.space.basis:
        a = k[: S.dim_v]
        lam_col = eqs.apply(k)
        v_cols = [eqs.apply(_beta_image(S, a, _unit_v(S, j) + (F.zero,) * S.dim_w))
                  for j in range(S.dim_v)]
        for r in range(eqs.nrows):
            rows.append([lam_col[r]] + [c[r] for c in v_cols] + [F.zero] * S.dim_w)
    sol = kernel(Matrix(F, rows, ncols=1 + S.n))
    if any(b[0] for b in sol.basis):
        return full_ring(S)
    return Ideal(S, _space(S, [b[1:] for b in sol.basis]))


def is_subdirectly_irreducible(S: TripleRing, I: Ideal) -> bool:
    """``S/I`` has a simple essential socle.

    Every module over this ring has an essential socle (m is nilpotent), so
    it is enough that ``(I : m) / I`` is one-dimensional.
    """
    if I.full:
        raise ValueError("the whole ring is not a proper ideal")
    if I.space.dim == S.n:
        return True
    return colon(S, I, maximal_ideal(S)).dim - I.dim == 1


def composition_length(S: TripleRing, I: Ideal) -> int:
    """Length of ``S/I``; every simple module is ``F``, so this is a dimension count."""
    return 1 + S.n - I.dim


@dataclass(frozen=True)
class Functional:
    """A linear map on an ideal, given by its values on the ideal's RREF basis."""

    domain: Ideal
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.domain.space.dim:
            raise ValueError("one coefficient per basis vector of the domain is required")

    def __call__(self, vec: Sequence):
        coords = self.domain.space.coordinates(vec)
        F = self.domain.ring.field
        return sum((c * x for c, x in zip(self.coeffs, coords)), F.zero)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def kernel(self) -> Subspace:
        """``ker f`` as a subspace of ``m``."""
        sp = self.domain.space
        F = sp.field
        ker = kernel(Matrix(F, [self.coeffs], ncols=sp.dim))
        vecs = [tuple(sum((c * b[j] for c, b in zip(kv, sp.basis)), F.zero)
                      for j in range(sp.ambient)) for kv in ker.basis]
        return Subspace(F, sp.ambient, vecs)


def socle_functional(S: TripleRing, coeffs: Sequence) -> Functional:
    return Functional(socle(S), tuple(S.field(c) for c in coeffs))


def v_f_subspace(S: TripleRing, f: Functional) -> Ideal:
    """``V_f = {a in m : f(m a) = 0}``.

    ``m a`` lies in ``0 x 0 x Im(beta)``, so only the values of ``f`` on the
    W-coordinates matter: ``V_f`` is the radical of the scalar form
    ``f o beta`` on ``V``, plus all of ``W``.
    """
    if f.domain.ring != S or f.domain.full or f.domain.space != socle(S).space:
        raise ValueError("V_f needs a functional defined on the whole socle")
    F = S.field
    zv = (F.zero,) * S.dim_v
    weights = [f(zv + tuple(F.one if k == t else F.zero for k in range(S.dim_w)))
               for t in range(S.dim_w)]
    rad = kernel(S.gram(weights))
    zw = (F.zero,) * S.dim_w
    basis = [b + zw for b in rad.basis]
    basis += [zv + tuple(F.one if k == t else F.zero for k in range(S.dim_w))
              for t in range(S.dim_w)]
    return Ideal(S, _space(S, basis))
