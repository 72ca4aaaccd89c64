"""Finite-dimensional commutative algebras given by structure constants.

``A`` has basis ``e_0, ..., e_{d-1}`` with ``e_0 = 1`` and maximal ideal
``m = span(e_1, ..., e_{d-1})``.  Vectors of ``A`` are coordinate tuples
of length ``d``.  The associated graded ring is returned as a
:class:`~cubezero.ringcore.TripleRing` with ``V = m/m^2`` and ``W = m^2``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .exactalg import Field, Matrix, Subspace, kernel
from .ringcore import Ideal, TripleRing

__all__ = [
    "PresentedAlgebra", "Validation", "validate", "m_power", "gr", "gr_ideal",
    "trivial_extension", "truncated_polynomial", "maximal_ideal_space",
    "is_algebra_ideal", "algebra_socle", "GradedSplit",
]


@dataclass(frozen=True)
class PresentedAlgebra:
    field: Field
    dim: int
    mul: tuple  # mul[i][j] = coordinates of e_i e_j

    def __post_init__(self):
        F = self.field
        if self.dim < 1:
            raise ValueError("an algebra needs at least the unit basis vector")
        if len(self.mul) != self.dim or any(len(r) != self.dim for r in self.mul):
            raise ValueError(f"structure constants must form a {self.dim}x{self.dim} grid")
        mul = tuple(tuple(tuple(F(x) for x in cell) for cell in row) for row in self.mul)
        for row in mul:
            for cell in row:
                if len(cell) != self.dim:
                    raise ValueError(f"each product needs {self.dim} coordinates")
        object.__setattr__(self, "mul", mul)

    @classmethod
    def from_products(cls, field: Field, dim: int, products: dict) -> "PresentedAlgebra":
        """Unit products filled in; ``products[(i, j)]`` for ``i, j >= 1`` mirrored."""
        grid = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for j in range(dim):
            grid[0][j][j] = 1
            grid[j][0][j] = 1
        for (i, j), c in products.items():
            grid[i][j] = list(c)
            grid[j][i] = list(c)
        return cls(field, dim, grid)

    def unit_vector(self, i: int) -> tuple:
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.dim))

    def product(self, x: Sequence, y: Sequence) -> tuple:
        F = self.field
        out = [F.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, z in enumerate(self.mul[i][j]):
                    if z:
                        out[k] += c * z
        return tuple(out)


@dataclass(frozen=True)
class Validation:
    ok: bool
    problems: tuple = ()

    def __bool__(self):
        return self.ok


def validate(A: PresentedAlgebra) -> Validation:
    """Check commutativity, the unit, that ``m`` is an ideal, ``m^3 = 0`` and associativity.

    Stops at the first failing check and reports the offending indices.
    """
    d = A.dim
    c = A.mul
    for i in range(d):
        for j in range(i + 1, d):
            if c[i][j] != c[j][i]:
                return Validation(False, (f"not commutative: e{i}*e{j} != e{j}*e{i}",))
    for j in range(d):
        if c[0][j] != A.unit_vector(j) or c[j][0] != A.unit_vector(j):
            return Validation(False, (f"e0 is not a unit: e0*e{j} != e{j}",))
    for i in range(1, d):
        for j in range(1, d):
            if c[i][j][0]:
                return Validation(False, (f"m is not an ideal: e{i}*e{j} has a unit component",))
    for i, j, k in itertools.product(range(1, d), repeat=3):
        if any(A.product(c[i][j], A.unit_vector(k))):
            return Validation(False, (f"m^3 != 0: e{i}*e{j}*e{k} is nonzero",))
    for i, j, k in itertools.product(range(d), repeat=3):
        if A.product(c[i][j], A.unit_vector(k)) != A.product(A.unit_vector(i), c[j][k]):
            return Validation(False, (f"not associative on (e{i}, e{j}, e{k})",))
    return Validation(True)


def _require_valid(A: PresentedAlgebra):
    v = validate(A)
    if not v:
        raise ValueError("invalid algebra: " + "; ".join(v.problems))


def maximal_ideal_space(A: PresentedAlgebra) -> Subspace:
    return Subspace(A.field, A.dim, [A.unit_vector(i) for i in range(1, A.dim)])


def m_power(A: PresentedAlgebra, k: int) -> Subspace:
    """``m^k`` as a subspace of ``A``."""
    if k < 1:
        raise ValueError("m_power needs k >= 1")
    cur = maximal_ideal_space(A)
    gens = [A.unit_vector(i) for i in range(1, A.dim)]
    for _ in range(k - 1):
        cur = Subspace(A.field, A.dim, [A.product(x, g) for x in cur.basis for g in gens])
    return cur


def is_algebra_ideal(A: PresentedAlgebra, I: Subspace) -> bool:
    """Closure of a subspace of ``m`` under multiplication by ``A``."""
    if I.ambient != A.dim:
        raise ValueError(f"expected a subspace of {A.field}^{A.dim}")
    if any(b[0] for b in I.basis):
        return False
    return all(A.product(A.unit_vector(i), b) in I for b in I.basis for i in range(1, A.dim))


def algebra_socle(A: PresentedAlgebra) -> Subspace:
    """``Ann(m)``, as a subspace of ``A``.

    Only the part inside ``m`` is returned; the two differ only when
    ``A = F`` is a field.
    """
    F = A.field
    rows = []
    for i in range(1, A.dim):
        cols = [A.product(A.unit_vector(i), A.unit_vector(j)) for j in range(A.dim)]
        for k in range(A.dim):
            rows.append([col[k] for col in cols])
    return kernel(Matrix(F, rows, ncols=A.dim)) & maximal_ideal_space(A)


class GradedSplit:
    """Coordinates of ``m`` split as ``m/m^2`` (representatives) plus ``m^2``.

    The representatives of ``m/m^2`` are the unit vectors ``e_j`` whose
    index is not a pivot of the RREF basis of ``m^2``.
    """

    def __init__(self, A: PresentedAlgebra):
        self.algebra = A
        self.m2 = m_power(A, 2)
        pivots = set(self.m2.pivots)
        self.reps = tuple(j for j in range(1, A.dim) if j not in pivots)

    def split(self, a: Sequence) -> tuple[tuple, tuple]:
        """``(alpha, gamma)`` with ``a = sum alpha_r e_{reps[r]} + sum gamma_t w_t``."""
        F = self.algebra.field
        if a[0]:
            raise ValueError("vector is not in the maximal ideal")
        gamma = tuple(F(a[p]) for p in self.m2.pivots)
        alpha = []
        for j in self.reps:
            s = F(a[j])
            for g, w in zip(gamma, self.m2.basis):
                if g and w[j]:
                    s -= g * w[j]
            alpha.append(s)
        return tuple(alpha), gamma

    def project_m2(self, a: Sequence) -> tuple:
        """The ``m^2`` component of ``a`` in ``A``-coordinates."""
        F = self.algebra.field
        _, gamma = self.split(a)
        return tuple(sum((g * w[k] for g, w in zip(gamma, self.m2.basis)), F.zero)
                     for k in range(self.algebra.dim))


def gr(A: PresentedAlgebra) -> TripleRing:
    """``gr A = F x m/m^2 x m^2`` with beta induced by multiplication."""
    _require_valid(A)
    sp = GradedSplit(A)
    r = len(sp.reps)
    beta = [[None] * r for _ in range(r)]
    for a, i in enumerate(sp.reps):
        for b, j in enumerate(sp.reps):
            alpha, gamma = sp.split(A.mul[i][j])
            assert not any(alpha), "product of two m-elements left m^2"
            beta[a][b] = gamma
    return TripleRing(A.field, r, sp.m2.dim, beta)


def gr_ideal(A: PresentedAlgebra, I: Subspace) -> Ideal:
    """``gr(I) = 0 x (I + m^2)/m^2 x (I cap m^2)`` as an ideal of ``gr(A)``."""
    _require_valid(A)
    if not is_algebra_ideal(A, I):
        raise ValueError("subspace is not an ideal of A inside m")
    G = gr(A)
    sp = GradedSplit(A)
    F = A.field
    zv = (F.zero,) * G.dim_v
    zw = (F.zero,) * G.dim_w
    vecs = [sp.split(b)[0] + zw for b in I.basis]
    vecs += [zv + sp.split(b)[1] for b in (I & sp.m2).basis]
    return Ideal(G, Subspace(F, G.n, vecs))


def trivial_extension(field: Field, dim_v: int) -> PresentedAlgebra:
    """``F x V`` with ``(a, v)(b, w) = (ab, aw + bv)``."""
    if dim_v < 0:
        raise ValueError("dim_v must be non-negative")
    return PresentedAlgebra.from_products(field, 1 + dim_v, {})


def truncated_polynomial(field: Field, n: int = 3) -> PresentedAlgebra:
    """``F[x]/(x^n)`` on the basis ``1, x, ..., x^(n-1)``."""
    prods = {}
    for i in range(1, n):
        for j in range(i, n):
            c = [0] * n
            if i + j < n:
                c[i + j] = 1
            prods[(i, j)] = c
    return PresentedAlgebra.from_products(field, n, prods)
