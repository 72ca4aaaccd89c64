"""Exact scalars, dense matrices and subspaces over Q and GF(p).

Rationals are plain :class:`fractions.Fraction` values.  Prime-field
elements are :class:`Mod` instances, which support the usual arithmetic
operators so that elimination code can be written once for both kinds
of field.

Subspaces are stored by the reduced row echelon form of a row basis, so
two subspaces are equal exactly when their stored bases are equal.
"""
from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Field", "Rationals", "PrimeField", "QQ", "GF", "Mod",
    "Matrix", "Subspace",
    "rref", "kernel", "det_fraction_free", "leading_minors",
    "enumerate_subspaces", "gaussian_binomial", "DEFAULT_ENUM_BOUNDS",
]


class Mod:
    """An element of GF(p), kept as its canonical representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Mod(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o, self.p) / self

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return Mod(1, self.p) / Mod(pow(self.value, -k, self.p), self.p)
        return Mod(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """Common interface of :data:`QQ` and the prime fields."""

    is_finite: bool = False
    characteristic: int = 0

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        raise NotImplementedError

    def parse(self, text: str):
        """Read a scalar written as ``a`` or ``a/b``."""
        return self(Fraction(text))


class Rationals(Field):
    name = "Q"

    def __call__(self, x) -> Fraction:
        if isinstance(x, Mod):
            raise TypeError("cannot coerce a GF(p) element into Q")
        return Fraction(x)

    def random(self, rng: random.Random, height: int = 5) -> Fraction:
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return "Q"


class PrimeField(Field):
    is_finite = True

    def __init__(self, p: int):
        if not 2 <= p < 2**31 or not _is_prime(p):
            raise ValueError(f"GF(p) needs a prime p < 2^31, got {p}")
        self.p = p
        self.characteristic = p

    @property
    def order(self) -> int:
        return self.p

    def __call__(self, x) -> Mod:
        if isinstance(x, Mod):
            if x.p != self.p:
                raise ValueError(f"element of GF({x.p}) is not in GF({self.p})")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return Mod(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return Mod(int(x), self.p)

    def elements(self) -> list[Mod]:
        return [Mod(a, self.p) for a in range(self.p)]

    def random(self, rng: random.Random) -> Mod:
        return Mod(rng.randrange(self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    __str__ = __repr__


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix with entries in a single field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Iterable], ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged matrix rows")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise ValueError(f"expected {ncols} columns, got {self.ncols}")
        else:
            if ncols is None:
                raise ValueError("an empty matrix needs an explicit column count")
            self.ncols = ncols

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, ([int(i == j) for j in range(n)] for i in range(n)), ncols=n)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, ([0] * ncols for _ in range(nrows)), ncols=ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self.rows) if self.rows else [], ncols=self.nrows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def apply(self, x: Sequence) -> tuple:
        """Matrix-vector product ``self @ x``."""
        if len(x) != self.ncols:
            raise ValueError("vector length does not match column count")
        zero = self.field.zero
        return tuple(sum((a * b for a, b in zip(r, x)), zero) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions differ")
        cols = other.transpose().rows
        zero = self.field.zero
        return Matrix(
            self.field,
            ([sum((a * b for a, b in zip(r, c)), zero) for c in cols] for r in self.rows),
            ncols=other.ncols,
        )

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows) for j in range(i)
        )

    def rref(self) -> tuple["Matrix", int]:
        return rref(self)

    def rank(self) -> int:
        return rref(self)[1]

    def kernel(self) -> "Subspace":
        return kernel(self)

    def det(self):
        return det_fraction_free(self)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.shape == other.shape and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.shape, self.rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Matrix({self.field}, [{body}])"


def _rref_rows(field: Field, rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """In-place Gauss-Jordan; returns (nonzero rows, pivot columns).

    Pivot choice is the leftmost column holding a nonzero entry, and within
    that column the first nonzero row at or below the current position.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        src = next((i for i in range(r, nrows) if rows[i][c]), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        piv = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], piv)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form with zero rows dropped, and the rank."""
    rows, piv = _rref_rows(m.field, [list(r) for r in m.rows], m.ncols)
    return Matrix(m.field, rows, ncols=m.ncols), len(piv)


def kernel(m: Matrix) -> "Subspace":
    """The right null space ``{x : m x = 0}``."""
    rows, piv = _rref_rows(m.field, [list(r) for r in m.rows], m.ncols)
    F = m.field
    free = [j for j in range(m.ncols) if j not in set(piv)]
    basis = []
    for f in free:
        x = [F.zero] * m.ncols
        x[f] = F.one
        for row, p in zip(rows, piv):
            x[p] = -row[f]
        basis.append(x)
    return Subspace(F, m.ncols, basis)


def _bareiss(field: Field, a: list[list], pivoting: bool):
    """Fraction-free elimination on an integer (or GF(p)) square array.

    Yields the successive leading pivots; with ``pivoting`` the sign of the
    accumulated row swaps is tracked in the final value.
    """
    n = len(a)
    sign = 1
    prev = field.one if not isinstance(field, Rationals) else 1
    for k in range(n):
        if not a[k][k]:
            if not pivoting:
                return
            src = next((i for i in range(k + 1, n) if a[i][k]), None)
            if src is None:
                yield 0, sign
                return
            a[k], a[src] = a[src], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pk - a[i][k] * a[k][j]
                a[i][j] = num // prev if isinstance(num, int) else num / prev
            a[i][k] = 0 * pk
        prev = pk
        yield pk, sign


def _integerize(m: Matrix) -> tuple[list[list[int]], list[int]]:
    scales = []
    rows = []
    for r in m.rows:
        s = math.lcm(*(x.denominator for x in r)) if r else 1
        scales.append(s)
        rows.append([int(x * s) for x in r])
    return rows, scales


def det_fraction_free(m: Matrix):
    """Exact determinant by Bareiss elimination.

    Over Q each row is first scaled to integers so every intermediate value
    is an integer and each division is exact.
    """
    if not m.is_square():
        raise ValueError(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")
    F = m.field
    n = m.nrows
    if n == 0:
        return F.one
    if isinstance(F, Rationals):
        a, scales = _integerize(m)
    else:
        a, scales = [list(r) for r in m.rows], None
    last = None
    for last in _bareiss(F, a, pivoting=True):
        if last[0] == 0:
            return F.zero
    pk, sign = last
    d = F(pk) * sign
    if scales:
        d /= math.prod(scales)
    return d


def leading_minors(m: Matrix) -> list:
    """Determinants of the leading k x k blocks, k = 1 .. n, stopping at the first zero.

    Bareiss elimination without row exchanges leaves the k-th leading minor
    as the k-th pivot, so one elimination pass gives all of them.
    """
    if not m.is_square():
        raise ValueError("leading minors need a square matrix")
    F = m.field
    if isinstance(F, Rationals):
        a, scales = _integerize(m)
    else:
        a, scales = [list(r) for r in m.rows], None
    out = []
    for k, (pk, _) in enumerate(_bareiss(F, a, pivoting=False)):
        d = F(pk)
        if scales:
            d /= math.prod(scales[: k + 1])
        out.append(d)
    if len(out) < m.nrows:
        out.append(F.zero)
    return out


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of ``field ** ambient`` stored as an RREF row basis."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: Field, ambient: int, vectors: Iterable[Sequence] = ()):
        rows = [[field(x) for x in v] for v in vectors]
        for r in rows:
            if len(r) != ambient:
                raise ValueError(f"vector of length {len(r)} in ambient dimension {ambient}")
        rows, piv = _rref_rows(field, rows, ambient)
        self.field = field
        self.ambient = ambient
        self.basis = tuple(tuple(r) for r in rows)
        self.pivots = tuple(piv)

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n)

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, Matrix.identity(field, n).rows)

    @classmethod
    def from_rref(cls, field: Field, ambient: int, rows: Sequence[Sequence]) -> "Subspace":
        """Trusted constructor for rows already in canonical form."""
        s = object.__new__(cls)
        s.field = field
        s.ambient = ambient
        s.basis = tuple(tuple(r) for r in rows)
        s.pivots = tuple(next(j for j, x in enumerate(r) if x) for r in s.basis)
        return s

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient or self.field != other.field:
            raise ValueError(
                f"subspaces of {self.field}^{self.ambient} and {other.field}^{other.ambient}"
            )

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of ``v`` on the stored basis (``v`` must lie in the span)."""
        coords = tuple(self.field(v[p]) for p in self.pivots)
        if not self._reconstructs(v, coords):
            raise ValueError("vector is not in the subspace")
        return coords

    def _reconstructs(self, v: Sequence, coords: Sequence) -> bool:
        F = self.field
        for j in range(self.ambient):
            s = F.zero
            for c, row in zip(coords, self.basis):
                if c and row[j]:
                    s += c * row[j]
            if s != v[j]:
                return False
        return True

    def __contains__(self, v: Sequence) -> bool:
        if len(v) != self.ambient:
            raise ValueError("vector length does not match ambient dimension")
        return self._reconstructs(v, [v[p] for p in self.pivots])

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(b in other for b in self.basis)

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def __lt__(self, other: "Subspace") -> bool:
        return self <= other and self.dim < other.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection by the Zassenhaus sum-intersection trick."""
        self._check(other)
        n = self.ambient
        F = self.field
        zero = (F.zero,) * n
        rows = [list(a + a) for a in self.basis] + [list(b + zero) for b in other.basis]
        rows, piv = _rref_rows(F, rows, 2 * n)
        meet = [r[n:] for r, p in zip(rows, piv) if p >= n]
        return Subspace(F, n, meet)

    def complement_indices(self) -> tuple[int, ...]:
        """Non-pivot coordinates; their unit vectors complete the basis to the ambient space."""
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient) if j not in piv)

    def quotient(self) -> tuple[list[tuple], "Matrix"]:
        """Coset representatives of ``ambient / self`` and the projection onto them.

        The projection matrix ``P`` satisfies ``P v = 0`` iff ``v`` is in the
        subspace, and ``P e_j = e_k`` for the k-th representative ``e_j``.
        """
        F = self.field
        free = self.complement_indices()
        reps = [tuple(F.one if i == j else F.zero for i in range(self.ambient)) for j in free]
        proj = []
        for j in free:
            row = [F.zero] * self.ambient
            row[j] = F.one
            for b, p in zip(self.basis, self.pivots):
                row[p] = -b[j]
            proj.append(row)
        return reps, Matrix(F, proj, ncols=self.ambient)

    def equations(self) -> Matrix:
        """A matrix whose kernel is exactly this subspace."""
        return self.quotient()[1]

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, ncols=self.ambient)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.basis)
        return f"Subspace({self.field}^{self.ambient}, [{rows}])"


DEFAULT_ENUM_BOUNDS = {2: 6, 3: 4}


def _default_bound(p: int) -> int:
    return DEFAULT_ENUM_BOUNDS.get(p, 3)


def enumerate_subspaces(field: Field, n: int, k: int | None = None,
                        bound: int | None = None) -> Iterator[Subspace]:
    """Every subspace of ``field ** n`` (of dimension ``k`` if given), each once.

    Subspaces are produced directly in RREF: choose the pivot columns, then
    fill each free entry to the right of a pivot with every field element.
    """
    if not field.is_finite:
        raise ValueError("subspace enumeration needs a finite field")
    limit = _default_bound(field.p) if bound is None else bound
    if n > limit:
        raise ValueError(f"ambient dimension {n} exceeds enumeration bound {limit} over {field}")
    dims = range(n + 1) if k is None else [k]
    elems = field.elements()
    for d in dims:
        for piv in itertools.combinations(range(n), d):
            pivset = set(piv)
            slots = [(r, c) for r, p in enumerate(piv)
                     for c in range(p + 1, n) if c not in pivset]
            for fill in itertools.product(elems, repeat=len(slots)):
                rows = [[field.zero] * n for _ in range(d)]
                for r, p in enumerate(piv):
                    rows[r][p] = field.one
                for (r, c), x in zip(slots, fill):
                    rows[r][c] = x
                yield Subspace.from_rref(field, n, rows)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
