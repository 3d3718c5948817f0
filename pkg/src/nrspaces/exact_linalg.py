"""Exact rational scalars, small dense matrices and canonical subspaces.

Scalars are :class:`fractions.Fraction`. Vectors are plain tuples of
fractions. :class:`Matrix` is an immutable row-major grid. A
:class:`Subspace` stores its basis as the reduced column-echelon form of the
spanning columns, so two subspaces are equal exactly when their stored bases
are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple
_ZERO = Fraction(0)


def Q(x) -> Fraction:
    """Coerce ``x`` (int, Fraction or ``"n/d"`` string) to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} exactly to a rational")


def format_rational(x: Fraction) -> str:
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, int) and not isinstance(s, bool):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"expected a rational string, got {s!r}")
    text = s.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {s!r}") from None
    if d <= 0:
        raise ValueError(f"rational {s!r} must have a positive denominator")
    return Fraction(n, d)


def vec(*xs) -> Vector:
    return tuple(Q(x) for x in xs)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def vadd(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Sequence) -> Vector:
    return tuple(c * a for a in u)


def vcomb(coeffs: Iterable, vectors: Sequence[Sequence], n: int) -> Vector:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k in range(n):
                out[k] += c * v[k]
    return tuple(out)


def is_zero_vector(u: Sequence) -> bool:
    return all(a == 0 for a in u)


class Matrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(Q(x) for x in r) for r in rows)
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix rows")
        self.rows = data
        self.nrows = len(data)
        self.ncols = ncols
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple, ncols: int) -> "Matrix":
        m = object.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        z = Fraction(0)
        return cls._raw(tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        if not cols:
            return cls._raw(tuple(() for _ in range(nrows or 0)), 0)
        n = len(cols[0])
        return cls._raw(tuple(tuple(Q(c[i]) for c in cols) for i in range(n)), len(cols))

    @classmethod
    def from_flat(cls, flat: Sequence, n: int) -> "Matrix":
        return cls._raw(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)), n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def flat(self) -> Vector:
        return tuple(x for r in self.rows for x in r)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols)),
                           self.nrows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self.rows))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self.rows)
        return f"Matrix[{body}]"

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_same(self, other)
        return Matrix._raw(tuple(tuple(a + b if b else a for a, b in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        _check_same(self, other)
        return Matrix._raw(tuple(tuple(a - b if b else a for a, b in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def scale(self, c) -> "Matrix":
        c = Q(c)
        if c == 1:
            return self
        if not c:
            return Matrix.zeros(self.nrows, self.ncols)
        return Matrix._raw(tuple(tuple(c * a if a else a for a in r) for r in self.rows), self.ncols)

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
            return Matrix._raw(tuple(_row_times(r, cols) for r in self.rows), other.ncols)
        v = tuple(other)
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return _row_times(v, self.rows)

    def apply(self, v: Sequence) -> Vector:
        return self @ v

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(self.rows[i][j] == self.rows[j][i]
                                        for i in range(self.nrows) for j in range(i))

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square() or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        out, base = Matrix.identity(self.nrows), self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def rank(self) -> int:
        return len(rref(self)[1])

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self.rows]
        n = self.nrows
        d = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            d *= a[c][c]
            for r in range(c + 1, n):
                f = a[r][c] / a[c][c]
                if f:
                    for k in range(c, n):
                        a[r][k] -= f * a[c][k]
        return d

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = Matrix._raw(tuple(r + unit_vector(n, i) for i, r in enumerate(self.rows)), 2 * n)
        red, piv = rref(aug)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix._raw(tuple(r[n:] for r in red.rows), n)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self


def _row_times(r: Sequence, cols: Sequence[Sequence]) -> Vector:
    """Dot products of r with each of cols, skipping zero entries."""
    nz = [(k, a) for k, a in enumerate(r) if a]
    out = []
    for c in cols:
        acc = _ZERO
        for k, a in nz:
            b = c[k]
            if b:
                acc = acc + a * b
        out.append(acc)
    return tuple(out)


def _check_same(a: Matrix, b: Matrix) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and pivot columns.

    Pivot search takes the leftmost column with a nonzero entry at or below
    the current row, and the first such row; no magnitude heuristics.
    """
    a = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv if x else x for x in a[r]]
        row = a[r]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], row)]
        pivots.append(c)
        r += 1
    return Matrix._raw(tuple(tuple(row) for row in a), ncols), pivots


def nullspace(m: Matrix) -> list[Vector]:
    """Basis of {x : m x = 0}, one vector per free column."""
    red, piv = rref(m)
    n = m.ncols
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i, p in enumerate(piv):
            x[p] = -red.rows[i][f]
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^ambient_dim in canonical form.

    ``basis`` holds the reduced column-echelon basis (transpose of the RREF of
    the row-stacked spanning set), so equal subspaces have equal bases.
    """

    ambient_dim: int
    basis: tuple  # tuple of vectors, canonical

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        """Basis vectors as columns (ambient_dim x dim)."""
        if not self.basis:
            return Matrix._raw(tuple(() for _ in range(self.ambient_dim)), 0)
        return Matrix.from_columns(self.basis)

    def contains(self, v: Sequence) -> bool:
        return span(list(self.basis) + [tuple(v)], self.ambient_dim).dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return span(list(self.basis) + list(other.basis), self.ambient_dim).dim == self.dim

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the canonical basis; ValueError if not inside."""
        part, _ = solve_linear(self.matrix(), tuple(v))
        if part is None:
            raise ValueError("vector is not in the subspace")
        return part

    def __add__(self, other: "Subspace") -> "Subspace":
        return span(list(self.basis) + list(other.basis), self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.dim == 0 or other.dim == 0:
            return span([], self.ambient_dim)
        cols = list(self.basis) + [vscale(-1, v) for v in other.basis]
        ker = nullspace(Matrix.from_columns(cols))
        return span([vcomb(k[:self.dim], self.basis, self.ambient_dim) for k in ker],
                    self.ambient_dim)

    def is_proper(self) -> bool:
        return 0 < self.dim < self.ambient_dim


def span(vectors: Sequence[Sequence], ambient_dim: int) -> Subspace:
    vs = [tuple(Q(x) for x in v) for v in vectors]
    if any(len(v) != ambient_dim for v in vs):
        raise ValueError("vector length does not match ambient dimension")
    if not vs:
        return Subspace(ambient_dim, ())
    red, piv = rref(Matrix._raw(tuple(vs), ambient_dim))
    return Subspace(ambient_dim, tuple(red.rows[i] for i in range(len(piv))))


def full_space(n: int) -> Subspace:
    return Subspace(n, tuple(unit_vector(n, i) for i in range(n)))


def kernel(m: Matrix) -> Subspace:
    return span(nullspace(m), m.ncols)


def image(m: Matrix) -> Subspace:
    return span(m.columns(), m.nrows)


def solve_linear(a: Matrix, b: Sequence) -> tuple[Vector | None, Subspace]:
    """Solve ``a x = b``.

    Returns ``(particular, kernel)``; ``particular`` is None when the system is
    inconsistent. Free variables of the particular solution are set to zero.
    """
    b = tuple(Q(x) for x in b)
    if len(b) != a.nrows:
        raise ValueError("right-hand side length must equal the row count")
    n = a.ncols
    aug = Matrix._raw(tuple(r + (bi,) for r, bi in zip(a.rows, b)), n + 1)
    red, piv = rref(aug)
    ker = kernel(a)
    if n in piv:
        return None, ker
    x = [Fraction(0)] * n
    for i, p in enumerate(piv):
        x[p] = red.rows[i][n]
    return tuple(x), ker
