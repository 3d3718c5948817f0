"""Metric vector spaces with arbitrary symmetric nondegenerate rational Gram matrix."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact_linalg import Matrix, Subspace, Q, kernel, span


class MetricError(ValueError):
    pass


class NotSymmetric(MetricError):
    pass


class Degenerate(MetricError):
    pass


class SingularCayley(MetricError):
    pass


def signature(gram: Matrix) -> tuple[int, int]:
    """(negative count, positive count) by symmetric congruence diagonalization.

    Simultaneous row/column elimination; a zero pivot with a nonzero entry in
    its row is repaired by adding that row/column first. Zero directions are
    not counted.
    """
    a = [list(r) for r in gram.rows]
    n = len(a)
    diag = []
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
            if j is not None:
                # e_k <- e_k + s e_j makes the pivot nonzero for s = 1 or -1
                s = 1 if a[k][k] + 2 * a[k][j] + a[j][j] != 0 else -1
                for i in range(n):
                    a[k][i] += s * a[j][i]
                for i in range(n):
                    a[i][k] += s * a[i][j]
        p = a[k][k]
        diag.append(p)
        if p == 0:
            continue
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
                for j in range(k, n):
                    a[j][i] -= f * a[j][k]
    return sum(1 for d in diag if d < 0), sum(1 for d in diag if d > 0)


@dataclass(frozen=True)
class MetricSpace:
    gram: Matrix
    labels: tuple = ()
    signature: tuple = field(default=(0, 0))

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        g = self.gram.rows
        return sum((u[i] * g[i][j] * v[j] for i in range(len(u)) if u[i]
                    for j in range(len(v)) if v[j]), Fraction(0))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"X{i + 1}"

    def adjoint(self, a: Matrix) -> Matrix:
        """Metric adjoint G^-1 a^T G."""
        return self.gram.inverse() @ a.T @ self.gram


def validate_metric(gram, labels: Sequence[str] | None = None) -> MetricSpace:
    g = gram if isinstance(gram, Matrix) else Matrix(gram)
    if not g.is_square():
        raise MetricError("Gram matrix must be square")
    if not g.is_symmetric():
        raise NotSymmetric("Gram matrix is not symmetric")
    if g.det() == 0:
        raise Degenerate("Gram matrix is degenerate (det = 0)")
    labels = tuple(labels) if labels else tuple(f"X{i + 1}" for i in range(g.nrows))
    if len(labels) != g.nrows:
        raise MetricError("one label per basis vector required")
    return MetricSpace(g, labels, signature(g))


def lorentz_space() -> MetricSpace:
    return validate_metric(Matrix.diag([-1, 1, 1, 1]))


def neutral_space() -> MetricSpace:
    return validate_metric(Matrix.diag([-1, -1, 1, 1]))


def witt_space() -> MetricSpace:
    """<X2,X3> = 1, <X1,X4> = -1, all other pairings zero."""
    return validate_metric(Matrix([[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]]))


@dataclass(frozen=True)
class Endomorphism:
    space: MetricSpace
    mat: Matrix

    def __post_init__(self):
        if self.mat.shape != (self.space.dim, self.space.dim):
            raise ValueError("endomorphism size does not match the space")


def skew_defect(mat: Matrix, s: MetricSpace) -> Matrix:
    """mat^T G + G mat; zero exactly for skew-adjoint operators."""
    return mat.T @ s.gram + s.gram @ mat


def is_skew_adjoint(a, s: MetricSpace | None = None) -> bool:
    if isinstance(a, Endomorphism):
        s, a = a.space, a.mat
    return skew_defect(a, s).is_zero()


def is_self_adjoint(a: Matrix, s: MetricSpace) -> bool:
    ga = s.gram @ a
    return ga.is_symmetric()


def perp(w: Subspace, s: MetricSpace) -> Subspace:
    if w.ambient_dim != s.dim:
        raise ValueError("subspace lives in a different ambient space")
    if w.dim == 0:
        return span([tuple(r) for r in Matrix.identity(s.dim).rows], s.dim)
    return kernel(w.matrix().T @ s.gram)


def restricted_gram(w: Subspace, s: MetricSpace) -> Matrix:
    b = w.matrix()
    return b.T @ s.gram @ b


def is_nondegenerate_on(w: Subspace, s: MetricSpace) -> bool:
    if w.dim == 0:
        return True
    return restricted_gram(w, s).det() != 0


def orthogonal_projector(w: Subspace, s: MetricSpace) -> Matrix:
    """Projector onto W along W^perp (W nondegenerate)."""
    if not is_nondegenerate_on(w, s):
        raise Degenerate("projection needs a nondegenerate subspace")
    if w.dim == 0:
        return Matrix.zeros(s.dim)
    b = w.matrix()
    return b @ restricted_gram(w, s).inverse() @ b.T @ s.gram


def cayley_orthogonal(s_skew, space: MetricSpace | None = None):
    """Q = (I - S)(I + S)^-1, an isometry of the metric for skew-adjoint S."""
    wrap = isinstance(s_skew, Endomorphism)
    if wrap:
        space, mat = s_skew.space, s_skew.mat
    else:
        mat = s_skew
    if not is_skew_adjoint(mat, space):
        raise MetricError("Cayley transform needs a skew-adjoint operator")
    n = mat.nrows
    eye = Matrix.identity(n)
    try:
        inv = (eye + mat).inverse()
    except ZeroDivisionError:
        raise SingularCayley("I + S is singular") from None
    q = (eye - mat) @ inv
    return Endomorphism(space, q) if wrap else q


def random_skew(space: MetricSpace, rng: random.Random, bound: int = 5, den: int = 4) -> Matrix:
    """Random skew-adjoint operator with small rational entries.

    G S is antisymmetric exactly when S is skew-adjoint, so draw the strictly
    lower triangle of G S and complete it.
    """
    n = space.dim
    gs = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i):
            x = Fraction(rng.randint(-bound, bound), rng.randint(1, den))
            gs[i][j] = x
            gs[j][i] = -x
    return space.gram.inverse() @ Matrix(gs)


def random_isometry(space: MetricSpace, rng: random.Random, bound: int = 5, den: int = 4) -> Matrix:
    while True:
        try:
            return cayley_orthogonal(random_skew(space, rng, bound, den), space)
        except SingularCayley:
            continue


def is_isometry(q: Matrix, space: MetricSpace) -> bool:
    return q.T @ space.gram @ q == space.gram


__all__ = [
    "MetricSpace", "Endomorphism", "MetricError", "NotSymmetric", "Degenerate", "SingularCayley",
    "validate_metric", "signature", "lorentz_space", "neutral_space", "witt_space",
    "is_skew_adjoint", "is_self_adjoint", "skew_defect", "perp", "restricted_gram",
    "is_nondegenerate_on", "orthogonal_projector", "cayley_orthogonal", "random_skew",
    "random_isometry", "is_isometry", "Q",
]
