"""Torsion/curvature data of a naturally reductive structure and its validation.

Indices are 0-based internally; ``T[i][j]`` is the coordinate vector of
``T(X_i, X_j)`` and ``R[i][j]`` the matrix of ``R(X_i, X_j)`` (column ``k``
is the image of ``X_k``).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exact_linalg import Matrix, Q, Subspace, is_zero_vector, kernel, span, vadd, vsub, zero_vector
from .metric_space import (MetricSpace, is_skew_adjoint, lorentz_space, neutral_space, signature,
                           witt_space)


class StructureError(ValueError):
    pass


class InvalidStructure(StructureError):
    def __init__(self, report):
        failed = ", ".join(c.name for c in report.checks if not c.ok)
        super().__init__(f"structure fails validation: {failed}")
        self.report = report


class MetricMismatch(StructureError):
    pass


def _pairs(n):
    return itertools.combinations(range(n), 2)


class TorsionTensor:
    """Antisymmetric bilinear map m x m -> m."""

    __slots__ = ("space", "t")

    def __init__(self, space: MetricSpace, values: Mapping[tuple[int, int], Sequence] | None = None):
        n = space.dim
        zero = zero_vector(n)
        table = [[zero] * n for _ in range(n)]
        for (i, j), v in (values or {}).items():
            v = tuple(Q(x) for x in v)
            if len(v) != n:
                raise StructureError(f"torsion value ({i},{j}) has the wrong length")
            if i == j:
                if not is_zero_vector(v):
                    raise StructureError("T(X_i, X_i) must vanish")
                continue
            if i > j:
                i, j, v = j, i, tuple(-x for x in v)
            table[i][j] = v
            table[j][i] = tuple(-x for x in v)
        self.space = space
        self.t = tuple(tuple(r) for r in table)

    @property
    def dim(self) -> int:
        return self.space.dim

    def __call__(self, u: Sequence, v: Sequence) -> tuple:
        n = self.dim
        out = zero_vector(n)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b and i != j:
                    w = self.t[i][j]
                    out = tuple(out[k] + a * b * w[k] for k in range(n))
        return out

    def operator(self, u: Sequence) -> Matrix:
        """The endomorphism Y -> T(u, Y)."""
        n = self.dim
        return Matrix.from_columns([self(u, _e(n, j)) for j in range(n)])

    def values(self) -> dict:
        return {(i, j): self.t[i][j] for i, j in _pairs(self.dim)}

    def is_zero(self) -> bool:
        return all(is_zero_vector(v) for v in self.values().values())

    def image(self) -> Subspace:
        return span(list(self.values().values()), self.dim)

    def __eq__(self, other) -> bool:
        return isinstance(other, TorsionTensor) and self.t == other.t

    def __repr__(self) -> str:
        return f"TorsionTensor(dim={self.dim}, nonzero={sum(not is_zero_vector(v) for v in self.values().values())})"


class CurvatureTensor:
    """Antisymmetric bilinear map m x m -> End(m).

    Skew-adjointness of the values is checked by validation, not here, so
    that inconsistent source data can still be represented and reported.
    """

    __slots__ = ("space", "r")

    def __init__(self, space: MetricSpace, values: Mapping[tuple[int, int], Matrix] | None = None):
        n = space.dim
        zero = Matrix.zeros(n)
        table = [[zero] * n for _ in range(n)]
        for (i, j), m in (values or {}).items():
            m = m if isinstance(m, Matrix) else Matrix(m)
            if m.shape != (n, n):
                raise StructureError(f"curvature value ({i},{j}) has the wrong shape")
            if i == j:
                if not m.is_zero():
                    raise StructureError("R(X_i, X_i) must vanish")
                continue
            if i > j:
                i, j, m = j, i, -m
            table[i][j] = m
            table[j][i] = -m
        self.space = space
        self.r = tuple(tuple(r) for r in table)

    @property
    def dim(self) -> int:
        return self.space.dim

    def __call__(self, u: Sequence, v: Sequence) -> Matrix:
        n = self.dim
        out = Matrix.zeros(n)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b and i != j:
                    out = out + self.r[i][j].scale(a * b)
        return out

    def values(self) -> dict:
        return {(i, j): self.r[i][j] for i, j in _pairs(self.dim)}

    def operators(self) -> list[Matrix]:
        return list(self.values().values())

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.operators())

    def __eq__(self, other) -> bool:
        return isinstance(other, CurvatureTensor) and self.r == other.r

    def __repr__(self) -> str:
        return f"CurvatureTensor(dim={self.dim})"


@dataclass(frozen=True)
class NRStructure:
    space: MetricSpace
    torsion: TorsionTensor
    curvature: CurvatureTensor

    def __post_init__(self):
        if self.torsion.space.gram != self.space.gram or self.curvature.space.gram != self.space.gram:
            raise MetricMismatch("torsion and curvature must live on the structure's metric")

    @property
    def dim(self) -> int:
        return self.space.dim


def _e(n, i):
    return tuple(Fraction(int(k == i)) for k in range(n))


def matrix_span(mats: Sequence[Matrix], n: int) -> Subspace:
    return span([m.flat() for m in mats], n * n)


def matrices_of(sub: Subspace, n: int) -> list[Matrix]:
    return [Matrix.from_flat(v, n) for v in sub.basis]


def h_algebra(s: NRStructure) -> list[Matrix]:
    """Basis of span{R(X_i, X_j)} as matrices."""
    return matrices_of(matrix_span(s.curvature.operators(), s.dim), s.dim)


# derivation actions ---------------------------------------------------------

def act_on_torsion(a: Matrix, t: TorsionTensor, i: int, j: int) -> tuple:
    n = t.dim
    x, y = _e(n, i), _e(n, j)
    return vsub(vsub(a @ t.t[i][j], t(a @ x, y)), t(x, a @ y))


def act_on_curvature(a: Matrix, r: CurvatureTensor, i: int, j: int) -> Matrix:
    n = r.dim
    x, y = _e(n, i), _e(n, j)
    return a.commutator(r.r[i][j]) - r(a @ x, y) - r(x, a @ y)


# validation -----------------------------------------------------------------

@dataclass
class Check:
    name: str
    ok: bool
    failures: list = field(default_factory=list)


@dataclass
class ValidationReport:
    checks: list

    @property
    def valid(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]


CHECK_NAMES = ("naturally_reductive", "curvature_skew", "h_derivations", "h_closed",
               "bianchi_1", "bianchi_2")
_MAX_FAILURES = 5


def _record(check: Check, what):
    check.ok = False
    if len(check.failures) < _MAX_FAILURES:
        check.failures.append(what)


def validate_structure(s: NRStructure) -> ValidationReport:
    """Run the six consistency checks; failures are recorded, never raised."""
    n = s.dim
    t, r, sp = s.torsion, s.curvature, s.space
    es = [_e(n, i) for i in range(n)]

    nr = Check("naturally_reductive", True)
    for i, j, k in itertools.product(range(n), repeat=3):
        if sp.inner(t.t[i][j], es[k]) + sp.inner(t.t[i][k], es[j]) != 0:
            _record(nr, (i + 1, j + 1, k + 1))

    skew = Check("curvature_skew", True)
    for (i, j), m in r.values().items():
        if not is_skew_adjoint(m, sp):
            _record(skew, (i + 1, j + 1))

    h = h_algebra(s)
    der = Check("h_derivations", True)
    for idx, a in enumerate(h):
        for i, j in _pairs(n):
            if not is_zero_vector(act_on_torsion(a, t, i, j)):
                _record(der, ("T", idx, i + 1, j + 1))
            if not act_on_curvature(a, r, i, j).is_zero():
                _record(der, ("R", idx, i + 1, j + 1))

    closed = Check("h_closed", True)
    hspan = matrix_span(h, n)
    for p, q in itertools.combinations(range(len(h)), 2):
        if not hspan.contains(h[p].commutator(h[q]).flat()):
            _record(closed, (p, q))

    b1 = Check("bianchi_1", True)
    b2 = Check("bianchi_2", True)
    for i, j, k in itertools.combinations(range(n), 3):
        cyc = ((i, j, k), (j, k, i), (k, i, j))
        lhs = zero_vector(n)
        rhs = zero_vector(n)
        second = Matrix.zeros(n)
        for x, y, z in cyc:
            lhs = vadd(lhs, r.r[x][y] @ es[z])
            rhs = vadd(rhs, t(t.t[x][y], es[z]))
            second = second + r(t.t[x][y], es[z])
        if lhs != rhs:
            _record(b1, (i + 1, j + 1, k + 1))
        if not second.is_zero():
            _record(b2, (i + 1, j + 1, k + 1))
    return ValidationReport([nr, skew, der, closed, b1, b2])


def cached_validation(s: NRStructure) -> ValidationReport:
    """validate_structure, computed once per (immutable) structure."""
    rep = s.__dict__.get("_validation")
    if rep is None:
        rep = validate_structure(s)
        s.__dict__["_validation"] = rep
    return rep


def require_valid(s: NRStructure) -> ValidationReport:
    rep = cached_validation(s)
    if not rep.valid:
        raise InvalidStructure(rep)
    return rep


# torsion parametrizations ---------------------------------------------------

def _torsion_from_table(space, table) -> TorsionTensor:
    vals = {}
    for (i, j), comps in table.items():
        v = [Fraction(0)] * 4
        for k, coef in comps:
            v[k - 1] += coef
        vals[(i - 1, j - 1)] = tuple(v)
    return TorsionTensor(space, vals)


def torsion_lorentz_orthonormal(a, b, c, d) -> TorsionTensor:
    a, b, c, d = map(Q, (a, b, c, d))
    return _torsion_from_table(lorentz_space(), {
        (1, 2): [(3, a), (4, b)], (1, 3): [(2, -a), (4, c)], (1, 4): [(2, -b), (3, -c)],
        (2, 3): [(1, -a), (4, d)], (2, 4): [(1, -b), (3, -d)], (3, 4): [(1, -c), (2, d)],
    })


def torsion_neutral_orthonormal(a, b, c, d) -> TorsionTensor:
    a, b, c, d = map(Q, (a, b, c, d))
    return _torsion_from_table(neutral_space(), {
        (1, 2): [(3, a), (4, b)], (1, 3): [(2, a), (4, c)], (1, 4): [(2, b), (3, -c)],
        (2, 3): [(1, -a), (4, d)], (2, 4): [(1, -b), (3, -d)], (3, 4): [(1, -c), (2, -d)],
    })


def torsion_neutral_witt(a, b, c, d) -> TorsionTensor:
    a, b, c, d = map(Q, (a, b, c, d))
    return _torsion_from_table(witt_space(), {
        (1, 2): [(1, c), (2, -a)], (1, 3): [(1, d), (3, a)], (1, 4): [(2, d), (3, c)],
        (2, 3): [(1, -b), (4, a)], (2, 4): [(2, -b), (4, c)], (3, 4): [(3, b), (4, d)],
    })


TORSION_FAMILIES = {
    "lorentz": torsion_lorentz_orthonormal,
    "neutral-orthonormal": torsion_neutral_orthonormal,
    "neutral-witt": torsion_neutral_witt,
}


@dataclass(frozen=True)
class SolutionSpace:
    """Parameter tuples (a, b, c, d) in the kernel, as a canonical subspace."""

    family: str
    kernel: Subspace

    @property
    def dim(self) -> int:
        return self.kernel.dim

    def basis(self) -> list[tuple]:
        return list(self.kernel.basis)

    def contains(self, params: Sequence) -> bool:
        return self.kernel.contains(tuple(Q(x) for x in params))


def torsion_constraints(a_op: Matrix, family: str) -> SolutionSpace:
    """Kernel of the linear map (a,b,c,d) -> a_op . T(a,b,c,d)."""
    try:
        param = TORSION_FAMILIES[family]
    except KeyError:
        raise StructureError(f"unknown torsion family {family!r}; "
                             f"choose from {sorted(TORSION_FAMILIES)}") from None
    space = param(0, 0, 0, 0).space
    if a_op.shape != (4, 4):
        raise MetricMismatch("operator must be 4 x 4")
    if not is_skew_adjoint(a_op, space):
        raise MetricMismatch(f"operator is not skew-adjoint for the {family} metric")
    # the action is linear in the parameters: one column per unit tuple
    cols = []
    for p in range(4):
        t = param(*_e(4, p))
        col = []
        for i, j in _pairs(4):
            col.extend(act_on_torsion(a_op, t, i, j))
        cols.append(tuple(col))
    return SolutionSpace(family, kernel(Matrix.from_columns(cols)))


def zero_structure(space: MetricSpace) -> NRStructure:
    return NRStructure(space, TorsionTensor(space), CurvatureTensor(space))


__all__ = [
    "StructureError", "InvalidStructure", "MetricMismatch", "TorsionTensor", "CurvatureTensor",
    "NRStructure", "Check", "ValidationReport", "CHECK_NAMES", "validate_structure", "cached_validation", "require_valid",
    "torsion_lorentz_orthonormal", "torsion_neutral_orthonormal", "torsion_neutral_witt",
    "TORSION_FAMILIES", "SolutionSpace", "torsion_constraints", "h_algebra", "matrix_span",
    "matrices_of", "act_on_torsion", "act_on_curvature", "zero_structure", "signature",
]
