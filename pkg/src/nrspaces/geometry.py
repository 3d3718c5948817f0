"""Riemannian curvature, its covariant derivative and the holonomy algebra.

Everything is computed at the base point from T and R of the canonical
connection. With ``D_X = -1/2 T(X, .)``:

    R(X,Y) = R~(X,Y) + [D_X, D_Y] + D_{T(X,Y)}

and since T and R~ are parallel for the canonical connection,
``nabla R = -(D . R)`` as a derivation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import Matrix, Subspace
from .structure import (CurvatureTensor, NRStructure, _e, matrices_of, matrix_span, require_valid)

HALF = Fraction(1, 2)


def d_operator(s: NRStructure, u) -> Matrix:
    """D_u = -1/2 T(u, .); also the map Lambda(u) used for holonomy."""
    return s.torsion.operator(u).scale(-HALF)


def levi_civita_curvature(s: NRStructure, *, check: bool = True) -> CurvatureTensor:
    if check:
        require_valid(s)
    cached = s.__dict__.get("_levi_civita")
    if cached is not None:
        return cached
    n = s.dim
    ds = [d_operator(s, _e(n, i)) for i in range(n)]
    vals = {}
    for i, j in itertools.combinations(range(n), 2):
        vals[(i, j)] = (s.curvature.r[i][j] + ds[i].commutator(ds[j])
                        + d_operator(s, s.torsion.t[i][j]))
    r = CurvatureTensor(s.space, vals)
    s.__dict__["_levi_civita"] = r
    return r


@dataclass(frozen=True)
class NablaR:
    """``op[i][j][k]`` is the matrix of ``(nabla_{X_i} R)(X_j, X_k)``."""

    op: tuple

    def __call__(self, i: int, j: int, k: int, l: int) -> tuple:
        return self.op[i][j][k].column(l)

    def is_zero(self) -> bool:
        return all(m.is_zero() for a in self.op for b in a for m in b)

    def components(self) -> list:
        """Dense 5-index table ``[i][j][k][l][m]`` of the X_m coefficient."""
        return [[[[list(m.column(l)) for l in range(m.ncols)] for m in b] for b in a] for a in self.op]


def covariant_derivative_R(s: NRStructure, r: CurvatureTensor | None = None, *,
                           check: bool = True) -> NablaR:
    """(nabla_X R)(Y,Z) = 1/2 [R(Y,Z), T_X] + 1/2 R(T(X,Y),Z) + 1/2 R(Y,T(X,Z))."""
    if r is None:
        r = levi_civita_curvature(s, check=check)
    elif check:
        require_valid(s)
    n = s.dim
    t = s.torsion
    zero = Matrix.zeros(n)
    out = []
    for i in range(n):
        tx = t.operator(_e(n, i))
        block = [[zero] * n for _ in range(n)]
        for j, k in itertools.combinations(range(n), 2):
            m = (r.r[j][k].commutator(tx) + r(t.t[i][j], _e(n, k)) + r(_e(n, j), t.t[i][k])).scale(HALF)
            block[j][k] = m
            block[k][j] = -m
        out.append(tuple(tuple(b) for b in block))
    return NablaR(tuple(out))


@dataclass(frozen=True)
class GeometryVerdict:
    flat: bool
    locally_symmetric: bool
    reason: str


TORSION_ZERO = "torsion vanishes: null homogeneous structure tensor"
INTRINSIC_ZERO = "intrinsic curvature vanishes"
NABLA_R_ZERO = "nabla R vanishes"
NABLA_R_NONZERO = "nabla R does not vanish"


def classify_geometry(s: NRStructure) -> GeometryVerdict:
    require_valid(s)
    r = levi_civita_curvature(s, check=False)
    flat = r.is_zero()
    if s.torsion.is_zero():
        return GeometryVerdict(flat, True, TORSION_ZERO)
    sym = covariant_derivative_R(s, r, check=False).is_zero()
    if s.curvature.is_zero():
        # R~ = 0 makes R~ = 0 parallel, but R itself need not be; report what nabla R says
        return GeometryVerdict(flat, sym, INTRINSIC_ZERO + ("; " + (NABLA_R_ZERO if sym else NABLA_R_NONZERO)))
    return GeometryVerdict(flat, sym, NABLA_R_ZERO if sym else NABLA_R_NONZERO)


@dataclass(frozen=True)
class Holonomy:
    space: Subspace
    n: int

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis(self) -> list[Matrix]:
        return matrices_of(self.space, self.n)

    def contains(self, m: Matrix) -> bool:
        return self.space.contains(m.flat())


def holonomy(s: NRStructure, r: CurvatureTensor | None = None, *, check: bool = True) -> Holonomy:
    """Smallest space containing R(X_i,X_j), closed under commutators and [Lambda(X_i), .]."""
    if r is None:
        r = levi_civita_curvature(s, check=check)
    n = s.dim
    lam = [d_operator(s, _e(n, i)) for i in range(n)]
    cur = matrix_span(r.operators(), n)
    while True:
        basis = matrices_of(cur, n)
        new = [a.commutator(b) for a, b in itertools.combinations(basis, 2)]
        new += [l.commutator(a) for l in lam for a in basis]
        nxt = cur + matrix_span(new, n)
        if nxt.dim == cur.dim:
            return Holonomy(cur, n)
        cur = nxt


def riemann_symmetry_defects(s: NRStructure, r: CurvatureTensor) -> dict:
    """Counts of failing index tuples for the four algebraic symmetries of R."""
    n = s.dim
    sp = s.space
    es = [_e(n, i) for i in range(n)]
    out = {"antisymmetry": 0, "skew": 0, "pair_symmetry": 0, "bianchi": 0}
    for i, j in itertools.product(range(n), repeat=2):
        if r.r[i][j] != -r.r[j][i]:
            out["antisymmetry"] += 1
        m = r.r[i][j]
        if not (m.T @ sp.gram + sp.gram @ m).is_zero():
            out["skew"] += 1
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if sp.inner(r.r[i][j] @ es[k], es[l]) != sp.inner(r.r[k][l] @ es[i], es[j]):
            out["pair_symmetry"] += 1
    for i, j, k in itertools.product(range(n), repeat=3):
        v = [r.r[i][j] @ es[k], r.r[j][k] @ es[i], r.r[k][i] @ es[j]]
        if any(v[0][m] + v[1][m] + v[2][m] for m in range(n)):
            out["bianchi"] += 1
    return out
