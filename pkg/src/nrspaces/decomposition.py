"""Decomposability of a naturally reductive structure.

Two routes, tried in order:

1. ``W = span T(X_i, X_j)``. If W is proper and nondegenerate and both
   projections onto W and W^perp commute with T and R~ as in
   ``T(pX, pY) = p T(X, Y)`` and ``R~(pX, pY) pZ = p R~(X, Y) Z``, the
   structure is a product along W.
2. Otherwise look for a proper nondegenerate subspace invariant under the
   holonomy algebra (see :mod:`nrspaces.invariant`).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .exact_linalg import Matrix, Subspace
from .geometry import Holonomy, holonomy, levi_civita_curvature
from .invariant import find_splitting
from .metric_space import Degenerate, is_nondegenerate_on, orthogonal_projector, perp, restricted_gram
from .structure import NRStructure, StructureError, _e, require_valid

DECOMPOSABLE = "decomposable"
INDECOMPOSABLE = "indecomposable"
UNKNOWN = "unknown"


class DegenerateW(StructureError, Degenerate):
    pass


@dataclass
class Decomposition:
    verdict: str
    witness: Subspace | None = None
    complement: Subspace | None = None
    method: str | None = None
    holonomy_dim: int | None = None
    obstruction: list | None = None
    notes: list = field(default_factory=list)

    @property
    def decomposable(self) -> bool:
        return self.verdict == DECOMPOSABLE


def check_projection_conditions(s: NRStructure, w: Subspace) -> bool:
    if not is_nondegenerate_on(w, s.space):
        raise DegenerateW("projection conditions need a nondegenerate subspace")
    n = s.dim
    p1 = orthogonal_projector(w, s.space)
    p2 = Matrix.identity(n) - p1
    t, r = s.torsion, s.curvature
    es = [_e(n, i) for i in range(n)]
    for p in (p1, p2):
        pe = [p @ e for e in es]
        for i, j in itertools.combinations(range(n), 2):
            if t(pe[i], pe[j]) != p @ t.t[i][j]:
                return False
            lhs = r(pe[i], pe[j]) @ p
            if lhs != p @ r.r[i][j]:
                return False
    return True


def _invariant_under(mats, w: Subspace) -> bool:
    return all(w.contains(m @ v) for m in mats for v in w.basis)


def decompose(s: NRStructure, hol: Holonomy | None = None) -> Decomposition:
    require_valid(s)
    notes = []
    if s.torsion.is_zero():
        notes.append("torsion vanishes: locally symmetric (null homogeneous structure)")
    else:
        w = s.torsion.image()
        if not w.is_proper():
            notes.append(f"torsion image has dimension {w.dim}: not proper")
        elif not is_nondegenerate_on(w, s.space):
            notes.append(f"torsion image has dimension {w.dim} and is degenerate "
                         f"(restricted Gram determinant 0)")
        elif check_projection_conditions(s, w):
            d = Decomposition(DECOMPOSABLE, w, perp(w, s.space), "torsion-image", notes=notes)
            d.notes.append(f"restricted Gram determinant {restricted_gram(w, s.space).det()}")
            return d
        else:
            notes.append("torsion image is nondegenerate but the projection conditions fail")
    if hol is None:
        hol = holonomy(s, levi_civita_curvature(s, check=False))
    gens = hol.basis()
    res = find_splitting(gens, s.space)
    notes.extend(res.detail)
    if res.status == "split":
        w = res.witness
        return Decomposition(DECOMPOSABLE, w, perp(w, s.space), "holonomy-invariant", hol.dim, notes=notes)
    if res.status == "none":
        notes.append("no self-adjoint idempotent other than 0 and I commutes with the holonomy")
        return Decomposition(INDECOMPOSABLE, None, None, "holonomy-commutant", hol.dim, notes=notes)
    return Decomposition(UNKNOWN, None, None, "holonomy-commutant", hol.dim,
                         obstruction=res.obstruction, notes=notes)


def holonomy_preserves(hol: Holonomy, w: Subspace, s: NRStructure) -> bool:
    gens = hol.basis()
    return _invariant_under(gens, w) and _invariant_under(gens, perp(w, s.space))
