"""Passing between (m, g, T, R~) and a reductive Lie algebra g = m + h.

Brackets on m + h:

    [U, V] = UV - VU,   [U, X] = U(X),   [X, Y] = -T(X, Y) + R~(X, Y)

with h realised as the span of the curvature operators. Reading the split
back gives ``T(X,Y) = -[X,Y]_m`` and ``R~(X,Y) = ad([X,Y]_h)`` restricted
to m, so the two conversions are mutually inverse.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .exact_linalg import Matrix, is_zero_vector, solve_linear
from .lie_algebra import LieAlgebra, LieAlgebraError, ReductiveSplit
from .metric_space import MetricSpace, validate_metric
from .structure import CurvatureTensor, NRStructure, StructureError, TorsionTensor, _e, h_algebra, matrix_span


class HNotClosed(StructureError):
    pass


class NotReductive(LieAlgebraError):
    pass


class NotNaturallyReductive(LieAlgebraError):
    pass


def build_lie_algebra(s: NRStructure, h_basis: Sequence[Matrix] | None = None,
                      h_labels: Sequence[str] | None = None) -> ReductiveSplit:
    """Lie algebra on (m basis) ++ (h basis).

    ``h_basis`` may name a preferred basis of span{R~(X_i,X_j)}; it must
    span exactly that space.
    """
    n = s.dim
    hspace = matrix_span(s.curvature.operators(), n)
    if h_basis is None:
        h_basis = h_algebra(s)
    else:
        h_basis = list(h_basis)
        given = matrix_span(h_basis, n)
        if given.dim != len(h_basis) or given != hspace:
            raise StructureError("h_basis must be a basis of the span of the curvature operators")
    k = len(h_basis)
    if h_labels is None:
        h_labels = [f"H{a + 1}" for a in range(k)]
    labels = list(s.space.labels) + list(h_labels)
    dim = n + k

    def h_coords(m: Matrix):
        flat = m.flat()
        if not hspace.contains(flat):
            return None
        if not h_basis:
            return ()
        # solve sum c_a H_a = m
        basis_cols = Matrix.from_columns([h.flat() for h in h_basis])
        sol, _ = solve_linear(basis_cols, flat)
        return sol

    br = {}
    for i, j in itertools.combinations(range(n), 2):
        coords = h_coords(s.curvature.r[i][j])
        br[(i, j)] = tuple(-x for x in s.torsion.t[i][j]) + tuple(coords)
    for a, u in enumerate(h_basis):
        for j in range(n):
            br[(n + a, j)] = tuple(u.column(j)) + (Fraction(0),) * k
    for a, b in itertools.combinations(range(k), 2):
        coords = h_coords(h_basis[a].commutator(h_basis[b]))
        if coords is None:
            raise HNotClosed(f"[{h_labels[a]}, {h_labels[b]}] leaves the span of the curvature operators")
        br[(n + a, n + b)] = (Fraction(0),) * n + tuple(coords)
    g = LieAlgebra(dim, br, labels)
    return ReductiveSplit(g, tuple(range(n)), tuple(range(n, dim)), s.space)


def _ad_on_m(split: ReductiveSplit, v) -> Matrix:
    g = split.algebra
    cols = [split.m_part(g.bracket(v, g.e(i))) for i in split.m_indices]
    return Matrix.from_columns(cols)


def nr_from_split(split: ReductiveSplit) -> NRStructure:
    g, m, h = split.algebra, split.m_indices, split.h_indices
    space: MetricSpace = split.metric_on_m
    for a in h:
        for i in m:
            if not is_zero_vector(split.h_part(g.c[a][i])):
                raise NotReductive(f"[{g.labels[a]}, {g.labels[i]}] has an h-component")
    nm = len(m)
    tvals = {}
    rvals = {}
    for p, q in itertools.combinations(range(nm), 2):
        w = g.c[m[p]][m[q]]
        tvals[(p, q)] = tuple(-x for x in split.m_part(w))
        hw = [Fraction(0)] * g.dim
        for a in h:
            hw[a] = w[a]
        rvals[(p, q)] = _ad_on_m(split, hw)
    torsion = TorsionTensor(space, tvals)
    es = [_e(nm, i) for i in range(nm)]
    for i, j, k in itertools.product(range(nm), repeat=3):
        if space.inner(torsion.t[i][j], es[k]) + space.inner(es[j], torsion.t[i][k]) != 0:
            raise NotNaturallyReductive(
                f"<[{g.labels[m[i]]},{g.labels[m[j]]}]_m, {g.labels[m[k]]}> is not alternating")
    return NRStructure(space, torsion, CurvatureTensor(space, rvals))


def split_from_algebra(g: LieAlgebra, m_indices: Sequence[int], gram, labels=None) -> ReductiveSplit:
    m_indices = tuple(m_indices)
    h_indices = tuple(i for i in range(g.dim) if i not in m_indices)
    lab = labels or [g.labels[i] for i in m_indices]
    return ReductiveSplit(g, m_indices, h_indices, validate_metric(gram, lab))
