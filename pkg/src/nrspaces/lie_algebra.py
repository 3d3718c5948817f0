"""Lie algebras given by rational structure constants."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exact_linalg import Matrix, Q, Subspace, full_space, is_zero_vector, span, unit_vector, vadd, vcomb
from .metric_space import MetricSpace


class LieAlgebraError(ValueError):
    pass


class Singular(LieAlgebraError):
    pass


class LieAlgebra:
    """Structure constants ``[e_i, e_j] = sum_k c[i][j][k] e_k``.

    Built from the entries with ``i < j``; the table is extended by
    antisymmetry so the bracket is alternating by construction.
    """

    __slots__ = ("dim", "labels", "c")

    def __init__(self, dim: int, brackets: Mapping[tuple[int, int], Sequence] | None = None,
                 labels: Sequence[str] | None = None):
        self.dim = dim
        self.labels = tuple(labels) if labels else tuple(f"e{i + 1}" for i in range(dim))
        if len(self.labels) != dim:
            raise LieAlgebraError("one label per basis element required")
        zero = (Fraction(0),) * dim
        table = [[zero] * dim for _ in range(dim)]
        for (i, j), v in (brackets or {}).items():
            v = tuple(Q(x) for x in v)
            if len(v) != dim:
                raise LieAlgebraError(f"bracket [{i},{j}] has the wrong length")
            if i == j:
                if not is_zero_vector(v):
                    raise LieAlgebraError("[e_i, e_i] must vanish")
                continue
            if i > j:
                i, j, v = j, i, tuple(-x for x in v)
            table[i][j] = v
            table[j][i] = tuple(-x for x in v)
        self.c = tuple(tuple(r) for r in table)

    @classmethod
    def from_named(cls, labels: Sequence[str], table: Mapping[tuple[str, str], Mapping[str, object]]):
        """Build from ``{("A", "X1"): {"X3": 1}, ...}``."""
        idx = {l: i for i, l in enumerate(labels)}
        n = len(labels)
        br: dict = {}
        for (a, b), val in table.items():
            v = [Fraction(0)] * n
            for lab, coef in val.items():
                v[idx[lab]] += Q(coef)
            i, j = idx[a], idx[b]
            if i > j:
                i, j, v = j, i, [-x for x in v]
            if (i, j) in br and tuple(br[(i, j)]) != tuple(v):
                raise LieAlgebraError(f"conflicting values for [{a},{b}]")
            br[(i, j)] = tuple(v)
        return cls(n, br, labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self.c == other.c

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, labels={self.labels})"

    def brackets(self) -> dict:
        """Nonzero entries with i < j."""
        return {(i, j): self.c[i][j] for i in range(self.dim) for j in range(i + 1, self.dim)
                if not is_zero_vector(self.c[i][j])}

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b or i == j:
                    continue
                w = self.c[i][j]
                ab = a * b
                for k in range(self.dim):
                    if w[k]:
                        out[k] += ab * w[k]
        return tuple(out)

    def e(self, i: int) -> tuple:
        return unit_vector(self.dim, i)

    def ad(self, u: Sequence) -> Matrix:
        return Matrix.from_columns([self.bracket(u, self.e(j)) for j in range(self.dim)])

    def is_abelian(self) -> bool:
        return not self.brackets()


def jacobi_check(g: LieAlgebra) -> tuple[bool, tuple | None]:
    """(True, None) or (False, first failing index triple i<j<k)."""
    n = g.dim
    for i, j, k in itertools.combinations(range(n), 3):
        x, y, z = g.e(i), g.e(j), g.e(k)
        s = vadd(vadd(g.bracket(x, g.bracket(y, z)), g.bracket(y, g.bracket(z, x))),
                 g.bracket(z, g.bracket(x, y)))
        if not is_zero_vector(s):
            return False, (i, j, k)
    return True, None


def change_basis(g: LieAlgebra, p: Matrix, labels: Sequence[str] | None = None) -> LieAlgebra:
    """Constants in the basis ``e'_i = sum_j p[j][i] e_j`` (columns of p)."""
    if p.shape != (g.dim, g.dim):
        raise LieAlgebraError("basis change must be dim x dim")
    try:
        pinv = p.inverse()
    except ZeroDivisionError:
        raise Singular("basis change matrix is singular") from None
    cols = p.columns()
    br = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            br[(i, j)] = pinv @ g.bracket(cols[i], cols[j])
    return LieAlgebra(g.dim, br, labels or g.labels)


def bracket_span(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    return span([g.bracket(u, v) for u in a.basis for v in b.basis], g.dim)


def derived_series(g: LieAlgebra) -> list[int]:
    cur = full_space(g.dim)
    dims = [cur.dim]
    while cur.dim:
        nxt = bracket_span(g, cur, cur)
        if nxt.dim == cur.dim:
            break
        cur = nxt
        dims.append(cur.dim)
    return dims


def lower_central_series(g: LieAlgebra) -> list[int]:
    whole = full_space(g.dim)
    cur = whole
    dims = [cur.dim]
    while cur.dim:
        nxt = bracket_span(g, whole, cur)
        if nxt.dim == cur.dim:
            break
        cur = nxt
        dims.append(cur.dim)
    return dims


def is_solvable(g: LieAlgebra) -> bool:
    return derived_series(g)[-1] == 0


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1] == 0


def is_ideal(g: LieAlgebra, candidate: Subspace) -> bool:
    return candidate.contains_subspace(bracket_span(g, full_space(g.dim), candidate))


def is_nilpotent_ideal(g: LieAlgebra, candidate: Subspace) -> bool:
    if candidate.dim == 0:
        return True
    if not is_ideal(g, candidate):
        return False
    cur = candidate
    while cur.dim:
        nxt = bracket_span(g, candidate, cur)
        if nxt.dim == cur.dim:
            return False
        cur = nxt
    return True


def generated_ideal(g: LieAlgebra, vectors: Sequence[Sequence]) -> Subspace:
    whole = full_space(g.dim)
    cur = span(vectors, g.dim)
    while True:
        nxt = cur + bracket_span(g, whole, cur)
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def nilradical_search(g: LieAlgebra) -> Subspace:
    """Largest nilpotent ideal among those generated by [g,g] plus basis vectors.

    For a solvable algebra the nilradical contains [g,g], so adding subsets
    of basis vectors to the derived algebra covers the candidates needed in
    small dimension. Exhaustive over subsets (dim <= 8 is cheap).
    """
    whole = full_space(g.dim)
    derived = bracket_span(g, whole, whole)
    best = span([], g.dim) if not is_nilpotent_ideal(g, derived) else derived
    for r in range(1, g.dim + 1):
        for subset in itertools.combinations(range(g.dim), r):
            cand = generated_ideal(g, list(derived.basis) + [g.e(i) for i in subset])
            if cand.dim > best.dim and is_nilpotent_ideal(g, cand):
                best = cand
    return best


def subalgebra_is_abelian(g: LieAlgebra, sub: Subspace) -> bool:
    return bracket_span(g, sub, sub).dim == 0


def match_brackets(g: LieAlgebra, pattern: LieAlgebra, basis_map: Matrix) -> bool:
    """True iff g in the basis given by ``basis_map`` has exactly pattern's constants."""
    if g.dim != pattern.dim:
        return False
    return change_basis(g, basis_map).c == pattern.c


@dataclass(frozen=True)
class ReductiveSplit:
    """g = h + m with the metric on m; m_indices/h_indices partition the basis."""

    algebra: LieAlgebra
    m_indices: tuple
    h_indices: tuple
    metric_on_m: MetricSpace

    def __post_init__(self):
        if sorted(self.m_indices + self.h_indices) != list(range(self.algebra.dim)):
            raise LieAlgebraError("m and h indices must partition the basis")
        if self.metric_on_m.dim != len(self.m_indices):
            raise LieAlgebraError("metric dimension must equal dim m")

    def lift_m(self, v: Sequence) -> tuple:
        out = [Fraction(0)] * self.algebra.dim
        for k, i in enumerate(self.m_indices):
            out[i] = Q(v[k])
        return tuple(out)

    def m_part(self, v: Sequence) -> tuple:
        return tuple(v[i] for i in self.m_indices)

    def h_part(self, v: Sequence) -> tuple:
        return tuple(v[i] for i in self.h_indices)

    def subalgebra_ok(self) -> bool:
        g, h = self.algebra, self.h_indices
        return all(is_zero_vector(self.m_part(g.c[i][j])) for i in h for j in h)

    def reductive_ok(self) -> bool:
        g = self.algebra
        return all(is_zero_vector(self.h_part(g.c[i][j])) for i in self.h_indices
                   for j in self.m_indices)


def abelian(dim: int, labels: Sequence[str] | None = None) -> LieAlgebra:
    return LieAlgebra(dim, {}, labels)


def combine(g: LieAlgebra, coeffs: Sequence, vectors: Sequence[Sequence]) -> tuple:
    return vcomb(coeffs, vectors, g.dim)
