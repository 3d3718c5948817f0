"""Nondegenerate invariant subspaces of a family of skew-adjoint operators.

A proper nondegenerate subspace W invariant under every generator exists iff
the self-adjoint part S of the commutant contains an idempotent other than
0 and I (the orthogonal projector onto W). S is a linear space closed under
squaring. If some x in S has at least two real spectral clusters, a
spectral projector of x is such an idempotent; conversely that projector is
itself an element with two clusters. So the question reduces to whether
every element of S has a single cluster (one real eigenvalue, or one
complex-conjugate pair). That is a polynomial identity in the coordinates
of a generic element, which we decide exactly in a polynomial ring.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from sympy import QQ
from sympy.polys.rings import ring

from .exact_linalg import Matrix, Subspace, image, nullspace, vcomb
from .metric_space import MetricSpace, signature
from .polynomials import (factor_rational, from_sympy, min_poly, poly_at_matrix, real_cluster_count,
                          squarefree_part, to_sympy)
import sympy


@dataclass
class Splitting:
    """Outcome of the invariant-subspace search.

    ``status`` is ``"split"`` (``projector``/``witness`` set), ``"none"``
    (proved: no proper nondegenerate invariant subspace) or ``"unknown"``
    (a splitting exists only over an irrational extension; ``obstruction``
    holds the polynomial).
    """

    status: str
    commutant_dim: int
    projector: Matrix | None = None
    witness: Subspace | None = None
    obstruction: list | None = None
    detail: list = field(default_factory=list)


def self_adjoint_commutant(generators: Sequence[Matrix], space: MetricSpace) -> list[Matrix]:
    """Basis of {P : P H = H P for all H, G P symmetric}."""
    n = space.dim
    g = space.gram
    rows = []
    # unknown P flattened row-major: P[a][b] -> index a*n+b
    for h in generators:
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[i * n + k] += h[k, j]  # (P H)_ij
                    row[k * n + j] -= h[i, k]  # (H P)_ij
                rows.append(row)
    for i in range(n):
        for j in range(i + 1, n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[k * n + j] += g[i, k]  # (G P)_ij
                row[k * n + i] -= g[j, k]  # (G P)_ji
            rows.append(row)
    if not rows:
        rows = [[Fraction(0)] * (n * n)]
    basis = nullspace(Matrix(rows))
    return [Matrix.from_flat(v, n) for v in basis]


def _generic_char_poly(basis: Sequence[Matrix]):
    m = len(basis)
    n = basis[0].nrows
    R, *ts = ring(",".join(f"t{i}" for i in range(m)), QQ)
    entries = [[sum((ts[k] * QQ(b[i, j].numerator, b[i, j].denominator)
                     for k, b in enumerate(basis) if b[i, j]), R.zero)
                for j in range(n)] for i in range(n)]

    def mul(a, b):
        return [[sum((a[i][k] * b[k][j] for k in range(n)), R.zero) for j in range(n)]
                for i in range(n)]

    coeffs = [R.zero] * (n + 1)
    coeffs[n] = R.one
    mk = [[R.zero] * n for _ in range(n)]
    for k in range(1, n + 1):
        mk = mul(entries, mk)
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        am = mul(entries, mk)
        coeffs[n - k] = -sum((am[i][i] for i in range(n)), R.zero) * QQ(1, k)
    return R, ts, coeffs


def _single_cluster_everywhere(basis: Sequence[Matrix]) -> tuple[bool, list | None]:
    """Decide whether every element of span(basis) has one spectral cluster.

    Returns ``(verdict, hint)`` where ``hint`` is a coordinate vector of an
    element with several clusters when the verdict is False and one is easy
    to name (positive direction of the discriminant form).
    """
    n = basis[0].nrows
    R, ts, chi = _generic_char_poly(basis)
    m = len(ts)
    tr = -chi[n - 1]
    if n % 2:
        a = tr * QQ(1, n)
        target = [R.zero] * (n + 1)
        for j in range(n + 1):  # (x - a)^n
            target[j] = comb(n, j) * (-a) ** (n - j)
        return all(c == t for c, t in zip(chi, target)), None
    k = n // 2
    p = tr * QQ(1, k)
    e2 = chi[n - 2]
    q = (e2 - comb(k, 2) * p ** 2) * QQ(1, k)
    # (x^2 - p x + q)^k coefficient-wise
    quad = [q, -p, R.one]
    target = [R.one]
    for _ in range(k):
        nxt = [R.zero] * (len(target) + 2)
        for i, u in enumerate(target):
            for j, v in enumerate(quad):
                nxt[i + j] += u * v
        target = nxt
    if any(c != t for c, t in zip(chi, target)):
        return False, None
    disc = p ** 2 - 4 * q
    # disc is a quadratic form in t; read off its symmetric matrix
    form = [[Fraction(0)] * m for _ in range(m)]
    for mono, c in disc.terms():
        idx = [i for i, e in enumerate(mono) for _ in range(e)]
        c = Fraction(int(c.numerator), int(c.denominator))
        if len(idx) != 2:
            continue
        i, j = idx
        if i == j:
            form[i][i] += c
        else:
            form[i][j] += c / 2
            form[j][i] += c / 2
    fm = Matrix(form)
    if signature(fm)[1] == 0:
        return True, None
    return False, _positive_direction(fm)


def _positive_direction(form: Matrix) -> list[Fraction]:
    m = form.nrows
    for i in range(m):
        if form[i, i] > 0:
            return [Fraction(int(j == i)) for j in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            for s in (1, -1):
                v = [Fraction(0)] * m
                v[i], v[j] = Fraction(1), Fraction(s)
                if form[i, i] + 2 * s * form[i, j] + form[j, j] > 0:
                    return v
    return [Fraction(1)] * m


def _candidates(basis, hint, limit: int = 3):
    m = len(basis)
    if hint is not None:
        yield hint
    for i in range(m):
        yield [Fraction(int(j == i)) for j in range(m)]
    for r in range(1, limit + 1):
        for t in itertools.product(range(-r, r + 1), repeat=m):
            if max(abs(x) for x in t) == r:
                yield [Fraction(x) for x in t]


def _spectral_projector(x: Matrix):
    """Rational spectral projector of x onto one Q-cluster, or an obstruction."""
    mp = min_poly(x)
    sf = squarefree_part(mp)
    facs = factor_rational(sf)
    if len(facs) >= 2:
        f = facs[0][0]
        mpoly = to_sympy(mp)
        fpow = to_sympy(f)
        while sympy.div(mpoly, fpow * to_sympy(f))[1].is_zero:
            fpow = fpow * to_sympy(f)
        rest = sympy.div(mpoly, fpow)[0]
        s, t, h = sympy.gcdex(fpow, rest)
        e = poly_at_matrix(from_sympy((t * rest).rem(mpoly)), x)
        return e, None
    (f, _), = facs
    if real_cluster_count(f) >= 2:
        return None, f
    return None, None


def find_splitting(generators: Sequence[Matrix], space: MetricSpace) -> Splitting:
    """Search for a proper nondegenerate subspace invariant under all generators."""
    n = space.dim
    basis = self_adjoint_commutant(generators, space)
    res = Splitting("none", len(basis))
    if n <= 1:
        res.detail.append("dimension <= 1: nothing to split")
        return res
    single, hint = _single_cluster_everywhere(basis)
    if single:
        res.detail.append("every self-adjoint commuting operator has a single spectral cluster")
        return res
    obstruction = None
    for coords in _candidates(basis, hint):
        x = Matrix.from_flat(vcomb(coords, [b.flat() for b in basis], n * n), n)
        e, obs = _spectral_projector(x)
        if e is not None:
            w = image(e)
            if 0 < w.dim < n:
                res.status = "split"
                res.projector = e
                res.witness = w
                return res
        if obs is not None and obstruction is None:
            obstruction = obs
    res.status = "unknown"
    res.obstruction = obstruction
    res.detail.append("a splitting exists but no rational spectral projector was found")
    return res
