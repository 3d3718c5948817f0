"""Characteristic and minimal polynomials of rational matrices.

Coefficient lists are ascending: ``[c0, c1, ..., 1]`` means
``c0 + c1*x + ... + x^n``. Factoring and gcds go through sympy's ``Poly``
over ``QQ``.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

import sympy

from .exact_linalg import Matrix, Q, rref

X = sympy.Symbol("x")


def char_poly(m: Matrix) -> list[Fraction]:
    """det(x I - m) via Faddeev-LeVerrier."""
    n = m.nrows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = Matrix.zeros(n)
    eye = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ mk + eye.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(m @ mk).trace() / k
    return coeffs


def min_poly(m: Matrix) -> list[Fraction]:
    """Monic minimal polynomial: first power of m dependent on the lower ones.

    One RREF of the columns vec(I), vec(m), ..., vec(m^n): the first non-pivot
    column k gives m^k in terms of the pivots, which are exactly 0..k-1.
    """
    n = m.nrows
    powers = [Matrix.identity(n)]
    for _ in range(n):
        powers.append(powers[-1] @ m)
    red, piv = rref(Matrix.from_columns([p.flat() for p in powers]))
    k = next(c for c in range(n + 1) if c not in piv)
    return [-red.rows[i][k] for i in range(k)] + [Fraction(1)]


def to_sympy(coeffs) -> sympy.Poly:
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
                      X, domain="QQ")


def from_sympy(p: sympy.Poly) -> list[Fraction]:
    return [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]


def poly_at_matrix(coeffs, m: Matrix) -> Matrix:
    """Horner evaluation of an ascending coefficient list at a square matrix."""
    n = m.nrows
    out = Matrix.zeros(n)
    eye = Matrix.identity(n)
    for c in reversed(coeffs):
        out = out @ m + eye.scale(c)
    return out


def is_squarefree(coeffs) -> bool:
    p = to_sympy(coeffs)
    return sympy.gcd(p, p.diff(X)).degree() == 0


def squarefree_part(coeffs) -> list[Fraction]:
    p = to_sympy(coeffs)
    g = sympy.gcd(p, p.diff(X))
    return from_sympy(sympy.div(p, g)[0].monic())


def factor_rational(coeffs) -> list[tuple[list[Fraction], int]]:
    """Monic irreducible factors over Q with multiplicities."""
    _, facs = to_sympy(coeffs).factor_list()
    return [(from_sympy(f.monic()), k) for f, k in facs]


def real_cluster_count(irreducible) -> int:
    """Number of real-irreducible factors of a Q-irreducible polynomial.

    Each real root and each complex-conjugate pair counts as one cluster.
    """
    p = to_sympy(irreducible)
    d = p.degree()
    real = len(sympy.real_roots(p)) if d > 1 else d
    return real + (d - real) // 2


def rational_sqrt(x) -> Fraction | None:
    x = Q(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def format_poly(coeffs, var: str = "x") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        sign = "-" if c < 0 else "+"
        body = "" if (mag == 1 and k) else str(mag)
        if k:
            body += var if k == 1 else f"{var}^{k}"
        terms.append((sign, body))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f" {s} {b}" for s, b in terms[1:])
