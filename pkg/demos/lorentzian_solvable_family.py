#!/usr/bin/env python3
"""
Walk through the 4-parameter Lorentzian family ``loren2(c, alpha, beta, delta)``.

The family lives on a 6-dimensional solvable Lie algebra g = m + h with
h = span{A, B}. For each parameter choice we print the reductive data, the
Levi-Civita curvature on the pair (X1, X3), one entry of nabla R, and the
holonomy and decomposability verdicts. A sweep at the end shows where the
space is flat or locally symmetric.

Run:  python3 demos/lorentzian_solvable_family.py
"""
from __future__ import annotations

import itertools
from fractions import Fraction as F

from nrspaces import (classify_geometry, covariant_derivative_R, decompose, derived_series, holonomy,
                      levi_civita_curvature, make_family)
from nrspaces.catalog import LOREN2_A, LOREN2_B
from nrspaces.exact_linalg import format_rational as fr

BAR = "-" * 72


def show_vector(v, labels=("X1", "X2", "X3", "X4")) -> str:
    terms = [f"{fr(x)} {l}" for x, l in zip(v, labels) if x]
    return " + ".join(terms) if terms else "0"


def coefficients_in_ab(m):
    """Write m = a A + b B (both generators have an entry 1 in position (0, 2) / (0, 3))."""
    a, b = m[0, 2], m[0, 3]
    assert m == LOREN2_A.scale(a) + LOREN2_B.scale(b)
    return a, b


def report(c, alpha, beta, delta):
    inst = make_family("loren2", c=c, alpha=alpha, beta=beta, delta=delta)
    s = inst.structure
    print(BAR)
    print(f"loren2  c={fr(F(c))}  alpha={fr(F(alpha))}  beta={fr(F(beta))}  delta={fr(F(delta))}")
    print(BAR)
    g = inst.split.algebra
    print("brackets of g (m = X1..X4, h = A, B):")
    for (i, j), v in sorted(g.brackets().items()):
        print(f"  [{g.labels[i]}, {g.labels[j]}] = {show_vector(v, g.labels)}")
    print("derived series dims:", derived_series(g))

    r = levi_civita_curvature(s)
    a, b = coefficients_in_ab(r.r[0][2])
    print(f"R(X1, X3) = {fr(a)} A + {fr(b)} B")
    nabla = covariant_derivative_R(s)
    print(f"(nabla_X1 R)(X1, X3) X1 = {show_vector(nabla(0, 0, 2, 0))}")

    geo = classify_geometry(s)
    hol = holonomy(s, r)
    dec = decompose(s, hol)
    print(f"flat={geo.flat}  locally_symmetric={geo.locally_symmetric}  ({geo.reason})")
    print(f"holonomy dim {hol.dim};  verdict: {dec.verdict} via {dec.method}")
    print()


def sweep(c):
    q = F(c * c, 4)
    values = (0, q, 1, 2)
    print(BAR)
    print(f"flat / locally symmetric points for c = {c}  (q = c^2/4 = {fr(q)})")
    print(BAR)
    for alpha, beta, delta in itertools.product(values, repeat=3):
        geo = classify_geometry(make_family("loren2", c=c, alpha=alpha, beta=beta, delta=delta).structure)
        if geo.locally_symmetric:
            tag = "flat" if geo.flat else "symmetric"
            print(f"  alpha={fr(F(alpha)):>4}  beta={fr(F(beta)):>4}  delta={fr(F(delta)):>4}  -> {tag}")
    print()


if __name__ == "__main__":
    report(1, 1, 0, 2)
    report(2, F(1, 3), -1, 5)
    report(2, 1, 0, 1)
    sweep(1)
