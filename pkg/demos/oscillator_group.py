#!/usr/bin/env python3
"""
The oscillator group with its eps-family of Lorentzian metrics.

Basis (P, X, Y, Q), brackets [X,Y] = P, [Q,X] = Y, [Q,Y] = -X. We compare
the curvature value R~(X,Y) = -eps Y, 3 eps X (which is not skew-adjoint)
with the one recovered from the Levi-Civita curvature, then decide
decomposability as eps varies. W = span{P, X, Y} is the torsion image; it
degenerates exactly at eps = 0.
"""
from fractions import Fraction as F

from nrspaces import classify_geometry, decompose, holonomy, make_family, validate_structure
from nrspaces.exact_linalg import format_rational as fr
from nrspaces.metric_space import restricted_gram, signature


def main():
    print(f"{'eps':>5} {'sig':>6} {'det W':>6} {'stated R~ skew?':>16} {'hol':>4} {'loc.sym':>8}  verdict")
    for eps in (F(-1, 2), F(-1, 5), F(0), F(1, 3), F(1, 2), F(4, 5)):
        inst = make_family("oscillator", eps=eps)
        s = inst.structure
        stated = inst.extras["stated_structure"]
        skew_ok = validate_structure(stated).check("curvature_skew").ok
        det = restricted_gram(inst.extras["W"], s.space).det()
        geo = classify_geometry(s)
        d = decompose(s)
        print(f"{fr(eps):>5} {str(signature(s.space.gram)):>6} {fr(det):>6} {str(skew_ok):>16} "
              f"{holonomy(s).dim:>4} {str(geo.locally_symmetric):>8}  {d.verdict} ({d.method})")
    inst = make_family("oscillator", eps=F(1, 2))
    print()
    print("eps = 1/2, derived R~(X, Y) =", inst.structure.curvature.r[1][2])
    print("eps = 1/2, stated  R~(X, Y) =", inst.extras["stated_structure"].curvature.r[1][2])


if __name__ == "__main__":
    main()
