#!/usr/bin/env python3
"""
The one-generator families are sl(2,R) + R^2 in disguise.

For sl_lorentz and sl_neutral we read lambda off the intrinsic curvature,
change basis in the 5-dimensional algebra g = m + h and compare the
structure constants with the sl(2,R) + R^2 pattern. We also check that the
families built directly from the sl(2,R) basis coincide with them.
"""
from fractions import Fraction as F

from nrspaces import holonomy, make_family, match_brackets, structure_to_json
from nrspaces.catalog import (sl_lorentz_pattern, sl_lorentz_reduction, sl_neutral_pattern,
                              sl_neutral_reduction)
from nrspaces.exact_linalg import format_rational as fr


def print_brackets(g):
    for (i, j), v in sorted(g.brackets().items()):
        rhs = " + ".join(f"{fr(x)} {g.labels[k]}" for k, x in enumerate(v) if x)
        print(f"    [{g.labels[i]}, {g.labels[j]}] = {rhs}")


def lorentz(c, eta, alpha):
    c, eta = F(c), F(eta)
    inst = make_family("sl_lorentz", c=c, eta=eta, alpha=alpha)
    lam = inst.structure.curvature.r[2][3][2, 3]
    pattern = sl_lorentz_pattern(lam)
    ok = match_brackets(inst.split.algebra, pattern, sl_lorentz_reduction(c, eta, lam))
    print(f"sl_lorentz c={fr(c)} eta={fr(eta)} alpha={fr(F(alpha))}: lambda = {fr(lam)}, "
          f"holonomy dim {holonomy(inst.structure).dim}")
    print("  brackets in the basis Y1, X3, X4, T1, T2:")
    print_brackets(pattern)
    print("  matches:", ok)


def neutral(b, eta, alpha):
    b, eta = F(b), F(eta)
    inst = make_family("sl_neutral", b=b, eta=eta, alpha=alpha)
    lam = inst.structure.curvature.r[1][3][1, 3]
    ok = match_brackets(inst.split.algebra, sl_neutral_pattern(lam), sl_neutral_reduction(b, eta, lam))
    print(f"sl_neutral b={fr(b)} eta={fr(eta)} alpha={fr(F(alpha))}: lambda = {fr(lam)}, matches: {ok}")


if __name__ == "__main__":
    lorentz(1, 1, 3)
    lorentz(F(-1, 2), -1, F(2, 5))
    neutral(2, 1, -1)
    neutral(1, -1, F(1, 7))
    print()
    for lam in (1, F(-2, 3)):
        same_l = structure_to_json(make_family("loren1", **{"lambda": lam}).structure) == \
            structure_to_json(make_family("sl_lorentz", c=1, eta=1, alpha=lam).structure)
        same_n = structure_to_json(make_family("dosdos1", **{"lambda": lam}).structure) == \
            structure_to_json(make_family("sl_neutral", b=1, eta=1, alpha=lam).structure)
        print(f"lambda={fr(F(lam))}: loren1 == sl_lorentz(1,1,lambda): {same_l};  "
              f"dosdos1 == sl_neutral(1,1,lambda): {same_n}")
