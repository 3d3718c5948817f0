#!/usr/bin/env python3
"""
Normal forms of skew-adjoint operators on R^4 with a Lorentzian or neutral metric.

Each reference operator is classified, then conjugated by random isometries
(Cayley transforms of random skew operators) to show that the tag only
depends on the conjugacy class. The last block shows an operator whose
squared eigenvalues are irrational: the tag keeps the quadratic they solve.
"""
import random
from fractions import Fraction as F

from nrspaces.exact_linalg import Matrix, format_rational as fr
from nrspaces.metric_space import lorentz_space, neutral_space, random_isometry, witt_space
from nrspaces.normal_forms import (IrrationalInvariant, classify, classify_lorentz, lorentz_a1, lorentz_b,
                                   neutral_a1, neutral_a2, neutral_a3, neutral_b1, neutral_b2, neutral_b3)

LOR, NEU, WITT = lorentz_space(), neutral_space(), witt_space()

REFERENCE = [
    ("A1 (null rotation)", lorentz_a1(), LOR),
    ("2 A2 + 1/3 A3", lorentz_b(2, F(1, 3)), LOR),
    ("neutral nilpotent", neutral_a1(), NEU),
    ("two rotations", neutral_a2(1, 2), NEU),
    ("two boosts", neutral_a3(3, 1), NEU),
    ("Witt, repeated +-i", neutral_b1(1), WITT),
    ("Witt, nilpotent index 2", neutral_b1(0), WITT),
    ("Witt, repeated +-1/2", neutral_b2(F(1, 2)), WITT),
    ("Witt, +-1 +- 2i", neutral_b3(1, 2), WITT),
]


def describe(tag):
    params = ", ".join(f"{k}={fr(v)}" for k, v in tag.parameters.items() if not isinstance(v, tuple))
    cp = " ".join(fr(c) for c in tag.char_poly)
    extra = f"  nilpotent index {tag.nilpotency_index}" if tag.nilpotency_index else ""
    return f"{tag.family:<7} {params:<26} char poly (ascending) [{cp}]{extra}"


def main(trials=25, seed=2024):
    rng = random.Random(seed)
    print(f"{'operator':<26} tag")
    for name, a, space in REFERENCE:
        tag = classify(a, space)
        stable = all(classify(q.inverse() @ a @ q, space) == tag
                     for q in (random_isometry(space, rng, 3, 3) for _ in range(trials)))
        print(f"{name:<26} {describe(tag)}   stable under {trials} conjugations: {stable}")

    print()
    a = lorentz_b(1, 1) + Matrix([[0, 0, 1, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]])
    tag = classify_lorentz(a, LOR)
    c0, c2, _ = tag.parameters["u_poly"]
    print(f"irrational case: {tag.family}, alpha^2 and -beta^2 are the roots of u^2 + ({fr(c2)}) u + ({fr(c0)})")
    try:
        classify_lorentz(a, LOR, require_rational=True)
    except IrrationalInvariant as exc:
        print("with require_rational=True:", exc)


if __name__ == "__main__":
    main()
