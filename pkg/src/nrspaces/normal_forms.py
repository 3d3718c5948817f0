"""Normal-form types of skew-adjoint operators in dimension four.

Classification uses conjugation invariants only: the characteristic and
minimal polynomials and the ranks of powers. A skew-adjoint operator has an
even characteristic polynomial ``x^4 + c2 x^2 + c0``; writing ``u = x^2``
the two u-roots carry all the sign information through Vieta
(``u1 u2 = c0``, ``u1 + u2 = -c2``), so no square root is ever needed to
decide the family. Parameters are stored squared; when even the squares are
irrational the tag carries the u-polynomial instead.

Lorentzian families (metric of signature (1,3)):

* ``Lor_a``: nonzero nilpotent, index 3.
* ``Lor_b``: ``alpha A2 + beta A3``; u-roots ``alpha^2 >= 0`` and ``-beta^2 <= 0``.

Neutral families (signature (2,2)): reducible ``Neu_a1`` (nilpotent,
index 3), ``Neu_a2`` (rotations in two definite planes), ``Neu_a3`` (boosts
in two Lorentzian planes); irreducible ``Neu_b1`` (repeated ``+-i nu``,
not semisimple; at ``nu = 0`` nilpotent of index 2), ``Neu_b2`` (repeated
``+-lambda``, not semisimple), ``Neu_b3`` (``+-xi +- i nu``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact_linalg import Matrix, kernel
from .metric_space import Endomorphism, MetricSpace, is_skew_adjoint, restricted_gram, signature
from .polynomials import char_poly, is_squarefree, min_poly, rational_sqrt

FAMILIES = ("Zero", "Lor_a", "Lor_b", "Neu_a1", "Neu_a2", "Neu_a3", "Neu_b1", "Neu_b2", "Neu_b3")
REDUCIBLE = {"Neu_a1": True, "Neu_a2": True, "Neu_a3": True,
             "Neu_b1": False, "Neu_b2": False, "Neu_b3": False}


class NormalFormError(ValueError):
    pass


class NotSkew(NormalFormError):
    pass


class WrongSignature(NormalFormError):
    pass


class IrrationalInvariant(NormalFormError):
    """Raised under ``require_rational=True`` when only the u-polynomial is known."""

    def __init__(self, message, u_poly):
        super().__init__(message)
        self.u_poly = u_poly


@dataclass(frozen=True)
class NormalFormTag:
    family: str
    parameters: dict
    char_poly: tuple
    nilpotency_index: int | None = None
    notes: tuple = field(default=())

    @property
    def reducible(self) -> bool | None:
        return REDUCIBLE.get(self.family)


@dataclass(frozen=True)
class Invariants:
    char_poly: tuple
    min_poly: tuple
    ranks: tuple


def conjugation_invariants(a) -> Invariants:
    m = a.mat if isinstance(a, Endomorphism) else a
    if not m.is_square():
        raise ValueError("square matrix required")
    ranks = []
    p = m
    for _ in range(max(m.nrows, 4)):
        ranks.append(p.rank())
        p = p @ m
    return Invariants(tuple(char_poly(m)), tuple(min_poly(m)), tuple(ranks))


def _unpack(a, space):
    if isinstance(a, Endomorphism):
        return a.mat, a.space
    if space is None:
        raise TypeError("a MetricSpace is required with a bare matrix")
    return a, space


def _prepare(a, space, expected):
    mat, space = _unpack(a, space)
    if space.dim != 4 or signature(space.gram) != expected:
        raise WrongSignature(f"expected a 4-dimensional space of signature {expected}, "
                             f"got {signature(space.gram)}")
    if not is_skew_adjoint(mat, space):
        raise NotSkew("operator is not skew-adjoint for this metric")
    inv = conjugation_invariants(mat)
    cp = inv.char_poly
    assert cp[1] == 0 and cp[3] == 0  # skew-adjoint => even polynomial
    return mat, space, inv, cp[2], cp[0]


def _nil_index(inv: Invariants) -> int:
    return len(inv.min_poly) - 1


def _u_roots(c2, c0):
    """Rational u-roots of u^2 + c2 u + c0 (ascending), or None."""
    r = rational_sqrt(c2 * c2 - 4 * c0)
    if r is None:
        return None
    return ((-c2 - r) / 2, (-c2 + r) / 2)


def _classify_lorentz(a, space):
    mat, space, inv, c2, c0 = _prepare(a, space, (1, 3))
    cp = inv.char_poly
    if mat.is_zero():
        return NormalFormTag("Zero", {}, cp)
    if c2 == 0 and c0 == 0:
        idx = _nil_index(inv)
        if idx != 3:
            raise NormalFormError(f"skew nilpotent of index {idx} in signature (1,3)")
        return NormalFormTag("Lor_a", {}, cp, idx)
    roots = _u_roots(c2, c0)
    if roots is None:
        return NormalFormTag("Lor_b", {"u_poly": (c0, c2, Fraction(1))}, cp,
                             notes=("alpha^2, beta^2 irrational; u-polynomial stored",))
    lo, hi = roots
    return NormalFormTag("Lor_b", {"alpha_sq": hi, "beta_sq": -lo}, cp)


def _plane_is_negative(mat: Matrix, space: MetricSpace, u) -> bool:
    n = mat.nrows
    w = kernel(mat @ mat - Matrix.identity(n).scale(u))
    return signature(restricted_gram(w, space)) == (w.dim, 0)


def _classify_neutral(a, space):
    mat, space, inv, c2, c0 = _prepare(a, space, (2, 2))
    cp = inv.char_poly
    if mat.is_zero():
        return NormalFormTag("Zero", {}, cp)
    if c2 == 0 and c0 == 0:
        idx = _nil_index(inv)
        if idx == 3:
            return NormalFormTag("Neu_a1", {}, cp, 3)
        if idx == 2:
            return NormalFormTag("Neu_b1", {"nu_sq": Fraction(0)}, cp, 2,
                                 notes=("nu = 0 boundary: nilpotent of index 2, irreducible",))
        raise NormalFormError(f"skew nilpotent of index {idx} in signature (2,2)")
    disc = c2 * c2 - 4 * c0
    if disc < 0:
        r = rational_sqrt(c0)
        if r is None:
            return NormalFormTag("Neu_b3", {"u_poly": (c0, c2, Fraction(1))}, cp,
                                 notes=("xi^2, nu^2 irrational; u-polynomial stored",))
        # (x^2 + 2(nu^2 - xi^2) x^2 ...) : xi^2 + nu^2 = sqrt(c0), nu^2 - xi^2 = c2/2
        return NormalFormTag("Neu_b3", {"xi_sq": (r - c2 / 2) / 2, "nu_sq": (r + c2 / 2) / 2}, cp)
    if c0 < 0:
        raise NormalFormError("u-roots of opposite sign cannot occur for a skew operator in (2,2)")
    semisimple = is_squarefree(inv.min_poly)
    roots = _u_roots(c2, c0)
    if c2 > 0:  # both u-roots <= 0: rotations
        if not semisimple:
            return NormalFormTag("Neu_b1", {"nu_sq": c2 / 2}, cp)
        if roots is None:
            return NormalFormTag("Neu_a2", {"u_poly": (c0, c2, Fraction(1))}, cp)
        lo, hi = roots
        if lo == hi:
            return NormalFormTag("Neu_a2", {"alpha_sq": -lo, "beta_sq": -lo}, cp)
        # alpha rotates the negative-definite plane
        if _plane_is_negative(mat, space, hi):
            return NormalFormTag("Neu_a2", {"alpha_sq": -hi, "beta_sq": -lo}, cp)
        return NormalFormTag("Neu_a2", {"alpha_sq": -lo, "beta_sq": -hi}, cp)
    # both u-roots >= 0: boosts
    if not semisimple:
        return NormalFormTag("Neu_b2", {"lambda_sq": -c2 / 2}, cp)
    if roots is None:
        return NormalFormTag("Neu_a3", {"u_poly": (c0, c2, Fraction(1))}, cp)
    lo, hi = roots
    # the two Lorentzian planes are exchanged by an isometry; order alpha^2 >= beta^2
    return NormalFormTag("Neu_a3", {"alpha_sq": hi, "beta_sq": lo}, cp)


def _checked(tag: NormalFormTag, require_rational: bool) -> NormalFormTag:
    if require_rational and "u_poly" in tag.parameters:
        raise IrrationalInvariant(f"{tag.family} parameters are irrational", tag.parameters["u_poly"])
    return tag


def classify_lorentz(a, space: MetricSpace | None = None, *,
                     require_rational: bool = False) -> NormalFormTag:
    return _checked(_classify_lorentz(a, space), require_rational)


def classify_neutral(a, space: MetricSpace | None = None, *,
                     require_rational: bool = False) -> NormalFormTag:
    return _checked(_classify_neutral(a, space), require_rational)


def classify(a, space: MetricSpace | None = None) -> NormalFormTag:
    """Dispatch on the signature of the space."""
    mat, space = _unpack(a, space)
    sig = signature(space.gram)
    if sig == (1, 3):
        return classify_lorentz(mat, space)
    if sig == (2, 2):
        return classify_neutral(mat, space)
    raise WrongSignature(f"no normal forms for signature {sig}")


def lor_b_char_poly(alpha_sq, beta_sq) -> tuple:
    """x^4 + (beta^2 - alpha^2) x^2 - alpha^2 beta^2, ascending."""
    return (-alpha_sq * beta_sq, Fraction(0), beta_sq - alpha_sq, Fraction(0), Fraction(1))


# Reference matrices, column convention: column j holds the image of X_j.

def lorentz_a1(sign: int = 1) -> Matrix:
    return Matrix([[0, 0, 1, 0], [0, 0, 1, 0], [1, -1, 0, 0], [0, 0, 0, 0]]).scale(sign)


def lorentz_a2() -> Matrix:
    return Matrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])


def lorentz_a3() -> Matrix:
    return Matrix([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])


def lorentz_b(alpha, beta) -> Matrix:
    return lorentz_a2().scale(alpha) + lorentz_a3().scale(beta)


def neutral_a1() -> Matrix:
    return Matrix([[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 1], [0, 1, -1, 0]])


def neutral_a2(alpha, beta) -> Matrix:
    return Matrix([[0, alpha, 0, 0], [-alpha, 0, 0, 0], [0, 0, 0, beta], [0, 0, -beta, 0]])


def neutral_a3(alpha, beta) -> Matrix:
    return Matrix([[0, 0, beta, 0], [0, 0, 0, alpha], [beta, 0, 0, 0], [0, alpha, 0, 0]])


def neutral_b1(nu) -> Matrix:
    return Matrix([[0, -nu, 1, 0], [nu, 0, 0, 1], [0, 0, 0, -nu], [0, 0, nu, 0]])


def neutral_b2(lam) -> Matrix:
    return Matrix([[lam, 0, 1, 0], [0, -lam, 0, 1], [0, 0, lam, 0], [0, 0, 0, -lam]])


def neutral_b3(xi, nu) -> Matrix:
    return Matrix([[xi, nu, 0, 0], [-nu, xi, 0, 0], [0, 0, -xi, nu], [0, 0, -nu, -xi]])
