"""Parametric families of 4-dimensional naturally reductive spaces.

Every family is produced as a reductive Lie algebra ``g = m + h`` with a
metric on ``m``; the structure ``(T, R~)`` is read off the split.
``expected_properties`` states the closed-form verdicts each family is
known to satisfy, for comparison against computed analyses.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact_linalg import Matrix, Q, span
from .lie_algebra import LieAlgebra, ReductiveSplit, change_basis
from .metric_space import validate_metric
from .normal_forms import lorentz_a1, neutral_a1
from .splits import build_lie_algebra, nr_from_split, split_from_algebra
from .structure import CurvatureTensor, NRStructure, TorsionTensor, torsion_lorentz_orthonormal


class ParamOutOfDomain(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise ParamOutOfDomain(f"unknown family {self.name!r}; known: {', '.join(FAMILIES)}")
        object.__setattr__(self, "params", _normalise(self.name, dict(self.params)))


@dataclass
class FamilyInstance:
    spec: FamilySpec
    structure: NRStructure
    split: ReductiveSplit
    h_basis: list
    h_labels: list
    notes: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)


LORENTZ = (-1, 1, 1, 1)
NEUTRAL = (-1, -1, 1, 1)
M_LABELS = ["X1", "X2", "X3", "X4"]

# h generators as endomorphisms of m (column j = image of X_j)
LOREN2_A = lorentz_a1()
LOREN2_B = Matrix([[0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0], [1, -1, 0, 0]])
DOSDOS2_A = neutral_a1()
DOSDOS2_B = Matrix([[0, -1, 1, 0], [1, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]])
SL_LORENTZ_A = Matrix([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
SL_NEUTRAL_A = Matrix([[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 1, 0, 0]])


def sl_m_matrix(eta) -> Matrix:
    return Matrix([[0, 0, 1, 0], [0, 0, -eta, 0], [1, eta, 0, 0], [0, 0, 0, 0]])


def sl_n_matrix(eta) -> Matrix:
    return Matrix([[0, 0, 0, 1], [0, 0, 0, -eta], [0, 0, 0, 0], [1, eta, 0, 0]])


# parameter handling ---------------------------------------------------------

PARAMS = {
    "loren1": ("lambda",),
    "loren2": ("c", "alpha", "beta", "delta"),
    "dosdos1": ("lambda",),
    "dosdos2": ("b", "alpha", "beta", "delta"),
    "sl_lorentz": ("c", "eta", "alpha"),
    "sl_neutral": ("b", "eta", "alpha"),
    "oscillator": ("eps",),
    "case_a_product": ("a",),
}
ALIASES = {"dosdos2": {"c": "b"}, "oscillator": {"epsilon": "eps"}, "loren1": {"lam": "lambda"},
           "dosdos1": {"lam": "lambda"}}
FAMILIES = tuple(PARAMS)


def _normalise(name: str, params: dict) -> dict:
    alias = ALIASES.get(name, {})
    out = {}
    for k, v in params.items():
        key = alias.get(k, k)
        if key not in PARAMS[name]:
            raise ParamOutOfDomain(f"{name}: unknown parameter {k!r}; expected {', '.join(PARAMS[name])}")
        if key in out:
            raise ParamOutOfDomain(f"{name}: parameter {key!r} given twice")
        try:
            out[key] = Q(v)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise ParamOutOfDomain(f"{name}: parameter {key!r} is not a rational: {v!r}") from exc
    missing = [k for k in PARAMS[name] if k not in out]
    if missing:
        raise ParamOutOfDomain(f"{name}: missing parameter(s) {', '.join(missing)}")
    _check_domain(name, out)
    return out


def _check_domain(name: str, p: dict) -> None:
    def need(cond, msg):
        if not cond:
            raise ParamOutOfDomain(f"{name}: {msg}")

    if name in ("loren1", "dosdos1"):
        need(p["lambda"] != 0, "lambda must be nonzero")
    elif name == "sl_lorentz":
        need(p["c"] != 0, "c must be nonzero")
        need(p["eta"] in (1, -1), "eta must be 1 or -1")
        need(p["alpha"] != 0, "alpha must be nonzero")
    elif name == "sl_neutral":
        need(p["b"] != 0, "b must be nonzero")
        need(p["eta"] in (1, -1), "eta must be 1 or -1")
        need(p["alpha"] != 0, "alpha must be nonzero")
    elif name == "oscillator":
        need(-1 < p["eps"] < 1, "eps must satisfy -1 < eps < 1")
    elif name == "case_a_product":
        need(p["a"] != 0, "a must be nonzero")


# algebras -------------------------------------------------------------------

def loren2_algebra(c, alpha, beta, delta) -> LieAlgebra:
    return LieAlgebra.from_named(M_LABELS + ["A", "B"], {
        ("A", "X1"): {"X3": 1}, ("A", "X2"): {"X3": -1},
        ("B", "X1"): {"X4": 1}, ("B", "X2"): {"X4": -1},
        ("A", "X3"): {"X1": 1, "X2": 1}, ("B", "X4"): {"X1": 1, "X2": 1},
        ("X1", "X3"): {"X4": -c, "A": alpha, "B": beta},
        ("X2", "X3"): {"X4": c, "A": -alpha, "B": -beta},
        ("X1", "X4"): {"X3": c, "A": beta, "B": delta},
        ("X2", "X4"): {"X3": -c, "A": -beta, "B": -delta},
        ("X3", "X4"): {"X1": c, "X2": c},
    })


def dosdos2_algebra(b, alpha, beta, delta) -> LieAlgebra:
    """Parameters named as in the flatness/symmetry criteria for this family."""
    return LieAlgebra.from_named(M_LABELS + ["A", "B"], {
        ("A", "X2"): {"X4": 1}, ("A", "X3"): {"X4": -1},
        ("B", "X1"): {"X2": 1, "X3": 1}, ("A", "X4"): {"X2": 1, "X3": 1},
        ("B", "X2"): {"X1": -1}, ("B", "X3"): {"X1": 1},
        ("X1", "X2"): {"X4": -b, "A": -alpha, "B": -beta},
        ("X1", "X3"): {"X4": b, "A": alpha, "B": beta},
        ("X2", "X4"): {"X1": b, "A": -delta, "B": alpha},
        ("X3", "X4"): {"X1": -b, "A": delta, "B": -alpha},
        ("X1", "X4"): {"X2": -b, "X3": -b},
    })


def sl_lorentz_algebra(c, eta, alpha) -> LieAlgebra:
    return LieAlgebra.from_named(M_LABELS + ["A"], {
        ("A", "X3"): {"X4": -1}, ("A", "X4"): {"X3": 1},
        ("X1", "X3"): {"X4": -c}, ("X1", "X4"): {"X3": c},
        ("X2", "X3"): {"X4": -eta * c}, ("X2", "X4"): {"X3": eta * c},
        ("X3", "X4"): {"X1": c, "X2": -eta * c, "A": alpha},
    })


def sl_neutral_algebra(b, eta, alpha) -> LieAlgebra:
    return LieAlgebra.from_named(M_LABELS + ["A"], {
        ("A", "X2"): {"X4": 1}, ("A", "X4"): {"X2": 1},
        ("X1", "X2"): {"X4": -b}, ("X1", "X4"): {"X2": -b},
        ("X2", "X3"): {"X4": -eta * b}, ("X3", "X4"): {"X2": eta * b},
        ("X2", "X4"): {"X1": b, "X3": eta * b, "A": alpha},
    })


def sl2_plus_r2(lam, sign) -> LieAlgebra:
    """span{Y1,Y2,Y3,T1,T2}: [Y1,Y2] = sign*lam*Y3, [Y1,Y3] = lam*Y2, [Y2,Y3] = Y1."""
    return LieAlgebra.from_named(["Y1", "Y2", "Y3", "T1", "T2"], {
        ("Y1", "Y2"): {"Y3": sign * lam}, ("Y1", "Y3"): {"Y2": lam}, ("Y2", "Y3"): {"Y1": 1},
    })


def loren1_basis(lam) -> Matrix:
    """Columns: X1, X2, X3, X4, A in the basis Y1, Y2, Y3, T1, T2."""
    r = 1 / Q(lam)
    return Matrix.from_columns([(r, 0, 0, 1 - r, r), (r, 0, 0, -r, 1 + r), (0, 1, 0, 0, 0),
                                (0, 0, 1, 0, 0), (r, 0, 0, -r, r)])


def dosdos1_basis(lam) -> Matrix:
    r = 1 / Q(lam)
    return Matrix.from_columns([(-r, 0, 0, 1 + r, r), (0, 1, 0, 0, 0), (r, 0, 0, -r, 1 - r),
                                (0, 0, 1, 0, 0), (r, 0, 0, -r, -r)])


def loren1_algebra(lam) -> LieAlgebra:
    return change_basis(sl2_plus_r2(lam, -1), loren1_basis(lam), M_LABELS + ["A"])


def dosdos1_algebra(lam) -> LieAlgebra:
    return change_basis(sl2_plus_r2(lam, 1), dosdos1_basis(lam), M_LABELS + ["A"])


def sl_lorentz_reduction(c, eta, lam) -> Matrix:
    """Columns Y1, X3, X4, T1, T2 in the basis X1..X4, A of sl_lorentz(c, eta, lam)."""
    d = eta * c
    return Matrix.from_columns([(c, -d, 0, 0, lam), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0),
                                (1, 0, 0, 0, -c), (0, 1, 0, 0, -d)])


def sl_neutral_reduction(b, eta, lam) -> Matrix:
    """Columns T1, T2, Y1, X2, X4 in the basis X1..X4, A of sl_neutral(b, eta, lam)."""
    d = eta * b
    return Matrix.from_columns([(1, 0, 0, 0, b), (0, 0, 1, 0, -d), (b, 0, d, 0, lam),
                                (0, 1, 0, 0, 0), (0, 0, 0, 1, 0)])


def sl_lorentz_pattern(lam) -> LieAlgebra:
    return LieAlgebra.from_named(["Y1", "X3", "X4", "T1", "T2"], {
        ("X3", "Y1"): {"X4": lam}, ("Y1", "X4"): {"X3": lam}, ("X3", "X4"): {"Y1": 1}})


def sl_neutral_pattern(lam) -> LieAlgebra:
    return LieAlgebra.from_named(["T1", "T2", "Y1", "X2", "X4"], {
        ("Y1", "X2"): {"X4": lam}, ("Y1", "X4"): {"X2": lam}, ("X2", "X4"): {"Y1": 1}})


# oscillator -----------------------------------------------------------------

OSC_LABELS = ["P", "X", "Y", "Q"]


def oscillator_algebra() -> LieAlgebra:
    return LieAlgebra.from_named(OSC_LABELS, {("X", "Y"): {"P": 1}, ("Q", "X"): {"Y": 1},
                                              ("Q", "Y"): {"X": -1}})


def oscillator_gram(eps) -> Matrix:
    e = Q(eps)
    return Matrix([[e, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, e]])


def oscillator_torsion(space, eps) -> TorsionTensor:
    """T(X,Y) = -P completed so that <T(.,.),.> is alternating."""
    e = Q(eps)
    return TorsionTensor(space, {(1, 2): (-1, 0, 0, 0), (1, 0): (0, 0, e, 0), (1, 3): (0, 0, 1, 0),
                                 (2, 0): (0, -e, 0, 0), (2, 3): (0, -1, 0, 0)})


def oscillator_rotation() -> Matrix:
    """J: X -> Y, Y -> -X, P and Q fixed at zero."""
    return Matrix([[0, 0, 0, 0], [0, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, 0]])


def oscillator_stated_curvature(eps) -> Matrix:
    """R~(X,Y): X -> -eps Y, Y -> 3 eps X, P and Q -> 0 (as published; not skew for eps != 0)."""
    e = Q(eps)
    return Matrix([[0, 0, 0, 0], [0, 0, 3 * e, 0], [0, -e, 0, 0], [0, 0, 0, 0]])


def oscillator_structures(eps):
    space = validate_metric(oscillator_gram(eps), OSC_LABELS)
    t = oscillator_torsion(space, eps)
    valid = NRStructure(space, t, CurvatureTensor(space, {(1, 2): oscillator_rotation().scale(Q(eps))}))
    stated = NRStructure(space, t, CurvatureTensor(space, {(1, 2): oscillator_stated_curvature(eps)}))
    return valid, stated


# case a product fixture -----------------------------------------------------

def case_a_product(a) -> NRStructure:
    """Torsion (a,0,0,0) on the Lorentz frame with constant curvature on span{X1,X2,X3}.

    R~(X1+X2, X3) is the nilpotent case-a operator.
    """
    t = torsion_lorentz_orthonormal(a, 0, 0, 0)
    space = t.space
    vals = {}
    for i in range(3):
        for j in range(i + 1, 3):
            # Z -> <X_j, Z> X_i - <X_i, Z> X_j
            cols = []
            for k in range(4):
                v = [Fraction(0)] * 4
                v[i] += space.gram[j, k]
                v[j] -= space.gram[i, k]
                cols.append(v)
            vals[(i, j)] = Matrix.from_columns(cols)
    return NRStructure(space, t, CurvatureTensor(space, vals))


# construction ---------------------------------------------------------------

def _from_split(spec, g, gram, h_basis, h_labels, notes=()):
    split = split_from_algebra(g, range(4), Matrix.diag(gram), M_LABELS)
    return FamilyInstance(spec, nr_from_split(split), split, list(h_basis), list(h_labels), list(notes))


def make_family(spec: FamilySpec | str, **params) -> FamilyInstance:
    if isinstance(spec, str):
        spec = FamilySpec(spec, params)
    p = spec.params
    name = spec.name
    if name == "loren2":
        return _from_split(spec, loren2_algebra(p["c"], p["alpha"], p["beta"], p["delta"]), LORENTZ,
                           [LOREN2_A, LOREN2_B], ["A", "B"])
    if name == "dosdos2":
        return _from_split(spec, dosdos2_algebra(p["b"], p["alpha"], p["beta"], p["delta"]), NEUTRAL,
                           [DOSDOS2_A, DOSDOS2_B], ["A", "B"])
    if name == "sl_lorentz":
        return _from_split(spec, sl_lorentz_algebra(p["c"], p["eta"], p["alpha"]), LORENTZ,
                           [SL_LORENTZ_A], ["A"])
    if name == "sl_neutral":
        return _from_split(spec, sl_neutral_algebra(p["b"], p["eta"], p["alpha"]), NEUTRAL,
                           [SL_NEUTRAL_A], ["A"],
                           ["bracket table with [X3,X4] = eta b X2 and [X2,X4] = b(X1 + eta X3) + alpha A"])
    if name == "loren1":
        return _from_split(spec, loren1_algebra(p["lambda"]), LORENTZ, [SL_LORENTZ_A], ["A"],
                           ["built from the Y/T basis of sl(2,R) + R^2"])
    if name == "dosdos1":
        return _from_split(spec, dosdos1_algebra(p["lambda"]), NEUTRAL, [SL_NEUTRAL_A], ["A"],
                           ["built from the Y/T basis of sl(2,R) + R^2"])
    if name == "oscillator":
        eps = p["eps"]
        valid, stated = oscillator_structures(eps)
        h = [oscillator_rotation()] if eps else []
        split = build_lie_algebra(valid, h, ["J"] if eps else [])
        notes = ["basis (P, X, Y, Q); T(X,Y) = -P completed to an alternating tensor",
                 "R~(X,Y) = eps J with J X = Y, J Y = -X, derived from the Levi-Civita curvature",
                 "published values R~_XY X = -eps Y, R~_XY Y = 3 eps X kept as 'stated_structure'"]
        return FamilyInstance(spec, valid, split, h, ["J"] if eps else [], notes,
                              {"algebra": oscillator_algebra(), "stated_structure": stated,
                               "W": span([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)], 4)})
    if name == "case_a_product":
        s = case_a_product(p["a"])
        split = build_lie_algebra(s)
        return FamilyInstance(spec, s, split, [], [], ["torsion (a,0,0,0); constant curvature on span{X1,X2,X3}"],
                              {"case_a_operator": s.curvature((1, 1, 0, 0), (0, 0, 1, 0))})
    raise ParamOutOfDomain(name)  # unreachable: FamilySpec validates the name


# expected verdicts ----------------------------------------------------------

@dataclass(frozen=True)
class ExpectedProperties:
    """None means the family's known results do not decide the field."""

    flat: bool | None = None
    locally_symmetric: bool | None = None
    decomposable: str | None = None
    holonomy_dim: int | None = None


def expected_properties(spec: FamilySpec | str, **params) -> ExpectedProperties:
    if isinstance(spec, str):
        spec = FamilySpec(spec, params)
    p = spec.params
    name = spec.name
    if name in ("loren2", "dosdos2"):
        if name == "loren2":
            s, off, x, y = p["c"], p["beta"], p["alpha"], p["delta"]
            hyp = x * y - off * off != 0
        else:
            s, off, x, y = p["b"], p["alpha"], p["beta"], p["delta"]
            hyp = off * off != -x * y
        q = s * s / 4
        flat = off == 0 and x == y == q
        sym = s == 0 or (off == 0 and x == y)
        # coefficients of the two independent curvature operators in the h basis
        if name == "loren2":
            rows = [(x - q, off), (off, y - q)]
        else:
            rows = [(-off, q - x), (q - y, off)]
        rank = Matrix(rows).rank()
        if flat:
            hol = 0
        elif s == 0 or rank == 2:
            hol = rank
        else:
            u, v = next(r for r in rows if any(r))
            # a single generator; only A + B and A - B are stable under the torsion
            hol = 1 if name == "dosdos2" and (u == v or u == -v) else 2
        dec = "indecomposable" if (s != 0 and hyp and not flat) else None
        return ExpectedProperties(flat, sym, dec, hol)
    if name in ("sl_lorentz", "sl_neutral", "loren1", "dosdos1"):
        return ExpectedProperties(False, False, "indecomposable", 3)
    if name == "oscillator":
        eps = p["eps"]
        return ExpectedProperties(None, eps == 0, "decomposable" if eps else None, None)
    if name == "case_a_product":
        return ExpectedProperties(None, None, "decomposable", None)
    raise ParamOutOfDomain(name)


def list_families() -> list[dict]:
    return [{"name": n, "parameters": list(PARAMS[n])} for n in FAMILIES]
