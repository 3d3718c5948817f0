from fractions import Fraction as F

import pytest

from nrspaces.exact_linalg import Matrix
from nrspaces.metric_space import Endomorphism, lorentz_space, neutral_space, validate_metric, witt_space
from nrspaces.normal_forms import (IrrationalInvariant, NormalFormError, NotSkew, WrongSignature, classify,
                                   classify_lorentz, classify_neutral, conjugation_invariants, lorentz_a1,
                                   lorentz_a2, lorentz_a3, lorentz_b, neutral_a1, neutral_a2, neutral_a3,
                                   neutral_b1, neutral_b2, neutral_b3)

LOR, NEU, WITT = lorentz_space(), neutral_space(), witt_space()


@pytest.mark.parametrize("mat, space, family, params", [
    (lorentz_a1(), LOR, "Lor_a", {}),
    (lorentz_a1(-1), LOR, "Lor_a", {}),
    (lorentz_a2(), LOR, "Lor_b", {"alpha_sq": 1, "beta_sq": 0}),
    (lorentz_a3(), LOR, "Lor_b", {"alpha_sq": 0, "beta_sq": 1}),
    (lorentz_b(3, F(1, 2)), LOR, "Lor_b", {"alpha_sq": 9, "beta_sq": F(1, 4)}),
    (neutral_a1(), NEU, "Neu_a1", {}),
    (neutral_a2(2, 3), NEU, "Neu_a2", {"alpha_sq": 4, "beta_sq": 9}),
    (neutral_a2(3, 2), NEU, "Neu_a2", {"alpha_sq": 9, "beta_sq": 4}),
    (neutral_a3(1, 2), NEU, "Neu_a3", {"alpha_sq": 4, "beta_sq": 1}),
    (neutral_b1(2), WITT, "Neu_b1", {"nu_sq": 4}),
    (neutral_b1(0), WITT, "Neu_b1", {"nu_sq": 0}),
    (neutral_b2(F(1, 3)), WITT, "Neu_b2", {"lambda_sq": F(1, 9)}),
    (neutral_b3(2, 1), WITT, "Neu_b3", {"xi_sq": 4, "nu_sq": 1}),
    (Matrix.zeros(4), NEU, "Zero", {}),
])
def test_reference_matrices(mat, space, family, params):
    tag = classify(mat, space)
    assert tag.family == family
    assert tag.parameters == params


def test_nilpotency_indices():
    assert classify(lorentz_a1(), LOR).nilpotency_index == 3
    assert classify(neutral_a1(), NEU).nilpotency_index == 3
    tag = classify(neutral_b1(0), WITT)
    assert tag.nilpotency_index == 2 and tag.notes


def test_reducibility():
    assert classify(neutral_a3(1, 2), NEU).reducible is True
    assert classify(neutral_b2(1), WITT).reducible is False
    assert classify(lorentz_a1(), LOR).reducible is None


def test_irrational_parameters():
    # alpha^2, beta^2 are the roots of u^2 - u - 1 here: not rational
    a = lorentz_b(1, 1) + Matrix([[0, 0, 1, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]])
    tag = classify_lorentz(a, LOR)
    assert tag.family == "Lor_b" and "u_poly" in tag.parameters
    with pytest.raises(IrrationalInvariant) as exc:
        classify_lorentz(a, LOR, require_rational=True)
    assert exc.value.u_poly == tag.parameters["u_poly"]


def test_errors():
    with pytest.raises(NotSkew):
        classify(Matrix.identity(4), LOR)
    with pytest.raises(WrongSignature):
        classify_neutral(lorentz_a1(), LOR)
    with pytest.raises(WrongSignature):
        classify(Matrix.zeros(4), validate_metric(Matrix.identity(4)))
    assert issubclass(NotSkew, NormalFormError)


def test_endomorphism_argument():
    assert classify(Endomorphism(LOR, lorentz_a1())).family == "Lor_a"


def test_invariants_are_conjugation_invariant():
    q = Matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1]])
    a = neutral_b2(3)
    assert conjugation_invariants(q.inverse() @ a @ q) == conjugation_invariants(a)
