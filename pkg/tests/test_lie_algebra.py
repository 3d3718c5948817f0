import pytest
from hypothesis import given

from nrspaces.exact_linalg import Matrix, span
from nrspaces.lie_algebra import (LieAlgebra, LieAlgebraError, ReductiveSplit, Singular, abelian, change_basis,
                                  derived_series, generated_ideal, is_ideal, is_nilpotent, is_nilpotent_ideal,
                                  is_solvable, jacobi_check, lower_central_series, match_brackets,
                                  nilradical_search)
from nrspaces.metric_space import validate_metric
from conftest import matrices

SL2 = LieAlgebra.from_named(["H", "E", "F"], {("H", "E"): {"E": 2}, ("H", "F"): {"F": -2}, ("E", "F"): {"H": 1}})
HEIS = LieAlgebra.from_named(["x", "y", "z"], {("x", "y"): {"z": 1}})


def test_bracket_is_alternating():
    assert SL2.bracket(SL2.e(2), SL2.e(1)) == (-1, 0, 0)
    assert SL2.c[0][0] == (0, 0, 0)
    with pytest.raises(LieAlgebraError):
        LieAlgebra(2, {(0, 0): (1, 0)})


def test_jacobi():
    assert jacobi_check(SL2) == (True, None)
    bad = LieAlgebra.from_named(["a", "b", "c"], {("a", "b"): {"b": 1}, ("b", "c"): {"a": 1}})
    ok, triple = jacobi_check(bad)
    assert not ok and triple == (0, 1, 2)


def test_series():
    assert derived_series(SL2) == [3]
    assert not is_solvable(SL2)
    assert derived_series(HEIS) == [3, 1, 0]
    assert lower_central_series(HEIS) == [3, 1, 0]
    assert is_nilpotent(HEIS) and is_nilpotent(abelian(2))
    aff = LieAlgebra.from_named(["a", "b"], {("a", "b"): {"b": 1}})
    assert is_solvable(aff) and not is_nilpotent(aff)


def test_ideals():
    centre = span([HEIS.e(2)], 3)
    assert is_ideal(HEIS, centre)
    assert not is_ideal(SL2, span([SL2.e(0)], 3))
    assert generated_ideal(SL2, [SL2.e(1)]).dim == 3
    aff2 = LieAlgebra.from_named(["a", "b", "c"], {("a", "b"): {"b": 1}, ("a", "c"): {"c": 1}})
    nil = nilradical_search(aff2)
    assert nil == span([(0, 1, 0), (0, 0, 1)], 3) and is_nilpotent_ideal(aff2, nil)


@given(matrices(3).filter(lambda m: m.det() != 0))
def test_change_basis_preserves_jacobi_and_inverts(p):
    g2 = change_basis(SL2, p)
    assert jacobi_check(g2)[0]
    assert change_basis(g2, p.inverse()) == SL2
    assert match_brackets(SL2, g2, p)


def test_change_basis_singular():
    with pytest.raises(Singular):
        change_basis(SL2, Matrix.zeros(3))


def test_match_brackets_detects_mismatch():
    scaled = LieAlgebra.from_named(["H", "E", "F"], {("H", "E"): {"E": 2}, ("H", "F"): {"F": -2},
                                                     ("E", "F"): {"H": 2}})
    assert not match_brackets(SL2, scaled, Matrix.identity(3))
    assert match_brackets(SL2, scaled, Matrix.diag([1, 1, 2]))
    assert not match_brackets(SL2, HEIS.__class__(2), Matrix.identity(3))


def test_reductive_split_checks():
    sp = validate_metric(Matrix.identity(2))
    split = ReductiveSplit(SL2, (1, 2), (0,), sp)
    assert split.subalgebra_ok() and split.reductive_ok()
    assert split.lift_m((3, 4)) == (0, 3, 4)
    assert not ReductiveSplit(SL2, (0, 2), (1,), sp).reductive_ok()
    with pytest.raises(LieAlgebraError):
        ReductiveSplit(SL2, (0, 1), (1,), sp)
