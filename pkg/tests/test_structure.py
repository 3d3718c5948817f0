import pytest

from nrspaces.catalog import LOREN2_B, make_family
from nrspaces.exact_linalg import Matrix
from nrspaces.metric_space import lorentz_space
from nrspaces.normal_forms import lorentz_a1, lorentz_a2, lorentz_a3, neutral_a1
from nrspaces.structure import (CHECK_NAMES, CurvatureTensor, InvalidStructure, MetricMismatch, NRStructure,
                                StructureError, TorsionTensor, require_valid, torsion_constraints,
                                torsion_lorentz_orthonormal, torsion_neutral_orthonormal, torsion_neutral_witt,
                                validate_structure, zero_structure)

LOR = lorentz_space()


def test_torsion_is_antisymmetric():
    t = TorsionTensor(LOR, {(2, 0): (1, 2, 3, 4)})
    assert t.t[0][2] == (-1, -2, -3, -4)
    assert t((1, 0, 0, 0), (0, 0, 1, 0)) == (-1, -2, -3, -4)
    assert t.operator((0, 0, 1, 0)) @ (1, 0, 0, 0) == (1, 2, 3, 4)
    with pytest.raises(StructureError):
        TorsionTensor(LOR, {(1, 1): (1, 0, 0, 0)})
    with pytest.raises(StructureError):
        TorsionTensor(LOR, {(0, 1): (1, 0)})


def test_curvature_shape_checked():
    with pytest.raises(StructureError):
        CurvatureTensor(LOR, {(0, 1): Matrix.identity(3)})


@pytest.mark.parametrize("param", [torsion_lorentz_orthonormal, torsion_neutral_orthonormal, torsion_neutral_witt])
def test_parametrized_torsions_are_naturally_reductive(param):
    t = param(1, 2, 3, 5)
    s = NRStructure(t.space, t, CurvatureTensor(t.space))
    assert validate_structure(s).check("naturally_reductive").ok


def test_zero_structure_valid():
    rep = validate_structure(zero_structure(LOR))
    assert rep.valid and [c.name for c in rep.checks] == list(CHECK_NAMES)


def test_catalog_member_valid():
    assert validate_structure(make_family("loren2", c=1, alpha=1, beta=0, delta=2).structure).valid


def test_failures_are_reported_not_raised():
    s = make_family("loren2", c=1, alpha=1, beta=0, delta=2).structure
    vals = dict(s.curvature.values())
    vals[(0, 1)] = vals[(0, 1)] + LOREN2_B
    broken = NRStructure(s.space, s.torsion, CurvatureTensor(s.space, vals))
    rep = validate_structure(broken)
    assert rep.failed() == ["h_derivations", "bianchi_1", "bianchi_2"]
    with pytest.raises(InvalidStructure) as exc:
        require_valid(broken)
    assert exc.value.report.failed() == rep.failed()


def test_non_alternating_torsion():
    s = NRStructure(LOR, TorsionTensor(LOR, {(0, 1): (1, 0, 0, 0)}), CurvatureTensor(LOR))
    rep = validate_structure(s)
    assert rep.failed() == ["naturally_reductive"]
    assert rep.check("naturally_reductive").failures


def test_curvature_not_skew():
    s = NRStructure(LOR, TorsionTensor(LOR), CurvatureTensor(LOR, {(0, 1): Matrix.identity(4)}))
    assert "curvature_skew" in validate_structure(s).failed()


def test_curvature_not_acting_as_derivation():
    s = NRStructure(LOR, torsion_lorentz_orthonormal(1, 0, 0, 0), CurvatureTensor(LOR, {(2, 3): lorentz_a3()}))
    assert validate_structure(s).failed() == ["h_derivations", "bianchi_2"]


def test_constraints_reject_wrong_operator():
    with pytest.raises(MetricMismatch):
        torsion_constraints(Matrix.identity(4), "lorentz")
    with pytest.raises(MetricMismatch):
        torsion_constraints(neutral_a1(), "lorentz")
    with pytest.raises(StructureError):
        torsion_constraints(lorentz_a1(), "euclidean")


def test_constraint_solutions_are_annihilated():
    sol = torsion_constraints(lorentz_a2(), "lorentz")
    assert sol.contains((3, -2, 0, 0)) and not sol.contains((0, 0, 1, 0))
    for v in sol.basis():
        t = torsion_lorentz_orthonormal(*v)
        s = NRStructure(LOR, t, CurvatureTensor(LOR, {(0, 1): lorentz_a2()}))
        assert validate_structure(s).check("h_derivations").ok
