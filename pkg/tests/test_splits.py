from fractions import Fraction as F

import pytest
from hypothesis import given

from nrspaces.catalog import make_family, oscillator_algebra, oscillator_gram
from nrspaces.exact_linalg import Matrix
from nrspaces.lie_algebra import LieAlgebra, jacobi_check
from nrspaces.serialization import structure_to_json
from nrspaces.splits import (NotNaturallyReductive, NotReductive, build_lie_algebra, nr_from_split,
                             split_from_algebra)
from nrspaces.structure import StructureError, validate_structure
from conftest import nonzero_q, small_q

SL2 = LieAlgebra.from_named(["H", "E", "F"], {("H", "E"): {"E": 2}, ("H", "F"): {"F": -2}, ("E", "F"): {"H": 1}})


@given(nonzero_q, small_q, small_q, small_q)
def test_loren2_round_trip(c, al, be, de):
    s = make_family("loren2", c=c, alpha=al, beta=be, delta=de).structure
    split = build_lie_algebra(s)
    assert jacobi_check(split.algebra)[0]
    assert split.subalgebra_ok() and split.reductive_ok()
    assert structure_to_json(nr_from_split(split)) == structure_to_json(s)


def test_preferred_h_basis():
    inst = make_family("sl_lorentz", c=1, eta=1, alpha=2)
    split = build_lie_algebra(inst.structure, inst.h_basis, inst.h_labels)
    assert split.algebra.labels == ("X1", "X2", "X3", "X4", "A")
    with pytest.raises(StructureError):
        build_lie_algebra(inst.structure, [Matrix.identity(4)], ["I"])


def test_not_reductive():
    split = split_from_algebra(SL2, (0, 2), [[1, 0], [0, 1]])  # h = span{E}, [E, H] = -2E
    with pytest.raises(NotReductive):
        nr_from_split(split)


def test_group_with_trivial_isotropy_needs_biinvariant_metric():
    g = oscillator_algebra()
    split = split_from_algebra(g, range(4), oscillator_gram(F(1, 2)))
    with pytest.raises(NotNaturallyReductive):
        nr_from_split(split)
    # eps = 0 makes the metric bi-invariant
    s = nr_from_split(split_from_algebra(g, range(4), oscillator_gram(F(0))))
    assert validate_structure(s).valid and s.curvature.is_zero()
