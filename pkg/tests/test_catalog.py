from fractions import Fraction as F

import pytest

from nrspaces.catalog import (FAMILIES, ExpectedProperties, FamilySpec, ParamOutOfDomain, expected_properties,
                              list_families, make_family)
from nrspaces.geometry import holonomy
from nrspaces.metric_space import is_skew_adjoint
from nrspaces.serialization import structure_to_json
from nrspaces.structure import validate_structure


def test_listing():
    names = [f["name"] for f in list_families()]
    assert names == list(FAMILIES)
    assert {"name": "loren2", "parameters": ["c", "alpha", "beta", "delta"]} in list_families()


@pytest.mark.parametrize("name, params", [
    ("nope", {}),
    ("loren2", dict(c=1, alpha=1, beta=0)),
    ("loren2", dict(c=1, alpha=1, beta=0, delta=2, gamma=1)),
    ("loren2", dict(c="1/0", alpha=1, beta=0, delta=2)),
    ("loren2", dict(c=0.5, alpha=1, beta=0, delta=2)),
    ("sl_lorentz", dict(c=1, eta=2, alpha=1)),
    ("sl_neutral", dict(b=0, eta=1, alpha=1)),
    ("loren1", {"lambda": 0}),
    ("oscillator", dict(eps=1)),
    ("case_a_product", dict(a=0)),
])
def test_domain_errors(name, params):
    with pytest.raises(ParamOutOfDomain):
        FamilySpec(name, params)


def test_aliases_and_normalisation():
    assert FamilySpec("dosdos2", dict(c=1, alpha=0, beta=1, delta="2/4")).params == \
        dict(b=1, alpha=0, beta=1, delta=F(1, 2))
    assert FamilySpec("oscillator", dict(epsilon="-1/2")).params == {"eps": F(-1, 2)}
    assert FamilySpec("loren1", dict(lam=3)).params == {"lambda": 3}


@pytest.mark.parametrize("lam", [1, F(-2, 3), 5])
def test_yt_constructions_agree_with_sl_families(lam):
    assert structure_to_json(make_family("loren1", **{"lambda": lam}).structure) == \
        structure_to_json(make_family("sl_lorentz", c=1, eta=1, alpha=lam).structure)
    assert structure_to_json(make_family("dosdos1", **{"lambda": lam}).structure) == \
        structure_to_json(make_family("sl_neutral", b=1, eta=1, alpha=lam).structure)


def test_oscillator_extras():
    inst = make_family("oscillator", eps=F(1, 2))
    assert validate_structure(inst.structure).valid
    assert set(inst.extras) == {"algebra", "stated_structure", "W"}
    stated = inst.extras["stated_structure"]
    assert not is_skew_adjoint(stated.curvature.r[1][2], stated.space)
    assert validate_structure(stated).check("curvature_skew").failures == [(2, 3)]
    # at eps = 0 the stated values vanish and nothing is flagged
    zero = make_family("oscillator", eps=0).extras["stated_structure"]
    assert validate_structure(zero).check("curvature_skew").ok


def test_expected_properties_shape():
    assert expected_properties("sl_lorentz", c=1, eta=1, alpha=1) == ExpectedProperties(False, False,
                                                                                        "indecomposable", 3)
    e = expected_properties("loren2", c=1, alpha=F(1, 4), beta=0, delta=F(1, 4))
    assert e.flat and e.holonomy_dim == 0 and e.decomposable is None
    assert expected_properties("oscillator", eps=0).decomposable is None


def test_dosdos2_degenerate_holonomy():
    # alpha^2 + (beta - q)(delta - q) = 0 with a single generator A + B: holonomy of dim 1
    e = expected_properties("dosdos2", b=2, alpha=1, beta=0, delta=2)
    assert e.holonomy_dim == 1
    assert holonomy(make_family("dosdos2", b=2, alpha=1, beta=0, delta=2).structure).dim == 1
