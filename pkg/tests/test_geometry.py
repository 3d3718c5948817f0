import itertools
from fractions import Fraction as F

import pytest

from nrspaces.catalog import (DOSDOS2_A, DOSDOS2_B, LOREN2_A, LOREN2_B, SL_LORENTZ_A, expected_properties,
                              make_family, sl_m_matrix, sl_n_matrix)
from nrspaces.decomposition import decompose
from nrspaces.exact_linalg import Matrix
from nrspaces.geometry import (INTRINSIC_ZERO, TORSION_ZERO, classify_geometry, covariant_derivative_R,
                               holonomy, levi_civita_curvature, riemann_symmetry_defects)
from nrspaces.metric_space import validate_metric
from nrspaces.structure import CurvatureTensor, InvalidStructure, NRStructure, TorsionTensor


def su2():
    """Bi-invariant metric: T = -[X,Y], R~ = 0."""
    sp = validate_metric(Matrix.identity(3))
    t = TorsionTensor(sp, {(0, 1): (0, 0, -1), (1, 2): (-1, 0, 0), (2, 0): (0, -1, 0)})
    return NRStructure(sp, t, CurvatureTensor(sp))


def test_null_intrinsic_curvature_is_locally_symmetric():
    s = su2()
    v = classify_geometry(s)
    assert v.locally_symmetric and not v.flat
    assert v.reason.startswith(INTRINSIC_ZERO)
    assert covariant_derivative_R(s).is_zero()
    # round 3-sphere: sectional curvature <R(X,Y)Y, X> = 1/4 |[X,Y]|^2
    r = levi_civita_curvature(s)
    assert s.space.inner(r.r[0][1] @ (0, 1, 0), (1, 0, 0)) == F(1, 4)


def test_null_torsion_shortcut():
    s = make_family("loren2", c=0, alpha=1, beta=0, delta=2).structure
    assert classify_geometry(s).reason == TORSION_ZERO
    assert covariant_derivative_R(s).is_zero()


def test_invalid_structure_refused():
    s = su2()
    bad = NRStructure(s.space, s.torsion, CurvatureTensor(s.space, {(0, 1): Matrix.identity(3)}))
    with pytest.raises(InvalidStructure):
        classify_geometry(bad)


@pytest.mark.parametrize("c, al, be, de", [(1, 1, 0, 2), (2, F(1, 3), -1, 5), (F(-1, 2), 0, 2, 0)])
def test_loren2_curvature_table(c, al, be, de):
    c, al, be, de = map(F, (c, al, be, de))
    r = levi_civita_curvature(make_family("loren2", c=c, alpha=al, beta=be, delta=de).structure)
    assert r.r[0][2] == LOREN2_A.scale(al - c * c / 4) + LOREN2_B.scale(be)


@pytest.mark.parametrize("c, eta, al", [(1, 1, 1), (2, -1, F(1, 3))])
def test_sl_lorentz_curvature_table(c, eta, al):
    c, eta, al = F(c), F(eta), F(al)
    r = levi_civita_curvature(make_family("sl_lorentz", c=c, eta=eta, alpha=al).structure)
    assert r.r[0][2] == sl_m_matrix(eta).scale(-c * c / 4)
    assert r.r[0][3] == sl_n_matrix(eta).scale(-c * c / 4)
    assert r.r[2][3] == SL_LORENTZ_A.scale(al)


@pytest.mark.parametrize("b, al, be, de", [(1, 1, 0, 2), (2, F(1, 3), -1, 5)])
def test_dosdos2_curvature_table(b, al, be, de):
    b, al, be, de = map(F, (b, al, be, de))
    q = b * b / 4
    r = levi_civita_curvature(make_family("dosdos2", b=b, alpha=al, beta=be, delta=de).structure)
    assert r.r[0][1] == DOSDOS2_A.scale(-al) + DOSDOS2_B.scale(-(be - q))
    assert r.r[1][3] == DOSDOS2_A.scale(-(de - q)) + DOSDOS2_B.scale(al)


def test_dosdos2_flat_and_symmetric_points():
    flat = classify_geometry(make_family("dosdos2", b=2, alpha=0, beta=1, delta=1).structure)
    sym = classify_geometry(make_family("dosdos2", b=2, alpha=0, beta=3, delta=3).structure)
    assert flat.flat and flat.locally_symmetric
    assert sym.locally_symmetric and not sym.flat


def test_nabla_r_dense_table():
    nr = covariant_derivative_R(make_family("loren2", c=1, alpha=1, beta=0, delta=2).structure)
    table = nr.components()
    assert len(table) == 4 and len(table[0][0][0]) == 4 and len(table[0][0][0][0]) == 4
    for i, j, k, l in itertools.product(range(4), repeat=4):
        assert tuple(table[i][j][k][l]) == nr(i, j, k, l)
        assert nr(i, j, k, l) == tuple(-x for x in nr(i, k, j, l))


def test_riemann_symmetries_of_catalog_members():
    for fam, kw in [("sl_neutral", dict(b=1, eta=-1, alpha=2)), ("oscillator", dict(eps=F(1, 3))),
                    ("dosdos1", {"lambda": 3})]:
        s = make_family(fam, **kw).structure
        assert not any(riemann_symmetry_defects(s, levi_civita_curvature(s)).values())


# Grid comparison of the closed-form predicates with the computed analysis.
GRID = [(fam, s, x, y, z)
        for fam in ("loren2", "dosdos2")
        for s in (F(1), F(0))
        for x, y, z in itertools.product((F(0), s * s / 4, F(1)), repeat=3)]


@pytest.mark.parametrize("fam, s, x, y, z", GRID)
def test_expected_properties_match_computation(fam, s, x, y, z):
    kw = dict(alpha=x, beta=y, delta=z, **({"c": s} if fam == "loren2" else {"b": s}))
    inst = make_family(fam, **kw)
    exp = expected_properties(inst.spec)
    st = inst.structure
    g = classify_geometry(st)
    hol = holonomy(st)
    assert (g.flat, g.locally_symmetric, hol.dim) == (exp.flat, exp.locally_symmetric, exp.holonomy_dim)
    if exp.decomposable is not None:
        assert decompose(st, hol).verdict == exp.decomposable
