import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k12sigma import f3
from k12sigma import permgroup as pg


@pytest.mark.parametrize("n,eps,census", [
    (2, 1, {0: 4, 1: 2, 2: 2}),
    (6, -1, {0: 224, 1: 252, 2: 252}),
    (8, -1, {0: 2132, 1: 2214, 2: 2214}),
])
def test_space_census(n, eps, census):
    V = f3.quad_space(n, eps)
    assert V.sign == eps
    assert V.census() == census
    assert V.expected_isotropic() == census[0]


@pytest.mark.parametrize("n", [2, 4, 6])
@pytest.mark.parametrize("eps", [1, -1])
def test_isotropic_count_formula(n, eps):
    V = f3.quad_space(n, eps)
    assert V.census()[0] == V.expected_isotropic()


def test_bad_spaces():
    with pytest.raises(ValueError):
        f3.quad_space(3, 1)
    with pytest.raises(ValueError):
        f3.QuadSpaceF3([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        f3.reflection(f3.hyperbolic_plane(), [1, 0])


def test_hyperbolic_plane_and_sum():
    U = f3.hyperbolic_plane()
    assert U.sign == 1
    assert int(U.Q([1, 1])) == 1 and int(U.Q([1, 2])) == 2
    X = f3.orthogonal_sum(U, f3.quad_space(6, -1))
    assert X.sign == -1 and X.census() == f3.quad_space(8, -1).census()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=6, max_size=6),
       st.lists(st.integers(0, 2), min_size=6, max_size=6))
def test_reflections_are_isometric_involutions(v, x):
    V = f3.quad_space(6, -1)
    if int(V.Q(v)) == 0:
        return
    R = f3.reflection(V, v)
    assert np.array_equal(R.dot(R) % 3, np.eye(6, dtype=np.int64))
    assert np.array_equal(R.T.dot(V.g).dot(R) % 3, V.g)
    assert int(V.Q(R.dot(x) % 3)) == int(V.Q(x))
    assert np.array_equal(R.dot(v) % 3, (-np.array(v)) % 3)


def test_quadratic_form_polarises():
    V = f3.quad_space(4, 1)
    vs = V.vectors
    for x in vs[::7]:
        for y in vs[::11]:
            assert int(V.Q(x + y)) == (int(V.Q(x)) + int(V.Q(y)) + int(V.B(x, y))) % 3


def test_reflection_group_references():
    assert f3.reflection_group(f3.quad_space(2, 1), 1, on="vectors").order() == 2
    assert f3.reflection_group(f3.quad_space(6, -1), 1, on="vectors").order() == 13063680


def test_line_group(line_group):
    assert line_group.order() == 20303937239040
    assert line_group.orbit_lengths[0] == 1107


def test_induced_space(k12_model):
    Y = f3.induced_space(k12_model)
    assert Y.dim == 6 and Y.sign == -1
    assert Y.census() == {0: 224, 1: 252, 2: 252}


def test_labelings():
    labs = f3.labelings()
    assert len(labs) == 32 and len(set(labs)) == 32
    U = f3.hyperbolic_plane()
    for lab in labs:
        assert int(U.Q(lab.v0)) == 0 and int(U.Q(lab.v0p)) == 0
        assert int(U.Q(lab.v1)) == 1 and int(U.Q(lab.v2)) == 2


def test_phi_correspondence(k12_model, phi_result, line_group, k12_group):
    res = phi_result
    assert res.ok
    assert str(res.labeling) == "v0=(1, 0) v0'=(0, 2) v1=(1, 1) v2=(2, 1)"
    assert res.case_counts == {"0": 126, "v0": 252, "v0'": 252, "v1": 225, "v2": 252}
    assert sorted(res.phi.tolist()) == list(range(1107))
    sig = [k12_model.sigma[k] for k in res.phi]
    cmp = pg.actions_isomorphic(res.line_generators, sig, res.phi, line_group.order(), k12_group.order())
    assert cmp.ok


def test_phi_negative_controls(k12_model, phi_result):
    phi = phi_result.phi.copy()
    phi[[0, 1]] = phi[[1, 0]]
    sig = [k12_model.sigma[k] for k in phi]
    assert not pg.actions_isomorphic(phi_result.line_generators, sig, phi).ok
    working = sum(f3.phi_correspondence(k12_model, lab).ok for lab in f3.labelings()[:8])
    assert working < 8
