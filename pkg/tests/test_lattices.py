import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k12sigma import lattices as lt
from k12sigma import linalg as la
from k12sigma import permgroup as pg


@pytest.mark.parametrize("name,det,roots", [
    ("A1", 2, 2), ("A2", 3, 6), ("A3", 4, 12), ("D4", 4, 24), ("D5", 4, 40),
    ("E6", 3, 72), ("E7", 2, 126), ("E8", 1, 240),
])
def test_root_lattices(name, det, roots):
    lat = lt.root_lattice(name)
    assert lat.det == det
    assert lat.is_even
    assert len(lat.shell(2)) == roots
    assert lat.minimum() == 2


def test_bad_lattices_rejected():
    with pytest.raises(ValueError):
        lt.root_lattice("F4")
    with pytest.raises(ValueError):
        lt.IntegerLattice([[1, 2], [2, 1]])
    with pytest.raises(ValueError):
        lt.IntegerLattice([[2, 1], [0, 2]])


def test_shells_are_closed_under_negation():
    lat = lt.root_lattice("E6")
    for n, vs in lat.vectors_up_to(6).items():
        s = set(vs)
        assert all(tuple(-x for x in v) in s for v in vs)
        assert all(lat.norm(v) == n for v in vs)


def test_tensor_and_rescale():
    a1, a2 = lt.root_lattice("A1"), lt.root_lattice("A2")
    t = lt.tensor_product(a2, a1)
    assert t.det == 3 ** 1 * 2 ** 2
    assert lt.isometric_rank2(t, lt.rescale(a2, 2))
    assert not lt.isometric_rank2(t, lt.rescale(lt.orthogonal_sum(a1, a1), 2))
    assert len(lt.rescale(a2, 2).shell(4)) == 6


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 30), st.integers(-30, 30), st.integers(1, 30),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_binary_reduction_is_an_invariant(a, b, c, t):
    if a * c - b * b <= 0:
        return
    m = [[t[0], t[1]], [t[2], t[3]]]
    if abs(la.det(m)) != 1:
        return
    g = [[a, b], [b, c]]
    h = la.matmul(la.matmul(m, g), la.transpose(m))
    assert lt.binary_form_reduced(g) == lt.binary_form_reduced(h)


def test_a2_rotation():
    a2 = lt.root_lattice("A2")
    nu = lt.Isometry(lt.a2_rotation())
    assert nu.preserves(a2)
    assert nu.order() == 3
    assert nu.is_fixed_point_free
    assert lt.index(a2, lt.image(a2, [[1 - x if i == j else -x for j, x in enumerate(r)]
                                        for i, r in enumerate(nu.matrix)])) == 3


def test_sublattice_calculus():
    a2 = lt.root_lattice("A2")
    t = lt.tensor_product(a2, lt.root_lattice("A1"))
    sub = lt.sublattice(t, [[1, 0]])
    assert sub.rank == 1
    assert sub.contains([3, 0]) and not sub.contains([0, 1])
    ann = lt.annihilator(a2, lt.sublattice(a2, [[1, 0]]))
    assert ann.rank == 1
    assert a2.inner([1, 0], ann.basis[0]) == 0
    assert lt.sublattice(a2, [[2, 0], [0, 2]]).saturation().basis == [[1, 0], [0, 1]]
    assert lt.sublattice(a2, [[2, 2]]).saturation().basis == [[1, 1]]


def test_rssd_involution_on_tensor():
    # t_A tensor beta acts as id tensor (reflection in beta)
    a2, a3 = lt.root_lattice("A2"), lt.root_lattice("A3")
    lat = lt.tensor_product(a2, a3)
    beta = [1, 0, 0]
    gens = [[int(i == k) * beta[j] for k in range(2) for j in range(3)] for i in range(2)]
    sub = lt.sublattice(lat, gens)
    assert lt.is_rssd(lat, sub)
    t = lt.rssd_involution(lat, sub)
    assert t.preserves(lat) and t.order() == 2
    refl = [[int(i == j) - a3.inner([int(k == i) for k in range(3)], beta) * beta[j]
             for i in range(3)] for j in range(3)]
    assert [list(r) for r in t.matrix] == la.kron(la.identity(2), refl)


def test_non_rssd_raises():
    a2 = lt.root_lattice("A2")
    assert lt.is_rssd(a2, lt.sublattice(a2, [[1, 0]]))
    lat = lt.IntegerLattice([[2, 1], [1, 4]])
    with pytest.raises(ValueError):
        lt.rssd_involution(lat, lt.sublattice(lat, [[0, 1]]))


@pytest.mark.parametrize("name,k", [("A1", 1), ("A2", 1), ("A3", 3), ("D4", 4), ("E6", 5)])
def test_three_divisible_kernel_index(name, k):
    lat = lt.tensor_product(lt.root_lattice("A2"), lt.root_lattice(name))
    assert lt.index(lat, lt.three_divisible_kernel(lat)) == 3 ** k


@pytest.mark.parametrize("name,order", [("A1", 2), ("A2", 6), ("A3", 24), ("D4", 192), ("E6", 51840)])
def test_weyl_orders(name, order):
    assert pg.weyl_group(lt.root_lattice(name)).order() == order


def test_read_gram_file(tmp_path):
    p = tmp_path / "a2.gram"
    p.write_text("2\n2 -1\n-1 2\n")
    assert lt.read_gram_file(p).det == 3
    p.write_text("2\n2 -1\n")
    with pytest.raises(ValueError):
        lt.read_gram_file(p)
