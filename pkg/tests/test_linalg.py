import itertools
from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from k12sigma import lattices as lt
from k12sigma import linalg as la


def small_matrix(rows, cols, lo=-6, hi=6):
    return st.lists(st.lists(st.integers(lo, hi), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


def nonsingular(n):
    return small_matrix(n, n).filter(lambda m: la.det(m) != 0)


def diag(d, rows, cols):
    out = la.zeros(rows, cols)
    for i, x in enumerate(d):
        out[i][i] = x
    return out


@settings(max_examples=60, deadline=None)
@given(small_matrix(3, 4))
def test_smith_form_is_a_factorisation(m):
    d, U, V = la.smith_normal_form(m)
    assert la.matmul(la.matmul(U, m), V) == diag(d, 3, 4)
    assert abs(la.det(U)) == 1 and abs(la.det(V)) == 1
    nz = [x for x in d if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert all(x > 0 for x in nz)


@settings(max_examples=60, deadline=None)
@given(small_matrix(3, 3), st.permutations(range(3)), st.permutations(range(3)))
def test_smith_form_invariant_under_permutations(m, p, q):
    shuffled = [[m[p[i]][q[j]] for j in range(3)] for i in range(3)]
    assert la.smith_normal_form(m)[0] == la.smith_normal_form(shuffled)[0]


@settings(max_examples=60, deadline=None)
@given(nonsingular(3))
def test_smith_product_is_abs_det(m):
    d, _, _ = la.smith_normal_form(m)
    assert int(np.prod(d)) == abs(la.det(m))


@settings(max_examples=40, deadline=None)
@given(small_matrix(2, 2, -3, 3).filter(lambda m: 0 < abs(la.det(m)) <= 30))
def test_index_matches_coset_count(m):
    # count classes of Z^2 / (rows of m) by reducing a box of vectors
    lat = lt.IntegerLattice([[1, 0], [0, 1]])
    sub = lt.sublattice(lat, m)
    n = lt.index(lat, sub)
    reps = []
    for v in itertools.product(range(-12, 13), repeat=2):
        if not any(sub.contains([v[0] - r[0], v[1] - r[1]]) for r in reps):
            reps.append(v)
    assert n == len(reps) == abs(la.det(m))


@settings(max_examples=60, deadline=None)
@given(small_matrix(4, 3))
def test_hermite_form_spans_the_same_module(rows):
    h = la.hermite_normal_form(rows)
    assert len(h) == la.rational_rank(rows)
    for r in rows:
        assert r == [0, 0, 0] or la.solve_integer(la.transpose(h), r) is not None
    for r in h:
        assert la.solve_integer(la.transpose(rows), r) is not None


@settings(max_examples=60, deadline=None)
@given(small_matrix(2, 4))
def test_integer_kernel(m):
    k = la.integer_kernel(m)
    assert len(k) == 4 - la.rational_rank(m)
    for v in k:
        assert la.matvec(m, v) == [0, 0]


@settings(max_examples=60, deadline=None)
@given(nonsingular(3), st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_rational_inverse_and_solve(m, b):
    inv = la.rational_inverse(m)
    assert la.matmul(m, inv) == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    x = la.solve_rational(m, b)
    assert la.matvec(m, x) == b


@settings(max_examples=60, deadline=None)
@given(small_matrix(3, 4), st.sampled_from([2, 3, 5]))
def test_kernel_mod_p(m, p):
    k = la.kernel_mod_p(m, p)
    assert len(k) == 4 - la.rank_mod_p(m, p)
    for v in k:
        assert all(x % p == 0 for x in la.matvec(m, v))


def test_kernel_mod_3_of_a2_tensor_a2():
    a2 = lt.root_lattice("A2")
    g = lt.tensor_product(a2, a2).gram
    assert len(la.kernel_mod_p(g, 3)) == 3
    assert len(la.kernel_mod_p(a2.gram, 3)) == 1


def test_solve_mod_p():
    m = [[1, 1], [1, 2]]
    x = la.solve_mod_p(m, [0, 1], 3)
    assert [v % 3 for v in la.matvec(m, x)] == [0, 1]
    assert la.solve_mod_p([[1, 1], [1, 1]], [0, 1], 3) is None


@settings(max_examples=30, deadline=None)
@given(nonsingular(3))
def test_fincke_pohst_against_brute_force(b):
    gram = la.matmul(b, la.transpose(b))
    bound = max(gram[i][i] for i in range(3))
    found = set(la.fincke_pohst(gram, bound))
    # every vector of norm <= bound has coordinates bounded by Hadamard's inequality
    inv = la.rational_inverse(gram)
    box = [int((bound * inv[i][i]) ** 0.5) + 1 for i in range(3)]
    brute = set()
    g = np.array(gram, dtype=object)
    for v in itertools.product(*(range(-c, c + 1) for c in box)):
        x = np.array(v, dtype=object)
        if x.dot(g).dot(x) <= bound:
            brute.add(v)
    assert found == brute


def test_lll_is_unimodular_and_reduces():
    gram = [[1, 100], [100, 10001]]
    t = la.lll_reduce(gram)
    assert abs(la.det(t)) == 1
    red = la.matmul(la.matmul(t, gram), la.transpose(t))
    assert red == [[1, 0], [0, 1]]


def test_det_bareiss_matches_numpy():
    m = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    assert la.det(m) == 5 == round(np.linalg.det(np.array(m)))
