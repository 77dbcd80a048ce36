"""The twelve acceptance criteria, one test each, each printing a PASS/FAIL line."""

import subprocess
import sys
import time
from fractions import Fraction

import pytest

from k12sigma import codes as cd
from k12sigma import f3
from k12sigma import lattices as lt
from k12sigma import permgroup as pg
from k12sigma import sigma as sg
from k12sigma import suites
from k12sigma import virasoro as vir


@pytest.fixture
def verdict(capsys):
    def report(n, ok, detail, seconds, budget):
        within = seconds < budget
        line = f"{'PASS' if ok and within else 'FAIL'} criterion {n}: {detail} ({seconds:.2f} s, budget {budget} s)"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
        assert within, line
    return report


def test_criterion_01_hexacode(verdict):
    t = time.perf_counter()
    h = cd.hexacode()
    got = (h.weight_enumerator(), h.is_self_dual, h.minimum_weight())
    ok = got == ({0: 1, 4: 45, 6: 18}, True, 4)
    verdict(1, ok, f"hexacode enumerator/self-dual/min weight = {got}", time.perf_counter() - t, 1)


def test_criterion_02_k12_construction(verdict):
    t = time.perf_counter()
    L = cd.k12().lattice
    got = (L.is_even, L.minimum(), [len(L.shell(n)) for n in (4, 6, 8)])
    ok = got == (True, 4, [756, 4032, 20412])
    verdict(2, ok, f"K12 even/min/shells = {got}", time.perf_counter() - t, 30)


def test_criterion_03_quotient_census(verdict):
    t = time.perf_counter()
    el = cd.k12()
    table = cd.coset_census(el).table()
    ok = el.quotient.order == 729 and table == {(0, 1): 1, (4, 3): 252, (6, 18): 224, (8, 81): 252}
    verdict(3, ok, f"index {el.quotient.order}, census {table}", time.perf_counter() - t, 60)


def test_criterion_04_sublattice_combinatorics(verdict):
    t = time.perf_counter()
    el = cd.k12()
    subs = len(cd.nu_sublattices(el))
    comp = set(cd.companion_counts(el))
    nb = cd.n_beta_values(el)
    z = cd.z_sizes(el)
    ok = (subs == 126 and comp == {80} and nb == {4: {270}, 6: {270}, 8: {216}}
          and z == {0: {26}, 1: {30}})
    verdict(4, ok, f"{subs} sublattices, companions {comp}, n_beta {nb}, |Z| {z}",
            time.perf_counter() - t, 120)


def test_criterion_05_unitary_series(verdict):
    t = time.perf_counter()
    cs = [vir.central_charge(m) for m in (1, 3, 4)]
    h = vir.highest_weight(3, 4, 1)
    ws = vir.extension_weights(3)
    six = {Fraction(0), Fraction(3), Fraction(2, 5), Fraction(7, 5), Fraction(2, 3), Fraction(1, 15)}
    ok = cs == [Fraction(1, 2), Fraction(4, 5), Fraction(6, 7)] and h == 3 and ws == six
    verdict(5, ok, f"c = {[str(c) for c in cs]}, h_41 = {h}, weights {[str(w) for w in sorted(ws)]}",
            time.perf_counter() - t, 1)


def test_criterion_06_small_griess_algebras(verdict):
    t = time.perf_counter()
    algebras = suites.small_algebras()
    got = {}
    for name, (model, S) in algebras.items():
        r = sg.identity_and_charge(model, S)
        got[name] = (set(r.coefficients.values()), r.central_charge)
    shown = {k: (", ".join(map(str, c)), str(q)) for k, (c, q) in got.items()}
    expected = {"pair": ({Fraction(1)}, Fraction(8, 5)), "s3": ({Fraction(5, 6)}, Fraction(2)),
                "s4": ({Fraction(5, 7)}, Fraction(24, 7)), "nonet": ({Fraction(5, 9)}, Fraction(4))}
    model, S = algebras["s3"]
    w = model.element({i: Fraction(6, 5) for i in S})
    wrong_fails = any(sg.griess_product(w, model.basis_element(i)) != 2 * model.basis_element(i) for i in S)
    ok = got == expected and wrong_fails
    verdict(6, ok, f"coefficients and charges {shown}; 6/5 rejected: {wrong_fails}",
            time.perf_counter() - t, 1)


def test_criterion_07_tensor_groups(verdict):
    t = time.perf_counter()
    cases = [("A1", 1, 6), ("A3", 3, 648), ("D4", 4, 3 ** 4 * 192), ("A2", 1, 18),
             ("E6", 5, 3 ** 5 * 51840)]
    got, ok = {}, True
    for name, k, expected in cases:
        weyl = pg.weyl_group(lt.root_lattice(name)).order()
        order = pg.bsgs(sg.build_E_tensor(name).sigma, seed=0).order()
        got[name] = order
        ok &= order == expected == 3 ** k * weyl
    verdict(7, ok, f"orders {got}", time.perf_counter() - t, 60)


def test_criterion_08_three_transpositions(verdict, k12_model):
    t = time.perf_counter()
    results = {name: pg.is_3transposition(sg.build_E_tensor(name).sigma)
               for name in ("A1", "A2", "A3", "D4", "E6")}
    results["K12"] = pg.is_3transposition(k12_model.sigma)
    ok = all(r.ok for r in results.values()) and results["K12"].pairs_checked == 612171
    verdict(8, ok, "pairs checked " + str({k: r.pairs_checked for k, r in results.items()}),
            time.perf_counter() - t, 120)


def test_criterion_09_appendix_identity(verdict, k12_model):
    t = time.perf_counter()
    m = k12_model
    ut = Fraction(1, 9) * m.element({i: 1 for i in m.untwisted()})
    u = m.omega() - ut
    got = (ut * ut == 2 * ut, sg.inner(ut, ut), u * u == 2 * u, sg.inner(u, u))
    ok = got == (True, Fraction(28, 5), True, Fraction(2, 5))
    verdict(9, ok, f"u~ idempotent, (u~|u~), u idempotent, (u|u) = {tuple(map(str, got))}", time.perf_counter() - t, 10)


def test_criterion_10_inner_product_lemmas(verdict, k12_model):
    t = time.perf_counter()
    m = k12_model
    e1e2 = suites._e1e2_gram_ok(m)
    qd = m.info["quotient"]
    u = m.e2_indices()[0]
    by_norm: dict = {}
    for i, j in enumerate(m.e2_indices()):
        by_norm.setdefault(int(qd.min_norm[i]), set()).add(m.gram(u, j))
    ok = e1e2 and by_norm == {0: {Fraction(2, 5)}, 4: {Fraction(1, 25)}, 6: {Fraction(1, 25)},
                              8: {Fraction(0)}}
    shown = {n: sorted(map(str, v)) for n, v in sorted(by_norm.items())}
    verdict(10, ok, f"(rho_b u|e_A) by pairing: {e1e2}; (rho_b u|u) by norm {shown}",
            time.perf_counter() - t, 60)


def test_criterion_11_oracle_equivalence(verdict, k12_model):
    t = time.perf_counter()
    m = k12_model
    G_sigma = pg.bsgs(m.sigma, seed=11)
    G_refl = f3.reflection_group(f3.quad_space(8, -1), 1, on="lines", seed=12)
    res = f3.phi_correspondence(m)
    sig = [m.sigma[k] for k in res.phi]
    cmp = pg.actions_isomorphic(res.line_generators, sig, res.phi, G_refl.order(), G_sigma.order())
    single_orbit = [len(o) for o in G_sigma.orbits()] == [1107]
    ref6 = f3.reflection_group(f3.quad_space(6, -1), 1, on="vectors").order()
    h = pg.bsgs(m.sigma[:3 * m.n_sublattices], seed=13).order()
    ok = res.ok and cmp.ok and single_orbit and G_sigma.order() == G_refl.order() and h == 3 ** 6 * ref6
    verdict(11, ok, f"|G| = {G_sigma.order()} = {G_refl.order()}, equivariant {res.ok} ({res.labeling}), "
                    f"single orbit {single_orbit}, E1-subgroup {h} = 3^6 * {ref6}",
            time.perf_counter() - t, 600)


def test_criterion_12_determinism(verdict):
    t = time.perf_counter()
    cmd = [sys.executable, "-m", "k12sigma", "run", "--suite", "all", "--seed", "7"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    ok = first.returncode == 0 and second.returncode == 0 and first.stdout == second.stdout
    verdict(12, ok, f"two runs of the full suite: exit {first.returncode}/{second.returncode}, "
                    f"identical {first.stdout == second.stdout}, {len(first.stdout)} bytes",
            time.perf_counter() - t, 600)
