"""Verification suites and the JSON report they produce."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import codes as cd
from . import f3
from . import lattices as lt
from . import linalg as la
from . import permgroup as pg
from . import sigma as sg
from . import virasoro as vir

SCHEMA = 1
SUITES = ("codes", "lattices", "virasoro", "griess-small", "tensor-groups", "k12-census",
          "k12-sigma", "k12-group", "phi-oracle")


@dataclass
class Check:
    lemma: str
    description: str
    expected: str
    basis: str  # reference, derived or trivial
    computed: str
    status: str
    runtime_ms: float = field(default=0.0, compare=False)


@dataclass
class Report:
    suite: str
    seed: int
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self, timings: bool = False) -> str:
        checks = []
        for c in sorted(self.checks, key=lambda c: c.lemma):
            d = asdict(c)
            if not timings:
                d.pop("runtime_ms")
            checks.append(d)
        doc = {"schema": SCHEMA, "suite": self.suite, "seed": self.seed,
               "status": "pass" if self.passed else "fail", "checks": checks}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_tsv(self) -> str:
        lines = ["lemma\tstatus\truntime_ms\texpected\tcomputed"]
        for c in sorted(self.checks, key=lambda c: c.lemma):
            lines.append(f"{c.lemma}\t{c.status}\t{c.runtime_ms:.1f}\t{c.expected}\t{c.computed}")
        return "\n".join(lines) + "\n"


def _fmt(x) -> str:
    if isinstance(x, dict):
        return "{" + ", ".join(f"{_fmt(k)}: {_fmt(v)}" for k, v in sorted(x.items(), key=str)) + "}"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in x) + "]"
    if isinstance(x, set):
        return "{" + ", ".join(_fmt(v) for v in sorted(x, key=str)) + "}"
    return str(x)


class Context:
    """Shared, lazily built objects so that ``all`` builds each model once."""

    def __init__(self, seed: int = 0, lattice: lt.IntegerLattice | None = None,
                 code: cd.F4Code | None = None, threads: int = 1):
        self.seed = seed
        self.lattice = lattice
        self.code = code
        self.threads = threads
        self.checks: list[Check] = []

    def check(self, lemma, description, expected, computed, basis="reference", ok=None):
        """Record one check; pass iff computed == expected unless ``ok`` is given."""
        def run():
            return computed() if callable(computed) else computed

        t = time.perf_counter()
        try:
            value = run()
            passed = (value == expected) if ok is None else bool(ok(value))
            shown = _fmt(value)
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            passed, shown = False, f"error: {type(exc).__name__}: {exc}"
        ms = (time.perf_counter() - t) * 1000
        self.checks.append(Check(lemma, description, _fmt(expected), basis, shown,
                                 "pass" if passed else "fail", ms))

    @cached_property
    def k12(self) -> cd.EisensteinLattice:
        return cd.k12()

    @cached_property
    def model(self) -> sg.SigmaModel:
        return sg.build_E_K12(self.k12)

    @cached_property
    def group(self) -> pg.PermGroup:
        return pg.bsgs(self.model.sigma, seed=self.seed)

    @cached_property
    def reflection_lines(self):
        return f3.reflection_permutations(f3.quad_space(8, -1), 1, on="lines")

    @cached_property
    def reflection_group(self) -> pg.PermGroup:
        return pg.bsgs(self.reflection_lines[2], seed=self.seed + 1)

    @cached_property
    def phi(self) -> f3.PhiResult:
        return f3.phi_correspondence(self.model)

    def tensor(self, name) -> sg.SigmaModel:
        cache = self.__dict__.setdefault("_tensor", {})
        if name not in cache:
            cache[name] = sg.build_E_tensor(name)
        return cache[name]


# ---------------------------------------------------------------------------


def suite_codes(ctx: Context):
    h = cd.hexacode()
    ctx.check("code.hexacode.enumerator", "hexacode weight enumerator",
              {0: 1, 4: 45, 6: 18}, h.weight_enumerator)
    ctx.check("code.hexacode.self-dual", "hexacode is Hermitian self-dual", True,
              lambda: h.is_self_dual)
    ctx.check("code.hexacode.min-weight", "hexacode minimal weight", 4, h.minimum_weight)
    ctx.check("code.hexacode.size", "hexacode has 4^3 words", 64,
              lambda: len(list(h.codewords())), "trivial")
    ctx.check("code.zero.enumerator", "zero code of length 3", {0: 1},
              lambda: cd.F4Code(3, []).weight_enumerator(), "trivial")
    ctx.check("code.full.enumerator", "full code of length 1", {0: 1, 1: 3},
              lambda: cd.F4Code(1, [(1,)]).weight_enumerator(), "trivial")
    ctx.check("code.lattice.odd-not-even", "length-1 full code gives a non-even lattice", False,
              lambda: cd.eisenstein_lattice(cd.F4Code(1, [(1,)])).is_even, "derived")
    ctx.check("code.lattice.zero-is-sqrt2A2", "length-1 zero code gives sqrt2 A2", True,
              lambda: lt.isometric_rank2(cd.eisenstein_lattice(cd.F4Code(1, [])).lattice,
                                         lt.rescale(lt.root_lattice("A2"), 2)))
    if ctx.code is not None:
        c = ctx.code
        ctx.check("code.custom.enumerator-total", "custom code: enumerator sums to 4^dim",
                  4 ** c.dimension, lambda: sum(c.weight_enumerator().values()), "trivial")
        ctx.check("code.custom.lattice-evenness", "custom code: lattice even iff code even",
                  c.is_even, lambda: cd.eisenstein_lattice(c).is_even, "reference")


def suite_lattices(ctx: Context):
    a2 = lt.root_lattice("A2")
    ctx.check("lattice.root.A2", "A2 Gram and det", ([[2, -1], [-1, 2]], 3),
              lambda: ([list(r) for r in a2.gram], a2.det), "trivial")
    e8 = lt.root_lattice("E8")
    ctx.check("lattice.root.E8", "E8 det and roots", (1, 240), lambda: (e8.det, len(e8.shell(2))),
              "derived")
    for name, det in (("A5", 6), ("D4", 4), ("D6", 4), ("E6", 3), ("E7", 2)):
        ctx.check(f"lattice.root.{name}.det", f"{name} determinant", det,
                  lambda n=name: lt.root_lattice(n).det, "trivial")
    ctx.check("lattice.rescale.A2", "sqrt2 A2 has 6 norm-4 vectors", 6,
              lambda: len(lt.rescale(a2, 2).shell(4)), "derived")
    ctx.check("lattice.tensor.A2xE6.min", "A2 x E6 has 216 minimal vectors of norm 4", (4, 216),
              lambda: (lambda L: (L.minimum(), len(L.shell(4))))(lt.tensor_product(a2, lt.root_lattice("E6"))),
              "derived")
    ctx.check("lattice.tensor.A2xA1", "A2 x A1 is isometric to sqrt2 A2", True,
              lambda: lt.isometric_rank2(lt.tensor_product(a2, lt.root_lattice("A1")), lt.rescale(a2, 2)))
    for r in ("A1", "A2", "A3", "A4", "A5", "D4", "E6"):
        R = lt.root_lattice(r)
        ctx.check(f"lattice.tensor.nu-index.{r}", f"[A2 x {r} : (1-nu)(A2 x {r})] = 3^rank",
                  3 ** R.rank, lambda R=R: _nu_index(R))
    for r, k in (("A3", 3), ("A2", 1), ("E6", 5), ("A1", 1), ("D4", 4), ("A5", 4)):
        R = lt.root_lattice(r)
        L = lt.tensor_product(a2, R)
        ctx.check(f"lattice.tensor.P-index.{r}", f"[A2 x {r} : P] = 3^{k}", 3 ** k,
                  lambda L=L: lt.index(L, lt.three_divisible_kernel(L)))
    for r in ("A2", "A3", "D4"):
        ctx.check(f"lattice.tensor.rssd.{r}", f"t_A(beta) on A2 x {r} is id x r_beta for every root",
                  True, lambda r=r: _tensor_reflections_ok(lt.root_lattice(r)))
    k = ctx.k12.lattice
    ctx.check("lattice.k12.even", "K12 is even with minimal norm 4 and det 729", (True, 4, 729),
              lambda: (k.is_even, k.minimum(), k.det))
    ctx.check("lattice.k12.shells", "K12 shell sizes of norms 4, 6, 8", [756, 4032, 20412],
              lambda: [len(k.shell(n)) for n in (4, 6, 8)])
    if ctx.lattice is not None:
        L = ctx.lattice
        ctx.check("lattice.custom.shells-symmetric", "custom lattice: shells closed under negation",
                  True, lambda: all(tuple(-x for x in v) in set(vs)
                                    for vs in L.vectors_up_to(max(L.gram[i][i] for i in range(L.rank))).values()
                                    for v in vs), "trivial")


def _nu_index(R) -> int:
    L, nu = sg.tensor_lattice(R)
    n = L.rank
    return lt.index(L, lt.image(L, [[int(i == j) - nu.matrix[i][j] for j in range(n)] for i in range(n)]))


def _tensor_reflections_ok(R) -> bool:
    L, _ = sg.tensor_lattice(R)
    for beta in sg.positive_roots(R):
        a = [x for x in beta] + [0] * R.rank
        b = [0] * R.rank + list(beta)
        M = lt.sublattice(L, [a, b])
        if not lt.is_rssd(L, M):
            return False
        t = lt.rssd_involution(L, M)
        # r_beta on R coordinates: x -> x - (x, beta) beta
        rb = [[int(i == j) - beta[i] * sum(R.gram[m][j] * beta[m] for m in range(R.rank))
               for j in range(R.rank)] for i in range(R.rank)]
        if [list(r) for r in t.matrix] != la.kron(la.identity(2), rb) or not t.preserves(L):
            return False
    return True


def suite_virasoro(ctx: Context):
    ctx.check("vir.c1", "c_1", Fraction(1, 2), lambda: vir.central_charge(1), "trivial")
    ctx.check("vir.c3", "c_3", Fraction(4, 5), lambda: vir.central_charge(3))
    ctx.check("vir.c4", "c_4", Fraction(6, 7), lambda: vir.central_charge(4))
    ctx.check("vir.h3.41", "h_{4,1} at m=3", Fraction(3), lambda: vir.highest_weight(3, 4, 1))
    ctx.check("vir.weights.m3", "weights at m=3 local for the simple current (4,1)",
              {Fraction(0), Fraction(3), Fraction(2, 5), Fraction(7, 5), Fraction(2, 3), Fraction(1, 15)},
              lambda: vir.extension_weights(3))
    ctx.check("vir.weights.m3.kac", "number of distinct weights over the whole m=3 Kac table", 10,
              lambda: len(vir.weights(3)), "derived")
    ctx.check("vir.fusion.simple-current", "(4,1) x (4,1) at m=3", [(1, 1)],
              lambda: vir.fusion(3, (4, 1), (4, 1)), "derived")
    ctx.check("vir.fusion.sigma-type", "h=2/5 fused with itself stays in {0, 3, 2/5, 7/5}", True,
              lambda: {vir.highest_weight(3, *x) for x in vir.fusion(3, vir.label_of_weight(3, Fraction(2, 5)),
                                                                     vir.label_of_weight(3, Fraction(2, 5)))}
              <= {Fraction(0), Fraction(3), Fraction(2, 5), Fraction(7, 5)}, "derived")


def small_algebras():
    """The four small Griess algebras as symbol subsets of tensor models."""
    pair = sg.build_E_tensor(lt.orthogonal_sum(lt.root_lattice("A1"), lt.root_lattice("A1")))
    s3 = sg.build_E_tensor("A1")
    s4 = sg.build_E_tensor("A3")
    nonet = sg.build_E_tensor("A2")
    return {
        "pair": (pair, pair.untwisted()),
        "s3": (s3, list(range(len(s3)))),
        "s4": (s4, s4.untwisted()),
        "nonet": (nonet, list(range(len(nonet)))),
    }


def suite_griess_small(ctx: Context):
    expected = {"pair": (Fraction(1), Fraction(8, 5)), "s3": (Fraction(5, 6), Fraction(2)),
                "s4": (Fraction(5, 7), Fraction(24, 7)), "nonet": (Fraction(5, 9), Fraction(4))}
    dims = {"pair": 2, "s3": 3, "s4": 6, "nonet": 9}
    for name, (model, S) in small_algebras().items():
        def solve(model=model, S=S):
            r = sg.identity_and_charge(model, S)
            coeffs = set(r.coefficients.values())
            return (coeffs.pop() if len(coeffs) == 1 else tuple(sorted(coeffs)), r.central_charge)
        ctx.check(f"griess.{name}.identity", f"identity coefficient and central charge ({name})",
                  expected[name], solve)
        ctx.check(f"griess.{name}.dimension", f"number of Virasoro vectors ({name})", dims[name],
                  len(S))
        ctx.check(f"griess.{name}.eq-identity", f"e.(e.f) = 8(e|f)e + 2/5 e.f on all pairs ({name})",
                  True, lambda model=model, S=S: _quadratic_identity(model, S, S), "reference")
    model, S = small_algebras()["s3"]
    ctx.check("griess.s3.coefficient-6/5", "the coefficient 6/5 instead of 5/6 fails w.w = 2w",
              False, lambda: _is_identity(model, S, Fraction(6, 5)), "derived")


def _is_identity(model, S, c) -> bool:
    w = model.element({i: c for i in S})
    return all(sg.griess_product(w, model.basis_element(i)) == 2 * model.basis_element(i) for i in S)


def _quadratic_identity(model, es, fs) -> bool:
    for e in es:
        E = model.basis_element(e)
        for f in fs:
            F = model.basis_element(f)
            ef = E * F
            rhs = (8 * model.gram(e, f)) * E + Fraction(2, 5) * ef
            if E * ef != rhs:
                return False
    return True


def model_invariants(model: sg.SigmaModel, threads: int = 1) -> dict:
    """Exhaustive structural checks of a sigma table and Gram function."""
    S, G = model.sigma, model.gram_code
    n = len(model)
    ar = np.arange(n)
    out = dict(involution=True, fixes_self=True, gram_preserved=True, fixes_iff=True,
               symmetric=True, conjugation=True)
    for e in range(n):
        s = S[e]
        out["involution"] &= bool(np.array_equal(s[s], ar))
        out["fixes_self"] &= bool(s[e] == e)
        out["gram_preserved"] &= bool(np.array_equal(G[np.ix_(s, s)], G))
        out["fixes_iff"] &= bool(np.array_equal(s == ar, G[e] != 1))
        col = G[e] == 1
        out["symmetric"] &= bool(np.array_equal(s[col], S[col, e]))
        # sigma_e sigma_f sigma_e = sigma_{sigma_e f} for every f
        out["conjugation"] &= bool(np.array_equal(s[S[:, s]], S[s]))
    return out


def suite_tensor_groups(ctx: Context):
    cases = [("A1", 1, 6), ("A3", 3, 648), ("D4", 4, 3 ** 4 * 192), ("A2", 1, 18),
             ("E6", 5, 3 ** 5 * 51840)]
    for name, k, expected in cases:
        R = lt.root_lattice(name)
        model = ctx.tensor(name)
        ctx.check(f"tensor.{name}.size", f"|E({name})| = 3 |R(2)| / 2", 3 * len(R.shell(2)) // 2,
                  lambda m=model: len(m), "derived")
        weyl = pg.weyl_group(R).order()
        ctx.check(f"tensor.{name}.order", f"|<sigma>| = 3^{k} |W({name})| for A2 x {name}",
                  expected, lambda m=model: pg.bsgs(m.sigma, seed=ctx.seed).order(),
                  ok=lambda v, w=weyl, k=k, e=expected: v == e == 3 ** k * w)
        ctx.check(f"tensor.{name}.3-transposition", f"3-transposition property on A2 x {name}",
                  True, lambda m=model: pg.is_3transposition(m.sigma).ok)
        ctx.check(f"tensor.{name}.invariants", f"involution/Gram/conjugation invariants on A2 x {name}",
                  True, lambda m=model: all(model_invariants(m).values()), "derived")
        ctx.check(f"tensor.{name}.eq-identity", f"e.(e.f) = 8(e|f)e + 2/5 e.f exhaustively on A2 x {name}",
                  True, lambda m=model: _quadratic_identity(m, range(len(m)), range(len(m))))
        ctx.check(f"tensor.{name}.gram-orth", "Gram is 0 exactly for orthogonal sublattices", True,
                  lambda m=model: _tensor_gram_ok(m), "derived")
    for name, order in (("A1", 2), ("A3", 24), ("D4", 192), ("A2", 6), ("E6", 51840)):
        ctx.check(f"tensor.weyl.{name}", f"Weyl group order of {name} from reflections", order,
                  lambda n=name: pg.weyl_group(lt.root_lattice(n)).order(), "trivial")


def _tensor_gram_ok(model) -> bool:
    orth = model.info["tables"]["orth"]
    for i, e in enumerate(model.symbols):
        for j, f in enumerate(model.symbols):
            want = 2 if i == j else (0 if orth[e.sub, f.sub] else 1)
            if model.gram_code[i, j] != want:
                return False
    return True


def suite_k12_census(ctx: Context):
    el = ctx.k12
    ctx.check("k12.nu.index", "[K12 : (1-nu)K12]", 729,
              lambda: lt.index(el.lattice, lt.image(el.lattice, [[int(i == j) - el.nu.matrix[i][j]
                                                                  for j in range(12)] for i in range(12)])))
    ctx.check("k12.nu.isometry", "nu preserves the form, has order 3 and no fixed vectors",
              (True, 3, True), lambda: (el.nu.preserves(el.lattice), el.nu.order(),
                                        el.nu.is_fixed_point_free), "reference")
    ctx.check("k12.nu.index-square", "[L:(1-nu)L]^2 = [L:3L]", True,
              lambda: 729 ** 2 == lt.index(el.lattice, lt.sublattice(el.lattice, (3 * np.eye(12, dtype=int)).tolist())),
              "derived")
    ctx.check("k12.census", "coset classes by (minimal norm, size)",
              {(0, 1): 1, (4, 3): 252, (6, 18): 224, (8, 81): 252},
              lambda: cd.coset_census(el).table())
    ctx.check("k12.sublattices", "number of nu-invariant sqrt2 A2 sublattices", 126,
              lambda: len(cd.nu_sublattices(el)))
    ctx.check("k12.companions", "non-orthogonal companions of each sublattice", {80},
              lambda: set(cd.companion_counts(el)))
    ctx.check("k12.n-beta", "n_beta for norms 4, 6, 8", {4: {270}, 6: {270}, 8: {216}},
              lambda: cd.n_beta_values(el))
    ctx.check("k12.z-sizes", "|Z_(a,b)| by (a,b) mod 3 (0: zero, 1: nonzero)", {0: {26}, 1: {30}},
              lambda: cd.z_sizes(el))
    ctx.check("k12.orbit-relations", "a + nu a + nu^2 a = 0 and (a, nu a) = -2 on L(4)", True,
              lambda: _orbit_relations(el), "reference")


def _orbit_relations(el) -> bool:
    nu = np.array(el.nu.matrix)
    g = el.lattice.gram_array
    v = np.array(el.lattice.shell(4))
    nv = v.dot(nu.T)
    nnv = nv.dot(nu.T)
    return bool((v + nv + nnv == 0).all() and (np.einsum("ij,jk,ik->i", v, g, nv) == -2).all())


def suite_k12_sigma(ctx: Context):
    m = ctx.model
    n1 = 3 * m.n_sublattices
    ctx.check("k12.E.sizes", "|E1|, |E2|, total", (378, 729, 1107),
              lambda: (len(m.e1_indices()), len(m.e2_indices()), len(m)))
    u = n1  # class 0
    qd = m.info["quotient"]
    ctx.check("k12.gram.u-eA", "(u | e_A) = 0 for every untwisted A", {Fraction(0)},
              lambda: {m.gram(u, i) for i in m.untwisted()})
    ctx.check("k12.gram.E1E2", "(rho_b u | e_A) is 0 iff (b, A) = 0 mod 3, else 1/25", True,
              lambda: _e1e2_gram_ok(m))
    ctx.check("k12.gram.E2E2", "(rho_b u | u) by norm of b: 4, 6 -> 1/25, 8 -> 0",
              {4: {Fraction(1, 25)}, 6: {Fraction(1, 25)}, 8: {Fraction(0)}, 0: {Fraction(2, 5)}},
              lambda: {int(nm): {m.gram(u, n1 + c) for c in range(len(qd.keys)) if qd.min_norm[c] == nm}
                       for nm in (0, 4, 6, 8)})
    ctx.check("k12.sigma.u-census", "sigma_u: fixed (E1, E2), 2-cycles inside E2 and across",
              (126, 253, 112, 252), lambda: _su_census(m), "derived")
    ctx.check("k12.sigma.norm6", "sigma_u(rho_b u) = rho_b^-1 u for norm-6 b", True,
              lambda: all(m.sigma[u, n1 + c] == n1 + qd.index_of(-qd.keys[c])
                          for c in range(len(qd.keys)) if qd.min_norm[c] == 6))
    ctx.check("k12.sigma.norm4", "sigma_u(rho_b u) = rho_b^-1 e_A(b) for norm-4 b", True,
              lambda: all(m.symbols[m.sigma[u, n1 + c]] ==
                          sg.VirasoroSymbol("E1", m.info["norm4_sub"][c],
                                            int(-m.info["class_pair"][c, m.info["norm4_sub"][c]]) % 3)
                          for c in range(len(qd.keys)) if qd.min_norm[c] == 4))
    ctx.check("k12.sigma.invariants", "involution, Gram preservation, sigma_e f = sigma_f e, conjugation",
              True, lambda: all(model_invariants(m).values()), "derived")
    ctx.check("k12.sigma.3-transposition", "all 612171 products have order <= 3", (True, 612171),
              lambda: (lambda r: (r.ok, r.pairs_checked))(pg.is_3transposition(m.sigma)))
    ctx.check("k12.sigma.injective", "the 1107 sigma permutations are distinct", 1107,
              lambda: len({m.sigma[e].tobytes() for e in range(len(m))}))
    ctx.check("k12.griess.utilde", "u~ = 1/9 sum e_A: u~.u~ = 2u~ and (u~|u~) = 28/5",
              (True, Fraction(28, 5)), lambda: _utilde(m)[:2])
    ctx.check("k12.griess.u", "u = w - u~: u.u = 2u and (u|u) = 2/5", (True, Fraction(2, 5)),
              lambda: _utilde(m)[2:])
    ctx.check("k12.griess.eq-identity", "e.(e.f) = 8(e|f)e + 2/5 e.f on sampled pairs", True,
              lambda: _sampled_identity(m, ctx.seed, 3000))
    ctx.check("k12.griess.eigen", "f - sigma_e f is a 2/5-eigenvector, f + sigma_e f - e/5 a 0-eigenvector",
              True, lambda: _sampled_eigen(m, ctx.seed, 3000))


def _e1e2_gram_ok(m) -> bool:
    n1 = 3 * m.n_sublattices
    cp = m.info["class_pair"]
    for c in range(cp.shape[0]):
        for i in range(n1):
            a, t = divmod(i, 3)
            want = Fraction(0) if (cp[c, a] - t) % 3 == 0 else Fraction(1, 25)
            if m.gram(n1 + c, i) != want:
                return False
    return True


def _su_census(m):
    n1 = 3 * m.n_sublattices
    su = m.sigma[n1]
    fixed = su == np.arange(len(m))
    moved = np.nonzero(~fixed)[0]
    pairs = {(min(i, int(su[i])), max(i, int(su[i]))) for i in moved}
    return (int(fixed[:n1].sum()), int(fixed[n1:].sum()),
            sum(1 for a, _ in pairs if a >= n1), sum(1 for a, _ in pairs if a < n1))


def _utilde(m):
    ut = Fraction(1, 9) * m.element({i: 1 for i in m.untwisted()})
    u = m.omega() - ut
    return (ut * ut == 2 * ut, sg.inner(ut, ut), u * u == 2 * u, sg.inner(u, u))


def _sample_pairs(m, seed, k):
    rng = np.random.default_rng(seed)
    return rng.integers(0, len(m), size=(k, 2)).tolist()


def _sampled_identity(m, seed, k) -> bool:
    for e, f in _sample_pairs(m, seed, k):
        if not _quadratic_identity(m, [e], [f]):
            return False
    return True


def _sampled_eigen(m, seed, k) -> bool:
    for e, f in _sample_pairs(m, seed + 1, k):
        if m.gram(e, f) != Fraction(1, 25):
            continue
        E, F = m.basis_element(e), m.basis_element(f)
        G = m.basis_element(m.sigma[e, f])
        if E * (F - G) != Fraction(2, 5) * (F - G):
            return False
        if E * (F + G - Fraction(1, 5) * E) != m.element():
            return False
    return True


def suite_k12_group(ctx: Context):
    m = ctx.model
    G = ctx.group
    ctx.check("k12.group.order", "|G| equals the order of the (8,-) reflection group on lines",
              20303937239040, G.order, "derived")
    ctx.check("k12.group.orbit", "G is transitive on the 1107 symbols", [1107],
              lambda: [len(o) for o in G.orbits()], "derived")
    ctx.check("k12.group.membership", "every generator is a member; a transposition is not", (True, False),
              lambda: (all(G.contains(g) for g in m.sigma[::37]),
                       G.contains(np.r_[[1, 0], np.arange(2, len(m))])), "trivial")
    y6 = f3.quad_space(6, -1)
    ref6 = f3.reflection_group(y6, 1, on="vectors", seed=ctx.seed).order()
    H = pg.bsgs(m.sigma[:3 * m.n_sublattices], seed=ctx.seed)
    ctx.check("k12.group.E1-subgroup", "|<sigma_e : e in E1>| = 3^6 |+Omega-(6,3)|", 3 ** 6 * ref6,
              H.order)
    ctx.check("k12.group.E1-orbits", "orbits of the E1-subgroup (E1 and E2)", [378, 729],
              lambda: sorted(len(o) for o in H.orbits()), "derived")


def suite_phi(ctx: Context):
    m = ctx.model
    points, _, gens = ctx.reflection_lines
    ctx.check("phi.lines", "norm-1 lines of the (8,-) space", 1107, len(points), "derived")
    ctx.check("phi.reflection-order", "order of +Omega-(8,3) on lines (independent Schreier-Sims)",
              True, lambda: ctx.reflection_group.order() == ctx.group.order(), "reference")
    ctx.check("phi.reflection-orbit", "reflection group is transitive on lines", [1107],
              lambda: [len(o) for o in pg.orbits(gens, len(points))], "derived")
    res = ctx.phi
    ctx.check("phi.cases", "line counts by U-part", {"0": 126, "v0": 252, "v0'": 252, "v1": 225, "v2": 252},
              res.case_counts, "derived")
    ctx.check("phi.equivariance", "sigma_phi(x) o phi = phi o r_x for all 1107 generators", True,
              res.ok, "derived")
    ctx.check("phi.labeling", "U-labeling found by search", "v0=(1, 0) v0'=(0, 2) v1=(1, 1) v2=(2, 1)",
              str(res.labeling), "derived")

    def compare(phi):
        # r_x on the lines of U + Y against sigma_phi(x) on symbols, through phi
        line_gens = res.line_generators
        sig = [m.sigma[phi[k]] for k in range(len(phi))]
        return pg.actions_isomorphic(line_gens, sig, phi, ctx.reflection_group.order(),
                                     ctx.group.order()).ok

    ctx.check("phi.actions", "paired generators agree and orders match", True,
              lambda: compare(res.phi), "derived")

    def broken():
        phi = res.phi.copy()
        phi[[0, 1]] = phi[[1, 0]]
        return compare(phi)
    ctx.check("phi.negative-control", "phi with two images swapped is not equivariant", False,
              broken, "trivial")


RUNNERS = {
    "codes": suite_codes,
    "lattices": suite_lattices,
    "virasoro": suite_virasoro,
    "griess-small": suite_griess_small,
    "tensor-groups": suite_tensor_groups,
    "k12-census": suite_k12_census,
    "k12-sigma": suite_k12_sigma,
    "k12-group": suite_k12_group,
    "phi-oracle": suite_phi,
}


def run_suite(name: str, seed: int = 0, ctx: Context | None = None, **kw) -> Report:
    if name != "all" and name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    ctx = ctx or Context(seed=seed, **kw)
    ctx.checks = []
    for s in (SUITES if name == "all" else (name,)):
        RUNNERS[s](ctx)
    return Report(name, ctx.seed, list(ctx.checks))
