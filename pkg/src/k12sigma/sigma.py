"""Symbolic extendable c=4/5 Virasoro vectors and their sigma-involutions.

A model is a finite set of symbols with an exact Gram function and a table
``sigma[e, f]`` giving the index of sigma_e(f).  Two kinds of symbol occur:

* E1 symbol ``(A, t)``: the vector rho_{t*a} e_A, where A = span(a, nu a) is a
  nu-invariant sqrt2 A2 sublattice with fixed base vector a of norm 4.  The
  twist of rho_x e_A is (x, a) mod 3.
* E2 symbol ``beta``: the vector rho_beta u for a class beta of L/(1-nu)L
  (only in the K12 model).

Gram values are stored as codes 0, 1, 2 meaning 0, 1/25, 2/5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import lattices as lt
from . import linalg as la
from .codes import EisensteinLattice, coset_census, k12

GRAM_VALUES = (Fraction(0), Fraction(1, 25), Fraction(2, 5))


@dataclass(frozen=True, order=True)
class VirasoroSymbol:
    kind: str  # "E1" or "E2"
    sub: int = -1  # sublattice id (E1)
    twist: int = 0  # E1 twist in Z/3
    cls: tuple = ()  # quotient class key (E2)

    def __str__(self):
        if self.kind == "E1":
            return f"e{self.sub}" + (f"^{self.twist}" if self.twist else "")
        return "u[" + "".join(map(str, self.cls)) + "]"


class ModelMismatch(ValueError):
    pass


@dataclass(eq=False)
class SigmaModel:
    name: str
    symbols: list[VirasoroSymbol]
    sigma: np.ndarray  # (n, n) int32, sigma[e, f] = index of sigma_e f
    gram_code: np.ndarray  # (n, n) int8
    omega_norm: Fraction
    n_sublattices: int
    info: dict = field(default_factory=dict, repr=False)

    @cached_property
    def index(self) -> dict[VirasoroSymbol, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def __len__(self):
        return len(self.symbols)

    def _idx(self, e) -> int:
        if isinstance(e, VirasoroSymbol):
            try:
                return self.index[e]
            except KeyError:
                raise ModelMismatch(f"{e} is not a symbol of model {self.name}") from None
        e = int(e)
        if not 0 <= e < len(self.symbols):
            raise ModelMismatch(f"index {e} out of range for model {self.name}")
        return e

    def gram(self, e, f) -> Fraction:
        return GRAM_VALUES[self.gram_code[self._idx(e), self._idx(f)]]

    def sigma_apply(self, e, f) -> VirasoroSymbol:
        return self.symbols[self.sigma[self._idx(e), self._idx(f)]]

    def e1_indices(self) -> list[int]:
        return [i for i, s in enumerate(self.symbols) if s.kind == "E1"]

    def e2_indices(self) -> list[int]:
        return [i for i, s in enumerate(self.symbols) if s.kind == "E2"]

    def untwisted(self) -> list[int]:
        return [i for i, s in enumerate(self.symbols) if s.kind == "E1" and s.twist == 0]

    def element(self, coeffs=None, omega=0) -> "GriessElement":
        c = {}
        for k, v in (coeffs or {}).items():
            if Fraction(v):
                c[self._idx(k)] = Fraction(v)
        return GriessElement(self, Fraction(omega), c)

    def basis_element(self, e) -> "GriessElement":
        return self.element({e: 1})

    def omega(self) -> "GriessElement":
        return GriessElement(self, Fraction(1), {})


# ---------------------------------------------------------------------------
# Griess engine


@dataclass(eq=False)
class GriessElement:
    model: SigmaModel
    omega_coeff: Fraction
    coeffs: dict  # symbol index -> Fraction

    def _check(self, other: "GriessElement"):
        if other.model is not self.model:
            raise ModelMismatch("elements belong to different models")

    def _clean(self):
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}
        return self

    def __add__(self, other):
        self._check(other)
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, 0) + v
        return GriessElement(self.model, self.omega_coeff + other.omega_coeff, c)._clean()

    def __neg__(self):
        return GriessElement(self.model, -self.omega_coeff, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        s = Fraction(scalar)
        return GriessElement(self.model, s * self.omega_coeff,
                             {k: s * v for k, v in self.coeffs.items()})._clean()

    def __eq__(self, other):
        if not isinstance(other, GriessElement):
            return NotImplemented
        return (self.model is other.model and self.omega_coeff == other.omega_coeff
                and self._clean().coeffs == other._clean().coeffs)

    def __mul__(self, other):
        if not isinstance(other, GriessElement):
            return Fraction(other) * self
        return griess_product(self, other)

    def __repr__(self):
        parts = []
        if self.omega_coeff:
            parts.append(f"{self.omega_coeff}*w")
        for k in sorted(self.coeffs):
            parts.append(f"{self.coeffs[k]}*{self.model.symbols[k]}")
        return " + ".join(parts) or "0"


def _basis_product(model: SigmaModel, i: int, j: int) -> dict:
    code = model.gram_code[i, j]
    if i == j:
        return {i: Fraction(2)}
    if code == 0:
        return {}
    if code != 1:
        raise ValueError("distinct symbols with Gram value 2/5")
    k = int(model.sigma[i, j])
    out: dict = {}
    for idx, c in ((i, 1), (j, 1), (k, -1)):
        out[idx] = out.get(idx, 0) + Fraction(c, 5)
    return out


def griess_product(x: GriessElement, y: GriessElement) -> GriessElement:
    """Bilinear product: e.e = 2e, e.f = 0 or (e + f - sigma_e f)/5, w.x = 2x."""
    x._check(y)
    m = x.model
    out: dict = {}

    def add(k, v):
        out[k] = out.get(k, 0) + v

    omega = 2 * x.omega_coeff * y.omega_coeff
    for k, v in y.coeffs.items():
        add(k, 2 * x.omega_coeff * v)
    for k, v in x.coeffs.items():
        add(k, 2 * y.omega_coeff * v)
    for i, a in x.coeffs.items():
        for j, b in y.coeffs.items():
            for k, c in _basis_product(m, i, j).items():
                add(k, a * b * c)
    return GriessElement(m, omega, out)._clean()


def inner(x: GriessElement, y: GriessElement) -> Fraction:
    """Invariant form: (e|f) from the model, (w|e) = 2/5, (w|w) a model parameter."""
    x._check(y)
    m = x.model
    s = x.omega_coeff * y.omega_coeff * m.omega_norm
    s += x.omega_coeff * Fraction(2, 5) * sum(y.coeffs.values(), Fraction(0))
    s += y.omega_coeff * Fraction(2, 5) * sum(x.coeffs.values(), Fraction(0))
    for i, a in x.coeffs.items():
        for j, b in y.coeffs.items():
            s += a * b * GRAM_VALUES[m.gram_code[i, j]]
    return s


class NoIdentityError(ValueError):
    pass


@dataclass(frozen=True)
class IdentityResult:
    coefficients: dict  # symbol index -> Fraction
    central_charge: Fraction


def identity_and_charge(model: SigmaModel, symbols) -> IdentityResult:
    """Solve w.e_i = 2 e_i for w in span(S); central charge = 2 (w|w)."""
    idx = [model._idx(s) for s in symbols]
    pos = {k: n for n, k in enumerate(idx)}
    # products e_i.e_j as coordinate vectors in S
    prod = {}
    for i in idx:
        for j in idx:
            p = _basis_product(model, i, j)
            if any(k not in pos for k in p):
                raise NoIdentityError("span of the given symbols is not closed under the product")
            prod[i, j] = p
    n = len(idx)
    # unknown c_i; equations: sum_i c_i (e_i.e_j)[k] = 2 delta_jk
    rows, rhs = [], []
    for j in idx:
        for k in idx:
            rows.append([prod[i, j].get(k, Fraction(0)) for i in idx])
            rhs.append(Fraction(2 * (j == k)))
    sol = la.solve_rational(rows, rhs)
    if sol is None:
        raise NoIdentityError("no identity element in the span")
    w = model.element({idx[i]: sol[i] for i in range(n)})
    return IdentityResult({idx[i]: sol[i] for i in range(n)}, 2 * inner(w, w))


# ---------------------------------------------------------------------------
# lattice-based construction


def _pair_mod3(g: np.ndarray, x: np.ndarray, y: np.ndarray) -> int:
    return int(x.dot(g).dot(y)) % 3


def _reflection_matrix(g: np.ndarray, a: np.ndarray, na: np.ndarray) -> np.ndarray:
    """t_A for A = span(a, na) with a, na of norm 4 and (a, na) = -2."""
    n = len(a)
    ga, gna = g.dot(a), g.dot(na)
    num = np.outer(a, 2 * ga + gna) + np.outer(na, ga + 2 * gna)
    if np.any(num % 3):
        raise ValueError("sublattice is not RSSD")
    return np.eye(n, dtype=np.int64) - num // 3


@dataclass
class _Frame:
    lattice: lt.IntegerLattice
    nu: np.ndarray
    bases: np.ndarray  # (nA, r) base vector per sublattice
    refl: np.ndarray  # (nA, r, r)
    sub_of: dict  # norm-4 vector tuple -> sublattice id


def _frame(lattice: lt.IntegerLattice, nu, bases) -> _Frame:
    g = lattice.gram_array
    nu = np.array(nu, dtype=np.int64)
    bases = np.array(bases, dtype=np.int64)
    refl = np.array([_reflection_matrix(g, a, nu.dot(a)) for a in bases])
    sub_of = {}
    for k, a in enumerate(bases):
        v = a
        for _ in range(3):
            sub_of[tuple(v.tolist())] = k
            sub_of[tuple((-v).tolist())] = k
            v = nu.dot(v)
    return _Frame(lattice, nu, bases, refl, sub_of)


def _e1_tables(fr: _Frame):
    """C[A, B], p[A, C] = (a_A, a_C) mod 3 and q[A, B] = (t_A a_B, a_{C}) mod 3."""
    g = fr.lattice.gram_array
    na = len(fr.bases)
    target = np.zeros((na, na), dtype=np.int64)
    q = np.zeros((na, na), dtype=np.int64)
    for a in range(na):
        imgs = fr.bases.dot(fr.refl[a].T)  # t_A applied to every base
        for b in range(na):
            v = imgs[b]
            c = fr.sub_of[tuple(v.tolist())]
            target[a, b] = c
            q[a, b] = _pair_mod3(g, v, fr.bases[c])
    p = (fr.bases.dot(g).dot(fr.bases.T)) % 3
    orth = np.zeros((na, na), dtype=bool)
    nub = fr.bases.dot(fr.nu.T)
    ip1 = fr.bases.dot(g).dot(fr.bases.T)
    ip2 = fr.bases.dot(g).dot(nub.T)
    orth = (ip1 == 0) & (ip2 == 0)
    return target, p, q, orth


def _e1_block(fr: _Frame):
    """sigma and Gram codes restricted to E1 (index 3A + t)."""
    target, p, q, orth = _e1_tables(fr)
    na = len(fr.bases)
    n1 = 3 * na
    sig = np.zeros((n1, n1), dtype=np.int32)
    A = np.arange(na)
    for a in range(na):
        for s in range(3):
            e = 3 * a + s
            for t in range(3):
                c = target[a]
                tw = (2 * s * p[a, c] + t * q[a, A]) % 3
                sig[e, 3 * A + t] = 3 * c + tw
    gram = np.ones((n1, n1), dtype=np.int8)
    orth3 = np.repeat(np.repeat(orth, 3, axis=0), 3, axis=1)
    gram[orth3] = 0
    np.fill_diagonal(gram, 2)
    return sig, gram, dict(target=target, p=p, q=q, orth=orth)


def _orbit_bases(vectors, nu: np.ndarray):
    """Group norm-4 vectors into sets {+-nu^k a}; the first vector of each set is its base."""
    seen = set()
    bases = []
    for v in vectors:
        if tuple(v) in seen:
            continue
        bases.append(list(v))
        w = np.array(v, dtype=np.int64)
        for _ in range(3):
            seen.add(tuple(w.tolist()))
            seen.add(tuple((-w).tolist()))
            w = nu.dot(w)
    return bases


def positive_roots(r: lt.IntegerLattice) -> list[tuple[int, ...]]:
    """One root from each pair +-beta (the lexicographically larger one)."""
    roots = r.shell(2)
    return sorted({max(b, tuple(-x for x in b)) for b in roots}, reverse=True)


def tensor_lattice(r: lt.IntegerLattice):
    """A2 tensor R together with nu = rotation tensor identity."""
    a2 = lt.root_lattice("A2")
    lat = lt.tensor_product(a2, r)
    nu = la.kron(lt.a2_rotation(), la.identity(r.rank))
    return lat, lt.Isometry(nu)


def build_E_tensor(r: lt.IntegerLattice | str) -> SigmaModel:
    """E(R): three symbols per root pair, A(beta) = A2 tensor beta with base a1 tensor beta."""
    if isinstance(r, str):
        r = lt.root_lattice(r)
    lat, nu = tensor_lattice(r)
    roots = positive_roots(r)
    bases = [list(b) + [0] * r.rank for b in roots]  # a1 tensor beta
    fr = _frame(lat, nu.matrix, bases)
    sig, gram, tables = _e1_block(fr)
    symbols = [VirasoroSymbol("E1", a, t) for a in range(len(bases)) for t in range(3)]
    return SigmaModel(f"A2x{r.name}", symbols, sig, gram, Fraction(lat.rank, 2), len(bases),
                      info=dict(frame=fr, roots=roots, tables=tables))


@dataclass(eq=False)
class QuotientData:
    """Y = L/(1-nu)L as F3^m with class indices in base-3 order of the keys."""

    keys: np.ndarray  # (3^m, m)
    reduce: np.ndarray  # (m, r): key(v) = reduce @ v mod 3
    reps: np.ndarray  # (m, r): lattice preimages of the unit keys
    pairing: np.ndarray  # (m, r): (rep(key), v) = key @ pairing @ v mod 3
    min_norm: np.ndarray  # (3^m,) minimal norm per class

    @property
    def dim(self) -> int:
        return self.keys.shape[1]

    def index_of(self, keys: np.ndarray) -> np.ndarray:
        w = 3 ** np.arange(self.dim - 1, -1, -1)
        return (np.asarray(keys) % 3).dot(w)

    def key_of_vectors(self, vs) -> np.ndarray:
        return np.asarray(vs, dtype=np.int64).dot(self.reduce.T) % 3

    def action(self, m: np.ndarray) -> np.ndarray:
        """Matrix over F3 (acting on key row vectors from the right) of a lattice map m."""
        imgs = self.reps.dot(m.T)  # rows: m(rep_j)
        return self.key_of_vectors(imgs)  # row j = key of m(rep_j)


def quotient_data(el: EisensteinLattice) -> QuotientData:
    q = el.quotient
    if set(q.divisors) != {3}:
        raise ValueError("quotient is not elementary abelian of exponent 3")
    m = len(q.divisors)
    keys = np.array(q.all_keys(), dtype=np.int64).reshape(-1, m)
    pos, rows, _ = q._rows
    reps = np.array([q.representative([int(i == j) for i in range(m)]) for j in range(m)],
                    dtype=np.int64)
    g = el.lattice.gram_array
    census = coset_census(el)
    qd = QuotientData(keys, rows % 3, reps, reps.dot(g) % 3, np.zeros(len(keys), dtype=np.int64))
    idx = qd.index_of(np.array(list(census.classes.keys()), dtype=np.int64))
    qd.min_norm[idx] = [v[0] for v in census.classes.values()]
    return qd


def build_E_K12(el: EisensteinLattice | None = None) -> SigmaModel:
    """E1 (378 symbols) and E2 (729 symbols) for the lattice of an even code (K12 by default)."""
    el = el or k12()
    lat = el.lattice
    nu = np.array(el.nu.matrix, dtype=np.int64)
    bases = _orbit_bases(lat.shell(4), nu)
    fr = _frame(lat, nu, bases)
    qd = quotient_data(el)
    na = len(bases)
    n1 = 3 * na
    ncls = len(qd.keys)
    n = n1 + ncls

    sig11, gram11, tables = _e1_block(fr)
    base_keys = qd.key_of_vectors(fr.bases)  # class of a_A
    w = (qd.pairing.dot(fr.bases.T) % 3).T  # w[A] . key = (class, a_A) mod 3
    class_pair = qd.keys.dot(w.T) % 3  # (ncls, nA)

    sigma = np.zeros((n, n), dtype=np.int32)
    sigma[:n1, :n1] = sig11
    # E1 generators on E2: beta -> t_A beta + 2 s a_A
    for a in range(na):
        moved = qd.keys.dot(qd.action(fr.refl[a]))
        for s in range(3):
            sigma[3 * a + s, n1:] = n1 + qd.index_of(moved + 2 * s * base_keys[a])

    # sigma_u, with u the class-0 symbol
    norm4_sub = {}
    for v in lat.shell(4):
        norm4_sub[int(qd.index_of(qd.key_of_vectors([v]))[0])] = fr.sub_of[tuple(v)]
    su = np.arange(n, dtype=np.int64)
    for a in range(na):
        plus = int(qd.index_of(base_keys[a]))
        minus = int(qd.index_of(-base_keys[a]))
        for t, c in ((2, plus), (1, minus)):
            if norm4_sub[c] != a:
                raise AssertionError("norm-4 class does not lie over its sublattice")
            su[3 * a + t] = n1 + c
            su[n1 + c] = 3 * a + t
    for c in range(ncls):
        nm = qd.min_norm[c]
        if nm == 6:
            su[n1 + c] = n1 + qd.index_of(-qd.keys[c])
        elif nm == 4:
            a = norm4_sub[c]
            if su[n1 + c] != 3 * a + (-class_pair[c, a]) % 3:
                raise AssertionError("sigma_u bridge disagrees with the twist rule")

    # rho_z permutations for every class z
    def rho(z: np.ndarray) -> np.ndarray:
        out = np.empty(n, dtype=np.int64)
        shift = (z.dot(w.T)) % 3  # per sublattice
        t = np.arange(n1) % 3
        a = np.arange(n1) // 3
        out[:n1] = 3 * a + (t + shift[a]) % 3
        out[n1:] = n1 + qd.index_of(qd.keys + z)
        return out

    for c in range(ncls):
        z = qd.keys[c]
        rp, rm = rho(z), rho(-z)
        # sigma_{rho_z u} = rho_z sigma_u rho_{-z}
        sigma[n1 + c] = rp[su[rm]]

    gram = np.zeros((n, n), dtype=np.int8)
    gram[:n1, :n1] = gram11
    # E1-E2: (rho_beta u | rho_{t a} e_A) = 0 iff (beta, a) - t = 0 mod 3
    t = np.arange(n1) % 3
    a = np.arange(n1) // 3
    g12 = ((class_pair[:, a] - t[None, :]) % 3 != 0).astype(np.int8)  # (ncls, n1)
    gram[n1:, :n1] = g12
    gram[:n1, n1:] = g12.T
    diff = qd.index_of(qd.keys[:, None, :] - qd.keys[None, :, :])
    norms = qd.min_norm[diff]
    g22 = np.select([norms == 0, (norms == 4) | (norms == 6)], [2, 1], 0).astype(np.int8)
    gram[n1:, n1:] = g22

    symbols = [VirasoroSymbol("E1", a_, t_) for a_ in range(na) for t_ in range(3)]
    symbols += [VirasoroSymbol("E2", cls=tuple(int(x) for x in k)) for k in qd.keys]
    return SigmaModel("K12", symbols, sigma, gram, Fraction(lat.rank, 2), na,
                      info=dict(frame=fr, quotient=qd, tables=tables, sigma_u=su,
                                eisenstein=el, norm4_sub=norm4_sub, class_pair=class_pair))
