"""Codes over F4 and their lattices over the Eisenstein integers.

F4 = {0, 1, w, W} is encoded as the integers 0, 1, 2, 3 (W = w^2 = w + 1),
so addition is XOR.  An Eisenstein integer a + b*z (z a primitive cube root
of unity) is stored as the integer pair (a, b).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import linalg as la
from .lattices import IntegerLattice, Isometry

SYMBOLS = "01wW"
_LOG = {1: 0, 2: 1, 3: 2}
_EXP = [1, 2, 3]


def f4_mul(x: int, y: int) -> int:
    if x == 0 or y == 0:
        return 0
    return _EXP[(_LOG[x] + _LOG[y]) % 3]


def f4_conj(x: int) -> int:
    """Frobenius x -> x^2."""
    return f4_mul(x, x)


def f4_inv(x: int) -> int:
    return _EXP[(-_LOG[x]) % 3]


def parse_word(text: str) -> tuple[int, ...]:
    return tuple(SYMBOLS.index(ch) for ch in text.replace(" ", ""))


def format_word(word) -> str:
    return "".join(SYMBOLS[x] for x in word)


def hermitian(x, y) -> int:
    s = 0
    for a, b in zip(x, y):
        s ^= f4_mul(a, f4_conj(b))
    return s


@dataclass(frozen=True)
class F4Code:
    length: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        if any(len(g) != self.length or any(x not in (0, 1, 2, 3) for x in g) for g in gens):
            raise ValueError("generator rows must have the code length and entries in F4")
        object.__setattr__(self, "generators", gens)

    @cached_property
    def basis(self) -> list[tuple[int, ...]]:
        """Row-reduced basis (Gaussian elimination over F4)."""
        rows = [list(g) for g in self.generators]
        out = []
        col = 0
        while rows and col < self.length:
            piv = next((r for r in rows if r[col]), None)
            if piv is None:
                col += 1
                continue
            rows.remove(piv)
            inv = f4_inv(piv[col])
            piv = [f4_mul(inv, x) for x in piv]
            rows = [[a ^ f4_mul(r[col], b) for a, b in zip(r, piv)] for r in rows]
            rows = [r for r in rows if any(r)]
            out.append(tuple(piv))
            col += 1
        return out

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def codewords(self, max_dim: int = 12):
        if self.dimension > max_dim:
            raise ValueError("code too large to enumerate")
        for coeffs in itertools.product(range(4), repeat=self.dimension):
            w = [0] * self.length
            for c, row in zip(coeffs, self.basis):
                if c:
                    w = [a ^ f4_mul(c, b) for a, b in zip(w, row)]
            yield tuple(w)

    def weight_enumerator(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for w in self.codewords():
            k = sum(1 for x in w if x)
            counts[k] = counts.get(k, 0) + 1
        return dict(sorted(counts.items()))

    def minimum_weight(self) -> int:
        return min((k for k in self.weight_enumerator() if k > 0), default=0)

    @property
    def is_even(self) -> bool:
        return all(k % 2 == 0 for k in self.weight_enumerator())

    @property
    def is_self_dual(self) -> bool:
        if 2 * self.dimension != self.length:
            return False
        return all(hermitian(x, y) == 0 for x in self.basis for y in self.basis)


def hexacode() -> F4Code:
    rows = ["001 111", "010 1wW", "100 1Ww"]
    return F4Code(6, [parse_word(r) for r in rows])


def read_code_file(path) -> F4Code:
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    n, k = (int(t) for t in lines[0].split())
    rows = [parse_word(ln) for ln in lines[1:1 + k]]
    if len(rows) != k:
        raise ValueError("code file is truncated")
    return F4Code(n, rows)


# ---------------------------------------------------------------------------
# Eisenstein integers

# z acts on (a, b) = a + b z as (a, b) -> (-b, a - b)
ZETA = [[0, -1], [1, -1]]
# Re(u * conj(v)) on the (1, z) basis
EIS_GRAM = [[Fraction(1), Fraction(-1, 2)], [Fraction(-1, 2), Fraction(1)]]
# representatives of E / 2E indexed by the F4 encoding
LIFT = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)}


def eta(a: int, b: int) -> int:
    """Reduction E -> E/2E = F4 (z maps to w)."""
    return {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}[(a % 2, b % 2)]


def lift_word(word) -> list[int]:
    out = []
    for x in word:
        out.extend(LIFT[x])
    return out


@dataclass(frozen=True, eq=False)
class EisensteinLattice:
    """L_C = {x in E^n : eta(x) in C} with the form Re<u, v>.

    ``basis`` rows are ambient coordinates (pairs (a, b) per position).
    """

    code: F4Code

    @cached_property
    def basis(self) -> list[list[int]]:
        n = self.code.length
        gens = [[2 * int(i == j) for j in range(2 * n)] for i in range(2 * n)]
        for row in self.code.basis:
            gens.append(lift_word(row))
            gens.append(lift_word([f4_mul(2, x) for x in row]))
        return la.hermite_normal_form(gens)

    @cached_property
    def ambient_gram(self) -> list[list[Fraction]]:
        n = self.code.length
        g = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
        for k in range(n):
            for i in range(2):
                for j in range(2):
                    g[2 * k + i][2 * k + j] = EIS_GRAM[i][j]
        return g

    @cached_property
    def gram_fraction(self) -> list[list[Fraction]]:
        b = self.basis
        return la.matmul(la.matmul(b, self.ambient_gram), la.transpose(b))

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.gram_fraction for x in row)

    @property
    def is_even(self) -> bool:
        return self.is_integral and all(self.gram_fraction[i][i] % 2 == 0
                                        for i in range(len(self.basis)))

    @cached_property
    def lattice(self) -> IntegerLattice:
        if not self.is_integral:
            raise ValueError("code lattice is not integral (the code is not even)")
        return IntegerLattice([[int(x) for x in row] for row in self.gram_fraction],
                              name="L_C")

    @cached_property
    def nu(self) -> Isometry:
        """Multiplication by z in lattice coordinates (acts on column vectors)."""
        n = self.code.length
        z = la.zeros(2 * n, 2 * n)
        for k in range(n):
            for i in range(2):
                for j in range(2):
                    z[2 * k + i][2 * k + j] = ZETA[i][j]
        bt = la.transpose(self.basis)
        m = la.matmul(la.rational_inverse(bt), la.matmul(z, bt))
        if any(x.denominator != 1 for row in m for x in row):
            raise ValueError("code is not F4-linear: z does not preserve L_C")
        return Isometry([[int(x) for x in row] for row in m])

    def to_ambient(self, x) -> list[int]:
        return la.matvec(la.transpose(self.basis), x)

    @cached_property
    def quotient(self) -> "NuQuotient":
        return NuQuotient(self.lattice, self.nu)


def eisenstein_lattice(code: F4Code) -> EisensteinLattice:
    return EisensteinLattice(code)


def k12() -> EisensteinLattice:
    return eisenstein_lattice(hexacode())


# ---------------------------------------------------------------------------
# L / (1 - nu) L


@dataclass(frozen=True, eq=False)
class NuQuotient:
    """The quotient L/(1-nu)L with classes keyed by their SNF coordinates."""

    lattice: IntegerLattice
    nu: Isometry

    @cached_property
    def _snf(self):
        n = self.lattice.rank
        one_minus = [[int(i == j) - self.nu.matrix[i][j] for j in range(n)] for i in range(n)]
        d, u, _ = la.smith_normal_form(one_minus)
        if any(x == 0 for x in d):
            raise ValueError("nu has nonzero fixed vectors")
        return d, u

    @property
    def divisors(self) -> list[int]:
        return [x for x in self._snf[0] if x != 1]

    @property
    def order(self) -> int:
        out = 1
        for x in self._snf[0]:
            out *= x
        return out

    @cached_property
    def _rows(self):
        d, u = self._snf
        pos = [i for i, x in enumerate(d) if x != 1]
        return pos, np.array([u[i] for i in pos], dtype=np.int64), np.array([d[i] for i in pos])

    def key(self, v) -> tuple[int, ...]:
        pos, rows, mods = self._rows
        return tuple(int(x) for x in (rows.dot(np.asarray(v, dtype=np.int64)) % mods))

    def keys(self, vs) -> np.ndarray:
        """Class keys of many vectors (rows) at once."""
        _, rows, mods = self._rows
        return np.asarray(vs, dtype=np.int64).dot(rows.T) % mods

    @cached_property
    def _u_inv(self):
        d, u = self._snf
        return [[int(x) for x in row] for row in la.rational_inverse(u)]

    def representative(self, key) -> tuple[int, ...]:
        """A lattice vector in the class with the given key."""
        d, _ = self._snf
        pos = self._rows[0]
        y = [0] * len(d)
        for p, k in zip(pos, key):
            y[p] = int(k)
        return tuple(la.matvec(self._u_inv, y))

    def all_keys(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*[range(m) for m in self.divisors]))


@dataclass(frozen=True)
class CosetCensus:
    # key -> (minimal norm, number of vectors of that norm in the class)
    classes: dict

    def table(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for norm, size in self.classes.values():
            out[(norm, size)] = out.get((norm, size), 0) + 1
        return dict(sorted(out.items()))


def coset_census(el: EisensteinLattice, bound: int = 8, max_index: int = 3 ** 8) -> CosetCensus:
    q = el.quotient
    if q.order > max_index:
        raise ValueError("quotient too large to census")
    lat = el.lattice
    classes: dict = {}
    for norm, vs in sorted(lat.vectors_up_to(bound).items()):
        for key in map(tuple, q.keys(vs).tolist()):
            if key not in classes:
                classes[key] = [norm, 1]
            elif classes[key][0] == norm:
                classes[key][1] += 1
    if len(classes) != q.order:
        raise ValueError(f"norm bound {bound} does not reach every class")
    return CosetCensus({k: tuple(v) for k, v in sorted(classes.items())})


# ---------------------------------------------------------------------------
# nu-invariant sqrt2 A2 sublattices and the mod-3 pairing counts


def nu_sublattices(el: EisensteinLattice) -> list[np.ndarray]:
    """The sets {+-nu^k a} of norm-4 vectors; each spans a nu-invariant sqrt2 A2."""
    nu = np.array(el.nu.matrix, dtype=np.int64)
    seen: set = set()
    out = []
    for v in el.lattice.shell(4):
        if v in seen:
            continue
        w = np.array(v, dtype=np.int64)
        orbit = []
        for _ in range(3):
            orbit += [w, -w]
            w = nu.dot(w)
        seen.update(tuple(x.tolist()) for x in orbit)
        out.append(np.array(orbit))
    return out


def companion_counts(el: EisensteinLattice) -> list[int]:
    """For each sublattice A, the number of other sublattices not orthogonal to A."""
    g = el.lattice.gram_array
    subs = nu_sublattices(el)
    stacked = np.array([s for s in subs])  # (nA, 6, r)
    flat = stacked.reshape(-1, stacked.shape[-1])
    ip = flat.dot(g).dot(flat.T).reshape(len(subs), 6, len(subs), 6)
    touching = (ip != 0).any(axis=(1, 3))
    return (touching.sum(axis=1) - 1).tolist()


def n_beta(el: EisensteinLattice, beta) -> int:
    """#{a in L(4) : (a, beta) = 0 mod 3}."""
    l4 = np.array(el.lattice.shell(4), dtype=np.int64)
    return int(((l4.dot(el.lattice.gram_array).dot(np.asarray(beta)) % 3) == 0).sum())


def n_beta_values(el: EisensteinLattice, norms=(4, 6, 8)) -> dict[int, set[int]]:
    """The set of values n_beta takes over every beta of each norm (exhaustive)."""
    g = el.lattice.gram_array
    l4 = np.array(el.lattice.shell(4), dtype=np.int64)
    out = {}
    for n in norms:
        bs = np.array(el.lattice.shell(n), dtype=np.int64)
        counts = ((l4.dot(g).dot(bs.T) % 3) == 0).sum(axis=0)
        out[n] = set(counts.tolist())
    return out


def z_sizes(el: EisensteinLattice) -> dict[int, set[int]]:
    """|Z_{a,b}| over all norm-4 a and norm-6 b, grouped by (a, b) mod 3 == 0 or not.

    S_a = {c in L(4) : (a, c) = 2, c not in A(a)} and
    Z_{a,b} = {c in S_a : (c, b) = 0 mod 3}.
    """
    g = el.lattice.gram_array
    nu = np.array(el.nu.matrix, dtype=np.int64)
    l4 = np.array(el.lattice.shell(4), dtype=np.int64)
    l6 = np.array(el.lattice.shell(6), dtype=np.int64)
    gram44 = l4.dot(g).dot(l4.T)
    p46 = l4.dot(g).dot(l6.T) % 3
    out: dict[int, set[int]] = {0: set(), 1: set()}
    for i, a in enumerate(l4):
        sub = set()
        w = a
        for _ in range(3):
            sub.add(tuple(w.tolist()))
            sub.add(tuple((-w).tolist()))
            w = nu.dot(w)
        mask = gram44[i] == 2
        mask &= np.array([tuple(v.tolist()) not in sub for v in l4])
        sizes = (p46[mask] == 0).sum(axis=0)
        zero = p46[i] == 0
        out[0].update(sizes[zero].tolist())
        out[1].update(sizes[~zero].tolist())
    return out
