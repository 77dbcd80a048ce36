"""Integral lattices given by Gram matrices, and the sublattice calculus on them.

Vectors are integer coordinate tuples with respect to the lattice basis.
An isometry is an integer matrix acting on column coordinate vectors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import linalg as la


@dataclass(frozen=True, eq=False)
class IntegerLattice:
    gram: tuple[tuple[int, ...], ...]
    name: str = ""
    _shells: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Gram matrix must be symmetric")
        for k in range(1, n + 1):
            if la.det([row[:k] for row in g[:k]]) <= 0:
                raise ValueError("Gram matrix must be positive definite")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def det(self) -> int:
        return la.det(self.gram)

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    @cached_property
    def gram_array(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64)

    def inner(self, x, y) -> int:
        g = self.gram
        return sum(int(x[i]) * sum(g[i][j] * int(y[j]) for j in range(self.rank))
                   for i in range(self.rank) if x[i])

    def norm(self, x) -> int:
        return self.inner(x, x)

    @cached_property
    def _reduction(self):
        # LLL-reduced basis used only to keep the enumeration tree small
        t = la.lll_reduce(self.gram)
        reduced = la.matmul(la.matmul(t, self.gram), la.transpose(t))
        return t, reduced

    def vectors_up_to(self, bound: int) -> dict[int, list[tuple[int, ...]]]:
        """All vectors of norm <= bound grouped by norm (sorted coordinate tuples)."""
        cached = self._shells.get("bound", -1)
        if cached < bound:
            t, reduced = self._reduction
            tt = np.array(la.transpose(t), dtype=object)
            found = la.fincke_pohst(reduced, bound)
            by_norm: dict[int, list[tuple[int, ...]]] = {}
            for y in found:
                x = tuple(int(c) for c in tt.dot(np.array(y, dtype=object)))
                by_norm.setdefault(self.norm(x), []).append(x)
            for v in by_norm.values():
                v.sort()
            self._shells.clear()
            self._shells.update(by_norm)
            self._shells["bound"] = bound
        return {k: v for k, v in self._shells.items() if k != "bound" and k <= bound}

    def shell(self, n: int) -> list[tuple[int, ...]]:
        """Vectors of norm exactly n."""
        if n < 0:
            raise ValueError("norm must be nonnegative")
        return list(self.vectors_up_to(n).get(n, []))

    def minimum(self) -> int:
        b = 1
        while True:
            vs = self.vectors_up_to(b)
            nonzero = [k for k in vs if k > 0]
            if nonzero:
                return min(nonzero)
            b *= 2


# ---------------------------------------------------------------------------
# constructions


def _cartan_from_edges(n: int, edges) -> list[list[int]]:
    g = [[2 * int(i == j) for j in range(n)] for i in range(n)]
    for a, b in edges:
        g[a][b] = g[b][a] = -1
    return g


def root_lattice(name: str) -> IntegerLattice:
    """Root lattice A_n, D_n (n >= 4) or E_6, E_7, E_8 with its Cartan Gram matrix."""
    m = re.fullmatch(r"([ADE])_?(\d+)", name.strip().upper())
    if not m:
        raise ValueError(f"unknown root lattice {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "A" and n >= 1:
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "D" and n >= 4:
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif kind == "E" and n in (6, 7, 8):
        # Bourbaki labelling: chain 1-3-4-...-n, node 2 on node 4
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    else:
        raise ValueError(f"unknown root lattice {name!r}")
    return IntegerLattice(_cartan_from_edges(n, edges), name=f"{kind}{n}")


def rescale(lat: IntegerLattice, k: int) -> IntegerLattice:
    if k < 1:
        raise ValueError("scale must be a positive integer")
    name = lat.name if k == 1 else f"sqrt{k}{lat.name}"
    return IntegerLattice([[k * x for x in row] for row in lat.gram], name=name)


def tensor_product(a: IntegerLattice, b: IntegerLattice) -> IntegerLattice:
    """Basis vector (i, k) of the product sits at index i * rank(b) + k."""
    return IntegerLattice(la.kron(a.gram, b.gram), name=f"{a.name}x{b.name}")


def orthogonal_sum(*lats: IntegerLattice) -> IntegerLattice:
    n = sum(l.rank for l in lats)
    g = la.zeros(n, n)
    off = 0
    for l in lats:
        for i in range(l.rank):
            for j in range(l.rank):
                g[off + i][off + j] = l.gram[i][j]
        off += l.rank
    return IntegerLattice(g, name="+".join(l.name for l in lats))


def a2_rotation() -> list[list[int]]:
    """Order-3 rotation of A2: a1 -> a2 -> -a1-a2 (on column coordinates)."""
    return [[0, -1], [1, -1]]


# ---------------------------------------------------------------------------
# isometries and sublattices


@dataclass(frozen=True)
class Isometry:
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(int(x) for x in r) for r in self.matrix))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __call__(self, x):
        return tuple(la.matvec(self.matrix, x))

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(la.matmul(self.matrix, other.matrix))

    def preserves(self, lat: IntegerLattice) -> bool:
        m = self.matrix
        return la.matmul(la.matmul(la.transpose(m), lat.gram), m) == [list(r) for r in lat.gram]

    def order(self, limit: int = 10_000) -> int:
        ident = la.identity(self.dim)
        p = [list(r) for r in self.matrix]
        for k in range(1, limit + 1):
            if p == ident:
                return k
            p = la.matmul(p, self.matrix)
        raise ValueError("isometry has no finite order below the limit")

    @property
    def is_fixed_point_free(self) -> bool:
        n = self.dim
        return la.det([[self.matrix[i][j] - int(i == j) for j in range(n)] for i in range(n)]) != 0


@dataclass(frozen=True)
class Sublattice:
    parent: IntegerLattice
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "generators",
                           tuple(tuple(int(x) for x in g) for g in self.generators))

    @cached_property
    def basis(self) -> list[list[int]]:
        return la.hermite_normal_form(self.generators) if self.generators else []

    @property
    def rank(self) -> int:
        return len(self.basis)

    def saturation(self) -> "Sublattice":
        """(M tensor Q) intersected with the parent."""
        if not self.basis:
            return self
        if self.rank == self.parent.rank:
            return full(self.parent)
        return Sublattice(self.parent, la.integer_kernel(la.integer_kernel(self.basis)))

    def contains(self, v) -> bool:
        if not self.basis:
            return not any(v)
        return la.solve_integer(la.transpose(self.basis), list(v)) is not None

    def gram(self) -> list[list[int]]:
        g = self.parent.gram
        return la.matmul(la.matmul(self.basis, g), la.transpose(self.basis))


def full(lat: IntegerLattice) -> Sublattice:
    return Sublattice(lat, la.identity(lat.rank))


def sublattice(lat: IntegerLattice, gens) -> Sublattice:
    return Sublattice(lat, [list(g) for g in gens])


def image(lat: IntegerLattice, iso: Isometry | list) -> Sublattice:
    """The sublattice f(L) for an integer endomorphism f given on column coordinates."""
    m = iso.matrix if isinstance(iso, Isometry) else iso
    return Sublattice(lat, la.transpose(m))


def annihilator(lat: IntegerLattice, m: Sublattice) -> Sublattice:
    if not m.basis:
        return full(lat)
    pairing = la.matmul(m.basis, lat.gram)
    return Sublattice(lat, la.integer_kernel(pairing))


def is_rssd(lat: IntegerLattice, m: Sublattice) -> bool:
    """Whether 2L lies in M + Ann_L(M)."""
    both = Sublattice(lat, list(m.basis) + list(annihilator(lat, m).basis))
    return all(both.contains([2 * int(i == j) for j in range(lat.rank)]) for i in range(lat.rank))


def index(lat: IntegerLattice, m: Sublattice) -> int:
    if m.rank != lat.rank:
        raise ValueError("sublattice is not of full rank")
    d, _, _ = la.smith_normal_form(m.basis)
    out = 1
    for x in d:
        out *= x
    return out


def three_divisible_kernel(lat: IntegerLattice) -> Sublattice:
    """P(L) = {x : (x, L) in 3Z}."""
    gens = [list(v) for v in la.kernel_mod_p(lat.gram, 3)]
    gens += [[3 * int(i == j) for j in range(lat.rank)] for i in range(lat.rank)]
    return Sublattice(lat, gens)


def rssd_involution(lat: IntegerLattice, m: Sublattice) -> Isometry:
    """t_M: -1 on M and +1 on its annihilator."""
    if not m.basis:
        return Isometry(la.identity(lat.rank))
    b = m.basis
    gm_inv = la.rational_inverse(m.gram())
    bg = la.matmul(b, lat.gram)
    proj = la.matmul(la.matmul(la.transpose(b), gm_inv), bg)
    n = lat.rank
    t = [[Fraction(int(i == j)) - 2 * proj[i][j] for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in t for x in row):
        raise ValueError("sublattice is not RSSD: the reflection leaves the lattice")
    return Isometry([[int(x) for x in row] for row in t])


def binary_form_reduced(gram) -> tuple[int, int, int]:
    """Reduced form (a, b, c) of a positive binary form under GL2(Z): 0 <= 2b <= a <= c."""
    a, b, c = int(gram[0][0]), int(gram[0][1]), int(gram[1][1])
    while True:
        # translate b into [-a/2, a/2], then swap if needed
        q = (2 * b + a) // (2 * a)
        b, c = b - q * a, c - 2 * q * b + q * q * a
        if a > c:
            a, c = c, a
            continue
        break
    return a, abs(b), c


def isometric_rank2(l1: IntegerLattice, l2: IntegerLattice) -> bool:
    if l1.rank != 2 or l2.rank != 2:
        raise ValueError("canonical isometry test only implemented for rank 2")
    return binary_form_reduced(l1.gram) == binary_form_reduced(l2.gram)


def read_gram_file(path) -> IntegerLattice:
    with open(path) as fh:
        tokens = fh.read().split()
    n = int(tokens[0])
    vals = [int(t) for t in tokens[1:1 + n * n]]
    if len(vals) != n * n:
        raise ValueError("Gram file is truncated")
    return IntegerLattice([vals[i * n:(i + 1) * n] for i in range(n)], name=str(path))
