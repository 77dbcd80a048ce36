"""Quadratic spaces over F3, reflections, and the line model of the K12 group.

A space is given by a symmetric bilinear form B over F3; the quadratic form
is Q(x) = B(x, x) / 2 = 2 B(x, x), so that Q(x + y) = Q(x) + Q(y) + B(x, y).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg as la
from .permgroup import PermGroup, bsgs


@dataclass(frozen=True, eq=False)
class QuadSpaceF3:
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = tuple(tuple(int(x) % 3 for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise ValueError("form must be symmetric")
        if la.det(g) % 3 == 0:
            raise ValueError("form is degenerate")

    @property
    def dim(self) -> int:
        return len(self.gram)

    @cached_property
    def g(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64)

    @property
    def discriminant(self) -> int:
        """det B as +1 or -1."""
        return 1 if la.det(self.gram) % 3 == 1 else -1

    @property
    def sign(self) -> int:
        """Witt type: +1 if (-1)^(n/2) disc is a square (hyperbolic), else -1."""
        if self.dim % 2:
            raise ValueError("sign is only used in even dimension")
        return (-1) ** (self.dim // 2) * self.discriminant

    def B(self, x, y):
        return np.asarray(x).dot(self.g).dot(np.asarray(y).T) % 3

    def Q(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        return (2 * np.einsum("...i,ij,...j->...", x, self.g, x)) % 3

    @cached_property
    def vectors(self) -> np.ndarray:
        """All 3^n vectors; row index = base-3 number of the coordinates."""
        return np.array(list(itertools.product(range(3), repeat=self.dim)), dtype=np.int64)

    def census(self) -> dict[int, int]:
        """Number of nonzero vectors with each Q value."""
        q = self.Q(self.vectors[1:])
        return {k: int((q == k).sum()) for k in range(3)}

    def expected_isotropic(self) -> int:
        m = self.dim // 2
        e = self.sign
        return (3 ** m - e) * (3 ** (m - 1) + e)

    def norm_vectors(self, gamma: int) -> np.ndarray:
        v = self.vectors[1:]
        return v[self.Q(v) == gamma % 3]

    def lines(self, gamma: int = 1) -> np.ndarray:
        """Canonical representatives (first nonzero coordinate 1) with Q = gamma."""
        v = self.norm_vectors(gamma)
        first = v[np.arange(len(v)), (v != 0).argmax(axis=1)]
        return v[first == 1]

    def index(self, vs) -> np.ndarray:
        w = 3 ** np.arange(self.dim - 1, -1, -1)
        return (np.asarray(vs) % 3).dot(w)


def canonical(vs: np.ndarray) -> np.ndarray:
    vs = np.asarray(vs) % 3
    first = vs[np.arange(len(vs)), (vs != 0).argmax(axis=1)]
    return np.where((first == 2)[:, None], (-vs) % 3, vs)


def quad_space(n: int, eps: int) -> QuadSpaceF3:
    """diag(1, ..., 1, d) with d chosen to give Witt sign eps."""
    if n < 2 or n % 2 or eps not in (1, -1):
        raise ValueError("need even n >= 2 and sign +1 or -1")
    d = (-1) ** (n // 2) * eps
    gram = [[int(i == j) for j in range(n)] for i in range(n)]
    gram[-1][-1] = d % 3
    return QuadSpaceF3(gram)


def orthogonal_sum(a: QuadSpaceF3, b: QuadSpaceF3) -> QuadSpaceF3:
    n, m = a.dim, b.dim
    g = la.zeros(n + m, n + m)
    for i in range(n):
        for j in range(n):
            g[i][j] = a.gram[i][j]
    for i in range(m):
        for j in range(m):
            g[n + i][n + j] = b.gram[i][j]
    return QuadSpaceF3(g)


def hyperbolic_plane() -> QuadSpaceF3:
    """U with Q(a e + b f) = a b."""
    return QuadSpaceF3([[0, 1], [1, 0]])


def reflection(space: QuadSpaceF3, v) -> np.ndarray:
    """Matrix R with R x = x - (B(x, v) / Q(v)) v (acting on column vectors)."""
    v = np.asarray(v, dtype=np.int64) % 3
    qv = int(space.Q(v))
    if qv == 0:
        raise ValueError("reflection center must be nonsingular")
    inv = qv  # 1 and 2 are self-inverse mod 3
    n = space.dim
    return (np.eye(n, dtype=np.int64) - inv * np.outer(v, space.g.dot(v))) % 3


def _point_perms(space: QuadSpaceF3, centers: np.ndarray, points: np.ndarray,
                 projective: bool) -> np.ndarray:
    lookup = np.full(3 ** space.dim, -1, dtype=np.int64)
    lookup[space.index(points)] = np.arange(len(points))
    gens = np.empty((len(centers), len(points)), dtype=np.int32)
    for k, c in enumerate(centers):
        qv = int(space.Q(c))
        coef = (points.dot(space.g).dot(c) * qv) % 3
        img = (points - np.outer(coef, c)) % 3
        if projective:
            img = canonical(img)
        idx = lookup[space.index(img)]
        if np.any(idx < 0):
            raise AssertionError("reflection does not preserve the point set")
        gens[k] = idx
    return gens


def reflection_permutations(space: QuadSpaceF3, gamma: int, on: str = "lines"):
    """(points, generator permutations) for reflections with centers of Q-value gamma.

    The points are the Q = 1 lines (``on="lines"``) or Q = 1 vectors
    (``on="vectors"``).
    """
    if on == "lines":
        points = space.lines(1)
    elif on == "vectors":
        points = space.norm_vectors(1)
    else:
        raise ValueError("on must be 'lines' or 'vectors'")
    centers = space.lines(gamma)
    return points, centers, _point_perms(space, centers, points, on == "lines")


def reflection_group(space: QuadSpaceF3, gamma: int, on: str = "lines",
                     seed: int = 0) -> PermGroup:
    _, _, gens = reflection_permutations(space, gamma, on)
    return bsgs(gens, seed=seed)


# ---------------------------------------------------------------------------
# the quotient space Y and the correspondence with the K12 sigma model


def induced_space(model) -> QuadSpaceF3:
    """Y = L/(1-nu)L with B = -(.,.) mod 3 and Q([b]) = -(b, b)/2 mod 3."""
    qd = model.info["quotient"]
    el = model.info["eisenstein"]
    g = el.lattice.gram_array
    n = el.lattice.rank
    one_minus = np.eye(n, dtype=np.int64) - np.array(el.nu.matrix, dtype=np.int64)
    if np.any(g.dot(one_minus) % 3):
        raise ValueError("(L, (1-nu)L) is not contained in 3Z")
    space = QuadSpaceF3((-qd.reps.dot(g).dot(qd.reps.T)) % 3)
    q = space.Q(qd.keys)
    expected = (-(qd.min_norm // 2)) % 3
    if not np.array_equal(q, expected):
        raise ValueError("quadratic form on the quotient is not well defined")
    return space


@dataclass(frozen=True)
class ULabeling:
    """Signed choice of the vectors v0, v0', v1, v2 of the hyperbolic plane."""

    v0: tuple[int, int]
    v0p: tuple[int, int]
    v1: tuple[int, int]
    v2: tuple[int, int]

    def __str__(self):
        return f"v0={self.v0} v0'={self.v0p} v1={self.v1} v2={self.v2}"


def labelings() -> list[ULabeling]:
    out = []
    e, f = (1, 0), (0, 1)
    for first, second in ((e, f), (f, e)):
        for s0, s0p, s1, s2 in itertools.product((1, 2), repeat=4):
            v1 = ((s1 * 1) % 3, (s1 * 1) % 3)
            v2 = ((s2 * 1) % 3, (s2 * 2) % 3)
            out.append(ULabeling(tuple(s0 * x % 3 for x in first),
                                 tuple(s0p * x % 3 for x in second), v1, v2))
    return out


@dataclass(eq=False)
class PhiResult:
    ok: bool
    labeling: ULabeling
    phi: np.ndarray  # line index -> symbol index
    case_counts: dict
    failure: tuple | None = None  # (generator line, point line)
    line_generators: np.ndarray | None = None  # r_x on the lines of U + Y


def phi_map(model, lab: ULabeling):
    """Line index -> symbol index for the 8-space X = U + Y and one U-labeling."""
    y_space = induced_space(model)
    x_space = orthogonal_sum(hyperbolic_plane(), y_space)
    qd = model.info["quotient"]
    norm4_sub = model.info["norm4_sub"]
    class_pair = model.info["class_pair"]
    n1 = 3 * model.n_sublattices
    lines = x_space.lines(1)
    phi = np.full(len(lines), -1, dtype=np.int64)
    counts = {"0": 0, "v0": 0, "v0'": 0, "v1": 0, "v2": 0}

    def signed(line, v):
        # the representative +-line whose U-part equals v, if any
        for s in (1, 2):
            w = (s * line) % 3
            if tuple(int(x) for x in w[:2]) == v:
                return w
        return None

    for i, x in enumerate(lines):
        if not x[:2].any():
            c = int(qd.index_of(x[2:]))
            phi[i] = 3 * norm4_sub[c]
            counts["0"] += 1
            continue
        for name, v in (("v0", lab.v0), ("v0'", lab.v0p), ("v1", lab.v1), ("v2", lab.v2)):
            w = signed(x, v)
            if w is None:
                continue
            c = int(qd.index_of(w[2:]))
            if name == "v0":
                a = norm4_sub[c]
                phi[i] = 3 * a + int(class_pair[c, a])
            elif name == "v0'":
                phi[i] = n1 + int(qd.index_of(-w[2:]))
            else:
                phi[i] = n1 + c
            counts[name] += 1
            break
    return x_space, lines, phi, counts


def phi_correspondence(model, labeling: ULabeling | None = None) -> PhiResult:
    """Find a labeling for which sigma_{phi(x)} o phi = phi o r_x on all 1107 lines."""
    candidates = [labeling] if labeling else labelings()
    last = None
    for lab in candidates:
        x_space, lines, phi, counts = phi_map(model, lab)
        if np.any(phi < 0) or len(set(phi.tolist())) != len(phi) or len(phi) != len(model):
            last = PhiResult(False, lab, phi, counts, None)
            continue
        gens = _point_perms(x_space, lines, lines, True)
        failure = None
        for k in range(len(lines)):
            sig = model.sigma[phi[k]]
            bad = np.nonzero(sig[phi] != phi[gens[k]])[0]
            if len(bad):
                failure = (k, int(bad[0]))
                break
        res = PhiResult(failure is None, lab, phi, counts, failure, gens)
        if res.ok:
            return res
        last = res
    return last
