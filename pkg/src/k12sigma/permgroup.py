"""Permutation groups with a base and strong generating set.

A permutation is a numpy integer array of images.  The product ``p * q``
means "apply p, then q", i.e. the array ``q[p]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def as_perm(images) -> np.ndarray:
    p = np.asarray(images, dtype=np.int32)
    if p.ndim != 1 or not np.array_equal(np.sort(p), np.arange(len(p))):
        raise ValueError("not a permutation")
    return p


def mul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    return q[p]


def inverse(p: np.ndarray) -> np.ndarray:
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p), dtype=p.dtype)
    return inv


def is_identity(p: np.ndarray) -> bool:
    return bool(np.array_equal(p, np.arange(len(p))))


def perm_order(p: np.ndarray) -> int:
    from math import lcm

    seen = np.zeros(len(p), dtype=bool)
    out = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        k = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            k += 1
        out = lcm(out, k)
    return out


def format_perm(p) -> str:
    return " ".join(str(int(x)) for x in p)


def parse_perm(line: str) -> np.ndarray:
    return as_perm([int(t) for t in line.split()])


@dataclass
class _Level:
    point: int
    gens: list
    orbit: list = field(default_factory=list)
    # transversal[x] maps the base point to x; None outside the orbit
    trans: dict = field(default_factory=dict)
    trans_inv: dict = field(default_factory=dict)

    def rebuild(self, n: int):
        ident = np.arange(n, dtype=np.int32)
        self.trans = {self.point: ident}
        self.trans_inv = {self.point: ident}
        self.orbit = [self.point]
        i = 0
        while i < len(self.orbit):
            x = self.orbit[i]
            u = self.trans[x]
            for s in self.gens:
                y = int(s[x])
                if y not in self.trans:
                    v = s[u]
                    self.trans[y] = v
                    self.trans_inv[y] = inverse(v)
                    self.orbit.append(y)
            i += 1


class PermGroup:
    """Stabilizer chain built by randomized Schreier-Sims and then verified."""

    def __init__(self, gens, degree: int | None = None, seed: int = 0):
        gens = [as_perm(g) for g in gens]
        if degree is None:
            if not gens:
                raise ValueError("degree required for the trivial group")
            degree = len(gens[0])
        if any(len(g) != degree for g in gens):
            raise ValueError("generators have different degrees")
        self.degree = degree
        self.generators = gens
        self.levels: list[_Level] = []
        self._rng = np.random.default_rng(seed)
        self._build()

    # -- construction -------------------------------------------------
    def sift(self, g: np.ndarray):
        """Return (residue, level index where sifting stopped)."""
        for i, lev in enumerate(self.levels):
            x = int(g[lev.point])
            if x not in lev.trans_inv:
                return g, i
            g = lev.trans_inv[x][g]
        return g, len(self.levels)

    def _add(self, h: np.ndarray, start: int):
        """Add a non-trivial residue as strong generator from level ``start`` down."""
        if start == len(self.levels):
            moved = np.nonzero(h != np.arange(self.degree))[0]
            self.levels.append(_Level(self._choose_point(moved, h), []))
        for j in range(start, len(self.levels)):
            if j > start and int(h[self.levels[j - 1].point]) != self.levels[j - 1].point:
                break
            self.levels[j].gens.append(h)
            self.levels[j].rebuild(self.degree)

    def _choose_point(self, moved, h) -> int:
        # largest orbit of <h> among moved points (cheap proxy for a long chain step)
        best, best_len = int(moved[0]), 0
        for x in moved[:32]:
            k, y = 1, int(h[x])
            while y != x:
                y = int(h[y])
                k += 1
            if k > best_len:
                best, best_len = int(x), k
        return best

    def _random_elements(self):
        gens = [g.copy() for g in self.generators]
        while len(gens) < 10:
            gens.append(gens[len(gens) % len(self.generators)].copy())
        acc = np.arange(self.degree, dtype=np.int32)
        rng = self._rng
        for _ in range(50):  # product replacement warm-up
            i, j = rng.choice(len(gens), 2, replace=False)
            gens[i] = gens[j][gens[i]] if rng.random() < 0.5 else gens[i][gens[j]]
        while True:
            i, j = rng.choice(len(gens), 2, replace=False)
            gens[i] = gens[i][gens[j]]
            acc = gens[i][acc]
            yield acc

    def _build(self, patience: int = 40):
        ident = np.arange(self.degree, dtype=np.int32)
        gens = [g for g in self.generators if not np.array_equal(g, ident)]
        if not gens:
            return
        for g in gens:
            h, i = self.sift(g)
            if not is_identity(h):
                self._add(h, i)
        quiet = 0
        for r in self._random_elements():
            h, i = self.sift(r)
            if is_identity(h):
                quiet += 1
                if quiet >= patience:
                    break
            else:
                quiet = 0
                self._add(h, i)
        while not self._verify():
            pass

    def _verify(self) -> bool:
        """Sift every Schreier generator; add the first failure and report False."""
        for g in self.generators:
            h, i = self.sift(g)
            if not is_identity(h):
                self._add(h, i)
                return False
        for i in range(len(self.levels) - 1, -1, -1):
            lev = self.levels[i]
            for x in lev.orbit:
                u = lev.trans[x]
                for s in lev.gens:
                    y = int(s[x])
                    schreier = lev.trans_inv[y][s[u]]
                    h, j = self._sift_from(schreier, i + 1)
                    if not is_identity(h):
                        self._add(h, j)
                        return False
        return True

    def _sift_from(self, g, start: int):
        for i in range(start, len(self.levels)):
            lev = self.levels[i]
            x = int(g[lev.point])
            if x not in lev.trans_inv:
                return g, i
            g = lev.trans_inv[x][g]
        return g, len(self.levels)

    # -- queries -------------------------------------------------------
    @property
    def base(self) -> list[int]:
        return [lev.point for lev in self.levels]

    @property
    def orbit_lengths(self) -> list[int]:
        return [len(lev.orbit) for lev in self.levels]

    def order(self) -> int:
        out = 1
        for lev in self.levels:
            out *= len(lev.orbit)
        return out

    def contains(self, g) -> bool:
        g = np.asarray(g, dtype=np.int32)
        if len(g) != self.degree:
            return False
        h, _ = self.sift(g)
        return is_identity(h)

    def orbit(self, point: int) -> set[int]:
        return orbit(self.generators, point, self.degree)

    def orbits(self) -> list[set[int]]:
        return orbits(self.generators, self.degree)

    def random_element(self) -> np.ndarray:
        g = np.arange(self.degree, dtype=np.int32)
        for lev in reversed(self.levels):
            x = lev.orbit[int(self._rng.integers(len(lev.orbit)))]
            g = lev.trans[x][g]
        return g


def bsgs(gens, degree: int | None = None, seed: int = 0) -> PermGroup:
    return PermGroup(gens, degree=degree, seed=seed)


def orbit(gens, point: int, degree: int | None = None) -> set[int]:
    if degree is not None and not 0 <= point < degree:
        raise ValueError("point out of range")
    seen = {point}
    todo = [point]
    while todo:
        x = todo.pop()
        for g in gens:
            y = int(g[x])
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def orbits(gens, degree: int) -> list[set[int]]:
    left = set(range(degree))
    out = []
    while left:
        o = orbit(gens, min(left))
        out.append(o)
        left -= o
    return out


@dataclass(frozen=True)
class ThreeTranspositionResult:
    ok: bool
    pair: tuple[int, int] | None = None
    order: int | None = None
    pairs_checked: int = 0


def is_3transposition(gens) -> ThreeTranspositionResult:
    """Every product g_i g_j has order 1, 2 or 3 (exhaustive over unordered pairs)."""
    g = np.asarray([as_perm(x) for x in gens])
    m, n = g.shape
    ident = np.arange(n)
    for i in range(m):
        if not np.array_equal(g[i][g[i]], ident):
            raise ValueError(f"generator {i} is not an involution")
    checked = 0
    for i in range(m - 1):
        rest = g[i + 1:]
        p = rest[:, g[i]]  # g_i then g_j
        p2 = p[np.arange(len(p))[:, None], p]
        p3 = p[np.arange(len(p))[:, None], p2]
        ok = (p2 == ident).all(axis=1) | (p3 == ident).all(axis=1)
        checked += len(p)
        if not ok.all():
            k = int(np.argmin(ok))
            return ThreeTranspositionResult(False, (i, i + 1 + k), perm_order(p[k]), checked)
    return ThreeTranspositionResult(True, None, None, checked)


@dataclass(frozen=True)
class ComparisonResult:
    ok: bool
    reason: str = ""
    generator: int | None = None
    point: int | None = None


def actions_isomorphic(gens1, gens2, phi, order1: int | None = None,
                       order2: int | None = None) -> ComparisonResult:
    """phi maps points of the first action to points of the second.

    Checks phi(g1_i(x)) = g2_i(phi(x)) for every paired generator and point,
    and equality of group orders when both are supplied.
    """
    phi = as_perm(phi)
    if len(gens1) != len(gens2):
        return ComparisonResult(False, "generator lists differ in length")
    for k, (a, b) in enumerate(zip(gens1, gens2)):
        a, b = np.asarray(a), np.asarray(b)
        if len(a) != len(phi) or len(b) != len(phi):
            raise ValueError("degree mismatch")
        bad = np.nonzero(phi[a] != b[phi])[0]
        if len(bad):
            return ComparisonResult(False, "equivariance fails", k, int(bad[0]))
    if order1 is not None and order2 is not None and order1 != order2:
        return ComparisonResult(False, f"orders differ: {order1} != {order2}")
    return ComparisonResult(True)


# ---------------------------------------------------------------------------
# Weyl groups from reflections


def weyl_group(lat) -> PermGroup:
    """Group generated by the simple reflections acting on the roots of a root lattice.

    ``lat`` has a Cartan Gram matrix, so the basis vectors are simple roots.
    """
    roots = lat.shell(2)
    pos = {r: i for i, r in enumerate(roots)}
    g = lat.gram_array
    gens = []
    for k in range(lat.rank):
        img = []
        for r in roots:
            v = np.array(r)
            c = int(g[k].dot(v))
            v[k] -= c
            img.append(pos[tuple(int(x) for x in v)])
        gens.append(img)
    return bsgs(gens)
