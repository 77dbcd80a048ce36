"""Unitary minimal series data: central charges, highest weights and fusion."""

from __future__ import annotations

from fractions import Fraction


def central_charge(m: int) -> Fraction:
    if m < 1:
        raise ValueError("level m must be >= 1")
    return 1 - Fraction(6, (m + 2) * (m + 3))


def _check(m: int, r: int, s: int):
    if m < 1 or not (1 <= s <= r <= m + 1):
        raise ValueError(f"invalid Kac indices (r, s) = ({r}, {s}) for m = {m}")


def highest_weight(m: int, r: int, s: int) -> Fraction:
    _check(m, r, s)
    return Fraction((r * (m + 3) - s * (m + 2)) ** 2 - 1, 4 * (m + 2) * (m + 3))


def kac_weight(m: int, r: int, s: int) -> Fraction:
    """Same formula on the whole Kac table 1 <= r <= m+1, 1 <= s <= m+2."""
    if not (1 <= r <= m + 1 and 1 <= s <= m + 2):
        raise ValueError("outside the Kac table")
    return Fraction((r * (m + 3) - s * (m + 2)) ** 2 - 1, 4 * (m + 2) * (m + 3))


def canonical(m: int, r: int, s: int) -> tuple[int, int]:
    """Representative with s <= r under (r, s) ~ (m+2-r, m+3-s)."""
    if s > r:
        r, s = m + 2 - r, m + 3 - s
    return r, s


def labels(m: int) -> list[tuple[int, int]]:
    return [(r, s) for r in range(1, m + 2) for s in range(1, r + 1)]


def weights(m: int) -> set[Fraction]:
    return {highest_weight(m, r, s) for r, s in labels(m)}


def fusion(m: int, a: tuple[int, int], b: tuple[int, int]) -> list[tuple[int, int]]:
    """Fusion product of L(c_m, h_a) and L(c_m, h_b), labels canonicalized and sorted."""
    (r1, s1), (r2, s2) = a, b
    _check(m, r1, s1)
    _check(m, r2, s2)
    ni = min(r1, r2, m + 2 - r1, m + 2 - r2)
    nj = min(s1, s2, m + 3 - s1, m + 3 - s2)
    out = {canonical(m, abs(r1 - r2) + 2 * i - 1, abs(s1 - s2) + 2 * j - 1)
           for i in range(1, ni + 1) for j in range(1, nj + 1)}
    return sorted(out)


def label_of_weight(m: int, h) -> tuple[int, int]:
    h = Fraction(h)
    for lab in labels(m):
        if highest_weight(m, *lab) == h:
            return lab
    raise ValueError(f"{h} is not a highest weight at level {m}")


def extension_labels(m: int) -> list[tuple[int, int]]:
    """Labels of the modules local for the simple current L(c_m, h_{m+1,1}).

    A module M is kept when fusing it with the simple current changes its
    weight by an integer; these are the weights seen by modules of the
    extension L(c_m, 0) + L(c_m, h_{m+1,1}).
    """
    current = (m + 1, 1)
    out = []
    for lab in labels(m):
        (img,) = fusion(m, current, lab)
        if (highest_weight(m, *img) - highest_weight(m, *lab)).denominator == 1:
            out.append(lab)
    return out


def extension_weights(m: int) -> set[Fraction]:
    return {highest_weight(m, *lab) for lab in extension_labels(m)}
