"""Schur functions: straightening, Pieri rule and products via raising operators.

Sums in the Schur basis are plain dicts ``{partition: int}``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .exact_algebra import XYPolynomial, h_poly, xy_determinant
from .operator_engine import (
    EngineStats,
    SeriesKind,
    TranslationSeries,
    evaluate_series_product,
)
from .partitions import canonical, contains

SchurSum = dict


def straighten_schur(v: Sequence[int]):
    """Rewrite S_v as ``(sign, partition)``, or return None when S_v = 0.

    Adds the staircase (L-1, ..., 1, 0), sorts, and subtracts it again; a
    repeated or negative entry after the shift means the determinant vanishes.

    >>> straighten_schur((2, 4))
    (-1, (3, 3))
    >>> straighten_schur((2, 3)) is None
    True
    """
    length = len(v)
    shifted = [x + length - 1 - p for p, x in enumerate(v)]
    if min(shifted, default=0) < 0 or len(set(shifted)) != length:
        return None
    order = sorted(range(length), key=lambda p: -shifted[p])
    sign = _permutation_sign(order)
    parts = [shifted[order[p]] - (length - 1 - p) for p in range(length)]
    return sign, canonical(parts)


def _permutation_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = 0
        p = start
        while not seen[p]:
            seen[p] = True
            p = perm[p]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def straighten_schur_by_swaps(v: Sequence[int]):
    """Same contract as straighten_schur, using only the adjacent-swap rule.

    S_(.., a, b, ..) = -S_(.., b-1, a+1, ..); a pair with b = a + 1 vanishes.
    Kept as an independent check on the closed form.
    """
    v = list(v)
    sign = 1
    while True:
        ascent = next((i for i in range(len(v) - 1) if v[i] < v[i + 1]), None)
        if ascent is None:
            break
        a, b = v[ascent], v[ascent + 1]
        if b == a + 1:
            return None
        v[ascent], v[ascent + 1] = b - 1, a + 1
        sign = -sign
    if v and v[-1] < 0:
        return None
    return sign, canonical(v)


def interleave(mu: Sequence[int], nu: Sequence[int]):
    """Place each nu_k after the parts of mu that are >= nu_k.

    Returns the merged vector (mu u nu, as a tuple) and the 1-based slots
    i_k + k occupied by the parts of nu.
    """
    mu, nu = tuple(mu), tuple(nu)
    slots = []
    for k, part in enumerate(nu, start=1):
        i_k = sum(1 for m in mu if m >= part)
        slots.append(i_k + k)
    merged = []
    mu_iter = iter(mu)
    nu_iter = iter(nu)
    slot_set = set(slots)
    for pos in range(1, len(mu) + len(nu) + 1):
        merged.append(next(nu_iter) if pos in slot_set else next(mu_iter))
    return tuple(merged), slots


def contraction_series(length: int, slots: Sequence[int], kind: SeriesKind) -> list:
    """One series per (slot, other non-slot position) pair, unit moving leftward."""
    slot_set = set(slots)
    series = []
    for slot in slots:
        for j in range(1, slot):
            if j not in slot_set:
                series.append(TranslationSeries(j, slot, kind))
        for j in range(slot + 1, length + 1):
            if j not in slot_set:
                series.append(TranslationSeries(slot, j, kind))
    return series


def _collect(formal_sum) -> SchurSum:
    out: dict = {}
    for vec, coeff in formal_sum.items():
        res = straighten_schur(vec)
        if res is None:
            continue
        sign, la = res
        (value,) = coeff.coeffs
        out[la] = out.get(la, 0) + sign * value
        if out[la] == 0:
            del out[la]
    return out


def pieri_schur(mu: Sequence[int], r: int, stats: EngineStats | None = None) -> SchurSum:
    """Expand S_mu * h_r."""
    if r < 1:
        raise ValueError("r must be positive")
    mu = canonical(mu)
    i = sum(1 for m in mu if m >= r)
    base = mu[:i] + (r,) + mu[i:]
    series = [TranslationSeries(j, i + 1) for j in range(1, i + 1)]
    series += [TranslationSeries(i + 1, k) for k in range(i + 2, len(mu) + 2)]
    return _collect(evaluate_series_product(base, series, stats))


def mul_schur(mu: Sequence[int], nu: Sequence[int], stats: EngineStats | None = None) -> SchurSum:
    """Expand S_mu * S_nu in the Schur basis."""
    return dict(_mul_schur_cached(canonical(mu), canonical(nu), stats))


def _mul_schur_cached(mu, nu, stats=None):
    if stats is None:
        return _mul_schur_memo(mu, nu)
    return _mul_schur_raw(mu, nu, stats)


@lru_cache(maxsize=None)
def _mul_schur_memo(mu, nu):
    return tuple(_mul_schur_raw(mu, nu, None).items())


def _mul_schur_raw(mu, nu, stats):
    if not nu:
        return {mu: 1}
    base, slots = interleave(mu, nu)
    series = contraction_series(len(base), slots, SeriesKind.PLAIN)
    return _collect(evaluate_series_product(base, series, stats))


def lr_tableaux_oracle(mu: Sequence[int], nu: Sequence[int], la: Sequence[int]) -> int:
    """Count LR tableaux of shape la/mu and content nu by direct enumeration.

    Cells are filled in reading order (rows top to bottom, each row right to
    left); rows weakly increase, columns strictly increase, and every prefix
    of the reading word must be a lattice word.
    """
    return _lr_count(canonical(mu), canonical(nu), canonical(la))


@lru_cache(maxsize=None)
def _lr_count(mu, nu, la) -> int:
    if sum(la) != sum(mu) + sum(nu) or not contains(la, mu) or not contains(la, nu):
        return 0
    rows = len(la)
    mu_ext = mu + (0,) * (rows - len(mu))
    cells = [(r, c) for r in range(rows) for c in range(la[r] - 1, mu_ext[r] - 1, -1)]
    filling = {}
    counts = [0] * (len(nu) + 1)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = len(nu)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1
        total = 0
        for letter in range(lo, hi + 1):
            if counts[letter] >= nu[letter - 1]:
                continue
            if letter > 1 and counts[letter] + 1 > counts[letter - 1]:
                continue
            counts[letter] += 1
            filling[(r, c)] = letter
            total += rec(idx + 1)
            del filling[(r, c)]
            counts[letter] -= 1
        return total

    return rec(0)


def schur_to_x(la: Sequence[int], num_vars: int | None = None) -> XYPolynomial:
    """Jacobi-Trudi determinant det(h_{la_i - i + j}) in the x-coordinates."""
    la = canonical(la)
    if num_vars is None:
        num_vars = sum(la)
    return _schur_to_x(la, num_vars)


@lru_cache(maxsize=None)
def _schur_to_x(la, num_vars):
    n = len(la)
    matrix = [[h_poly(la[i] - i + j, num_vars) for j in range(n)] for i in range(n)]
    return xy_determinant(matrix)
