"""Hall-Littlewood Q-functions: straightening, Pieri rule, products, oracles.

Sums in the Q basis are dicts ``{partition: TPoly}``.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Sequence

from .exact_algebra import (
    ONE,
    T,
    TPoly,
    XYPolynomial,
    ZERO,
    expand_in_basis,
    q_poly,
    tpoly_divexact,
)
from .operator_engine import (
    EngineStats,
    SeriesKind,
    TranslationSeries,
    evaluate_series_product,
)
from .partitions import canonical, conjugate, is_horizontal_strip, multiplicities, partitions_of
from .schur import contraction_series, interleave

__all__ = [
    "FuelExhausted",
    "StraighteningCache",
    "b_lambda",
    "expand_in_hl_basis",
    "hl_to_x",
    "mul_hl",
    "p_structure_constant",
    "phi",
    "pieri_hl",
    "psi_coefficient",
    "q_poly",
    "straighten_hl",
]

HLSum = dict
DEFAULT_FUEL = 10**6


class FuelExhausted(RuntimeError):
    """Straightening took more rewrite steps than the configured budget."""


class StraighteningCache:
    """Memo of straightened vectors, one table per rewriting strategy.

    Values are idempotent, so a lost race only costs a recomputation; the
    lock just keeps dict inserts atomic across threads.
    """

    def __init__(self):
        self._tables = {"leftmost": {}, "rightmost": {}}
        self._lock = threading.Lock()

    def get(self, strategy, vec):
        return self._tables[strategy].get(vec)

    def put(self, strategy, vec, value):
        with self._lock:
            self._tables[strategy].setdefault(vec, value)

    def clear(self):
        with self._lock:
            for table in self._tables.values():
                table.clear()

    def __len__(self):
        return sum(len(t) for t in self._tables.values())


_DEFAULT_CACHE = StraighteningCache()


def _accumulate(acc: dict, terms: dict, factor: TPoly):
    for la, c in terms.items():
        new = acc.get(la, ZERO) + factor * c
        if new:
            acc[la] = new
        else:
            acc.pop(la, None)


def _swap_rule(a: int, b: int):
    """Terms (factor, new_a, new_b) for Q_(..,a,b,..) with a < b."""
    d = b - a
    m, even = divmod(d - 1, 2)
    out = [(T, b, a)]
    for p in range(1, m + 1):
        out.append(((T * T - ONE) * T ** (p - 1), b - p, a + p))
    if even:
        out.append((T ** m * (T - ONE), a + m + 1, a + m + 1))
    return out


def straighten_hl(
    v: Sequence[int],
    strategy: str = "leftmost",
    cache: StraighteningCache | None = None,
    fuel: int = DEFAULT_FUEL,
) -> HLSum:
    """Rewrite Q_v as a Z[t]-combination of Q_lambda over partitions.

    Repeatedly applies the odd/even two-entry rules at an ascent
    (``strategy`` picks the leftmost or rightmost one).  A weakly decreasing
    vector is its own partition if the last entry is nonnegative and
    vanishes otherwise.  Each rewrite keeps entries within the original
    range and lowers sum(p * v_p), so the recursion is finite; ``fuel``
    bounds the number of fresh rewrites as a guard anyway.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    cache = _DEFAULT_CACHE if cache is None else cache
    budget = [fuel]

    def rec(vec):
        hit = cache.get(strategy, vec)
        if hit is not None:
            return hit
        ascents = [i for i in range(len(vec) - 1) if vec[i] < vec[i + 1]]
        if not ascents:
            result = {} if vec and vec[-1] < 0 else {canonical(vec): ONE}
        else:
            budget[0] -= 1
            if budget[0] < 0:
                raise FuelExhausted(f"straightening {tuple(v)} exceeded {fuel} steps")
            i = ascents[0] if strategy == "leftmost" else ascents[-1]
            result = {}
            for factor, a, b in _swap_rule(vec[i], vec[i + 1]):
                _accumulate(result, rec(vec[:i] + (a, b) + vec[i + 2:]), factor)
        cache.put(strategy, vec, result)
        return result

    return dict(rec(tuple(int(x) for x in v)))


def _collect(formal_sum) -> HLSum:
    out: dict = {}
    for vec, coeff in formal_sum.items():
        _accumulate(out, straighten_hl(vec), coeff)
    return out


def pieri_hl(mu: Sequence[int], r: int, stats: EngineStats | None = None) -> HLSum:
    """Expand Q_mu * q_r."""
    if r < 1:
        raise ValueError("r must be positive")
    mu = canonical(mu)
    i = sum(1 for m in mu if m >= r)
    base = mu[:i] + (r,) + mu[i:]
    kind = SeriesKind.TDEFORMED
    series = [TranslationSeries(j, i + 1, kind) for j in range(1, i + 1)]
    series += [TranslationSeries(i + 1, k, kind) for k in range(i + 2, len(mu) + 2)]
    return _collect(evaluate_series_product(base, series, stats))


def mul_hl(mu: Sequence[int], nu: Sequence[int], stats: EngineStats | None = None) -> HLSum:
    """Expand Q_mu * Q_nu in the Q basis."""
    mu, nu = canonical(mu), canonical(nu)
    if stats is None:
        return dict(_mul_hl_memo(mu, nu))
    return _mul_hl_raw(mu, nu, stats)


@lru_cache(maxsize=None)
def _mul_hl_memo(mu, nu):
    return tuple(_mul_hl_raw(mu, nu, None).items())


def _mul_hl_raw(mu, nu, stats):
    if not nu:
        return {mu: ONE}
    base, slots = interleave(mu, nu)
    series = contraction_series(len(base), slots, SeriesKind.TDEFORMED)
    return _collect(evaluate_series_product(base, series, stats))


def psi_coefficient(la: Sequence[int], mu: Sequence[int]) -> TPoly:
    """Pieri coefficient of Q_la in Q_mu * q_r: prod over J of (1 - t^{m_j(mu)}).

    J holds the columns j >= 1 where the strip la/mu has a cell in column
    j + 1 but none in column j.  Zero unless la/mu is a horizontal strip.
    """
    la, mu = canonical(la), canonical(mu)
    if not is_horizontal_strip(la, mu):
        return ZERO
    la_c, mu_c = conjugate(la), conjugate(mu)
    width = len(la_c)
    theta = [la_c[j] - (mu_c[j] if j < len(mu_c) else 0) for j in range(width)] + [0]
    mult = multiplicities(mu)
    result = ONE
    for j in range(1, width + 1):
        if theta[j - 1] < theta[j]:
            result = result * (ONE - T ** mult.get(j, 0))
    return result


def phi(r: int) -> TPoly:
    """(1 - t)(1 - t^2)...(1 - t^r)."""
    out = ONE
    for k in range(1, r + 1):
        out = out * (ONE - T ** k)
    return out


def b_lambda(la: Sequence[int]) -> TPoly:
    out = ONE
    for m in multiplicities(canonical(la)).values():
        out = out * phi(m)
    return out


def p_structure_constant(mu: Sequence[int], nu: Sequence[int], la: Sequence[int]) -> TPoly:
    """Coefficient of P_la in P_mu * P_nu, from the Q-basis product.

    Raises NonzeroRemainder if b_mu * b_nu fails to divide the scaled
    Q-coefficient.
    """
    mu, nu, la = canonical(mu), canonical(nu), canonical(la)
    coeff = mul_hl(mu, nu).get(la, ZERO)
    return tpoly_divexact(coeff * b_lambda(la), b_lambda(mu) * b_lambda(nu))


def hl_to_x(la: Sequence[int], num_vars: int | None = None) -> XYPolynomial:
    """Q_la in x-coordinates: prod_{i<j} (1 - R_ij)/(1 - t R_ij) applied to q_la."""
    la = canonical(la)
    if num_vars is None:
        num_vars = sum(la)
    return _hl_to_x(la, num_vars)


@lru_cache(maxsize=None)
def _hl_to_x(la, num_vars):
    n = len(la)
    series = [
        TranslationSeries(i, j, SeriesKind.INVERSE_TDEFORMED)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    total = XYPolynomial()
    for vec, coeff in evaluate_series_product(la, series).items():
        if min(vec, default=0) < 0:
            continue
        total = total + _q_product(tuple(sorted(vec, reverse=True)), num_vars).scale(coeff)
    return total


@lru_cache(maxsize=None)
def _q_product(parts, num_vars):
    out = XYPolynomial.constant(1)
    for p in parts:
        out = out * q_poly(p, num_vars)
    return out


def expand_in_hl_basis(p: XYPolynomial, weight: int) -> HLSum:
    """Coordinates of a weight-homogeneous polynomial in the Q_lambda basis."""
    if not p:
        return {}
    basis_keys = partitions_of(weight)
    basis = [hl_to_x(la, weight) for la in basis_keys]
    coords = expand_in_basis(p, basis)
    return {la: c for la, c in zip(basis_keys, coords) if c}
