"""Universal characters S_[la, mu](x, y) and their structure constants.

A UC index is a pair of partitions ``(la, mu)``; sums are dicts
``{(la, mu): int}``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .exact_algebra import XYPolynomial, h_poly, xy_determinant
from .partitions import canonical, contains, partitions_of
from .schur import lr_tableaux_oracle, mul_schur, straighten_schur

UCSum = dict

STRAIGHTEN = "straighten"
STRICT = "strict"


def uc_index(la: Sequence[int], mu: Sequence[int]) -> tuple:
    return canonical(la), canonical(mu)


def uc_degree(a) -> int:
    la, mu = a
    return sum(la) - sum(mu)


def uc_to_xy(a, num_vars: int | None = None) -> XYPolynomial:
    """Twisted Jacobi-Trudi determinant.

    The first l' rows are h_{mu_{l'-i+1} + i - j}(y), the remaining l rows
    h_{la_{i-l'} - i + j}(x) (1-based i, j).
    """
    la, mu = uc_index(*a)
    if num_vars is None:
        num_vars = sum(la) + sum(mu)
    return _uc_to_xy(la, mu, num_vars)


@lru_cache(maxsize=None)
def _uc_to_xy(la, mu, num_vars):
    lp = len(mu)
    size = len(la) + lp
    rows = []
    for i in range(1, size + 1):
        if i <= lp:
            rows.append([h_poly(mu[lp - i] + i - j, num_vars, "y") for j in range(1, size + 1)])
        else:
            rows.append([h_poly(la[i - lp - 1] - i + j, num_vars, "x") for j in range(1, size + 1)])
    return xy_determinant(rows)


def _decrement_matrices(rows: tuple, cols: tuple, policy: str):
    """Yield (signed_rows, signed_cols, row_result, col_result) per surviving matrix.

    Enumerates nonnegative matrices K (one entry per row/column pair, row-major),
    subtracting row sums from ``rows`` and column sums from ``cols``.  A branch
    is cut once an entry v_p drops below -(len - p) (1-based p): the shifted
    entry is then negative and stays negative, so the side straightens to 0.
    """
    nr, nc = len(rows), len(cols)
    row_floor = [-(nr - p) for p in range(1, nr + 1)]
    col_floor = [-(nc - p) for p in range(1, nc + 1)]
    if policy == STRICT:
        row_floor = [0] * nr
        col_floor = [0] * nc
    r = list(rows)
    c = list(cols)
    pairs = [(i, j) for i in range(nr) for j in range(nc)]

    def rec(idx):
        if idx == len(pairs):
            yield tuple(r), tuple(c)
            return
        i, j = pairs[idx]
        k = 0
        while True:
            yield from rec(idx + 1)
            r[i] -= 1
            c[j] -= 1
            k += 1
            if r[i] < row_floor[i] or c[j] < col_floor[j]:
                break
        r[i] += k
        c[j] += k

    yield from rec(0)


def mul_uc(a, b, policy: str = STRAIGHTEN) -> UCSum:
    """Expand S_[xi, eta] * S_[tau, nu] in universal characters.

    Contractions pair xi with nu and tau with eta; each decrement matrix
    contributes once.  Under the default policy a side that went negative
    is straightened like a Schur index; ``policy="strict"`` instead drops
    any term with a negative part.
    """
    if policy not in (STRAIGHTEN, STRICT):
        raise ValueError(f"unknown policy {policy!r}")
    xi, eta = uc_index(*a)
    tau, nu = uc_index(*b)
    return dict(_mul_uc(xi, eta, tau, nu, policy))


def _side(vec, policy):
    if policy == STRICT and any(x < 0 for x in vec):
        return None
    return straighten_schur(vec)


@lru_cache(maxsize=None)
def _mul_uc(xi, eta, tau, nu, policy):
    first = {}
    for xi2, nu2 in _decrement_matrices(xi, nu, policy):
        sx, sn = _side(xi2, policy), _side(nu2, policy)
        if sx is None or sn is None:
            continue
        key = (sx[1], sn[1])
        first[key] = first.get(key, 0) + sx[0] * sn[0]
    second = {}
    for tau2, eta2 in _decrement_matrices(tau, eta, policy):
        st, se = _side(tau2, policy), _side(eta2, policy)
        if st is None or se is None:
            continue
        key = (st[1], se[1])
        second[key] = second.get(key, 0) + st[0] * se[0]

    out = {}
    for (xi3, nu3), c1 in first.items():
        if not c1:
            continue
        for (tau3, eta3), c2 in second.items():
            if not c2:
                continue
            left = mul_schur(xi3, tau3)
            right = mul_schur(eta3, nu3)
            for la, cl in left.items():
                for mu, cm in right.items():
                    key = (la, mu)
                    out[key] = out.get(key, 0) + c1 * c2 * cl * cm
    return tuple((k, v) for k, v in out.items() if v)


@lru_cache(maxsize=None)
def _skew_pairs(outer1, outer2):
    """sum_kappa C^{outer1}_{kappa alpha} C^{outer2}_{kappa beta}, as {(alpha, beta): n}."""
    out = {}
    for k in range(min(sum(outer1), sum(outer2)) + 1):
        for kappa in partitions_of(k):
            if not (contains(outer1, kappa) and contains(outer2, kappa)):
                continue
            lefts = _lr_cofactors(outer1, kappa)
            rights = _lr_cofactors(outer2, kappa)
            for alpha, ca in lefts.items():
                for beta, cb in rights.items():
                    out[(alpha, beta)] = out.get((alpha, beta), 0) + ca * cb
    return out


@lru_cache(maxsize=None)
def _lr_cofactors(outer, kappa):
    """{alpha: C^{outer}_{kappa alpha}} via the tableaux oracle."""
    out = {}
    for alpha in partitions_of(sum(outer) - sum(kappa)):
        if not contains(outer, alpha):
            continue
        c = lr_tableaux_oracle(kappa, alpha, outer)
        if c:
            out[alpha] = c
    return out


@lru_cache(maxsize=None)
def koike_expansion(xi, eta, tau, nu) -> tuple:
    """All M^{[la, mu]} for S_[xi, eta] * S_[tau, nu], using only LR tableaux counts."""
    xi, eta, tau, nu = (canonical(p) for p in (xi, eta, tau, nu))
    ab = _skew_pairs(xi, nu)  # (alpha, beta)
    td = _skew_pairs(eta, tau)  # (theta, delta)
    out = {}
    for (alpha, beta), c1 in ab.items():
        for (theta, delta), c2 in td.items():
            for la in partitions_of(sum(alpha) + sum(delta)):
                cl = lr_tableaux_oracle(alpha, delta, la)
                if not cl:
                    continue
                for mu in partitions_of(sum(beta) + sum(theta)):
                    cm = lr_tableaux_oracle(beta, theta, mu)
                    if cm:
                        key = (la, mu)
                        out[key] = out.get(key, 0) + c1 * c2 * cl * cm
    return tuple(sorted((k, v) for k, v in out.items() if v))


def koike_coefficient(xi, eta, tau, nu, la, mu) -> int:
    """Coefficient of S_[la, mu] in S_[xi, eta] * S_[tau, nu] by the Koike sum."""
    key = (canonical(la), canonical(mu))
    return dict(koike_expansion(*(canonical(p) for p in (xi, eta, tau, nu)))).get(key, 0)
