"""Exhaustive cross-checks of the operator formulas against independent oracles.

Each ``*_oracle_check`` walks instances in order of increasing total weight
and returns a list of mismatch records, so the first record is a minimal
failing instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .exact_algebra import XYPolynomial, ZERO, xpoly_mul
from .hall_littlewood import expand_in_hl_basis, hl_to_x, mul_hl, pieri_hl, psi_coefficient
from .partitions import horizontal_strips, partitions_of
from .schur import lr_tableaux_oracle, mul_schur, pieri_schur, schur_to_x
from .universal_characters import koike_expansion, mul_uc, uc_to_xy

MAX_BOUND = {"schur": 8, "hl": 6, "uc": 6}


@dataclass
class Mismatch:
    check: str
    instance: tuple
    got: object
    expected: object

    def describe(self) -> str:
        return f"{self.check} {self.instance}: got {self.got}, expected {self.expected}"


@dataclass
class CheckReport:
    basis: str
    bound: int
    cases: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def pairs_up_to(bound: int, max_length: int | None = None):
    """(mu, nu) with |mu| + |nu| <= bound, by increasing total weight."""
    for n in range(bound + 1):
        for k in range(n + 1):
            for mu in partitions_of(k, None, max_length):
                for nu in partitions_of(n - k, None, max_length):
                    yield mu, nu


def quadruples_up_to(bound: int):
    """(xi, eta, tau, nu) with total weight <= bound, by increasing total weight."""
    for n in range(bound + 1):
        for w in _compositions(n, 4):
            yield from product(*(partitions_of(k) for k in w))


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def schur_oracle_check(bound: int, max_length: int = 4) -> CheckReport:
    report = CheckReport("schur", bound)
    for mu, nu in pairs_up_to(bound, max_length):
        got = mul_schur(mu, nu)
        expected = {}
        for la in partitions_of(sum(mu) + sum(nu)):
            c = lr_tableaux_oracle(mu, nu, la)
            if c:
                expected[la] = c
        report.cases += 1
        if got != expected:
            report.mismatches.append(Mismatch("mul_schur/lr_tableaux", (mu, nu), got, expected))
    for n in range(bound + 1):
        for mu in partitions_of(n):
            for r in range(1, min(4, bound) + 1):
                got = pieri_schur(mu, r)
                expected = {la: 1 for la in horizontal_strips(mu, r)}
                report.cases += 1
                if got != expected:
                    report.mismatches.append(Mismatch("pieri_schur/strips", (mu, r), got, expected))
    return report


def schur_x_expansion_check(bound: int) -> CheckReport:
    report = CheckReport("schur-x", bound)
    for mu, nu in pairs_up_to(bound):
        n = sum(mu) + sum(nu)
        lhs = xpoly_mul(schur_to_x(mu, n), schur_to_x(nu, n), n)
        rhs = XYPolynomial()
        for la, c in mul_schur(mu, nu).items():
            rhs = rhs + schur_to_x(la, n).scale(c)
        report.cases += 1
        if lhs != rhs:
            report.mismatches.append(Mismatch("schur_to_x product", (mu, nu), rhs, lhs))
    return report


def hl_oracle_check(bound: int, pieri_bound: int | None = None, max_r: int = 4) -> CheckReport:
    report = CheckReport("hl", bound)
    for mu, nu in pairs_up_to(bound):
        n = sum(mu) + sum(nu)
        got = mul_hl(mu, nu)
        expected = expand_in_hl_basis(xpoly_mul(hl_to_x(mu, n), hl_to_x(nu, n), n), n)
        report.cases += 1
        if got != expected:
            report.mismatches.append(Mismatch("mul_hl/x-expansion", (mu, nu), got, expected))
    pieri_bound = bound if pieri_bound is None else pieri_bound
    for n in range(pieri_bound + 1):
        for mu in partitions_of(n):
            for r in range(1, max_r + 1):
                got = pieri_hl(mu, r)
                expected = {}
                for la in horizontal_strips(mu, r):
                    c = psi_coefficient(la, mu)
                    if c:
                        expected[la] = c
                report.cases += 1
                if got != expected:
                    report.mismatches.append(Mismatch("pieri_hl/psi", (mu, r), got, expected))
    return report


def hl_t0_check(bound: int) -> CheckReport:
    report = CheckReport("hl-t0", bound)
    for mu, nu in pairs_up_to(bound):
        at_zero = {la: c(0) for la, c in mul_hl(mu, nu).items() if c(0)}
        report.cases += 1
        expected = mul_schur(mu, nu)
        if at_zero != expected:
            report.mismatches.append(Mismatch("mul_hl(t=0)/mul_schur", (mu, nu), at_zero, expected))
    return report


def uc_oracle_check(bound: int, xy_bound: int = 5, policy: str = "straighten") -> CheckReport:
    report = CheckReport("uc", bound)
    for xi, eta, tau, nu in quadruples_up_to(bound):
        got = mul_uc((xi, eta), (tau, nu), policy=policy)
        expected = dict(koike_expansion(xi, eta, tau, nu))
        report.cases += 1
        if got != expected:
            report.mismatches.append(Mismatch("mul_uc/koike", (xi, eta, tau, nu), got, expected))
    for quad in quadruples_up_to(min(bound, xy_bound)):
        xi, eta, tau, nu = quad
        n = sum(map(sum, quad))
        lhs = xpoly_mul(uc_to_xy((xi, eta), n), uc_to_xy((tau, nu), n), n)
        rhs = XYPolynomial()
        for key, c in mul_uc((xi, eta), (tau, nu), policy=policy).items():
            rhs = rhs + uc_to_xy(key, n).scale(c)
        report.cases += 1
        if lhs != rhs:
            report.mismatches.append(Mismatch("mul_uc/xy-polynomial", quad, "product", "mismatch"))
    return report


def oracle_check(basis: str, bound: int) -> CheckReport:
    if basis not in MAX_BOUND:
        raise ValueError(f"unknown basis {basis!r}")
    if bound > MAX_BOUND[basis]:
        raise ValueError(f"bound {bound} exceeds the maximum {MAX_BOUND[basis]} for {basis}")
    if basis == "schur":
        return schur_oracle_check(bound)
    if basis == "hl":
        return hl_oracle_check(bound)
    return uc_oracle_check(bound)
