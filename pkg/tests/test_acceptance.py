"""Acceptance suite: one test group per criterion, exact equality throughout.

Each test carries ``@pytest.mark.acceptance(n)``; ``conftest.py`` folds the
outcomes into one ``ACCEPTANCE n: PASS/FAIL`` line per criterion.
"""

import itertools
import random
import time

import pytest

from structconst import clear_caches
from structconst.checks import (
    hl_oracle_check,
    hl_t0_check,
    pairs_up_to,
    quadruples_up_to,
    schur_oracle_check,
    uc_oracle_check,
)
from structconst.cli import run_corpus
from structconst.exact_algebra import ONE, T, TPoly
from structconst.hall_littlewood import mul_hl, p_structure_constant, pieri_hl, straighten_hl
from structconst.operator_engine import (
    EngineStats,
    SeriesKind,
    TranslationSeries,
    evaluate_series_product,
    potential,
    tail_sums,
)
from structconst.partitions import partitions_of
from structconst.schur import mul_schur, pieri_schur, straighten_schur
from structconst.universal_characters import mul_uc

U = T * T - ONE  # t^2 - 1


class Timer:
    def __enter__(self):
        clear_caches()
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _scale(factor, terms):
    return {k: factor * v for k, v in terms.items()}


# --- 1. worked examples -----------------------------------------------------

Q_M16 = {(5,): U, (4, 1): T * U, (3, 2): T * T * U}
Q_M17 = {(6,): U, (5, 1): T * U, (4, 2): T * T * U, (3, 3): T ** 3 * (T - ONE)}

HL_TABLES = {
    (2, 3): {(3, 2): T},
    (1, 4): {(4, 1): T, (3, 2): U},
    (0, 5): {(5,): T, (4, 1): U, (3, 2): T * U},
    (-1, 6): Q_M16,
    (-2, 7): _scale(T, Q_M16),
    (-3, 8): _scale(T ** 2, Q_M16),
    (-4, 9): _scale(T ** 3, Q_M16),
    (2, 4): {(4, 2): T, (3, 3): T - ONE},
    (1, 5): {(5, 1): T, (4, 2): U, (3, 3): T * (T - ONE)},
    (0, 6): {(6,): T, (5, 1): U, (4, 2): T * U, (3, 3): T * T * (T - ONE)},
    (-1, 7): Q_M17,
    (-2, 8): _scale(T, Q_M17),
    (-3, 9): _scale(T ** 2, Q_M17),
}

UC_TERMS = [
    ((3, 1), (4, 1)), ((3, 1), (3, 2)), ((3, 1), (3, 1, 1)),
    ((2, 2), (4, 1)), ((2, 2), (3, 2)), ((2, 2), (3, 1, 1)),
    ((2, 1, 1), (4, 1)), ((2, 1, 1), (3, 2)), ((2, 1, 1), (3, 1, 1)),
    ((2, 1), (3, 1)), ((1, 1, 1), (3, 1)), ((3,), (3, 1)), ((2, 1), (3, 1)),
    ((2, 1), (3, 1)), ((2, 1), (2, 2)), ((2, 1), (2, 1, 1)), ((2, 1), (4,)),
    ((2, 1), (3, 1)), ((1, 1), (2, 1)), ((2,), (2, 1)), ((1, 1), (3,)), ((2,), (3,)),
]


def _golden_cases():
    uc = {}
    for key in UC_TERMS:
        uc[key] = uc.get(key, 0) + 1
    yield "1a schur pieri", lambda: pieri_schur((2, 1), 2), {
        (4, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1}
    yield "1b schur product", lambda: mul_schur((2, 1), (2, 1)), {
        (4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2, (3, 1, 1, 1): 1,
        (2, 2, 2): 1, (2, 2, 1, 1): 1}
    for vec, expected in HL_TABLES.items():
        yield f"1c hl {vec}", (lambda v=vec: straighten_hl(v)), expected
    yield "1d hl pieri", lambda: pieri_hl((2, 1), 2), {
        (2, 2, 1): ONE, (3, 1, 1): ONE - T, (3, 2): ONE - T, (4, 1): ONE - T}
    yield "1e hl product", lambda: mul_hl((2, 1), (2, 1)), {
        (2, 2, 1, 1): ONE, (3, 3): (ONE - T) ** 2, (3, 2, 1): (ONE - T * T) * (2 - T),
        (2, 2, 2): ONE - T, (3, 1, 1, 1): ONE - T, (4, 1, 1): ONE - T, (4, 2): (ONE - T) ** 2}
    yield "1f uc product", lambda: mul_uc(((2, 1), (3, 1)), ((1,), (1,))), uc


@pytest.mark.acceptance(1)
@pytest.mark.parametrize("name, compute, expected", list(_golden_cases()), ids=lambda x: x if isinstance(x, str) else "")
def test_c1_worked_examples(name, compute, expected):
    with Timer() as timer:
        got = compute()
    assert got == expected
    assert timer.elapsed < 1.0


@pytest.mark.acceptance(1)
def test_c1_schur_straightening_examples():
    assert straighten_schur((2, 3)) is None
    assert straighten_schur((2, 4)) == (-1, (3, 3))


@pytest.mark.acceptance(1)
def test_c1_shipped_corpus():
    with Timer() as timer:
        code, text = run_corpus()
    assert code == 0, text
    assert timer.elapsed < 28.0


# --- 2-5. oracle sweeps -----------------------------------------------------

@pytest.mark.acceptance(2)
def test_c2_schur_oracle():
    with Timer() as timer:
        report = schur_oracle_check(8, max_length=4)
    assert report.mismatches == []
    assert timer.elapsed < 60


@pytest.mark.acceptance(3)
def test_c3_hl_oracle():
    with Timer() as timer:
        report = hl_oracle_check(6, pieri_bound=6, max_r=4)
    assert report.mismatches == []
    assert timer.elapsed < 120


@pytest.mark.acceptance(4)
def test_c4_t0_degeneration():
    assert hl_t0_check(8).mismatches == []


@pytest.mark.acceptance(5)
def test_c5_uc_oracle():
    with Timer() as timer:
        report = uc_oracle_check(6, xy_bound=5)
    assert report.mismatches == []
    assert timer.elapsed < 300


# --- 6. integrality -----------------------------------------------------------

@pytest.mark.acceptance(6)
def test_c6_integrality():
    for mu, nu in pairs_up_to(6):
        assert all(type(c) is int for c in mul_schur(mu, nu).values())
        assert all(type(c) is TPoly for c in mul_hl(mu, nu).values())
        for la in partitions_of(sum(mu) + sum(nu)):
            assert type(p_structure_constant(mu, nu, la)) is TPoly
    for xi, eta, tau, nu in quadruples_up_to(6):
        assert all(type(c) is int for c in mul_uc((xi, eta), (tau, nu)).values())


# --- 7. identity suites -------------------------------------------------------

def _combine(*weighted):
    out = {}
    for factor, terms in weighted:
        for la, c in terms.items():
            out[la] = out.get(la, TPoly()) + factor * c
    return {k: v for k, v in out.items() if v}


@pytest.mark.acceptance(7)
def test_c7_deformed_fermionic_relation():
    for n, m in itertools.product(range(-2, 7), repeat=2):
        total = _combine(
            (ONE, straighten_hl((n - 1, m))),
            (ONE, straighten_hl((m - 1, n))),
            (-T, straighten_hl((n, m - 1))),
            (-T, straighten_hl((m, n - 1))),
        )
        assert total == {}, (n, m)


@pytest.mark.acceptance(7)
def test_c7_schur_two_row_relation():
    for i, j in itertools.product(range(-2, 7), repeat=2):
        a, b = straighten_schur((i, j)), straighten_schur((j - 1, i + 1))
        if a is None or b is None:
            assert a is None and b is None, (i, j)
        else:
            assert a[1] == b[1] and a[0] + b[0] == 0, (i, j)


@pytest.mark.acceptance(7)
def test_c7_engine_ordering_and_budget():
    rng = random.Random(20261018)
    kinds = list(SeriesKind)
    for _ in range(1000):
        length = rng.randint(2, 5)
        base = tuple(rng.randint(-2, 5) for _ in range(length))
        series = []
        for _ in range(rng.randint(0, 5)):
            s, d = sorted(rng.sample(range(1, length + 1), 2))
            series.append(TranslationSeries(s, d, rng.choice(kinds)))
        shuffled = list(series)
        rng.shuffle(shuffled)
        stats = EngineStats()
        first = evaluate_series_product(base, series, stats)
        assert first == evaluate_series_product(base, shuffled)
        assert stats.max_branch_applications <= max(potential(base), 0)


# --- 8. pruning soundness -----------------------------------------------------

@pytest.mark.acceptance(8)
def test_c8_negative_tail_sum_vanishes():
    checked = 0
    for length in range(1, 5):
        for vec in itertools.product(range(-4, 7), repeat=length):
            if min(tail_sums(vec)) >= 0:
                continue
            assert straighten_schur(vec) is None, vec
            assert straighten_hl(vec) == {}, vec
            checked += 1
    assert checked > 0
