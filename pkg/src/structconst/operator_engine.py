"""Products of geometric series of raising operators acting on index vectors.

A raising operator ``R_sd`` (``s < d``, positions counted from 1) adds one
to entry ``s`` and removes one from entry ``d``.  The engine expands

    prod_series  sum_k  c_k(t) R^k  .  base

over all exponent tuples, discarding every branch as soon as an
intermediate vector has a negative tail sum.  Each application lowers the
tail sums at positions ``s < p <= d`` and leaves the others alone, so a
negative tail sum can never recover, and vectors with a negative tail sum
straighten to zero in both the Schur and the Hall-Littlewood bases.

Termination: the potential ``sum_p p * v_p`` equals the sum of all tail
sums, so it is nonnegative on the retained region and drops by ``d - s``
with every application.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .exact_algebra import ONE, T, TPoly, ZERO

IndexVector = tuple
FormalSum = dict  # IndexVector -> TPoly


class BudgetExceeded(AssertionError):
    """More operator applications on one branch than the potential allows."""


class SeriesKind(enum.Enum):
    PLAIN = "plain"  # 1 / (1 - R)
    TDEFORMED = "tdeformed"  # (1 - tR) / (1 - R)
    INVERSE_TDEFORMED = "inverse_tdeformed"  # (1 - R) / (1 - tR)

    def coefficient(self, k: int) -> TPoly:
        if k == 0 or self is SeriesKind.PLAIN:
            return ONE
        if self is SeriesKind.TDEFORMED:
            return ONE - T
        return (T - ONE) * T ** (k - 1)


@dataclass(frozen=True)
class TranslationSeries:
    source: int
    target: int
    kind: SeriesKind = SeriesKind.PLAIN

    def __post_init__(self):
        if not 1 <= self.source < self.target:
            raise ValueError(f"need 1 <= source < target, got R_{self.source},{self.target}")


@dataclass
class EngineStats:
    """Instrumentation for the termination argument."""

    applications: int = 0
    max_branch_applications: int = 0
    max_potential: int = 0
    leaves: int = 0
    pruned: int = 0


def tail_sums(v) -> tuple:
    out = []
    acc = 0
    for x in reversed(v):
        acc += x
        out.append(acc)
    return tuple(reversed(out))


def potential(v) -> int:
    return sum(p * x for p, x in enumerate(v, start=1))


def apply_translation(v, s: int, d: int) -> IndexVector:
    """R_sd: +1 at position s, -1 at position d (1-based, s < d)."""
    if not 1 <= s < d <= len(v):
        raise ValueError(f"invalid operator R_{s},{d} on a length-{len(v)} vector")
    out = list(v)
    out[s - 1] += 1
    out[d - 1] -= 1
    return tuple(out)


def _add_term(acc: dict, key, coeff: TPoly):
    new = acc.get(key, ZERO) + coeff
    if new:
        acc[key] = new
    else:
        acc.pop(key, None)


def evaluate_series_product(
    base: Mapping[IndexVector, TPoly] | IndexVector,
    series: Iterable[TranslationSeries],
    stats: EngineStats | None = None,
) -> FormalSum:
    """Expand the series product applied to ``base`` with tail-sum pruning."""
    if not isinstance(base, Mapping):
        base = {tuple(base): ONE}
    series = list(series)
    stats = stats if stats is not None else EngineStats()
    out: dict = {}

    for vec, coeff in base.items():
        vec = tuple(vec)
        length = len(vec)
        for s in series:
            if s.target > length:
                raise ValueError(f"R_{s.source},{s.target} on a length-{length} vector")
        if not coeff:
            continue
        tails = list(tail_sums(vec))
        if any(x < 0 for x in tails):
            stats.pruned += 1
            continue
        budget = sum(tails)
        stats.max_potential = max(stats.max_potential, budget)
        _descend(vec, tails, coeff, series, 0, 0, budget, out, stats)
    return out


def _descend(vec, tails, coeff, series, idx, used, budget, out, stats):
    if idx == len(series):
        stats.leaves += 1
        _add_term(out, vec, coeff)
        return
    op = series[idx]
    s0, d0 = op.source - 1, op.target - 1
    cur = list(vec)
    cur_tails = list(tails)
    k = 0
    while True:
        _descend(tuple(cur), cur_tails, coeff * op.kind.coefficient(k), series, idx + 1,
                 used + k, budget, out, stats)
        cur[s0] += 1
        cur[d0] -= 1
        for p in range(s0 + 1, d0 + 1):
            cur_tails[p] -= 1
        if min(cur_tails[s0 + 1:d0 + 1]) < 0:
            stats.pruned += 1
            break
        k += 1
        stats.applications += 1
        branch = used + k
        stats.max_branch_applications = max(stats.max_branch_applications, branch)
        if branch > budget:
            raise BudgetExceeded(f"{branch} applications exceed potential {budget}")
        cur_tails = list(cur_tails)
