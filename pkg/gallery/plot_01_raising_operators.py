"""
Raising operators and tail-sum pruning
======================================

A raising operator R_sd moves one unit from position d to position s.
Products of geometric series in these operators are expanded depth first;
any vector with a negative tail sum is dropped, since its basis element
vanishes.
"""

from structconst.exact_algebra import ONE
from structconst.operator_engine import (
    EngineStats, SeriesKind, TranslationSeries, evaluate_series_product, potential, tail_sums,
)

base = (2, 2, 1, 1)
print("tail sums of", base, "=", tail_sums(base))
print("potential =", potential(base))

# The four contractions that produce S(2,1) * S(2,1)
series = [TranslationSeries(s, d) for s, d in [(1, 2), (2, 3), (1, 4), (3, 4)]]
stats = EngineStats()
out = evaluate_series_product({base: ONE}, series, stats)
for vec, coeff in sorted(out.items(), reverse=True):
    print(vec, coeff)

# No branch ever uses more applications than the potential allows.
print(stats)

# The t-deformed series weights the k-th term by (1 - t) for k >= 1.
print(evaluate_series_product({(2, 1): ONE}, [TranslationSeries(1, 2, SeriesKind.TDEFORMED)]))
