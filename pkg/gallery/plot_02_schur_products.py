"""
Schur functions: straightening, Pieri and products
===================================================

Schur symbols with arbitrary integer index straighten to a signed partition
or to zero. Products come from interleaving the two partitions and expanding
the contraction series.
"""

from structconst.schur import (
    interleave, lr_tableaux_oracle, mul_schur, pieri_schur, straighten_schur,
)

for vec in [(2, 3), (2, 4), (1, 3, 2), (5, -1, 1)]:
    print(vec, "->", straighten_schur(vec))

print(pieri_schur((2, 1), 2))

merged, slots = interleave((2, 1), (2, 1))
print("interleaved", merged, "slots", slots)

prod = mul_schur((2, 1), (2, 1))
for la, c in sorted(prod.items(), reverse=True):
    # Independent check against lattice-word tableaux
    print(la, c, lr_tableaux_oracle((2, 1), (2, 1), la))
