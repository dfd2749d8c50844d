"""
Hall-Littlewood functions
=========================

Q-symbols straighten by the odd and even difference rules into a Z[t]
combination of partition-indexed Q functions. Setting t = 0 recovers the
Schur picture.
"""

from structconst.hall_littlewood import (
    b_lambda, mul_hl, p_structure_constant, pieri_hl, straighten_hl,
)

for vec in [(2, 3), (1, 4), (0, 5), (-1, 6), (-2, 7), (2, 4), (-1, 7)]:
    terms = straighten_hl(vec)
    print(vec, "->", {la: str(c) for la, c in terms.items()})

print({la: str(c) for la, c in pieri_hl((2, 1), 2).items()})

prod = mul_hl((2, 1), (2, 1))
for la, c in sorted(prod.items(), reverse=True):
    print(la, c, "| at t=0:", c(0))

# Structure constants in the P basis
print(b_lambda((2, 2, 1)))
print(p_structure_constant((1,), (1,), (1, 1)))
