"""
Universal characters
====================

A universal character S[la, mu] lives in two families of variables and has
degree |la| - |mu|. Products are computed from decrement matrices on both
sides followed by ordinary Littlewood-Richardson products, and checked
against Koike's formula.
"""

from structconst.universal_characters import koike_expansion, mul_uc, uc_degree, uc_to_xy

a, b = ((2, 1), (3, 1)), ((1,), (1,))
prod = mul_uc(a, b)
for key, c in sorted(prod.items(), key=lambda kv: (-kv[1], kv[0])):
    print(key, c)
print("degree", uc_degree(a) + uc_degree(b), "terms", sum(prod.values()))
print("agrees with Koike:", prod == dict(koike_expansion(*a, *b)))

# The smallest mixed character, written in the x and y power sums
print(uc_to_xy(((1,), (1,))).terms)
