"""Grade lattices: validation, derived tables, and grade combination.

Run as: python demos/01_lattices_and_tnorms.py
"""

from ambrel.catalog import boolean_square, chain, lukasiewicz, pentagon_leq
from ambrel.errors import ValidationError
from ambrel.lattice import meet_tnorm, validate_lattice, validate_tnorm, way_below

# A lattice is handed over as a full order matrix; join and meet tables
# are derived during validation.
c3 = chain(3)
print("chain(3):", c3.elements)
print("  m v 1 =", c3.elements[c3.join(1, 2)], "   m ^ 1 =", c3.elements[c3.meet(1, 2)])

sq = boolean_square()
a, b = sq.index("a"), sq.index("b")
print("square:", sq.elements)
print("  a v b =", sq.elements[sq.join(a, b)], "   a ^ b =", sq.elements[sq.meet(a, b)])
print("  family_join{} =", sq.elements[sq.family_join([])], "(empty join is bottom)")

# Non-distributive candidates are rejected with a witness triple.
labels, leq = pentagon_leq()
try:
    validate_lattice(labels, leq)
except ValidationError as e:
    print("pentagon rejected:", e.code, "witness", e.witness)

# On finite lattices the approximation order collapses to the plain order.
print("way_below(m, 1) on chain(3):", way_below(c3, 1, 2))

# Grade combination: the meet always qualifies; on chains truncated
# addition gives a second, non-idempotent combination.
print("meet table is a valid combination:", validate_tnorm(c3, c3.meet_table, "meet").name)
luk = lukasiewicz(c3)
m = c3.index("m")
print("lukasiewicz on chain(3): m * m =", c3.elements[luk(m, m)])

# On the square, the axioms force every combination to be the meet:
# a*b <= a^b = 0 and distributivity over join pins a*a = a.
print("meet on square validates:", meet_tnorm(sq).name)
