"""Encoding graded representations as ternary hyperrelations.

A representation embeds injectively into triples (family of source
sets, target set, grade) by grading a family with the join over its
members.  The image is recognized as the common fixed points of three
saturation operators, and least upper bounds of whole families of
representations can be computed on the encoded side.

Run as: python demos/07_hyperencoding.py
"""

from ambrel import fuzzy
from ambrel import hyperencoding as he
from ambrel.catalog import boolean_square
from ambrel.generators import random_fuzzy_rep
from ambrel.hyperspace import family_of, members, space

X = space("x1", "x2", "x3")
Y = space("y1", "y2")
L = boolean_square()

# the refinement hyperspace of a family: all families holding a subset
# of each member
fam = family_of([X.subset(["x1", "x2"])])
refiners = he.refinement_hyperspace(X, fam)
print(f"families refining {{x1,x2}}: {len(refiners)} of {(1 << X.full) - 1}")

rep = random_fuzzy_rep(X, Y, L, seed=5, density=0.5)
t = he.encode(rep)
print("encoded triples:", t.triple_count())
print("fixed point of the saturation composite:", he.is_encoded(t))
print("decodes back:", he.decode(t) == rep)

# saturations are extensive and idempotent on arbitrary triple sets
raw = he.TernaryHyperRelation.from_triples(
    X, Y, L, [(family_of([1]), 1, L.top), (family_of([2, 4]), 2, L.index("a"))]
)
for name, op in (("refine", he.subset_saturate), ("merge", he.sup_saturate), ("full", he.plus)):
    sat = op(raw)
    print(f"{name}-saturation: {raw.triple_count()} -> {sat.triple_count()} triples,"
          f" idempotent: {op(sat) == sat}")

# the least upper bound of a family of representations, computed on the
# encoded side, agrees with the pointwise construction
members_ = [random_fuzzy_rep(X, Y, L, seed=s, density=0.4) for s in (1, 2, 3)]
via_encoding = he.family_sup(members_)
print("encoded sup == pointwise sup:", via_encoding == fuzzy.sup_family(members_))
