"""Crisp ambiguous representations: building, inverting, composing.

A representation relates nonempty subsets of a source space to nonempty
subsets of a target space, reading "A can stand for B": smaller sources
stand for no less, larger targets are no harder to stand for, and the
whole target is always reachable.

Run as: python demos/03_crisp_representations.py
"""

from ambrel import crisp
from ambrel.hyperspace import members, space

X = space("x1", "x2")
Y = space("y1", "y2")
show = lambda sp, fam: [list(sp.labels(s)) for s in members(fam)]

# the least representation containing a seed pair: here, "anything can
# stand for a neighbourhood of y1"
R = crisp.from_seed(X, Y, [(X.full, Y.subset(["y1"]))])
for a in X.subsets():
    print(f"admissible for {list(X.labels(a))}:", show(Y, R.row(a)))

# unavoidable sets: those meeting every admissible set
print("unavoidable for {x1}:", show(Y, crisp.unavoidable(R, 1).family))

# pseudo-inversion swaps the spaces through the traversal
S = crisp.sms(R)
for b in Y.subsets():
    print(f"inverse row at {list(Y.labels(b))}:", show(X, S.row(b)))

# the identity relates a set to its supersets and is its own inverse
ident = crisp.identity(X)
print("identity self-inverse:", crisp.sms(ident) == ident)

# composition chains representations; identities are neutral
print("R ; identity == R:", crisp.compose(R, crisp.identity(Y)) == R)

# double inversion collapses the full-source row to {Y}: R here relates
# the whole of X to {y1}, which one round trip forgets
RR = crisp.sms(crisp.sms(R))
print("round trip restores R?", RR == R)
print("  round-trip row at X:", show(Y, RR.row(X.full)), "(was", show(Y, R.row(X.full)), ")")
print("  pseudo-invertible?", crisp.is_pseudo_invertible(R))

# a point map induces a representation: (A, B) related iff f(A) inside B
f = {"x1": "y1", "x2": "y1"}
Rf = crisp.mapping_rep(X, Y, f)
Sf = crisp.sms(Rf)
print("inverse of a constant map at {y2}:", show(X, Sf.row(Y.subset(["y2"]))),
      "(preimage empty: everything qualifies)")

# indiscernibility: sets with equal upper approximations represent each other
Z = space("1", "2", "3")
blocks = (("1", "2"), ("3",))
rough = crisp.rough_rep(Z, blocks)
print("({1},{2}) related under {1,2}|{3}:", rough.contains(Z.subset(["1"]), Z.subset(["2"])))
print("{1,3} unavoidable for {3}:", Z.subset(["1", "3"]) in crisp.unavoidable(rough, Z.subset(["3"])))
