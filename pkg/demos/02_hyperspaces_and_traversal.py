"""Set families over a finite space and the traversal duality.

Run as: python demos/02_hyperspaces_and_traversal.py
"""

from ambrel.hyperspace import (
    InclusionHyperspace,
    antichain,
    family_of,
    is_inclusion_hyperspace,
    members,
    space,
    traversal,
    upward_closure,
)

X = space("a", "b", "c")
show = lambda fam: [list(X.labels(s)) for s in members(fam)]

# subsets are bitmasks; families are sets of subsets
singles = family_of([X.subset(["a"]), X.subset(["b"])])
print("family:", show(singles))

# the traversal collects every set meeting all members
t = traversal(X, singles)
print("traversal:", show(t))

# traversing twice closes upward — for nonempty families
print("up-closure:", show(upward_closure(X, singles)))
print("double traversal:", show(traversal(X, t)))

# the empty family is the one boundary case: everything traverses it,
# and only the full set survives the second pass
print("traversal(empty):", len(list(members(traversal(X, 0)))), "sets (all of them)")
print("double traversal of empty:", show(traversal(X, traversal(X, 0))))

# upward-closed nonempty families are exactly the traversal-stable ones;
# they are stored by their minimal antichain
fam = upward_closure(X, family_of([X.subset(["a", "b"]), X.subset(["c"])]))
print("inclusion hyperspace?", is_inclusion_hyperspace(X, fam))
ih = InclusionHyperspace.from_family(X, fam)
print("minimal antichain:", [list(X.labels(s)) for s in ih.minimal])
print("traversal-stable:", traversal(X, traversal(X, fam)) == fam)
