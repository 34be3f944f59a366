"""Capacities: the measure-like view of a graded representation.

Each source set of a graded representation induces a monotone set
function on the target — a capacity.  Growing the source set can only
shrink the capacity, and a capacity is recoverable from its subgraph.

Run as: python demos/05_capacities.py
"""

from ambrel import fuzzy
from ambrel.capacity import capacities_of, capacity_of, capacity_subgraph, validate_subgraph
from ambrel.catalog import boolean_square
from ambrel.generators import random_fuzzy_rep
from ambrel.hyperspace import space

X = space("x1", "x2")
Y = space("y1", "y2")
L = boolean_square()

rep = random_fuzzy_rep(X, Y, L, seed=11, density=0.6)
cap = capacity_of(rep, X.subset(["x1"]))
print("capacity from the {x1} fiber:")
for mask in range(Y.full + 1):
    print("  c(", list(Y.labels(mask)), ") =", L.elements[cap(mask)])

caps = capacities_of(rep)
bigger, smaller = caps[X.full], caps[X.subset(["x1"])]
print("growing the source never raises the capacity:",
      all(L.le(bigger(b), smaller(b)) for b in range(Y.full + 1)))

sub = capacity_subgraph(cap)
print("subgraph size:", len(sub))
print("roundtrip through the subgraph:", validate_subgraph(Y, L, sub) == cap)

ident = fuzzy.identity(X, L)
c1 = capacity_of(ident, X.subset(["x1"]))
print("identity fiber at {x1} grades exactly the sets containing x1:",
      [L.elements[c1(b)] for b in range(X.full + 1)])
