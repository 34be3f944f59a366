"""Lattice-graded representations: cuts, composition, geometric builders.

Run as: python demos/04_graded_representations.py
"""

from ambrel import crisp, fuzzy
from ambrel.catalog import boolean_square, chain, lukasiewicz
from ambrel.generators import GridWindow, line_metric, metric_rep, translation_rep
from ambrel.hyperspace import space
from ambrel.lattice import meet_tnorm

X = space("x1", "x2")
Y = space("y1", "y2")
L = chain(3)

# grade tables: how well a source set stands for a target set
ident = fuzzy.identity(X, L)
top = fuzzy.top(X, Y, L)
bot = fuzzy.bot(X, Y, L)
print("identity grade of ({x1}, {x1,x2}):", L.elements[ident.grade(1, X.full)])

# cuts turn grades into crisp representations, one per grade; the cut
# family reassembles the table exactly
cut_m = fuzzy.alpha_cut(ident, L.index("m"))
print("cut of the graded identity at m == crisp identity:", cut_m == crisp.identity(X))
print("cut roundtrip:", fuzzy.from_cuts(X, X, L, fuzzy.cuts(ident)) == ident)

# composition joins combined grades over the middle space; the
# combination defaults to the lattice meet, truncated addition works too
luk = lukasiewicz(L)
r = fuzzy.embed_crisp(crisp.from_seed(X, Y, [(X.full, 1)]), L)
s = fuzzy.embed_crisp(crisp.identity(Y), L)
print("meet-composition == lukasiewicz-composition on two-valued tables:",
      fuzzy.compose(r, s, meet_tnorm(L)) == fuzzy.compose(r, s, luk))

# pseudo-inversion works cutwise; the graded round trip zeroes the
# full-source grades, mirroring the crisp collapse
print("graded top round-trips?", fuzzy.sms(fuzzy.sms(top)) == top)
print("graded bottom round-trips?", fuzzy.sms(fuzzy.sms(bot)) == bot)

# a metric grades one-sided closeness: how far A sticks out of B
m = metric_rep(line_metric(3), chain(4))
sp = m.source
print("metric grade (p0 inside {p0,p1}):", chain(4).elements[m.grade(1, 3)])
print("metric grade (p0 vs far p2):", chain(4).elements[m.grade(1, 4)])

# shifts on a strip of cells: grade = reach minus the shortest embedding shift
g = GridWindow(3, 1, 1, 1)
t = translation_rep(g)
a = t.source.subset(["c0r0"])
print("translation grades from c0r0:",
      {"".join(lbl): t.lattice.elements[t.grade(a, t.target.subset([lbl]))]
       for lbl in t.target.points})

# on a non-chain lattice, two valid tables can have a union of subgraphs
# that is not a table: the grades refuse to join
sq = boolean_square()
rf, sf, witness = fuzzy.union_counterexample(X, Y, sq)
print("union counterexample witness:", witness["grades"], "->", witness["missing_grade"],
      "missing at", witness["source_set"], witness["target_set"])
