"""Lattice-graded ambiguous representations.

A graded representation assigns to each pair (nonempty source subset,
nonempty target subset) a grade in a finite bounded distributive lattice:
how well the first can stand for the second.  Grades fall as the source
set grows, rise as the target set grows, and the full target always gets
the top grade.  The grade table, the subgraph triple set and the family
of crisp cuts are three views of the same object; conversions between
them live here.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

import numpy as np

from . import crisp
from .crisp import CrispAmbRep
from .errors import LatticeIsChain, SpaceMismatch, ValidationError
from .hyperspace import FiniteSpace, members
from .lattice import FiniteLattice, TNormTable, meet_tnorm


class LFuzzyAmbRep:
    """A graded ambiguous representation, stored as a dense grade table.

    ``grades[a - 1, b - 1]`` is the lattice element index grading the pair
    of subset masks ``(a, b)``.  Instances are immutable and compared by
    value.
    """

    __slots__ = ("source", "target", "lattice", "grades")

    def __init__(self, source: FiniteSpace, target: FiniteSpace, lattice: FiniteLattice, grades):
        self.source = source
        self.target = target
        self.lattice = lattice
        arr = np.asarray(grades, dtype=np.intp).copy()
        if arr.shape != (source.full, target.full):
            raise ValidationError(
                "BadGradeTable",
                f"grade table must be {source.full}x{target.full}, got {arr.shape}",
            )
        arr.setflags(write=False)
        self.grades = arr

    def grade(self, a: int, b: int) -> int:
        return int(self.grades[a - 1, b - 1])

    def subgraph(self) -> set[tuple[int, int, int]]:
        """All triples ``(a, b, alpha)`` with ``alpha`` below the grade."""
        lat = self.lattice
        return {
            (a, b, alpha)
            for a in self.source.subsets()
            for b in self.target.subsets()
            for alpha in range(lat.size)
            if lat.le(alpha, self.grade(a, b))
        }

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LFuzzyAmbRep)
            and self.source == other.source
            and self.target == other.target
            and self.lattice == other.lattice
            and np.array_equal(self.grades, other.grades)
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.lattice, self.grades.tobytes()))

    def __repr__(self) -> str:
        return f"LFuzzyAmbRep({self.source.points}->{self.target.points}, |L|={self.lattice.size})"


def _same_frame(r: LFuzzyAmbRep, s: LFuzzyAmbRep) -> None:
    if r.source != s.source or r.target != s.target:
        raise SpaceMismatch("representations live over different spaces")
    if r.lattice != s.lattice:
        raise SpaceMismatch("representations use different grade lattices")


def validate(
    source: FiniteSpace, target: FiniteSpace, lattice: FiniteLattice, grades
) -> LFuzzyAmbRep:
    """Validate a grade table.

    Checks the full-target column is constantly top (``FullTargetNotTop``),
    grades rise with the target set (``NotIsotoneInB``) and fall with the
    source set (``NotAntitoneInA``).  Join-closure of the induced triple
    set is automatic for tables recovered by maxima, and the zero floor is
    part of the subgraph reading rather than a table property.
    """
    rep = LFuzzyAmbRep(source, target, lattice, grades)
    g = rep.grades
    leq = lattice.leq
    for a in source.subsets():
        if g[a - 1, target.full - 1] != lattice.top:
            raise ValidationError(
                "FullTargetNotTop",
                "the whole target must carry the top grade",
                witness=[list(source.labels(a))],
            )
    for b in target.subsets():
        for j in range(target.size):
            bigger = b | (1 << j)
            if bigger != b:
                for a in source.subsets():
                    if not leq[g[a - 1, b - 1], g[a - 1, bigger - 1]]:
                        raise ValidationError(
                            "NotIsotoneInB",
                            "grades must rise with the target set",
                            witness=[
                                list(source.labels(a)),
                                list(target.labels(b)),
                                list(target.labels(bigger)),
                            ],
                        )
    for a in source.subsets():
        for i in range(source.size):
            smaller = a & ~(1 << i)
            if smaller:
                for b in target.subsets():
                    if not leq[g[a - 1, b - 1], g[smaller - 1, b - 1]]:
                        raise ValidationError(
                            "NotAntitoneInA",
                            "grades must fall as the source set grows",
                            witness=[
                                list(source.labels(smaller)),
                                list(source.labels(a)),
                                list(target.labels(b)),
                            ],
                        )
    return rep


# -- canonical representations ------------------------------------------


def top(source: FiniteSpace, target: FiniteSpace, lattice: FiniteLattice) -> LFuzzyAmbRep:
    g = np.full((source.full, target.full), lattice.top, dtype=np.intp)
    return LFuzzyAmbRep(source, target, lattice, g)


def bot(source: FiniteSpace, target: FiniteSpace, lattice: FiniteLattice) -> LFuzzyAmbRep:
    g = np.full((source.full, target.full), lattice.bottom, dtype=np.intp)
    g[:, target.full - 1] = lattice.top
    return LFuzzyAmbRep(source, target, lattice, g)


def identity(space: FiniteSpace, lattice: FiniteLattice) -> LFuzzyAmbRep:
    g = np.full((space.full, space.full), lattice.bottom, dtype=np.intp)
    for a in space.subsets():
        for b in space.subsets():
            if a & b == a:
                g[a - 1, b - 1] = lattice.top
    return LFuzzyAmbRep(space, space, lattice, g)


def embed_crisp(rep: CrispAmbRep, lattice: FiniteLattice) -> LFuzzyAmbRep:
    """Two-valued embedding: related pairs get top, the rest bottom."""
    g = np.full((rep.source.full, rep.target.full), lattice.bottom, dtype=np.intp)
    for a, b in rep.pairs():
        g[a - 1, b - 1] = lattice.top
    return LFuzzyAmbRep(rep.source, rep.target, lattice, g)


# -- cuts ------------------------------------------------------------------


def alpha_cut(rep: LFuzzyAmbRep, alpha: int) -> CrispAmbRep:
    """Pairs graded at least ``alpha``; a valid crisp representation for
    every ``alpha``."""
    leq = rep.lattice.leq
    rows = []
    for a in rep.source.subsets():
        row = 0
        for b in rep.target.subsets():
            if leq[alpha, rep.grades[a - 1, b - 1]]:
                row |= 1 << (b - 1)
        rows.append(row)
    return CrispAmbRep(rep.source, rep.target, tuple(rows))


def cuts(rep: LFuzzyAmbRep) -> dict[int, CrispAmbRep]:
    return {alpha: alpha_cut(rep, alpha) for alpha in range(rep.lattice.size)}


def from_cuts(
    source: FiniteSpace,
    target: FiniteSpace,
    lattice: FiniteLattice,
    cut_family: Mapping[int, CrispAmbRep],
) -> LFuzzyAmbRep:
    """Reassemble a graded representation from a family of crisp cuts.

    The family must be indexed by every lattice element and reproduce
    itself: grading each pair by the join of the indices whose cut holds
    it must give back exactly the family.  Otherwise
    ``CutFamilyInconsistent`` is raised with the offending index and pair.
    """
    if set(cut_family) != set(range(lattice.size)):
        raise ValidationError(
            "CutFamilyInconsistent", "need one cut per lattice element", witness=None
        )
    for cut in cut_family.values():
        if cut.source != source or cut.target != target:
            raise SpaceMismatch("cut family members live over different spaces")
    g = np.full((source.full, target.full), lattice.bottom, dtype=np.intp)
    for a in source.subsets():
        for b in target.subsets():
            g[a - 1, b - 1] = lattice.family_join(
                alpha for alpha, cut in cut_family.items() if cut.contains(a, b)
            )
    rep = LFuzzyAmbRep(source, target, lattice, g)
    for alpha, cut in cut_family.items():
        again = alpha_cut(rep, alpha)
        if again != cut:
            rows_diff = [
                (a, b)
                for a in source.subsets()
                for b in target.subsets()
                if again.contains(a, b) != cut.contains(a, b)
            ]
            a, b = rows_diff[0]
            raise ValidationError(
                "CutFamilyInconsistent",
                "cut family is not reproduced by its own grades",
                witness=[
                    lattice.elements[alpha],
                    list(source.labels(a)),
                    list(target.labels(b)),
                ],
            )
    return rep


# -- composition -------------------------------------------------------------


def compose(
    rf: LFuzzyAmbRep, sf: LFuzzyAmbRep, tnorm: TNormTable | None = None
) -> LFuzzyAmbRep:
    """Graded composition: join over middle sets of combined grades."""
    if rf.target != sf.source:
        raise SpaceMismatch("middle spaces differ")
    if rf.lattice != sf.lattice:
        raise SpaceMismatch("representations use different grade lattices")
    lat = rf.lattice
    if tnorm is None:
        tnorm = meet_tnorm(lat)
    elif tnorm.lattice != lat:
        raise SpaceMismatch("grade combination table belongs to a different lattice")
    out = np.full((rf.source.full, sf.target.full), lat.bottom, dtype=np.intp)
    jt, tt = lat.join_table, tnorm.table
    for b in rf.target.subsets():
        # combine column b of rf with row b of sf, then fold with join
        contrib = tt[rf.grades[:, b - 1][:, None], sf.grades[b - 1, :][None, :]]
        out = jt[out, contrib]
    return LFuzzyAmbRep(rf.source, sf.target, lat, out)


# -- pseudo-inversion ---------------------------------------------------------


def sms(rep: LFuzzyAmbRep) -> LFuzzyAmbRep:
    """Cutwise pseudo-inversion.

    The cut of the result at ``alpha`` is the intersection of the crisp
    pseudo-inverses of all cuts at indices up to ``alpha`` (the
    approximation order collapses to the lattice order on finite
    lattices, and the zero cut participates in every intersection).  The
    grade of a pair is recovered as the join of the indices whose
    intersection holds it; the zero cut of the result is the full
    relation, as for any graded relation.
    """
    lat = rep.lattice
    X, Y = rep.source, rep.target
    base = {alpha: crisp.sms(alpha_cut(rep, alpha)) for alpha in range(lat.size)}
    formula_cuts: dict[int, CrispAmbRep] = {}
    for alpha in range(lat.size):
        rows = list(crisp.top(Y, X).rows)
        for beta in range(lat.size):
            if lat.le(beta, alpha):
                rows = [r & s for r, s in zip(rows, base[beta].rows)]
        formula_cuts[alpha] = CrispAmbRep(Y, X, tuple(rows))
    # positive cuts follow the intersection formula; the zero cut is the
    # full relation by the subgraph floor
    cut_family = {alpha: formula_cuts[alpha] for alpha in range(lat.size)}
    cut_family[lat.bottom] = crisp.top(Y, X)
    return from_cuts(Y, X, lat, cut_family)


def is_pseudo_invertible(rep: LFuzzyAmbRep) -> bool:
    """Whether cutwise pseudo-inversion applied twice restores the table."""
    return sms(sms(rep)) == rep


# -- lattice structure ---------------------------------------------------------


def join(r: LFuzzyAmbRep, s: LFuzzyAmbRep) -> LFuzzyAmbRep:
    _same_frame(r, s)
    return LFuzzyAmbRep(r.source, r.target, r.lattice, r.lattice.join_table[r.grades, s.grades])


def meet(r: LFuzzyAmbRep, s: LFuzzyAmbRep) -> LFuzzyAmbRep:
    _same_frame(r, s)
    return LFuzzyAmbRep(r.source, r.target, r.lattice, r.lattice.meet_table[r.grades, s.grades])


def sup_family(reps: Sequence[LFuzzyAmbRep]) -> LFuzzyAmbRep:
    """Pointwise least upper bound of a nonempty family."""
    if not reps:
        raise ValueError("sup of an empty family is not defined without a frame")
    acc = reps[0]
    for r in reps[1:]:
        acc = join(acc, r)
    return acc


def inf_family(reps: Sequence[LFuzzyAmbRep]) -> LFuzzyAmbRep:
    """Pointwise greatest lower bound of a nonempty family."""
    if not reps:
        raise ValueError("inf of an empty family is not defined without a frame")
    acc = reps[0]
    for r in reps[1:]:
        acc = meet(acc, r)
    return acc


# -- subgraph views and the union counterexample -----------------------------


def subgraph_is_join_closed(
    source: FiniteSpace,
    target: FiniteSpace,
    lattice: FiniteLattice,
    triples: Iterable[tuple[int, int, int]],
) -> tuple[bool, tuple[int, int, int, int] | None]:
    """Check the join-closure axiom of subgraph triple sets.

    Returns ``(True, None)`` or ``(False, (a, b, alpha, beta))`` where the
    triple at ``alpha | beta`` is missing.
    """
    present: dict[tuple[int, int], set[int]] = {}
    for a, b, alpha in triples:
        present.setdefault((a, b), set()).add(alpha)
    for (a, b), grades in present.items():
        for alpha in grades:
            for beta in grades:
                if lattice.join(alpha, beta) not in grades:
                    return False, (a, b, alpha, beta)
    return True, None


def union_counterexample(
    source: FiniteSpace, target: FiniteSpace, lattice: FiniteLattice
) -> tuple[LFuzzyAmbRep, LFuzzyAmbRep, dict]:
    """Two valid graded representations whose subgraph union is not one.

    Both grade a common point's neighbourhoods through two incomparable
    grades; the union of their subgraphs then misses the joined grade.
    Raises ``LatticeIsChain`` when every pair of grades is comparable, in
    which case no such pair exists.
    """
    pair = lattice.incomparable_pair()
    if pair is None:
        raise LatticeIsChain("all grades comparable: subgraph unions stay join-closed")
    if target.size < 2:
        raise ValidationError(
            "TargetTooSmall", "need a proper neighbourhood in the target", witness=None
        )
    a_grade, b_grade = pair
    x1 = 1  # first point of the source
    y1 = 1  # first point of the target

    def build(grade: int) -> LFuzzyAmbRep:
        g = np.full((source.full, target.full), lattice.bottom, dtype=np.intp)
        g[:, target.full - 1] = lattice.top
        for b in target.subsets():
            if b & y1 and b != target.full:
                g[x1 - 1, b - 1] = grade
        return validate(source, target, lattice, g)

    rf, sf = build(a_grade), build(b_grade)
    witness_b = y1  # the singleton neighbourhood of the common point
    union = set(rf.subgraph()) | set(sf.subgraph())
    closed, missing = subgraph_is_join_closed(source, target, lattice, union)
    assert not closed and missing is not None
    witness = {
        "source_set": list(source.labels(x1)),
        "target_set": list(target.labels(witness_b)),
        "grades": [lattice.elements[a_grade], lattice.elements[b_grade]],
        "missing_grade": lattice.elements[lattice.join(a_grade, b_grade)],
        "missing_triple": [
            list(source.labels(missing[0])),
            list(target.labels(missing[1])),
            lattice.elements[lattice.join(missing[2], missing[3])],
        ],
    }
    return rf, sf, witness
