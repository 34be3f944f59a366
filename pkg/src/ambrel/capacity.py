"""Lattice-valued capacities and their subgraph characterization.

A capacity is a monotone set function on all subsets of a space
(including the empty set) that sends the empty set to bottom and the
whole space to top.  Each source-set fiber of a graded representation is
the subgraph of one; extraction and the antitone dependence on the
source set are the bridge between representations and measures.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import ValidationError
from .fuzzy import LFuzzyAmbRep
from .hyperspace import FiniteSpace
from .lattice import FiniteLattice


class LCapacity:
    """A validated capacity: ``values[mask]`` grades each subset mask."""

    __slots__ = ("space", "lattice", "values")

    def __init__(self, space: FiniteSpace, lattice: FiniteLattice, values):
        self.space = space
        self.lattice = lattice
        arr = np.asarray(values, dtype=np.intp).copy()
        if arr.shape != (space.full + 1,):
            raise ValidationError(
                "BadValueTable", f"need {space.full + 1} values, got {arr.shape}"
            )
        arr.setflags(write=False)
        self.values = arr

    def __call__(self, mask: int) -> int:
        return int(self.values[mask])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LCapacity)
            and self.space == other.space
            and self.lattice == other.lattice
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self) -> int:
        return hash((self.space, self.lattice, self.values.tobytes()))

    def __repr__(self) -> str:
        vals = {self.space.labels(m): self.lattice.elements[v] for m, v in enumerate(self.values)}
        return f"LCapacity({vals})"


def validate_capacity(space: FiniteSpace, lattice: FiniteLattice, values) -> LCapacity:
    """Check the bounds and monotonicity of a candidate value table."""
    cap = LCapacity(space, lattice, values)
    v = cap.values
    if v[0] != lattice.bottom or v[space.full] != lattice.top:
        raise ValidationError(
            "BadBounds",
            "the empty set must get bottom and the whole space top",
            witness=[lattice.elements[int(v[0])], lattice.elements[int(v[space.full])]],
        )
    for f in range(space.full + 1):
        for i in range(space.size):
            g = f | (1 << i)
            if g != f and not lattice.le(int(v[f]), int(v[g])):
                raise ValidationError(
                    "NotMonotone",
                    "values must rise with the set",
                    witness=[list(space.labels(f)), list(space.labels(g))],
                )
    return cap


def minimal_capacity(space: FiniteSpace, lattice: FiniteLattice) -> LCapacity:
    values = [lattice.bottom] * (space.full + 1)
    values[space.full] = lattice.top
    return LCapacity(space, lattice, values)


def capacity_of(rep: LFuzzyAmbRep, a: int) -> LCapacity:
    """The capacity graded by the fiber of the representation at ``a``."""
    if not 1 <= a <= rep.source.full:
        raise ValidationError("BadSubset", f"source subset mask {a} out of range")
    values = [rep.lattice.bottom] * (rep.target.full + 1)
    for b in rep.target.subsets():
        values[b] = rep.grade(a, b)
    return LCapacity(rep.target, rep.lattice, values)


def capacities_of(rep: LFuzzyAmbRep) -> dict[int, LCapacity]:
    """Batch extraction over every nonempty source subset."""
    return {a: capacity_of(rep, a) for a in rep.source.subsets()}


# -- subgraph view -----------------------------------------------------------


def capacity_subgraph(cap: LCapacity) -> frozenset[tuple[int, int]]:
    """All pairs ``(mask, alpha)`` with ``mask`` nonempty and ``alpha`` at
    most the capacity of the set."""
    lat = cap.lattice
    return frozenset(
        (f, alpha)
        for f in cap.space.subsets()
        for alpha in range(lat.size)
        if lat.le(alpha, cap(f))
    )


def validate_subgraph(
    space: FiniteSpace, lattice: FiniteLattice, pairs: Iterable[tuple[int, int]]
) -> LCapacity:
    """Recognize a pair set as the subgraph of a capacity.

    Conditions checked with witnesses: the floor (all sets at grade
    bottom, the whole space at every grade) is present (``MissingFloor``);
    the set is up-closed in the set argument and down-closed in the grade
    (``NotDownSetInAlpha``); and grades of two members join within the set
    of their union (``UnionJoinViolated``).  Closedness holds vacuously
    over a finite space.  Returns the unique capacity with this subgraph.
    """
    pset = set(pairs)
    for f, alpha in pset:
        if not 1 <= f <= space.full or not 0 <= alpha < lattice.size:
            raise ValidationError("BadPair", f"pair ({f}, {alpha}) out of range")
    for f in space.subsets():
        if (f, lattice.bottom) not in pset:
            raise ValidationError(
                "MissingFloor",
                "every nonempty set must appear at grade bottom",
                witness=[list(space.labels(f)), lattice.elements[lattice.bottom]],
            )
    for alpha in range(lattice.size):
        if (space.full, alpha) not in pset:
            raise ValidationError(
                "MissingFloor",
                "the whole space must appear at every grade",
                witness=[list(space.labels(space.full)), lattice.elements[alpha]],
            )
    for f, alpha in pset:
        for g in space.subsets():
            if f & g != f:
                continue
            for beta in range(lattice.size):
                if lattice.le(beta, alpha) and (g, beta) not in pset:
                    raise ValidationError(
                        "NotDownSetInAlpha",
                        "subgraphs grow with the set and shrink with the grade",
                        witness=[
                            list(space.labels(f)),
                            lattice.elements[alpha],
                            list(space.labels(g)),
                            lattice.elements[beta],
                        ],
                    )
    by_set: dict[int, set[int]] = {f: set() for f in space.subsets()}
    for f, alpha in pset:
        by_set[f].add(alpha)
    for f, grades_f in by_set.items():
        for g, grades_g in by_set.items():
            for alpha in grades_f:
                for beta in grades_g:
                    if (f | g, lattice.join(alpha, beta)) not in pset:
                        raise ValidationError(
                            "UnionJoinViolated",
                            "grades of a union must reach the join of the parts",
                            witness=[
                                list(space.labels(f)),
                                lattice.elements[alpha],
                                list(space.labels(g)),
                                lattice.elements[beta],
                            ],
                        )
    values = [lattice.bottom] * (space.full + 1)
    for f in space.subsets():
        values[f] = lattice.family_join(by_set[f])
    cap = validate_capacity(space, lattice, values)
    if capacity_subgraph(cap) != pset:
        raise ValidationError(
            "NotASubgraph", "pair set is not reproduced by its own capacity", witness=None
        )
    return cap
