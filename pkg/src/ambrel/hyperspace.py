"""Finite powerset hyperspaces, set families, and the traversal operator.

Conventions used throughout the package:

* A point set is a :class:`FiniteSpace` with an ordered tuple of labels.
* A subset of a space is an ``int`` bitmask; bit ``i`` stands for point
  ``space.points[i]``.  Nonempty subsets range over ``1 .. space.full``.
* A family of nonempty subsets is again an ``int`` ("family mask"); bit
  ``s - 1`` stands for the subset with mask ``s``.  Since a space has
  ``space.full`` nonempty subsets, family masks range over
  ``0 .. (1 << space.full) - 1``.

Both encodings are canonical, so equality of families is integer equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ValidationError

MAX_POINTS = 6


@dataclass(frozen=True, order=True)
class FiniteSpace:
    """A finite universe of labelled points."""

    points: tuple[str, ...]

    def __post_init__(self):
        if not self.points:
            raise ValidationError("EmptySpace", "a space needs at least one point")
        if len(set(self.points)) != len(self.points):
            raise ValidationError("DuplicatePoint", f"duplicate labels in {self.points}")
        if len(self.points) > MAX_POINTS:
            raise ValidationError(
                "SpaceTooLarge",
                f"at most {MAX_POINTS} points supported, got {len(self.points)}",
            )

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        """Bitmask of the whole space (also the number of nonempty subsets)."""
        return (1 << len(self.points)) - 1

    def subsets(self) -> range:
        """All nonempty subset masks."""
        return range(1, self.full + 1)

    def subset(self, labels: Iterable[str]) -> int:
        mask = 0
        for lab in labels:
            try:
                mask |= 1 << self.points.index(lab)
            except ValueError:
                raise KeyError(f"unknown point {lab!r} in space {self.points}") from None
        return mask

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(p for i, p in enumerate(self.points) if mask >> i & 1)


def space(*points: str) -> FiniteSpace:
    return FiniteSpace(tuple(points))


def family_of(subsets: Iterable[int]) -> int:
    """Family mask collecting the given nonempty subset masks."""
    fam = 0
    for s in subsets:
        if s <= 0:
            raise ValueError("families hold nonempty subsets only")
        fam |= 1 << (s - 1)
    return fam


def members(family: int) -> Iterator[int]:
    """Subset masks collected in a family mask, ascending."""
    s = 1
    while family:
        if family & 1:
            yield s
        family >>= 1
        s += 1


def family_size(family: int) -> int:
    return family.bit_count()


def full_family(space: FiniteSpace) -> int:
    """The family of all nonempty subsets."""
    return (1 << space.full) - 1


@lru_cache(maxsize=None)
def _superset_table(space: FiniteSpace) -> tuple[int, ...]:
    # _superset_table(X)[s - 1] = family mask of all supersets of s
    table = []
    for s in space.subsets():
        fam = 0
        for t in space.subsets():
            if t & s == s:
                fam |= 1 << (t - 1)
        table.append(fam)
    return tuple(table)


@lru_cache(maxsize=None)
def _subset_table(space: FiniteSpace) -> tuple[int, ...]:
    # _subset_table(X)[s - 1] = family mask of all nonempty subsets of s
    table = []
    for s in space.subsets():
        fam = 0
        t = s
        while t:
            fam |= 1 << (t - 1)
            t = (t - 1) & s
        table.append(fam)
    return tuple(table)


@lru_cache(maxsize=None)
def _meets_table(space: FiniteSpace) -> tuple[int, ...]:
    # _meets_table(X)[s - 1] = family mask of all subsets intersecting s
    table = []
    for s in space.subsets():
        fam = 0
        for t in space.subsets():
            if t & s:
                fam |= 1 << (t - 1)
        table.append(fam)
    return tuple(table)


def upward_closure(space: FiniteSpace, family: int) -> int:
    """All supersets of members: ``{A' : some A in family, A <= A'}``."""
    sup = _superset_table(space)
    out = 0
    for s in members(family):
        out |= sup[s - 1]
    return out


def traversal(space: FiniteSpace, family: int) -> int:
    """All nonempty sets meeting every member of ``family``.

    The empty family traverses to the full powerset: the defining
    condition is vacuous.  The result is always upward closed and
    contains the whole space.
    """
    meets = _meets_table(space)
    out = full_family(space)
    for s in members(family):
        out &= meets[s - 1]
    return out


def is_upward_closed(space: FiniteSpace, family: int) -> bool:
    return upward_closure(space, family) == family


def is_inclusion_hyperspace(space: FiniteSpace, family: int) -> bool:
    """Nonempty and closed under taking supersets."""
    return family != 0 and is_upward_closed(space, family)


def antichain(space: FiniteSpace, family: int) -> tuple[int, ...]:
    """Minimal members of a family, ascending by mask."""
    strict_sub = _subset_table(space)
    out = []
    for s in members(family):
        below = strict_sub[s - 1] & ~(1 << (s - 1))
        if family & below == 0:
            out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class InclusionHyperspace:
    """An upward-closed nonempty family, stored by its minimal antichain."""

    space: FiniteSpace
    minimal: tuple[int, ...]

    @classmethod
    def from_family(cls, space: FiniteSpace, family: int) -> "InclusionHyperspace":
        if not is_inclusion_hyperspace(space, family):
            raise ValidationError(
                "NotAnInclusionHyperspace",
                "family must be nonempty and upward closed",
                witness=[list(space.labels(s)) for s in members(family)],
            )
        return cls(space, antichain(space, family))

    @property
    def family(self) -> int:
        return upward_closure(self.space, family_of(self.minimal))

    def __contains__(self, subset: int) -> bool:
        return any(m & subset == m for m in self.minimal)

    def __len__(self) -> int:
        return family_size(self.family)

    def member_masks(self) -> list[int]:
        return list(members(self.family))
