"""Crisp ambiguous representations between finite spaces.

A representation relates nonempty subsets of a source space to nonempty
subsets of a target space; it is down-closed in the source argument,
up-closed in the target argument, and relates every source set to the
whole target.  Internally a representation is the tuple of its rows:
``rows[A - 1]`` is the family (over the target) of sets admissible for
the source subset with mask ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import SpaceMismatch, ValidationError
from .hyperspace import (
    FiniteSpace,
    InclusionHyperspace,
    antichain,
    full_family,
    is_upward_closed,
    members,
    traversal,
    upward_closure,
    _meets_table,
    _superset_table,
)


@dataclass(frozen=True)
class CrispAmbRep:
    """A crisp ambiguous representation, canonically stored row by row."""

    source: FiniteSpace
    target: FiniteSpace
    rows: tuple[int, ...]

    def row(self, a: int) -> int:
        """Family of sets admissible for source subset ``a``."""
        return self.rows[a - 1]

    def contains(self, a: int, b: int) -> bool:
        return bool(self.rows[a - 1] >> (b - 1) & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for a in self.source.subsets():
            for b in members(self.rows[a - 1]):
                yield a, b

    def pair_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def antichain_map(self) -> dict[int, tuple[int, ...]]:
        """Minimal admissible sets per source subset (compact canonical view)."""
        return {a: antichain(self.target, self.rows[a - 1]) for a in self.source.subsets()}

    def __le__(self, other: "CrispAmbRep") -> bool:
        _same_spaces(self, other)
        return all(r & ~s == 0 for r, s in zip(self.rows, other.rows))


def _same_spaces(r: CrispAmbRep, s: CrispAmbRep) -> None:
    if r.source != s.source or r.target != s.target:
        raise SpaceMismatch("representations live over different spaces")


def _rows_from_pairs(source: FiniteSpace, target: FiniteSpace, pairs) -> list[int]:
    rows = [0] * source.full
    for a, b in pairs:
        if not (1 <= a <= source.full) or not (1 <= b <= target.full):
            raise ValidationError(
                "BadPair", f"pair ({a}, {b}) outside the nonempty subsets of the spaces"
            )
        rows[a - 1] |= 1 << (b - 1)
    return rows


def validate(source: FiniteSpace, target: FiniteSpace, pairs: Iterable[tuple[int, int]]) -> CrispAmbRep:
    """Validate a pair set as an ambiguous representation.

    Checks, in order: every row contains the full target
    (``MissingFullTarget``), rows are upward closed in the target argument
    (``NotUpwardClosedInB``), and rows shrink as the source set grows
    (``NotAntitoneInA``).  Closedness of rows holds vacuously over finite
    discrete spaces and is not a separate check.
    """
    return validate_rows(source, target, _rows_from_pairs(source, target, pairs))


def validate_rows(source: FiniteSpace, target: FiniteSpace, rows) -> CrispAmbRep:
    rows = list(rows)
    if len(rows) != source.full:
        raise ValidationError("BadRowCount", f"need {source.full} rows, got {len(rows)}")
    full_bit = 1 << (target.full - 1)
    for a in source.subsets():
        if not rows[a - 1] & full_bit:
            raise ValidationError(
                "MissingFullTarget",
                "some source set does not admit the full target",
                witness=list(source.labels(a)),
            )
        if not is_upward_closed(target, rows[a - 1]):
            up = upward_closure(target, rows[a - 1])
            missing = next(members(up & ~rows[a - 1]))
            raise ValidationError(
                "NotUpwardClosedInB",
                "admissible families must contain all supersets",
                witness=[list(source.labels(a)), list(target.labels(missing))],
            )
    for a in source.subsets():
        for i in range(source.size):
            smaller = a & ~(1 << i)
            if smaller and rows[a - 1] & ~rows[smaller - 1]:
                b = next(members(rows[a - 1] & ~rows[smaller - 1]))
                raise ValidationError(
                    "NotAntitoneInA",
                    "a smaller source set must admit at least as much",
                    witness=[
                        list(source.labels(smaller)),
                        list(source.labels(a)),
                        list(target.labels(b)),
                    ],
                )
    return CrispAmbRep(source, target, tuple(rows))


def from_seed(source: FiniteSpace, target: FiniteSpace, pairs: Iterable[tuple[int, int]]) -> CrispAmbRep:
    """Least ambiguous representation containing the given pairs.

    Axiom closure: every seed pair spreads to all smaller source sets and
    larger target sets, and the full target is admissible everywhere.
    """
    sup = _superset_table(target)
    full_bit = 1 << (target.full - 1)
    rows = [full_bit] * source.full
    for a, b in pairs:
        if not (1 <= a <= source.full) or not (1 <= b <= target.full):
            raise ValidationError("BadPair", f"seed pair ({a}, {b}) out of range")
        grow = sup[b - 1]
        sub = a
        while sub:
            rows[sub - 1] |= grow
            sub = (sub - 1) & a
    return CrispAmbRep(source, target, tuple(rows))


# -- canonical representations -------------------------------------------


def bot(source: FiniteSpace, target: FiniteSpace) -> CrispAmbRep:
    full_bit = 1 << (target.full - 1)
    return CrispAmbRep(source, target, tuple([full_bit] * source.full))


def top(source: FiniteSpace, target: FiniteSpace) -> CrispAmbRep:
    return CrispAmbRep(source, target, tuple([full_family(target)] * source.full))


def identity(space: FiniteSpace) -> CrispAmbRep:
    sup = _superset_table(space)
    return CrispAmbRep(space, space, tuple(sup[a - 1] for a in space.subsets()))


# -- admissible / unavoidable sets ----------------------------------------


def admissible(rep: CrispAmbRep, a: int) -> InclusionHyperspace:
    """The sets the source subset ``a`` can stand for."""
    return InclusionHyperspace(rep.target, antichain(rep.target, rep.rows[a - 1]))


def unavoidable(rep: CrispAmbRep, a: int) -> InclusionHyperspace:
    """The sets meeting every set admissible for ``a``."""
    fam = traversal(rep.target, rep.rows[a - 1])
    return InclusionHyperspace(rep.target, antichain(rep.target, fam))


# -- the pseudo-inversion operator -----------------------------------------


def sms(rep: CrispAmbRep) -> CrispAmbRep:
    """Pseudo-inversion: swap the roles of the two spaces through traversal.

    The row of the result at a target subset ``bt`` is the traversal of
    ``{A : bt is unavoidable for A}``.  Equivalently ``(bt, at)`` is in the
    result iff every source set disjoint from ``at`` admits some set
    disjoint from ``bt``.
    """
    X, Y = rep.source, rep.target
    meets_y = _meets_table(Y)
    meets_x = _meets_table(X)
    out_rows = []
    for bt in Y.subsets():
        hits = meets_y[bt - 1]
        row = full_family(X)
        for a in X.subsets():
            # bt unavoidable for a: bt meets every admissible set of a
            if rep.rows[a - 1] & ~hits == 0:
                row &= meets_x[a - 1]
        out_rows.append(row)
    return CrispAmbRep(Y, X, tuple(out_rows))


def is_pseudo_invertible(rep: CrispAmbRep) -> bool:
    """Whether pseudo-inversion applied twice restores the representation.

    Over finite spaces this holds exactly when the full-source row admits
    only the whole target (see ``docs/properties.md``); the definitional
    double application is evaluated here rather than that shortcut.
    """
    return sms(sms(rep)) == rep


def is_strict(rep: CrispAmbRep) -> bool:
    """Column-closedness; vacuously true over finite discrete spaces."""
    for b in rep.target.subsets():
        _column = [a for a in rep.source.subsets() if rep.contains(a, b)]
        # every subset of a finite discrete hyperspace is closed
    return True


def is_open(rep: CrispAmbRep) -> bool:
    """Openness of the unavoidable-set map; vacuously true over finite
    discrete spaces, where every Vietoris-open family is open."""
    for a in rep.source.subsets():
        _ = traversal(rep.target, rep.rows[a - 1])
    return True


# -- lattice structure ------------------------------------------------------


def meet(r: CrispAmbRep, s: CrispAmbRep) -> CrispAmbRep:
    _same_spaces(r, s)
    return CrispAmbRep(r.source, r.target, tuple(a & b for a, b in zip(r.rows, s.rows)))


def join(r: CrispAmbRep, s: CrispAmbRep) -> CrispAmbRep:
    _same_spaces(r, s)
    return CrispAmbRep(r.source, r.target, tuple(a | b for a, b in zip(r.rows, s.rows)))


# -- composition ------------------------------------------------------------


def compose(r: CrispAmbRep, s: CrispAmbRep) -> CrispAmbRep:
    """Relational composition; reads left to right (first ``r``, then ``s``)."""
    if r.target != s.source:
        raise SpaceMismatch("middle spaces differ")
    rows = []
    for a in r.source.subsets():
        acc = 0
        for b in members(r.rows[a - 1]):
            acc |= s.rows[b - 1]
        rows.append(acc)
    return _closure_hook(CrispAmbRep(r.source, s.target, tuple(rows)))


def _closure_hook(rep: CrispAmbRep) -> CrispAmbRep:
    # Row closure after composition: the identity map over finite discrete
    # spaces, kept as a separate stage so the two composition laws of the
    # theory share one code path.
    return rep


# -- worked examples ---------------------------------------------------------


def mapping_rep(source: FiniteSpace, target: FiniteSpace, f) -> CrispAmbRep:
    """Representation induced by a point map: ``(A, B)`` related iff ``f(A) <= B``.

    ``f`` maps source labels to target labels (dict or callable).
    """
    get = f.__getitem__ if isinstance(f, dict) else f
    image_of_point = [target.subset([get(p)]) for p in source.points]
    sup = _superset_table(target)
    rows = []
    for a in source.subsets():
        img = 0
        for i in range(source.size):
            if a >> i & 1:
                img |= image_of_point[i]
        rows.append(sup[img - 1])
    return CrispAmbRep(source, target, tuple(rows))


def _class_masks(space: FiniteSpace, partition: Iterable[Iterable[str]]) -> list[int]:
    masks = [space.subset(block) for block in partition]
    seen = 0
    for m in masks:
        if m == 0 or m & seen:
            raise ValidationError("BadPartition", "blocks must be nonempty and disjoint")
        seen |= m
    if seen != space.full:
        raise ValidationError("BadPartition", "blocks must cover the space")
    return masks


def upper_approx(space: FiniteSpace, partition, a: int) -> int:
    """Union of the blocks meeting ``a``."""
    out = 0
    for m in _class_masks(space, partition):
        if m & a:
            out |= m
    return out


def lower_approx(space: FiniteSpace, partition, a: int) -> int:
    """Union of the blocks contained in ``a``."""
    out = 0
    for m in _class_masks(space, partition):
        if m & a == m:
            out |= m
    return out


def rough_rep(space: FiniteSpace, partition) -> CrispAmbRep:
    """Indiscernibility representation: ``(A, B)`` related iff the upper
    approximation of ``A`` is contained in the upper approximation of ``B``."""
    masks = _class_masks(space, partition)

    def upper(a: int) -> int:
        out = 0
        for m in masks:
            if m & a:
                out |= m
        return out

    uppers = [upper(a) for a in space.subsets()]
    rows = []
    for a in space.subsets():
        fam = 0
        for b in space.subsets():
            if uppers[a - 1] & ~uppers[b - 1] == 0:
                fam |= 1 << (b - 1)
        rows.append(fam)
    return CrispAmbRep(space, space, tuple(rows))
