"""Injective encoding of graded representations into ternary hyperrelations.

A ternary hyperrelation relates (nonempty families of source subsets,
nonempty target subsets, grades).  A graded representation embeds by
sending a family to the join of the grades its members carry; the image
is exactly the common fixed points of three saturation operators
(refinement, merge, and their floored composite), which is what makes the
encoding recognizable and the least-upper-bound construction work.

Everything here is exact and desk-scale: the source space is gated at 3
points (127 families) and the lattice at 4 elements.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import SpaceTooLarge
from .fuzzy import LFuzzyAmbRep
from .hyperspace import FiniteSpace, members, _superset_table
from .lattice import FiniteLattice

MAX_ENCODE_POINTS = 3
MAX_ENCODE_LATTICE = 4


class TernaryHyperRelation:
    """Triple set stored as a dense matrix of grade bitmasks.

    ``masks[fam, b]`` has bit ``alpha`` set iff the triple
    (family with mask ``fam``, subset ``b``, grade ``alpha``) is present.
    Row 0 and column 0 are unused padding.
    """

    __slots__ = ("source", "target", "lattice", "masks")

    def __init__(self, source: FiniteSpace, target: FiniteSpace, lattice: FiniteLattice, masks):
        _gate(source, lattice)
        self.source = source
        self.target = target
        self.lattice = lattice
        arr = np.asarray(masks, dtype=np.uint8).copy()
        want = (1 << source.full, target.full + 1)
        if arr.shape != want:
            raise ValueError(f"mask matrix must be {want}, got {arr.shape}")
        arr[0, :] = 0
        arr[:, 0] = 0
        arr.setflags(write=False)
        self.masks = arr

    @classmethod
    def empty(cls, source, target, lattice) -> "TernaryHyperRelation":
        return cls(source, target, lattice, np.zeros((1 << source.full, target.full + 1), np.uint8))

    @classmethod
    def from_triples(cls, source, target, lattice, triples) -> "TernaryHyperRelation":
        m = np.zeros((1 << source.full, target.full + 1), np.uint8)
        for fam, b, alpha in triples:
            if not 1 <= fam <= (1 << source.full) - 1 or not 1 <= b <= target.full:
                raise ValueError(f"triple ({fam}, {b}, {alpha}) out of range")
            if not 0 <= alpha < lattice.size:
                raise ValueError(f"grade index {alpha} out of range")
            m[fam, b] |= 1 << alpha
        return cls(source, target, lattice, m)

    def triples(self):
        fams, bs = np.nonzero(self.masks)
        for fam, b in zip(fams.tolist(), bs.tolist()):
            mk = int(self.masks[fam, b])
            for alpha in range(self.lattice.size):
                if mk >> alpha & 1:
                    yield int(fam), int(b), alpha

    def triple_count(self) -> int:
        return int(np.vectorize(lambda m: bin(m).count("1"))(self.masks).sum())

    def __contains__(self, triple) -> bool:
        fam, b, alpha = triple
        return bool(self.masks[fam, b] >> alpha & 1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TernaryHyperRelation)
            and self.source == other.source
            and self.target == other.target
            and self.lattice == other.lattice
            and np.array_equal(self.masks, other.masks)
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.lattice, self.masks.tobytes()))

    def issubset(self, other: "TernaryHyperRelation") -> bool:
        return bool(np.all(self.masks & ~other.masks == 0))


def _gate(source: FiniteSpace, lattice: FiniteLattice) -> None:
    if source.full > (1 << MAX_ENCODE_POINTS) - 1:
        raise SpaceTooLarge(
            f"encoding paths are exact only up to {MAX_ENCODE_POINTS} source points"
        )
    if lattice.size > MAX_ENCODE_LATTICE:
        raise SpaceTooLarge(
            f"encoding paths are gated at {MAX_ENCODE_LATTICE} lattice elements"
        )


# -- per-space / per-lattice tables -------------------------------------------


@lru_cache(maxsize=None)
def _covers(space: FiniteSpace) -> tuple[int, ...]:
    # _covers(X)[fam] = subset mask (over nonempty subsets) of the sets that
    # some member of the family refines (is contained in)
    sup = _superset_table(space)
    out = [0] * (1 << space.full)
    for fam in range(1, 1 << space.full):
        low = fam & -fam
        rest = fam ^ low
        out[fam] = out[rest] | sup[low.bit_length() - 1]
    return tuple(out)


def refinement_hyperspace(space: FiniteSpace, family: int) -> tuple[int, ...]:
    """All families holding a refiner of every member of ``family``.

    Upward closed under family inclusion; exact filter over all nonempty
    families of the space.
    """
    if space.full > (1 << MAX_ENCODE_POINTS) - 1:
        raise SpaceTooLarge("refinement filter enumerates all families; need <= 3 points")
    if not 1 <= family <= (1 << space.full) - 1:
        raise ValueError("family mask out of range (must be nonempty)")
    covers = _covers(space)
    return tuple(
        cand for cand in range(1, 1 << space.full) if family & ~covers[cand] == 0
    )


@lru_cache(maxsize=None)
def _refiner_rows(space: FiniteSpace) -> tuple[np.ndarray, ...]:
    # _refiner_rows(X)[fam] = array of candidate families refining fam
    covers = _covers(space)
    n = 1 << space.full
    rows = [np.zeros(0, dtype=np.intp)] * n
    for fam in range(1, n):
        rows[fam] = np.array(
            [cand for cand in range(1, n) if fam & ~covers[cand] == 0], dtype=np.intp
        )
    return tuple(rows)


@lru_cache(maxsize=None)
def _grade_tables(lattice: FiniteLattice) -> tuple[np.ndarray, np.ndarray]:
    # DOWN[mask] = union of principal down-sets of the grades in the mask
    # JOINM[m1, m2] = all pairwise joins between the two masks
    n = lattice.size
    size = 1 << n
    down = np.zeros(size, dtype=np.uint8)
    for mask in range(size):
        d = 0
        for alpha in range(n):
            if mask >> alpha & 1:
                for beta in range(n):
                    if lattice.le(beta, alpha):
                        d |= 1 << beta
        down[mask] = d
    joinm = np.zeros((size, size), dtype=np.uint8)
    for m1 in range(size):
        for m2 in range(size):
            j = 0
            for a in range(n):
                if m1 >> a & 1:
                    for b in range(n):
                        if m2 >> b & 1:
                            j |= 1 << lattice.join(a, b)
            joinm[m1, m2] = j
    return down, joinm


# -- saturation operators -------------------------------------------------------


def subset_saturate(t: TernaryHyperRelation) -> TernaryHyperRelation:
    """Refinement saturation: spread each triple to every refining family
    and every smaller grade.  Extensive and idempotent."""
    down, _ = _grade_tables(t.lattice)
    rows = _refiner_rows(t.source)
    out = np.zeros_like(t.masks)
    fams, bs = np.nonzero(t.masks)
    for fam, b in zip(fams.tolist(), bs.tolist()):
        spread = down[t.masks[fam, b]]
        idx = rows[fam]
        out[idx, b] |= spread
    return TernaryHyperRelation(t.source, t.target, t.lattice, out)


def sup_saturate(t: TernaryHyperRelation) -> TernaryHyperRelation:
    """Merge saturation: close under (family union, set union, grade join).

    Computed as the fixed point of the binary merge; since all three
    combiners are associative, commutative and idempotent this equals the
    closure under merging arbitrary nonempty subsets of triples.
    Extensive and idempotent.
    """
    _, joinm = _grade_tables(t.lattice)
    cur = t.masks.copy()
    while True:
        fams, bs = np.nonzero(cur)
        if len(fams) == 0:
            break
        mk = cur[fams, bs]
        ff = np.bitwise_or.outer(fams, fams).ravel()
        bb = np.bitwise_or.outer(bs, bs).ravel()
        jj = joinm[mk[:, None], mk[None, :]].ravel()
        nxt = cur.copy()
        np.bitwise_or.at(nxt, (ff, bb), jj)
        if np.array_equal(nxt, cur):
            break
        cur = nxt
    return TernaryHyperRelation(t.source, t.target, t.lattice, cur)


def _floored(t: TernaryHyperRelation) -> TernaryHyperRelation:
    m = t.masks.copy()
    full_grade_mask = (1 << t.lattice.size) - 1
    m[1:, t.target.full] |= full_grade_mask
    m[1:, 1:] |= 1 << t.lattice.bottom
    return TernaryHyperRelation(t.source, t.target, t.lattice, m)


def plus(t: TernaryHyperRelation) -> TernaryHyperRelation:
    """Floor, refine, then merge; the composite saturation whose fixed
    points containing singleton data are exactly the encoded images."""
    return sup_saturate(subset_saturate(_floored(t)))


# -- the encoding ---------------------------------------------------------------


def encode(rep: LFuzzyAmbRep) -> TernaryHyperRelation:
    """Encode a graded representation.

    A triple (family, b, gamma) is present iff ``gamma`` is below the join
    of the grades ``rep(a, b)`` over members ``a`` of the family.
    """
    _gate(rep.source, rep.lattice)
    lat = rep.lattice
    down, _ = _grade_tables(lat)
    n = 1 << rep.source.full
    masks = np.zeros((n, rep.target.full + 1), dtype=np.uint8)
    # grade of a family = join over members; build up by lowest set bit
    grade_of = np.zeros((n, rep.target.full + 1), dtype=np.intp)
    for fam in range(1, n):
        low = fam & -fam
        rest = fam ^ low
        a = low.bit_length()  # subset mask of the member
        for b in rep.target.subsets():
            g = rep.grade(a, b)
            if rest:
                g = lat.join(g, int(grade_of[rest, b]))
            grade_of[fam, b] = g
            masks[fam, b] = down[1 << g]
    return TernaryHyperRelation(rep.source, rep.target, lat, masks)


def singleton_part(t: TernaryHyperRelation) -> TernaryHyperRelation:
    """Restriction to triples whose family is a single subset."""
    m = np.zeros_like(t.masks)
    for a in t.source.subsets():
        fam = 1 << (a - 1)
        m[fam, :] = t.masks[fam, :]
    return TernaryHyperRelation(t.source, t.target, t.lattice, m)


def bullet(rep: LFuzzyAmbRep) -> TernaryHyperRelation:
    """The singleton-family copy of a representation's subgraph."""
    _gate(rep.source, rep.lattice)
    down, _ = _grade_tables(rep.lattice)
    m = np.zeros((1 << rep.source.full, rep.target.full + 1), dtype=np.uint8)
    for a in rep.source.subsets():
        for b in rep.target.subsets():
            m[1 << (a - 1), b] = down[1 << rep.grade(a, b)]
    return TernaryHyperRelation(rep.source, rep.target, rep.lattice, m)


def decode(t: TernaryHyperRelation) -> LFuzzyAmbRep:
    """Recover the representation from the singleton-family triples."""
    lat = t.lattice
    g = np.full((t.source.full, t.target.full), lat.bottom, dtype=np.intp)
    for a in t.source.subsets():
        fam = 1 << (a - 1)
        for b in t.target.subsets():
            mk = int(t.masks[fam, b])
            g[a - 1, b - 1] = lat.family_join(al for al in range(lat.size) if mk >> al & 1)
    return LFuzzyAmbRep(t.source, t.target, lat, g)


def is_encoded(t: TernaryHyperRelation) -> bool:
    """Fixed-point test recognizing encoded representations."""
    return t == plus(t) and t == plus(singleton_part(t))


def family_sup(reps: Sequence[LFuzzyAmbRep]) -> LFuzzyAmbRep:
    """Least upper bound computed through the encoding.

    Encodes every member, unions the triple sets, saturates, and decodes.
    Must agree with the pointwise construction in :mod:`ambrel.fuzzy`.
    """
    if not reps:
        raise ValueError("sup of an empty family is not defined without a frame")
    first = reps[0]
    acc = np.zeros_like(encode(first).masks)
    for r in reps:
        if r.source != first.source or r.target != first.target or r.lattice != first.lattice:
            from .errors import SpaceMismatch

            raise SpaceMismatch("family members live over different frames")
        acc |= encode(r).masks
    merged = TernaryHyperRelation(first.source, first.target, first.lattice, acc)
    return decode(plus(merged))
