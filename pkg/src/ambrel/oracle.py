"""Definitional twins of the production operators.

Every formula-driven operator in the package has a quantifier-literal
re-implementation here, sharing no code with the fast paths, so that
agreement between the two is meaningful evidence.  These are used by the
test suite and the ``laws`` command only; they make no attempt at speed.
"""

from __future__ import annotations

from itertools import combinations

from .crisp import CrispAmbRep
from .errors import LatticeTooLarge
from .fuzzy import LFuzzyAmbRep
from .hyperspace import FiniteSpace
from .lattice import FiniteLattice, TNormTable


def _nonempty_subsets(n: int):
    return range(1, (1 << n))


def sms_definitional(rep: CrispAmbRep) -> CrispAmbRep:
    """Literal transcription of the pseudo-inversion quantifier.

    ``(bt, at)`` belongs to the result iff for every source set ``a``
    disjoint from ``at`` there is a set admissible for ``a`` disjoint
    from ``bt``.
    """
    X, Y = rep.source, rep.target
    pairs = []
    for bt in _nonempty_subsets(Y.size):
        for at in _nonempty_subsets(X.size):
            ok = True
            for a in _nonempty_subsets(X.size):
                if a & at:
                    continue
                admissible = [b for b in _nonempty_subsets(Y.size) if rep.contains(a, b)]
                if not any(b & bt == 0 for b in admissible):
                    ok = False
                    break
            if ok:
                pairs.append((bt, at))
    rows = [0] * Y.full
    for bt, at in pairs:
        rows[bt - 1] |= 1 << (at - 1)
    return CrispAmbRep(Y, X, tuple(rows))


def double_traversal_oracle(space: FiniteSpace, family: int) -> int:
    """Two literal traversal passes, written out as nested quantifiers."""

    def meets_all(candidate: int, fam_members: list[int]) -> bool:
        return all(candidate & m for m in fam_members)

    first_members = [s for s in _nonempty_subsets(space.size) if family >> (s - 1) & 1]
    once = [b for b in _nonempty_subsets(space.size) if meets_all(b, first_members)]
    twice = [b for b in _nonempty_subsets(space.size) if meets_all(b, once)]
    out = 0
    for s in twice:
        out |= 1 << (s - 1)
    return out


def way_below_definitional(lat: FiniteLattice, a: int, b: int) -> bool:
    """Directed-set definition of the approximation order.

    True iff every nonempty directed subset whose supremum dominates ``b``
    contains an element dominating ``a``.  Enumeration is exponential in
    the lattice size, hence the hard gate.
    """
    n = lat.size
    if n > 6:
        raise LatticeTooLarge("definitional check enumerates subsets; need at most 6 elements")
    elements = list(range(n))
    for r in range(1, n + 1):
        for subset in combinations(elements, r):
            directed = True
            for x in subset:
                for y in subset:
                    if not any(lat.le(x, u) and lat.le(y, u) for u in subset):
                        directed = False
                        break
                if not directed:
                    break
            if not directed:
                continue
            sup = lat.family_join(subset)
            if lat.le(b, sup) and not any(lat.le(a, d) for d in subset):
                return False
    return True


def compose_subgraph(rf: LFuzzyAmbRep, sf: LFuzzyAmbRep, tnorm: TNormTable) -> LFuzzyAmbRep:
    """Composition computed on subgraph triples.

    Builds both subgraphs literally, forms all combinable triple pairs,
    and keeps every grade below some combination; the grade function is
    then recovered as the maximal grade per pair.
    """
    lat = rf.lattice
    sub_r = [
        (a, b, beta)
        for a in _nonempty_subsets(rf.source.size)
        for b in _nonempty_subsets(rf.target.size)
        for beta in range(lat.size)
        if lat.le(beta, rf.grade(a, b))
    ]
    sub_s = [
        (b, c, gamma)
        for b in _nonempty_subsets(sf.source.size)
        for c in _nonempty_subsets(sf.target.size)
        for gamma in range(lat.size)
        if lat.le(gamma, sf.grade(b, c))
    ]
    by_first: dict[int, list[tuple[int, int]]] = {}
    for b, c, gamma in sub_s:
        by_first.setdefault(b, []).append((c, gamma))

    import numpy as np

    grades = np.full((rf.source.full, sf.target.full), lat.bottom, dtype=np.intp)
    for a, b, beta in sub_r:
        for c, gamma in by_first.get(b, ()):
            combined = tnorm(beta, gamma)
            grades[a - 1, c - 1] = lat.join(int(grades[a - 1, c - 1]), combined)
    return LFuzzyAmbRep(rf.source, sf.target, lat, grades)
