"""Builders: geometric example representations and seeded random objects.

The metric and translation builders realize the two guiding geometric
examples (how far a set must be dilated or shifted to sit inside
another); the projection builder realizes the shadow relation on grid
windows.  The random builders feed the property suites and are
deterministic given their seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import crisp, fuzzy
from .capacity import LCapacity, validate_capacity
from .crisp import CrispAmbRep
from .errors import ValidationError
from .fuzzy import LFuzzyAmbRep
from .hyperspace import FiniteSpace
from .lattice import FiniteLattice
from .catalog import chain


# -- metric example -----------------------------------------------------------


@dataclass(frozen=True)
class MetricTable:
    """A finite metric space given by its distance matrix."""

    points: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.points)
        d = self.dist
        if len(d) != n or any(len(row) != n for row in d):
            raise ValidationError("BadMatrix", "distance matrix shape mismatch")
        for i in range(n):
            if d[i][i] != 0:
                raise ValidationError("BadMetric", "nonzero self-distance", [self.points[i]])
            for j in range(n):
                if d[i][j] != d[j][i]:
                    raise ValidationError(
                        "BadMetric", "asymmetric distance", [self.points[i], self.points[j]]
                    )
                if d[i][j] < 0:
                    raise ValidationError("BadMetric", "negative distance")
                for k in range(n):
                    if d[i][k] > d[i][j] + d[j][k]:
                        raise ValidationError(
                            "BadMetric",
                            "triangle inequality fails",
                            [self.points[i], self.points[j], self.points[k]],
                        )
        if n > 1 and self.diameter == 0:
            raise ValidationError("BadMetric", "diameter must be positive")

    @property
    def diameter(self) -> Fraction:
        return max((x for row in self.dist for x in row), default=Fraction(0))


def metric_table(points: Sequence[str], dist) -> MetricTable:
    rows = tuple(tuple(Fraction(x) for x in row) for row in dist)
    return MetricTable(tuple(points), rows)


def line_metric(n: int) -> MetricTable:
    """n points on a line at unit spacing."""
    pts = [f"p{i}" for i in range(n)]
    return metric_table(pts, [[abs(i - j) for j in range(n)] for i in range(n)])


def metric_rep(m: MetricTable, grades: FiniteLattice) -> LFuzzyAmbRep:
    """Grade pairs by normalized one-sided distance.

    The grade of (A, B) quantizes ``1 - max over a in A of dist(a, B) /
    diameter`` downward onto the chain; containment gives top, a
    diameter-far pair gives bottom.
    """
    if not grades.is_chain():
        raise ValidationError("NotAChain", "metric grading needs a chain of levels")
    sp = FiniteSpace(m.points)
    n_levels = grades.size
    diam = m.diameter
    g = np.full((sp.full, sp.full), grades.bottom, dtype=np.intp)
    for a in sp.subsets():
        for b in sp.subsets():
            worst = Fraction(0)
            for i in range(sp.size):
                if not a >> i & 1:
                    continue
                d_to_b = min(m.dist[i][j] for j in range(sp.size) if b >> j & 1)
                worst = max(worst, d_to_b)
            val = 1 - (worst / diam if diam else Fraction(0))
            level = min(int(val * (n_levels - 1)), n_levels - 1)  # floor quantization
            g[a - 1, b - 1] = level
    return fuzzy.validate(sp, sp, grades, g)


# -- grid examples ------------------------------------------------------------


@dataclass(frozen=True)
class GridWindow:
    """An inner window of cells sitting inside an outer window.

    Cells are addressed column-first as ``c<x>r<y>``; the inner window is
    anchored at ``(inner_x, inner_y)`` within the outer one.
    """

    outer_w: int
    outer_h: int
    inner_w: int
    inner_h: int
    inner_x: int = 0
    inner_y: int = 0

    def __post_init__(self):
        if min(self.outer_w, self.outer_h, self.inner_w, self.inner_h) <= 0:
            raise ValidationError("BadWindow", "window dimensions must be positive")
        if (
            self.inner_x < 0
            or self.inner_y < 0
            or self.inner_x + self.inner_w > self.outer_w
            or self.inner_y + self.inner_h > self.outer_h
        ):
            raise ValidationError("BadWindow", "inner window must sit inside the outer one")
        if self.outer_w * self.outer_h > 6:
            raise ValidationError("BadWindow", "outer window limited to 6 cells")

    def outer_space(self) -> FiniteSpace:
        return FiniteSpace(
            tuple(f"c{x}r{y}" for x in range(self.outer_w) for y in range(self.outer_h))
        )

    def inner_space(self) -> FiniteSpace:
        return FiniteSpace(
            tuple(
                f"c{x}r{y}"
                for x in range(self.inner_x, self.inner_x + self.inner_w)
                for y in range(self.inner_y, self.inner_y + self.inner_h)
            )
        )

    def outer_cells(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.outer_w) for y in range(self.outer_h)]

    def inner_cells(self) -> list[tuple[int, int]]:
        return [
            (x, y)
            for x in range(self.inner_x, self.inner_x + self.inner_w)
            for y in range(self.inner_y, self.inner_y + self.inner_h)
        ]

    @property
    def reach(self) -> int:
        """Chebyshev diameter of the outer window."""
        return max(self.outer_w - 1, self.outer_h - 1)


def translation_rep(g: GridWindow, grades: FiniteLattice | None = None) -> LFuzzyAmbRep:
    """Grade inner/outer set pairs by the shortest embedding shift.

    The grade of (A, B) is ``reach`` minus the smallest Chebyshev length
    of an integer shift taking A inside B; no shift embeds, grade bottom.
    Chebyshev lengths keep every grade on the integer chain exactly.
    """
    r = g.reach
    if r == 0:
        raise ValidationError("BadWindow", "outer window needs at least two cells across")
    if grades is None:
        grades = chain(r + 1)
    if not grades.is_chain() or grades.size != r + 1:
        raise ValidationError("NotAChain", f"need the {r + 1}-level chain for this window")
    inner, outer = g.inner_space(), g.outer_space()
    in_cells = g.inner_cells()
    out_cells = g.outer_cells()
    out_index = {c: i for i, c in enumerate(out_cells)}
    table = np.full((inner.full, outer.full), grades.bottom, dtype=np.intp)
    shifts = [
        (dx, dy)
        for dx in range(-g.outer_w + 1, g.outer_w)
        for dy in range(-g.outer_h + 1, g.outer_h)
    ]
    for a in inner.subsets():
        pts = [in_cells[i] for i in range(inner.size) if a >> i & 1]
        for b in outer.subsets():
            best = None
            for dx, dy in shifts:
                shifted = [(x + dx, y + dy) for x, y in pts]
                if any(c not in out_index for c in shifted):
                    continue
                if all(b >> out_index[c] & 1 for c in shifted):
                    length = max(abs(dx), abs(dy))
                    best = length if best is None else min(best, length)
            table[a - 1, b - 1] = grades.bottom if best is None else r - best
    return fuzzy.validate(inner, outer, grades, table)


def projection_rep(g: GridWindow) -> CrispAmbRep:
    """Shadow relation: (A, B) related iff every column of A is a column of B."""
    inner, outer = g.inner_space(), g.outer_space()
    in_cols = [x for x, _ in g.inner_cells()]
    out_cols = [x for x, _ in g.outer_cells()]

    def colset(mask: int, cols: list[int]) -> frozenset[int]:
        return frozenset(c for i, c in enumerate(cols) if mask >> i & 1)

    rows = []
    for a in inner.subsets():
        ca = colset(a, in_cols)
        fam = 0
        for b in outer.subsets():
            if ca <= colset(b, out_cols):
                fam |= 1 << (b - 1)
        rows.append(fam)
    return crisp.validate_rows(inner, outer, rows)


# -- seeded random builders -----------------------------------------------------


def random_rep(
    source: FiniteSpace, target: FiniteSpace, seed: int, density: float
) -> CrispAmbRep:
    """Axiom closure of a Bernoulli-sampled seed pair set.

    Density 0 gives the bottom representation, density 1 the top one;
    identical seeds give identical output.
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = [
        (a, b)
        for a in source.subsets()
        for b in target.subsets()
        if rng.random() < density
    ]
    return crisp.from_seed(source, target, pairs)


def random_fuzzy_rep(
    source: FiniteSpace,
    target: FiniteSpace,
    grades: FiniteLattice,
    seed: int,
    density: float,
) -> LFuzzyAmbRep:
    """Random grade table repaired to the least valid majorant.

    Raw grades: bottom with probability ``1 - density``, otherwise top
    with probability ``density`` else a uniform element.  Repair order is
    fixed for determinism: force the full-target column to top, propagate
    maxima up the target order, then down the source order.
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    lat = grades
    g = np.full((source.full, target.full), lat.bottom, dtype=np.intp)
    for a in source.subsets():
        for b in target.subsets():
            if rng.random() < density:
                g[a - 1, b - 1] = lat.top if rng.random() < density else rng.randrange(lat.size)
    g[:, target.full - 1] = lat.top
    for b in target.subsets():
        for j in range(target.size):
            bigger = b | (1 << j)
            if bigger != b:
                g[:, bigger - 1] = lat.join_table[g[:, bigger - 1], g[:, b - 1]]
    for a in sorted(source.subsets(), key=lambda m: -m.bit_count()):
        for i in range(source.size):
            smaller = a & ~(1 << i)
            if smaller:
                g[smaller - 1, :] = lat.join_table[g[smaller - 1, :], g[a - 1, :]]
    return fuzzy.validate(source, target, lat, g)


def random_capacity(
    space: FiniteSpace, grades: FiniteLattice, seed: int, density: float = 0.5
) -> LCapacity:
    """Random monotone set function with the mandatory bounds."""
    rng = random.Random(seed)
    lat = grades
    values = [lat.bottom] * (space.full + 1)
    for f in space.subsets():
        if rng.random() < density:
            values[f] = rng.randrange(lat.size)
    values[space.full] = lat.top
    for f in space.subsets():  # monotone repair, ascending masks see subsets first
        for i in range(space.size):
            smaller = f & ~(1 << i)
            if smaller != f:
                values[f] = lat.join(values[f], values[smaller])
    values[0] = lat.bottom
    values[space.full] = lat.top
    return validate_capacity(space, grades, values)


def random_hyper_triples(
    source: FiniteSpace,
    target: FiniteSpace,
    grades: FiniteLattice,
    seed: int,
    count: int = 8,
) -> list[tuple[int, int, int]]:
    """Random raw triples for exercising the saturation operators."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        fam = rng.randrange(1, 1 << source.full)
        b = rng.randrange(1, target.full + 1)
        alpha = rng.randrange(grades.size)
        out.append((fam, b, alpha))
    return out
