"""Local multiplicities of monomial ideals at the origin.

A monomial ideal is a finite minimal set of exponent vectors inside an
ambient cone (the non-negative orthant, or a pointed exponent cone for the
semigroup-ring variant).  Saturation removes the components supported at the
origin; at finite level this is coordinatewise sliding of the staircase, and
asymptotically it is the same sliding applied to the Newton region.  The
normalized growth of the saturation quotients of powers is the local
multiplicity, computed exactly as a volume difference.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

import numpy as np

from .geometry import (
    Halfspace,
    Polyhedron,
    eliminate_direction,
    hull_polyhedron,
    mat_det,
    project_out,
    solve_linear,
    volume_of_difference,
)
from .toric import PointedCone

GENERATOR_LIMIT = 10 ** 6
BOX_LIMIT = 10 ** 8


class MonomialError(Exception):
    pass


class GeneratorBlowup(MonomialError):
    pass


class BoxOverflow(MonomialError):
    pass


class UnsupportedAmbient(MonomialError):
    """Cone-ambient request outside the simplicial unimodular range."""


def _minimalize(gens, dominates):
    keep = []
    for g in sorted(set(gens)):
        if any(dominates(g, h) for h in keep):
            continue
        keep = [h for h in keep if not dominates(h, g)]
        keep.append(g)
    return tuple(sorted(keep))


class MonomialIdeal:
    """Monomial ideal by minimal generators; orthant or cone ambient."""

    def __init__(self, generators, ambient: PointedCone | None = None):
        gens = [tuple(int(x) for x in g) for g in generators]
        if not gens:
            raise ValueError("need at least one generator")
        dim = len(gens[0])
        if any(len(g) != dim for g in gens):
            raise ValueError("inconsistent exponent dimensions")
        self.dim = dim
        self.ambient = ambient
        if ambient is None:
            if any(x < 0 for g in gens for x in g):
                raise ValueError("orthant-ambient exponents must be non-negative")
        else:
            if ambient.dim != dim:
                raise ValueError("ambient dimension mismatch")
            for g in gens:
                if not ambient.contains(g):
                    raise ValueError(f"generator {g} outside the ambient cone")
        self.generators = _minimalize(gens, self._dominates)

    def _dominates(self, g, h) -> bool:
        """Whether g lies in h + ambient cone."""
        diff = tuple(x - y for x, y in zip(g, h))
        if self.ambient is None:
            return all(x >= 0 for x in diff)
        return self.ambient.contains(diff)

    def contains_exponent(self, u) -> bool:
        return any(self._dominates(tuple(u), g) for g in self.generators)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.dim == other.dim
            and self.ambient is other.ambient
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.dim, self.generators))

    def __repr__(self):
        return f"MonomialIdeal({list(self.generators)})"

    def newton_region(self) -> Polyhedron:
        """Convex hull of the generators plus the ambient cone."""
        rays = (
            [tuple(1 if j == i else 0 for j in range(self.dim)) for i in range(self.dim)]
            if self.ambient is None
            else list(self.ambient.extreme_rays)
        )
        return hull_polyhedron(self.dim, self.generators, rays)


def power(ideal: MonomialIdeal, p: int) -> MonomialIdeal:
    """The p-th power: minimalized p-fold sums of generators."""
    if p < 1:
        raise ValueError("power must be >= 1")
    k = len(ideal.generators)
    raw_count = 1
    for i in range(1, p + 1):
        raw_count = raw_count * (k + i - 1) // i
    if raw_count > GENERATOR_LIMIT:
        raise GeneratorBlowup(f"{raw_count} candidate generators at power {p}")
    sums = {
        tuple(sum(col) for col in zip(*combo))
        for combo in combinations_with_replacement(ideal.generators, p)
    }
    return MonomialIdeal(sums, ideal.ambient)


def _orthant_transform(ideal: MonomialIdeal):
    """Unimodular identification of a simplicial cone ambient with an orthant.

    Returns (transformed orthant ideal, back map), or raises.
    """
    cone = ideal.ambient
    rays = list(cone.extreme_rays)
    if len(rays) != cone.dim or abs(mat_det(rays)) != 1:
        raise UnsupportedAmbient(
            "finite-level saturation needs a simplicial unimodular ambient cone"
        )
    basis = [list(r) for r in zip(*rays)]  # columns are the rays

    def to_orthant(u):
        coords = solve_linear(basis, list(u))
        assert all(x.denominator == 1 for x in coords)  # unimodular basis
        return tuple(int(x) for x in coords)

    def from_orthant(u):
        return tuple(sum(rays[j][i] * u[j] for j in range(cone.dim))
                     for i in range(cone.dim))

    moved = MonomialIdeal([to_orthant(g) for g in ideal.generators])
    return moved, from_orthant


def saturation(ideal: MonomialIdeal) -> MonomialIdeal:
    """Colon with all powers of the maximal ideal, exactly.

    Per coordinate, zeroing that coordinate of every generator gives the
    colon with that variable's powers; the results intersect by
    componentwise maxima of generator tuples.
    """
    if ideal.ambient is not None:
        moved, back = _orthant_transform(ideal)
        sat = saturation(moved)
        return MonomialIdeal([back(g) for g in sat.generators], ideal.ambient)
    n = ideal.dim
    partials = []
    for i in range(n):
        zeroed = [g[:i] + (0,) + g[i + 1:] for g in ideal.generators]
        partials.append(MonomialIdeal(zeroed))
    gens = partials[0].generators
    for part in partials[1:]:
        gens = _minimalize(
            [tuple(max(a, b) for a, b in zip(g, h))
             for g in gens for h in part.generators],
            part._dominates,
        )
    return MonomialIdeal(gens)


def _staircase_mask(pts, gens):
    """Boolean membership of integer points in the ideal of the generators."""
    a = np.asarray(pts, dtype=np.int64)
    g = np.asarray(gens, dtype=np.int64)
    return (a[:, None, :] >= g[None, :, :]).all(axis=2).any(axis=1)


def h1_dim(ideal: MonomialIdeal) -> int:
    """Exact dimension of saturation/ideal, by counting staircase gaps.

    The enumeration box doubles until no counted point touches its outer
    faces, which certifies that nothing was missed.
    """
    if ideal.ambient is not None:
        moved, _ = _orthant_transform(ideal)
        return h1_dim(moved)
    sat = saturation(ideal)
    if sat == ideal:
        return 0
    n = ideal.dim
    box = max(x for g in ideal.generators + sat.generators for x in g)
    while True:
        if (box + 1) ** n > BOX_LIMIT:
            raise BoxOverflow(f"enumeration box exceeds {BOX_LIMIT} points")
        pts = np.stack(
            np.meshgrid(*[np.arange(box + 1, dtype=np.int64)] * n, indexing="ij"),
            axis=-1,
        ).reshape(-1, n)
        diff = _staircase_mask(pts, sat.generators) & ~_staircase_mask(
            pts, ideal.generators
        )
        chosen = pts[diff]
        if chosen.size and int(chosen.max()) == box:
            box *= 2
            continue
        return int(np.count_nonzero(diff))


def saturated_newton_region(ideal: MonomialIdeal) -> Polyhedron:
    """The Newton region's saturation: intersect its coordinate slides.

    Orthant case: intersect the lifted projections along each coordinate
    axis with the orthant.  Cone case: intersect the slides along the
    ambient cone's extreme rays with the cone itself.
    """
    region = ideal.newton_region()
    n = ideal.dim
    rows = []
    if ideal.ambient is None:
        for i in range(n):
            shadow = project_out(region, i)
            for h in shadow.halfspaces:
                normal = h.normal[:i] + (0,) + h.normal[i:]
                rows.append(Halfspace(normal, h.offset))
        for i in range(n):
            rows.append(Halfspace(tuple(1 if j == i else 0 for j in range(n)),
                                  Fraction(0)))
    else:
        for tau in ideal.ambient.extreme_rays:
            slid = eliminate_direction(region, tau)
            rows.extend(slid.halfspaces)
        for f in ideal.ambient.facets:
            rows.append(Halfspace(f, Fraction(0)))
    return Polyhedron(n, rows).pruned()


def asymptotic_multiplicity(ideal: MonomialIdeal) -> Fraction:
    """n!-normalized volume between the Newton region and its saturation."""
    region = ideal.newton_region()
    saturated = saturated_newton_region(ideal)
    return factorial(ideal.dim) * volume_of_difference(region, saturated)


def multiplicity_sequence(ideal: MonomialIdeal, p_max: int):
    """(p, h1 of the p-th power, n!-normalized value) for p = 1..p_max."""
    if ideal.ambient is not None:
        moved, _ = _orthant_transform(ideal)
        return multiplicity_sequence(moved, p_max)
    n = ideal.dim
    out = []
    for p in range(1, p_max + 1):
        h1 = h1_dim(power(ideal, p))
        out.append((p, h1, Fraction(factorial(n) * h1, p ** n)))
    return out
