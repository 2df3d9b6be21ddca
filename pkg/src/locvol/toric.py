"""Local volumes of T-invariant divisors on toric modifications.

A modification of a full-dimensional pointed cone's affine toric variety is
described by the list of primitive ray generators of a refining fan; only the
rays matter here.  A divisor assigns a rational coefficient to each ray.  Two
exponent regions are attached to a divisor: the region of all sections and
the larger region of sections defined away from the fiber over the torus
fixed point, which drops the constraints of rays interior to the cone.  The
local volume is the normalized Euclidean volume of their difference, and
finite-level data comes from counting lattice points in the scaled regions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .geometry import (
    Halfspace,
    Polyhedron,
    cone_extreme_rays,
    dot,
    eliminate_direction,
    hull_polyhedron,
    lattice_points,
    mat_rank,
    positive_functional,
    primitive,
    count_lattice_difference,
    volume_of_difference,
)

BOUNDARY = "boundary"
FACE_INTERIOR = "face_interior"
INTERIOR = "interior"


class ToricError(Exception):
    pass


class NotInCone(ToricError):
    pass


class HullUnstable(ToricError):
    pass


class PointedCone:
    """Full-dimensional pointed rational cone, given by generating rays."""

    def __init__(self, generators):
        gens = [primitive(tuple(int(x) for x in g)) for g in generators]
        if not gens or any(not any(g) for g in gens):
            raise ValueError("cone needs nonzero generators")
        dim = len(gens[0])
        if dim < 2 or any(len(g) != dim for g in gens):
            raise ValueError("inconsistent generator dimensions (need dim >= 2)")
        if mat_rank(gens) != dim:
            raise ValueError("cone is not full-dimensional")
        self.dim = dim
        self.generators = tuple(gens)
        # facet normals of the cone = extreme rays of its dual
        dual_rays, dual_lin = cone_extreme_rays(gens, dim)
        if dual_lin or mat_rank(dual_rays) != dim:
            raise ValueError("cone is not pointed")
        self.facets = tuple(sorted(primitive(r) for r in dual_rays))
        ext, _ = cone_extreme_rays(list(self.facets), dim)
        self.extreme_rays = tuple(sorted(primitive(r) for r in ext))

    def contains(self, v) -> bool:
        return all(dot(f, v) >= 0 for f in self.facets)

    def classify(self, v) -> str:
        """Position of a ray: extreme, in a proper face's interior, or interior."""
        tight = [f for f in self.facets if dot(f, v) == 0]
        if any(dot(f, v) < 0 for f in self.facets):
            raise NotInCone(f"ray {v} is not in the cone")
        if not tight:
            return INTERIOR
        if mat_rank(tight) == self.dim - 1:
            return BOUNDARY
        return FACE_INTERIOR

    def dual_polyhedron(self) -> Polyhedron:
        """The dual cone as a polyhedron {u : <u, g> >= 0 for all generators}."""
        return Polyhedron(self.dim, [Halfspace(g, Fraction(0)) for g in self.generators])

    def dual_extreme_rays(self):
        return self.facets


class ToricDatum:
    """A pointed cone together with all rays of a refining fan."""

    def __init__(self, cone: PointedCone, refinement_rays):
        rays = tuple(primitive(tuple(int(x) for x in r)) for r in refinement_rays)
        if any(not any(r) for r in rays):
            raise ValueError("zero refinement ray")
        kinds = tuple(cone.classify(r) for r in rays)
        missing = set(cone.extreme_rays) - set(rays)
        if missing:
            raise ValueError(f"refinement must list every extreme ray; missing {missing}")
        self.cone = cone
        self.rays = rays
        self.kinds = kinds

    @property
    def dim(self) -> int:
        return self.cone.dim

    def interior_indices(self):
        return [i for i, k in enumerate(self.kinds) if k == INTERIOR]


def classify_rays(datum: ToricDatum):
    """Per-ray classification (boundary / face interior / interior)."""
    return datum.kinds


@dataclass(frozen=True)
class ToricDivisor:
    """T-invariant divisor: one rational coefficient per refinement ray."""

    datum: ToricDatum
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != len(self.datum.rays):
            raise ValueError("coefficient count must match ray count")
        object.__setattr__(self, "coeffs", coeffs)

    def scaled(self, m) -> "ToricDivisor":
        return ToricDivisor(self.datum, tuple(Fraction(m) * c for c in self.coeffs))


def divisor_polyhedra(d: ToricDivisor):
    """Exponent regions (sections, sections defined off the central fiber).

    The first polyhedron imposes <u, ray> >= -coeff for every ray; the
    second drops exactly the interior-ray constraints.  Both have the dual
    cone as recession cone.
    """
    datum = d.datum
    all_rows = [Halfspace(r, -a) for r, a in zip(datum.rays, d.coeffs)]
    outer_rows = [
        h for h, k in zip(all_rows, datum.kinds) if k != INTERIOR
    ]
    sections = Polyhedron(datum.dim, all_rows)
    punctured = Polyhedron(datum.dim, outer_rows)
    return sections, punctured


def local_volume_toric(d: ToricDivisor) -> Fraction:
    """n! times the Euclidean volume of the section-region difference."""
    sections, punctured = divisor_polyhedra(d)
    n = d.datum.dim
    return factorial(n) * volume_of_difference(sections, punctured)


def h1_sequence(d: ToricDivisor, m_max: int):
    """Exact lattice counts at scales 1..m_max with n!-normalized values.

    Scales where some scaled coefficient is non-integral are skipped; counts
    at such scales have no section-space meaning for a non-Cartier multiple.
    """
    sections, punctured = divisor_polyhedra(d)
    n = d.datum.dim
    out = []
    for m in range(1, m_max + 1):
        if any((m * a).denominator != 1 for a in d.coeffs):
            continue
        count = count_lattice_difference(sections, punctured, m)
        out.append((m, count, Fraction(factorial(n) * count, m ** n)))
    return out


@dataclass(frozen=True)
class VanishingReport:
    lies_over_center: bool
    effective: bool
    volume_zero: bool


def effectivity_vanishing_check(d: ToricDivisor) -> VanishingReport:
    """Vanishing test: for divisors over the fixed point, volume zero must
    coincide with effectivity."""
    kinds = d.datum.kinds
    over = all(k == INTERIOR for k, a in zip(kinds, d.coeffs) if a != 0)
    eff = all(a >= 0 for a in d.coeffs)
    vol0 = local_volume_toric(d) == 0
    return VanishingReport(over, eff, vol0)


# ---------------------------------------------------------------------------
# Fujita approximation through Newton regions of pushforward ideals
# ---------------------------------------------------------------------------

def _minimal_generators(points, sigma_gens, w):
    """Minimal points of the set modulo translation by the dual cone.

    A point is dropped when it differs from an earlier one by a dual-cone
    element; sorting by a functional positive on the dual cone makes one
    pass sufficient.
    """
    pts = sorted(points, key=lambda u: (dot(w, u), u))
    gens = []
    for u in pts:
        dominated = False
        for g in gens:
            diff = tuple(x - y for x, y in zip(u, g))
            if all(dot(s, diff) >= 0 for s in sigma_gens):
                dominated = True
                break
        if not dominated:
            gens.append(u)
    return gens


def stable_newton_region(region: Polyhedron, cone: PointedCone) -> Polyhedron:
    """Convex hull of the region's lattice points plus the dual cone.

    Lattice points are enumerated inside a cap; the cap doubles until the
    hull is unchanged by further enlargement (idempotence certificate).
    """
    dual_rays = list(cone.dual_extreme_rays())
    sigma_gens = cone.generators
    dim = cone.dim
    w = positive_functional(dual_rays, dim)
    cap0 = max(
        (dot(w, v).__ceil__() for v in region.vrep().vertices), default=0
    ) + 1

    def hull_at(c):
        capped = region.intersect(Halfspace(tuple(-x for x in w), Fraction(-c)))
        pts = lattice_points(capped)
        if not pts:
            return None
        gens = _minimal_generators(pts, sigma_gens, w)
        return hull_polyhedron(dim, gens, dual_rays)

    cap = cap0
    current = hull_at(cap)
    for _ in range(3):
        cap *= 2
        bigger = hull_at(cap)
        if current is not None and bigger is not None and current.same_set(bigger):
            return current
        current = bigger
    raise HullUnstable("lattice hull did not stabilize after 3 cap doublings")


def saturate_region(region: Polyhedron, cone: PointedCone) -> Polyhedron:
    """Intersection of the slides of the region along all dual extreme rays."""
    rows = []
    for tau in cone.dual_extreme_rays():
        slid = eliminate_direction(region, tau)
        rows.extend(slid.halfspaces)
    return Polyhedron(region.dim, rows).pruned()


def fujita_sequence(d: ToricDivisor, p_max: int):
    """Normalized multiplicities of the pushforward ideals at levels 1..p_max.

    Each level builds the Newton region of the level's sections, saturates
    it by sliding, and takes the n!-normalized volume of the difference;
    the sequence approaches the local volume of the divisor.
    """
    datum = d.datum
    n = datum.dim
    sections, _ = divisor_polyhedra(d)
    out = []
    for p in range(1, p_max + 1):
        if any((p * a).denominator != 1 for a in d.coeffs):
            continue
        region = sections.scaled(p)
        newton = stable_newton_region(region, datum.cone)
        saturated = saturate_region(newton, datum.cone)
        mult = factorial(n) * volume_of_difference(newton, saturated)
        out.append((p, mult, mult / Fraction(p ** n)))
    return out
