"""Invariants of cone singularities over polarized projective models.

A polarized model (curve, projective space, abelian-type double cover, or an
explicit surface lattice) supports an exact volume function t -> vol(A - tH)
as a piecewise polynomial with rational or quadratic-irrational breakpoints.
The singularity volume integrates the canonical class's function, the
gamma-volume integrates the canonical-plus-polarization function, and the
nef-envelope volume is the pseudo-effective threshold of the anticanonical
class raised to the singularity dimension times the polarization degree.
All integration is symbolic antidifferentiation; nothing is numeric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exactnum import FieldMismatch, QuadraticNumber, solve_quadratic
from .linprog import solve_lp
from .surface import InvalidModel, SurfaceLattice, lattice_zariski
from .geometry import solve_linear


class ConeError(Exception):
    pass


class SpecialRange(ConeError):
    """Section counts in the special degree range need the general-position flag."""


class HypothesisNotAsserted(ConeError):
    """The nef-envelope formula needs psef = nef along the threshold segment."""


class IrrationalBreakpointUnsupported(ConeError):
    pass


def _simplify(x):
    if isinstance(x, QuadraticNumber) and x.is_rational:
        return x.as_fraction()
    return x


def _as_number(x):
    return x if isinstance(x, QuadraticNumber) else Fraction(x)


# ---------------------------------------------------------------------------
# piecewise polynomials
# ---------------------------------------------------------------------------

def _poly_eval(coeffs, t):
    out = _as_number(0)
    for c in reversed(coeffs):
        out = out * t + c
    return _simplify(out)


class PiecewisePoly:
    """Piecewise polynomial on [0, oo), identically zero past the last
    breakpoint; continuity is asserted exactly at construction."""

    def __init__(self, breakpoints, pieces):
        if not breakpoints:
            breakpoints = [Fraction(0)]
        bps = [_simplify(_as_number(b)) for b in breakpoints]
        if len(bps) != len(pieces) + 1:
            raise ValueError("need one more breakpoint than pieces")
        try:
            for a, b in zip(bps, bps[1:]):
                if not a < b:
                    raise ValueError("breakpoints must increase strictly")
        except FieldMismatch as exc:
            raise IrrationalBreakpointUnsupported(str(exc)) from exc
        pieces = [tuple(Fraction(c) for c in p) for p in pieces]
        for i in range(len(pieces) - 1):
            if _poly_eval(pieces[i], bps[i + 1]) != _poly_eval(pieces[i + 1], bps[i + 1]):
                raise ValueError(f"discontinuous at breakpoint {bps[i + 1]}")
        if pieces and _poly_eval(pieces[-1], bps[-1]) != 0:
            raise ValueError("must vanish at the last breakpoint")
        self.breakpoints = tuple(bps)
        self.pieces = tuple(pieces)

    @classmethod
    def zero(cls):
        return cls([Fraction(0)], [])

    @property
    def is_zero(self) -> bool:
        return not self.pieces or all(
            all(c == 0 for c in p) for p in self.pieces
        )

    def __call__(self, t):
        t = _as_number(t)
        if t < self.breakpoints[0] or t > self.breakpoints[-1]:
            return Fraction(0)
        for i, piece in enumerate(self.pieces):
            if t <= self.breakpoints[i + 1]:
                return _poly_eval(piece, t)
        return Fraction(0)

    def integral(self):
        """Exact integral over [0, oo) by per-piece antidifferentiation."""
        total = _as_number(0)
        for i, piece in enumerate(self.pieces):
            anti = [Fraction(0)] + [c / (j + 1) for j, c in enumerate(piece)]
            total = total + _poly_eval(anti, self.breakpoints[i + 1])
            total = total - _poly_eval(anti, self.breakpoints[i])
        return _simplify(total)

    def is_nonincreasing(self) -> bool:
        """Derivative non-positivity per piece, checked exactly for the
        quadratic-derivative range and at sample points beyond it."""
        for i, piece in enumerate(self.pieces):
            deriv = tuple((j + 1) * c for j, c in enumerate(piece[1:]))
            a, b = self.breakpoints[i], self.breakpoints[i + 1]
            probes = [a, b, (a + b) / 2]
            if len(deriv) == 3 and deriv[2] != 0:
                vertex = -deriv[1] / (2 * deriv[2])
                if a < vertex < b:
                    probes.append(vertex)
            elif len(deriv) > 3:
                probes += [(3 * a + b) / 4, (a + 3 * b) / 4]
            if any(_poly_eval(deriv, t) > 0 for t in probes):
                return False
        return True


# ---------------------------------------------------------------------------
# polarized models
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Curve:
    """Smooth projective curve with a polarization of the given degree."""

    genus: int
    degree: int
    general_position: bool = False

    def __post_init__(self):
        if self.genus < 0 or self.degree < 1:
            raise ValueError("need genus >= 0 and polarization degree >= 1")


@dataclass(frozen=True)
class ProjSpace:
    """Projective space of the given dimension, polarized by O(h)."""

    dim: int
    h: int

    def __post_init__(self):
        if self.dim < 1 or self.h < 1:
            raise ValueError("need dim >= 1 and h >= 1")


@dataclass(frozen=True)
class AbelianCover:
    """Double cover of an abelian surface: canonical class pulls back the
    branch-defining ample class, polarization pulls back another one.

    base_sq, mixed, pol_sq are the three intersection numbers downstairs;
    upstairs intersection numbers double.
    """

    base_sq: int
    mixed: int
    pol_sq: int
    cover_multiplier: int = 2

    def __post_init__(self):
        if min(self.base_sq, self.mixed, self.pol_sq) <= 0:
            raise ValueError("intersection data must be positive")
        if self.mixed ** 2 - self.base_sq * self.pol_sq < 0:
            raise ValueError("threshold would be complex: need mixed^2 >= base*pol")


@dataclass(frozen=True)
class LatticeModel:
    """Surface given by its numerical lattice, canonical and polarization
    vectors; `envelope_nef_certified` asserts psef = nef where needed."""

    lattice: SurfaceLattice
    canonical: tuple
    polarization: tuple
    envelope_nef_certified: bool = False

    def __post_init__(self):
        k = tuple(Fraction(x) for x in self.canonical)
        h = tuple(Fraction(x) for x in self.polarization)
        object.__setattr__(self, "canonical", k)
        object.__setattr__(self, "polarization", h)
        if self.lattice.pair(h, h) <= 0:
            raise InvalidModel("polarization must have positive self-intersection")
        if self.lattice.is_round_model and self.lattice.negative_curves:
            raise InvalidModel("round psef model cannot carry negative curves")


def model_dim(model) -> int:
    """Dimension of the polarized variety (the singularity has one more)."""
    if isinstance(model, Curve):
        return 1
    if isinstance(model, ProjSpace):
        return model.dim
    if isinstance(model, (AbelianCover, LatticeModel)):
        return 2
    raise TypeError(f"not a polarized model: {model!r}")


def polarization_degree(model):
    """Top self-intersection of the polarization on the model."""
    if isinstance(model, Curve):
        return Fraction(model.degree)
    if isinstance(model, ProjSpace):
        return Fraction(model.h ** model.dim)
    if isinstance(model, AbelianCover):
        return Fraction(model.cover_multiplier * model.pol_sq)
    if isinstance(model, LatticeModel):
        return model.lattice.pair(model.polarization, model.polarization)
    raise TypeError(f"not a polarized model: {model!r}")


# ---------------------------------------------------------------------------
# the volume function t -> vol(kK + hH - tH)
# ---------------------------------------------------------------------------

def volume_function(model, k_canonical=1, k_polarization=0) -> PiecewisePoly:
    """Exact vol(k*K + h*H - t*H) on t >= 0 as a PiecewisePoly."""
    k, h = Fraction(k_canonical), Fraction(k_polarization)
    if isinstance(model, Curve):
        deg0 = k * (2 * model.genus - 2) + h * model.degree
        if deg0 <= 0:
            return PiecewisePoly.zero()
        return PiecewisePoly(
            [Fraction(0), deg0 / model.degree],
            [(deg0, Fraction(-model.degree))],
        )
    if isinstance(model, ProjSpace):
        a0 = -k * (model.dim + 1) + h * model.h
        if a0 <= 0:
            return PiecewisePoly.zero()
        coeffs = tuple(
            comb(model.dim, j) * a0 ** (model.dim - j) * Fraction(-model.h) ** j
            for j in range(model.dim + 1)
        )
        return PiecewisePoly([Fraction(0), a0 / model.h], [coeffs])
    if isinstance(model, AbelianCover):
        return _abelian_volume_function(model, k, h)
    if isinstance(model, LatticeModel):
        return _lattice_volume_function(model, k, h)
    raise TypeError(f"not a polarized model: {model!r}")


def _quadratic_psef_reach(c0, c1, c2, l0, l1):
    """Largest T >= 0 with c(t) >= 0 and l(t) >= 0 on [0, T], for the
    downward walk of a class across a round psef cone; None if empty at 0.

    c is the self-intersection (c2 > 0), l the pairing with a positivity
    witness; the boundary must be hit on the quadric, so l(T) >= 0 is
    asserted as the explicit root-selection sign test.
    """
    if c0 < 0 or l0 < 0:
        return None
    r1, r2 = solve_quadratic(c2, c1, c0)
    reach = _simplify(r1)
    if isinstance(reach, Fraction) and reach < 0:
        raise ConeError("class stays inside the quadric for all t >= 0")
    if isinstance(reach, QuadraticNumber) and reach.sign() < 0:
        raise ConeError("class stays inside the quadric for all t >= 0")
    if not l0 + l1 * reach >= 0:
        raise ConeError("psef direction test failed at the threshold root")
    return reach


def _abelian_volume_function(model: AbelianCover, k, h):
    d2, dl, l2 = model.base_sq, model.mixed, model.pol_sq
    # (kD + (h - t)L)^2 expanded in t
    c0 = k * k * d2 + 2 * k * h * dl + h * h * l2
    c1 = -2 * (k * dl + h * l2)
    c2 = Fraction(l2)
    l0 = k * dl + h * l2  # pairing with the polarization downstairs
    l1 = Fraction(-l2)
    reach = _quadratic_psef_reach(c0, c1, c2, l0, l1)
    if reach is None or not 0 < reach:
        return PiecewisePoly.zero()
    m = model.cover_multiplier
    return PiecewisePoly([Fraction(0), reach], [(m * c0, m * c1, m * c2)])


def _lattice_volume_function(model: LatticeModel, k, h):
    lat = model.lattice
    a_vec = tuple(k * x + h * y for x, y in zip(model.canonical, model.polarization))
    h_vec = model.polarization
    if lat.is_round_model:
        c0 = lat.pair(a_vec, a_vec)
        c1 = -2 * lat.pair(a_vec, h_vec)
        c2 = lat.pair(h_vec, h_vec)
        l0 = lat.pair(a_vec, lat.ample)
        l1 = -lat.pair(h_vec, lat.ample)
        reach = _quadratic_psef_reach(c0, c1, c2, l0, l1)
        if reach is None or not 0 < reach:
            return PiecewisePoly.zero()
        return PiecewisePoly([Fraction(0), reach], [(c0, c1, c2)])
    if not lat.is_psef(a_vec):
        return PiecewisePoly.zero()
    reach = _polyhedral_psef_reach(lat, a_vec, h_vec)
    if reach is None or reach <= 0:
        return PiecewisePoly.zero()
    breakpoints, pieces = _zariski_chamber_walk(lat, a_vec, h_vec, reach)
    return PiecewisePoly(breakpoints, pieces)


def _polyhedral_psef_reach(lat: SurfaceLattice, a_vec, h_vec):
    """max{t : a - t*h in the generated psef cone} by exact LP."""
    gens = lat.psef_generators
    kgen = len(gens)
    rows = []
    for coord in range(lat.rank):
        coeffs = (Fraction(-h_vec[coord]),) + tuple(-g[coord] for g in gens)
        rows.append((coeffs, -a_vec[coord]))
        rows.append((tuple(-c for c in coeffs), a_vec[coord]))
    for i in range(kgen):
        unit = (0,) + tuple(1 if j == i else 0 for j in range(kgen))
        rows.append((unit, Fraction(0)))
    res = solve_lp((1,) + (0,) * kgen, rows, "max")
    if res.status == "infeasible":
        return None
    if res.status == "unbounded":
        raise InvalidModel("polarization direction stays pseudo-effective forever")
    return res.value


def _chamber_data(lat: SurfaceLattice, a_vec, h_vec, support):
    """Nef part as a pair (constant vector, t-coefficient vector) on the
    chamber with the given negative support."""
    curves = lat.negative_curves
    n0 = {i: Fraction(0) for i in support}
    n1 = {i: Fraction(0) for i in support}
    if support:
        idx = sorted(support)
        gram = [[lat.pair(curves[i], curves[j]) for j in idx] for i in idx]
        rhs0 = [lat.pair(a_vec, curves[i]) for i in idx]
        rhs1 = [-lat.pair(h_vec, curves[i]) for i in idx]
        for i, v in zip(idx, solve_linear(gram, rhs0)):
            n0[i] = v
        for i, v in zip(idx, solve_linear(gram, rhs1)):
            n1[i] = v
    const = list(a_vec)
    slope = [-x for x in h_vec]
    for i in support:
        const = [c - n0[i] * x for c, x in zip(const, curves[i])]
        slope = [s - n1[i] * x for s, x in zip(slope, curves[i])]
    return tuple(const), tuple(slope), n0, n1


def _zariski_chamber_walk(lat: SurfaceLattice, a_vec, h_vec, reach):
    """Breakpoints and quadratic pieces of vol(a - t*h) on [0, reach]."""
    curves = lat.negative_curves

    def chamber_at(t):
        d = tuple(a - t * h for a, h in zip(a_vec, h_vec))
        _, coeffs = lattice_zariski(lat, d)
        return frozenset(i for i, v in coeffs.items() if v != 0)

    def piece_for(support):
        const, slope, n0, n1 = _chamber_data(lat, a_vec, h_vec, support)
        c0 = lat.pair(const, const)
        c1 = 2 * lat.pair(const, slope)
        c2 = lat.pair(slope, slope)
        # validity bounds: nef against outside curves, coefficients >= 0 inside
        walls = []
        for i, c in enumerate(curves):
            if i in support:
                f0, f1 = n0[i], n1[i]
            else:
                f0, f1 = lat.pair(const, c), lat.pair(slope, c)
            if f1 != 0:
                walls.append((-f0 / f1, f1))
            elif f0 < 0:
                raise InvalidModel("chamber constraint violated identically")
        return (c0, c1, c2), walls

    def emit(lo, hi, out):
        if not lo < hi:
            return
        sample = (lo + hi) / 2
        support = chamber_at(sample)
        coeffs, walls = piece_for(support)
        left, right = lo, hi
        for root, slope_sign in walls:
            if root <= sample and slope_sign > 0:
                left = max(left, root)
            if root >= sample and slope_sign < 0:
                right = min(right, root)
        emit(lo, max(left, lo), out)
        out.append((max(left, lo), min(right, hi), coeffs))
        emit(min(right, hi), hi, out)

    segments: list = []
    emit(Fraction(0), Fraction(reach), segments)
    segments.sort(key=lambda s: s[0])
    breakpoints = [Fraction(0)]
    pieces = []
    for lo, hi, coeffs in segments:
        if pieces and coeffs == pieces[-1]:
            breakpoints[-1] = hi  # merge identical neighbours
            continue
        assert lo == breakpoints[-1]
        breakpoints.append(hi)
        pieces.append(coeffs)
    return breakpoints, pieces


# ---------------------------------------------------------------------------
# singularity invariants
# ---------------------------------------------------------------------------

def cone_singularity_volume(model):
    """Volume of the cone singularity: n times the integral of the canonical
    class's volume function; zero exactly for non-general-type models."""
    n = model_dim(model) + 1
    series = volume_function(model, 1, 0)
    return _simplify(n * series.integral())


def cone_gamma_volume(model):
    """Growth of the resolution's canonical sections: the canonical class is
    the pullback of K + H, so integrate that volume function."""
    n = model_dim(model) + 1
    series = volume_function(model, 1, 1)
    return _simplify(n * series.integral())


def psef_threshold_anticanonical(model):
    """min{t : -K + t*H pseudo-effective}, exactly."""
    if isinstance(model, Curve):
        return Fraction(2 * model.genus - 2, model.degree)
    if isinstance(model, ProjSpace):
        return Fraction(-(model.dim + 1), model.h)
    if isinstance(model, AbelianCover):
        d2, dl, l2 = model.base_sq, model.mixed, model.pol_sq
        return _min_psef_root(
            c0=Fraction(d2), c1=Fraction(-2 * dl), c2=Fraction(l2),
            l0=Fraction(-dl), l1=Fraction(l2),
        )
    if isinstance(model, LatticeModel):
        lat = model.lattice
        mk = tuple(-x for x in model.canonical)
        hv = model.polarization
        if lat.is_round_model:
            return _min_psef_root(
                c0=lat.pair(mk, mk), c1=2 * lat.pair(mk, hv), c2=lat.pair(hv, hv),
                l0=lat.pair(mk, lat.ample), l1=lat.pair(hv, lat.ample),
            )
        gens = lat.psef_generators
        kgen = len(gens)
        rows = []
        for coord in range(lat.rank):
            coeffs = (Fraction(hv[coord]),) + tuple(-g[coord] for g in gens)
            rows.append((coeffs, -mk[coord]))
            rows.append((tuple(-c for c in coeffs), mk[coord]))
        for i in range(kgen):
            unit = (0,) + tuple(1 if j == i else 0 for j in range(kgen))
            rows.append((unit, Fraction(0)))
        res = solve_lp((1,) + (0,) * kgen, rows, "min")
        if not res.is_optimal:
            raise InvalidModel("anticanonical threshold has no finite value")
        return res.value
    raise TypeError(f"not a polarized model: {model!r}")


def _min_psef_root(c0, c1, c2, l0, l1):
    """Minimal t with c(t) >= 0 and l(t) >= 0 for an upward walk (l1 > 0)."""
    if l1 <= 0:
        raise InvalidModel("positivity pairing must grow along the polarization")
    t_lin = -l0 / l1
    r1, r2 = solve_quadratic(c2, c1, c0)
    if t_lin <= r1:
        out = _as_number(t_lin)
    elif t_lin >= r2:
        out = _as_number(t_lin)
    else:
        out = r2
    # explicit sign test on the selected root
    assert _poly_eval((c0, c1, c2), out) >= 0
    assert l0 + l1 * out >= 0
    return _simplify(out)


def _envelope_hypothesis_holds(model) -> bool:
    if isinstance(model, (Curve, ProjSpace, AbelianCover)):
        return True  # psef = nef is structural on these models
    if isinstance(model, LatticeModel):
        return model.envelope_nef_certified or not model.lattice.negative_curves
    return False


def bdff_cone_volume(model):
    """Nef-envelope volume: threshold^n times the polarization degree,
    zero when the threshold is negative."""
    if not _envelope_hypothesis_holds(model):
        raise HypothesisNotAsserted(
            "cannot certify that the anticanonical envelope is relatively nef; "
            "pass envelope_nef_certified=True to assert it"
        )
    n = model_dim(model) + 1
    threshold = psef_threshold_anticanonical(model)
    if threshold <= 0:
        return Fraction(0)
    return _simplify(threshold ** n * polarization_degree(model))


# ---------------------------------------------------------------------------
# plurigenus sequences
# ---------------------------------------------------------------------------

def section_count_curve(model: Curve, degree) -> int:
    """h^0 of a degree-d line bundle on the curve.

    Above the canonical degree this is Riemann-Roch; inside [0, 2g-2] it is
    the general-position value, gated by the model flag.
    """
    degree = Fraction(degree)
    if degree.denominator != 1:
        raise ValueError("section counts need integral degrees")
    d = int(degree)
    g = model.genus
    if d < 0:
        return 0
    if d > 2 * g - 2:
        return d + 1 - g
    if not model.general_position:
        raise SpecialRange(
            f"h^0 of a degree-{d} bundle on a genus-{g} curve is not a function "
            "of the degree; set general_position=True to use max(0, d+1-g)"
        )
    return max(0, d + 1 - g)


def lambda_sequence(model, m_max: int):
    """Plurigenera (m, lambda_m, n!*lambda_m/m^n) for m = 1..m_max.

    lambda_m sums section counts of m*K - k*H over k >= 1; only models with
    exact section counts (curves, projective spaces) are supported.
    """
    n = model_dim(model) + 1
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    out = []
    if isinstance(model, ProjSpace):
        for m in range(1, m_max + 1):
            out.append((m, 0, Fraction(0)))  # m*K - k*H has negative degree
        return out
    if not isinstance(model, Curve):
        raise ConeError("lambda sequences need exact section counts "
                        "(curve or projective-space models)")
    kdeg = 2 * model.genus - 2
    for m in range(1, m_max + 1):
        lam = 0
        k = 1
        while m * kdeg - k * model.degree >= 0:
            lam += section_count_curve(model, m * kdeg - k * model.degree)
            k += 1
        out.append((m, lam, Fraction(fact * lam, m ** n)))
    return out
