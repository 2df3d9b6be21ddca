"""Exact rational polyhedral kernel.

H-representations over the rationals are primary.  Vertex enumeration and
facet enumeration both run through one double-description routine on cones;
volumes of bounded regions come from a recursive boundary-fan triangulation
with exact determinants; volumes and lattice-point counts of bounded
differences of nested unbounded polyhedra are obtained by capping with a
halfspace that is strictly positive on the common recession cone.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, ceil, floor

import numpy as np

from .linprog import LPResult, solve_lp


class GeometryError(Exception):
    """Base class for polyhedral kernel failures."""


class EmptyPolyhedron(GeometryError):
    pass


class DimensionCap(GeometryError):
    pass


class Unbounded(GeometryError):
    pass


class RecessionMismatch(GeometryError):
    pass


class NotNested(GeometryError):
    pass


class NotPointed(GeometryError):
    pass


VERTEX_ENUM_MAX_DIM = 8


# ---------------------------------------------------------------------------
# small exact linear algebra
# ---------------------------------------------------------------------------

def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, abs(int(x)))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    g = vec_gcd(v)
    if g == 0:
        return tuple(0 for _ in v)
    return tuple(int(x) // g for x in v)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def mat_rank(rows) -> int:
    rows = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, (len(rows[0]) if rows else 0)
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][c]
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def mat_det(rows) -> Fraction:
    rows = [[Fraction(x) for x in r] for r in rows]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


def solve_linear(rows, rhs):
    """Solve a square nonsingular rational system exactly."""
    n = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return tuple(aug[i][n] for i in range(n))


def affine_rank(points) -> int:
    """Dimension of the affine span of a point set."""
    pts = list(points)
    if len(pts) <= 1:
        return 0
    p0 = pts[0]
    return mat_rank([[x - y for x, y in zip(p, p0)] for p in pts[1:]])


# ---------------------------------------------------------------------------
# double description: extreme rays of {x : <row, x> >= 0}
# ---------------------------------------------------------------------------

def _integer_rows(rows):
    out = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        lcm = 1
        for x in fr:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        out.append(primitive([int(x * lcm) for x in fr]))
    return out


def cone_extreme_rays(rows, dim):
    """Extreme rays and lineality basis of the cone {x : <r, x> >= 0 for all r}.

    Rays are primitive integer vectors.  Constraints are processed with the
    lineality-consuming rows first so the classic adjacency test applies.
    """
    rows = [r for r in _integer_rows(rows) if any(r)]
    # reorder: a maximal independent prefix consumes the lineality up front
    prefix, rest, seen = [], [], []
    for r in rows:
        if mat_rank(seen + [r]) > len(seen):
            prefix.append(r)
            seen.append(r)
        else:
            rest.append(r)
    rows = prefix + rest

    lin = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    rays = []  # list of (vector, tight bitmask over processed rows)

    for k, a in enumerate(rows):
        lvals = [dot(a, l) for l in lin]
        j0 = next((j for j, v in enumerate(lvals) if v != 0), None)
        if j0 is not None:
            l0 = lin[j0] if lvals[j0] > 0 else tuple(-x for x in lin[j0])
            v0 = abs(lvals[j0])
            new_lin = []
            for j, l in enumerate(lin):
                if j == j0:
                    continue
                w = primitive([v0 * x - dot(a, l) * y for x, y in zip(l, l0)])
                new_lin.append(w)
            lin = new_lin
            new_rays = []
            for r, mask in rays:
                w = primitive([v0 * x - dot(a, r) * y for x, y in zip(r, l0)])
                new_rays.append((w, mask | (1 << k)))
            new_rays.append((l0, (1 << k) - 1))
            rays = _dedupe(new_rays)
            continue
        pos, zer, neg = [], [], []
        for r, mask in rays:
            v = dot(a, r)
            if v > 0:
                pos.append((r, mask, v))
            elif v < 0:
                neg.append((r, mask, v))
            else:
                zer.append((r, mask | (1 << k)))
        if not neg:
            rays = [(r, m) for r, m, _ in pos] + zer
            continue
        if not pos:
            rays = zer
            continue
        target = dim - len(lin) - 2
        combos = []
        for rp, mp, vp in pos:
            for rn, mn, vn in neg:
                common = mp & mn
                tight_rows = [rows[j] for j in _bits(common)]
                rank = mat_rank(tight_rows) if tight_rows else 0
                if rank != target:
                    continue  # not adjacent: combination would be non-extreme
                w = primitive([vp * x - vn * y for x, y in zip(rn, rp)])
                combos.append((w, common | (1 << k)))
        rays = _dedupe([(r, m) for r, m, _ in pos] + zer + combos)
    return [r for r, _ in rays], lin


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _dedupe(rays):
    seen = {}
    for r, m in rays:
        if r in seen:
            seen[r] |= m
        else:
            seen[r] = m
    return list(seen.items())


# ---------------------------------------------------------------------------
# H-representation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Halfspace:
    """Constraint <normal, x> >= offset with primitive integer normal."""

    normal: tuple[int, ...]
    offset: Fraction

    def __post_init__(self):
        n = [Fraction(x) for x in self.normal]
        lcm = 1
        for x in n:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        ints = [int(x * lcm) for x in n]
        g = vec_gcd(ints)
        if g == 0:
            raise ValueError("zero normal in halfspace")
        object.__setattr__(self, "normal", tuple(v // g for v in ints))
        object.__setattr__(self, "offset", Fraction(self.offset) * lcm / g)

    def holds(self, point) -> bool:
        return dot(self.normal, point) >= self.offset

    def scaled(self, m) -> "Halfspace":
        return Halfspace(self.normal, self.offset * Fraction(m))


@dataclass(frozen=True)
class VRep:
    """Minimal V-representation: vertices plus extreme recession rays."""

    vertices: tuple[tuple[Fraction, ...], ...]
    rays: tuple[tuple[int, ...], ...]


class Polyhedron:
    """Immutable rational polyhedron in H-representation."""

    def __init__(self, dim: int, halfspaces):
        if dim < 1:
            raise ValueError("dimension must be positive")
        hs = []
        best = {}
        for h in halfspaces:
            if not isinstance(h, Halfspace):
                h = Halfspace(tuple(h[0]), h[1])
            if len(h.normal) != dim:
                raise ValueError("halfspace dimension mismatch")
            # same normal: keep only the tightest offset
            if h.normal in best:
                best[h.normal] = max(best[h.normal], h.offset)
            else:
                best[h.normal] = h.offset
                hs.append(h.normal)
        self.dim = dim
        self.halfspaces = tuple(Halfspace(n, best[n]) for n in hs)
        self._cache = {}

    @classmethod
    def from_inequalities(cls, dim, rows):
        """rows: iterable of (normal, offset) meaning <normal, x> >= offset."""
        return cls(dim, [Halfspace(tuple(n), b) for n, b in rows])

    @classmethod
    def orthant(cls, dim):
        unit = lambda i: tuple(1 if j == i else 0 for j in range(dim))
        return cls(dim, [Halfspace(unit(i), Fraction(0)) for i in range(dim)])

    def __repr__(self):
        return f"Polyhedron(dim={self.dim}, {len(self.halfspaces)} halfspaces)"

    def rows(self):
        return [(h.normal, h.offset) for h in self.halfspaces]

    def contains(self, point) -> bool:
        return all(h.holds(point) for h in self.halfspaces)

    def contains_strictly(self, point) -> bool:
        return all(dot(h.normal, point) > h.offset for h in self.halfspaces)

    def scaled(self, m) -> "Polyhedron":
        """Dilation m*P for rational m > 0."""
        m = Fraction(m)
        if m <= 0:
            raise ValueError("scale factor must be positive")
        return Polyhedron(self.dim, [h.scaled(m) for h in self.halfspaces])

    def intersect(self, other) -> "Polyhedron":
        if isinstance(other, Polyhedron):
            if other.dim != self.dim:
                raise ValueError("dimension mismatch")
            extra = other.halfspaces
        else:
            extra = [other if isinstance(other, Halfspace) else Halfspace(*other)]
        return Polyhedron(self.dim, list(self.halfspaces) + list(extra))

    # -- cached geometry --------------------------------------------------

    def is_empty(self) -> bool:
        if "empty" not in self._cache:
            res = solve_lp([0] * self.dim, self.rows())
            self._cache["empty"] = not res.is_optimal and res.status == "infeasible"
        return self._cache["empty"]

    def vrep(self) -> VRep:
        if "vrep" in self._cache:
            return self._cache["vrep"]
        if self.dim > VERTEX_ENUM_MAX_DIM:
            raise DimensionCap(f"vertex enumeration capped at dim {VERTEX_ENUM_MAX_DIM}")
        rows = [list(h.normal) + [-h.offset] for h in self.halfspaces]
        rows.append([0] * self.dim + [1])
        rays, lin = cone_extreme_rays(rows, self.dim + 1)
        verts, rec = [], []
        for r in rays:
            if r[-1] > 0:
                t = Fraction(r[-1])
                verts.append(tuple(Fraction(x) / t for x in r[:-1]))
            elif r[-1] == 0:
                rec.append(primitive(r[:-1]))
        if not verts:
            raise EmptyPolyhedron("polyhedron has no points")
        if lin:
            raise NotPointed("polyhedron contains a line")
        vr = VRep(tuple(sorted(verts)), tuple(sorted(rec)))
        self._cache["vrep"] = vr
        return vr

    def recession_rays(self) -> tuple[tuple[int, ...], ...]:
        """Extreme rays of the recession cone (must be pointed)."""
        if "rec" in self._cache:
            return self._cache["rec"]
        rays, lin = cone_extreme_rays([h.normal for h in self.halfspaces], self.dim)
        if lin:
            raise NotPointed("recession cone contains a line")
        rec = tuple(sorted(primitive(r) for r in rays))
        self._cache["rec"] = rec
        return rec

    def pruned(self) -> "Polyhedron":
        """Drop halfspaces implied by the others (one LP per halfspace)."""
        if self.is_empty():
            return self
        keep = list(self.halfspaces)
        i = 0
        while i < len(keep):
            h = keep[i]
            others = keep[:i] + keep[i + 1:]
            res = solve_lp(h.normal, [(g.normal, g.offset) for g in others], "min")
            if res.is_optimal and res.value >= h.offset:
                keep.pop(i)
            else:
                i += 1
        return Polyhedron(self.dim, keep)

    def contains_polyhedron(self, other: "Polyhedron") -> bool:
        """Point-set containment other <= self, decided by LP per halfspace."""
        for h in self.halfspaces:
            res = solve_lp(h.normal, other.rows(), "min")
            if res.status == "infeasible":
                return True
            if res.status == "unbounded" or res.value < h.offset:
                return False
        return True

    def same_set(self, other: "Polyhedron") -> bool:
        return self.contains_polyhedron(other) and other.contains_polyhedron(self)


# ---------------------------------------------------------------------------
# conversions
# ---------------------------------------------------------------------------

def vertex_enumerate(p: Polyhedron) -> VRep:
    """Exact minimal V-representation of a nonempty polyhedron (dim <= 8)."""
    return p.vrep()


def facets_from_generators(dim, vertices, rays):
    """H-representation of conv(vertices) + cone(rays), as Halfspace list.

    Lower-dimensional hulls yield pairs of opposite halfspaces for the
    affine span's equations.
    """
    ineqs = [list(v) + [1] for v in vertices] + [list(r) + [0] for r in rays]
    drays, dlin = cone_extreme_rays(ineqs, dim + 1)
    out = []
    for u in drays:
        if any(u[:-1]):
            out.append(Halfspace(tuple(u[:-1]), Fraction(-u[-1])))
    for u in dlin:
        if any(u[:-1]):
            out.append(Halfspace(tuple(u[:-1]), Fraction(-u[-1])))
            out.append(Halfspace(tuple(-x for x in u[:-1]), Fraction(u[-1])))
    return out


def hull_polyhedron(dim, vertices, rays) -> Polyhedron:
    return Polyhedron(dim, facets_from_generators(dim, vertices, rays))


# ---------------------------------------------------------------------------
# volume of a bounded polyhedron
# ---------------------------------------------------------------------------

def volume_bounded(p: Polyhedron) -> Fraction:
    """Exact Euclidean volume of a bounded polyhedron (unit cube = 1).

    Boundary facets are fanned from one vertex recursively; each resulting
    simplex contributes |det|/n!.  Lower-dimensional regions have volume 0.
    """
    vr = p.vrep()
    if vr.rays:
        raise Unbounded("recession cone is nontrivial")
    verts = list(vr.vertices)
    n = p.dim
    if len(verts) < n + 1 or affine_rank(verts) < n:
        return Fraction(0)
    tight = []
    for h in p.halfspaces:
        idx = frozenset(
            i for i, v in enumerate(verts) if dot(h.normal, v) == h.offset
        )
        tight.append(idx)
    total = Fraction(0)
    for simplex in _fan_simplices(frozenset(range(len(verts))), tight, verts, n):
        pts = [verts[i] for i in simplex]
        rows = [[x - y for x, y in zip(q, pts[0])] for q in pts[1:]]
        total += abs(mat_det(rows))
    return total / factorial(n)


def _fan_simplices(face, tight, verts, d):
    """Yield d-simplices (as index tuples) triangulating the given face."""
    members = sorted(face)
    if len(members) == d + 1:
        yield tuple(members)
        return
    apex = members[0]
    seen = set()
    for t in tight:
        sub = face & t
        if apex in sub or sub in seen or len(sub) < d:
            continue
        if affine_rank([verts[i] for i in sub]) != d - 1:
            continue
        seen.add(sub)
        for s in _fan_simplices(sub, tight, verts, d - 1):
            yield (apex,) + s


# ---------------------------------------------------------------------------
# Fourier-Motzkin elimination
# ---------------------------------------------------------------------------

def _fm_rows(rows, coord):
    """Eliminate one coordinate from integer rows (normal, offset)."""
    pos, neg, zer = [], [], []
    for n, b in rows:
        c = n[coord]
        if c > 0:
            pos.append((n, b, c))
        elif c < 0:
            neg.append((n, b, c))
        else:
            zer.append((n, b))
    out = [(tuple(x for i, x in enumerate(n) if i != coord), b) for n, b in zer]
    for np_, bp, cp in pos:
        for nn, bn, cn in neg:
            # cp > 0 > cn: (-cn)*pos + cp*neg kills the coordinate
            n = [-cn * a + cp * b for a, b in zip(np_, nn)]
            b = -cn * bp + cp * bn
            n = tuple(x for i, x in enumerate(n) if i != coord)
            if any(n):
                out.append((n, b))
            elif b > 0:
                out.append((tuple(n), b))  # 0 >= b > 0: infeasible marker
    return out


def project_out(p: Polyhedron, coord: int) -> Polyhedron:
    """Exact Fourier-Motzkin elimination of one coordinate (dim drops by 1)."""
    if p.dim < 2:
        raise ValueError("cannot project below dimension 1")
    if not 0 <= coord < p.dim:
        raise ValueError("coordinate out of range")
    rows = [(h.normal, h.offset) for h in p.halfspaces]
    out = _fm_rows(rows, coord)
    infeasible = [r for r in out if not any(r[0])]
    if infeasible:
        unit = (1,) + (0,) * (p.dim - 2)
        return Polyhedron(p.dim - 1, [Halfspace(unit, Fraction(1)),
                                      Halfspace(tuple(-x for x in unit), Fraction(1))])
    out = [r for r in out if any(r[0])]
    if not out:
        return Polyhedron(p.dim - 1, [])  # projection is all of R^(dim-1)
    return Polyhedron.from_inequalities(p.dim - 1, out).pruned()


def eliminate_direction(p: Polyhedron, direction) -> Polyhedron:
    """Trace of sliding P along -direction: {x - t*direction : x in P, t >= 0}."""
    direction = tuple(int(x) for x in direction)
    rows = []
    for h in p.halfspaces:
        rows.append((h.normal + (dot(h.normal, direction),), h.offset))
    rows.append(((0,) * p.dim + (1,), Fraction(0)))
    lifted = Polyhedron.from_inequalities(p.dim + 1, rows)
    return project_out(lifted, p.dim)


# ---------------------------------------------------------------------------
# bounded differences of nested polyhedra
# ---------------------------------------------------------------------------

def lp_optimize(objective, p: Polyhedron, sense: str = "max") -> LPResult:
    """Exact optimum of a linear functional over a polyhedron."""
    return solve_lp(objective, p.rows(), sense)


def positive_functional(rec_rays, dim):
    """Integer w with <w, r> > 0 on every recession ray, preferring sum of rays."""
    w = tuple(sum(r[i] for r in rec_rays) for i in range(dim))
    if all(dot(w, r) > 0 for r in rec_rays):
        return w
    # skew recession cone: any interior point of the dual cone works
    rows = [(r, Fraction(1)) for r in rec_rays]
    res = solve_lp([0] * dim, rows)
    if not res.is_optimal:
        raise NotPointed("recession cone admits no positive functional")
    fr = [Fraction(x) for x in res.point]
    lcm = 1
    for x in fr:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    return primitive([int(x * lcm) for x in fr])


def _check_nested(inner: Polyhedron, outer: Polyhedron):
    if inner.dim != outer.dim:
        raise ValueError("dimension mismatch")
    vr = inner.vrep()
    for v in vr.vertices:
        if not outer.contains(v):
            raise NotNested(f"inner vertex {v} escapes the outer polyhedron")
    for r in vr.rays:
        for h in outer.halfspaces:
            if dot(h.normal, r) < 0:
                raise NotNested(f"inner ray {r} escapes the outer polyhedron")
    rec_in, rec_out = inner.recession_rays(), outer.recession_rays()
    if set(rec_in) != set(rec_out):
        raise RecessionMismatch(
            "recession cones differ; the difference would have infinite volume"
        )
    return rec_out


def _difference_cap(inner: Polyhedron, outer: Polyhedron):
    """Capping data (w, c) covering outer \\ inner, or None if difference empty.

    w is strictly positive on the common recession cone and c exceeds the
    w-value of every point of the difference.
    """
    rec = _check_nested(inner, outer)
    if not rec:
        return None  # both bounded; no cap needed
    w = positive_functional(rec, inner.dim)
    best = None
    for h in inner.halfspaces:
        low = solve_lp(h.normal, outer.rows(), "min")
        if low.is_optimal and low.value >= h.offset:
            continue  # outer satisfies this constraint; nothing escapes here
        if not all(dot(h.normal, r) > 0 for r in rec):
            raise Unbounded(
                "difference region is unbounded (violated halfspace is not "
                "strictly positive on the recession cone)"
            )
        rows = outer.rows()
        rows.append((tuple(-x for x in h.normal), -h.offset))
        res = solve_lp(w, rows, "max")
        if res.status != "optimal":
            raise GeometryError("capping LP failed unexpectedly")
        best = res.value if best is None else max(best, res.value)
    if best is None:
        return None
    return (w, best + 1)


def _cap_halfspace(w, c):
    return Halfspace(tuple(-x for x in w), -Fraction(c))


def volume_of_difference(inner: Polyhedron, outer: Polyhedron) -> Fraction:
    """Exact volume of outer \\ inner for nested polyhedra with equal recession."""
    cap = _difference_cap(inner, outer)
    if cap is None:
        if inner.recession_rays():
            return Fraction(0)
        return volume_bounded(outer) - volume_bounded(inner)
    w, c = cap
    h = _cap_halfspace(w, c)
    return volume_bounded(outer.intersect(h)) - volume_bounded(inner.intersect(h))


# ---------------------------------------------------------------------------
# lattice point counting
# ---------------------------------------------------------------------------

def _worker_count():
    env = os.environ.get("LOCVOL_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _integer_constraints(p: Polyhedron):
    """Rows (a, b) of integers with P = {x : a.x >= b}."""
    out = []
    for h in p.halfspaces:
        q = h.offset.denominator
        out.append(([q * x for x in h.normal], h.offset.numerator))
    return out


def _box_of(p: Polyhedron):
    vr = p.vrep()
    if vr.rays:
        raise Unbounded("cannot box an unbounded polyhedron")
    lo, hi = [], []
    for i in range(p.dim):
        coords = [v[i] for v in vr.vertices]
        lo.append(ceil(min(coords)))
        hi.append(floor(max(coords)))
    return lo, hi


def count_lattice_points(outer_rows, inner_rows, lo, hi):
    """Integer points in the box satisfying outer but not inner, exactly.

    Vectorizes with int64 when magnitudes are provably safe, otherwise falls
    back to pure-integer loops.  The reduction is an order-independent sum,
    so the chunked/threaded path is bit-identical to the serial one.
    """
    dim = len(lo)
    if any(l > h for l, h in zip(lo, hi)):
        return 0
    extent = max(max(abs(l), abs(h)) for l, h in zip(lo, hi))
    mag = 0
    for a, b in outer_rows + inner_rows:
        mag = max(mag, sum(abs(x) for x in a) * extent + abs(b))
    if mag >= 2 ** 62:
        return _count_python(outer_rows, inner_rows, lo, hi)

    ranges = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
    a_out = np.array([a for a, _ in outer_rows], dtype=np.int64)
    b_out = np.array([b for _, b in outer_rows], dtype=np.int64)
    a_in = np.array([a for a, _ in inner_rows], dtype=np.int64) if inner_rows else None
    b_in = np.array([b for _, b in inner_rows], dtype=np.int64) if inner_rows else None

    def chunk_count(r0):
        grids = np.meshgrid(r0, *ranges[1:], indexing="ij")
        pts = np.stack([g.reshape(-1) for g in grids], axis=1)
        ok = np.all(pts @ a_out.T >= b_out, axis=1)
        if a_in is not None:
            bad = np.all(pts @ a_in.T >= b_in, axis=1)
            ok &= ~bad
        return int(np.count_nonzero(ok))

    workers = _worker_count()
    nchunk = min(len(ranges[0]), max(1, 4 * workers))
    chunks = np.array_split(ranges[0], nchunk)
    chunks = [c for c in chunks if len(c)]
    if workers == 1 or len(chunks) == 1:
        return sum(chunk_count(c) for c in chunks)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(chunk_count, chunks))


def _count_python(outer_rows, inner_rows, lo, hi):
    from itertools import product

    count = 0
    for pt in product(*[range(l, h + 1) for l, h in zip(lo, hi)]):
        if all(dot(a, pt) >= b for a, b in outer_rows):
            if not (inner_rows and all(dot(a, pt) >= b for a, b in inner_rows)):
                count += 1
    return count


def count_lattice_difference(inner: Polyhedron, outer: Polyhedron, m: int) -> int:
    """Number of integer points in (m*outer) \\ (m*inner)."""
    if m < 1:
        raise ValueError("scale must be a positive integer")
    inner_m, outer_m = inner.scaled(m), outer.scaled(m)
    cap = _difference_cap(inner_m, outer_m)
    if cap is None:
        if inner_m.recession_rays():
            return 0
        region = outer_m
    else:
        w, c = cap
        region = outer_m.intersect(_cap_halfspace(w, c))
    try:
        lo, hi = _box_of(region)
    except EmptyPolyhedron:
        return 0
    return count_lattice_points(
        _integer_constraints(outer_m), _integer_constraints(inner_m), lo, hi
    )


def lattice_points(p: Polyhedron):
    """All integer points of a bounded polyhedron, sorted, as int tuples."""
    try:
        lo, hi = _box_of(p)
    except EmptyPolyhedron:
        return []
    if any(l > h for l, h in zip(lo, hi)):
        return []
    rows = _integer_constraints(p)
    extent = max(max(abs(l), abs(h)) for l, h in zip(lo, hi))
    mag = max(
        (sum(abs(x) for x in a) * extent + abs(b) for a, b in rows), default=0
    )
    if mag >= 2 ** 62:
        from itertools import product

        return [
            pt
            for pt in product(*[range(l, h + 1) for l, h in zip(lo, hi)])
            if all(dot(a, pt) >= b for a, b in rows)
        ]
    ranges = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
    grids = np.meshgrid(*ranges, indexing="ij")
    pts = np.stack([g.reshape(-1) for g in grids], axis=1)
    a = np.array([a for a, _ in rows], dtype=np.int64)
    b = np.array([b for _, b in rows], dtype=np.int64)
    ok = np.all(pts @ a.T >= b, axis=1)
    return [tuple(int(x) for x in row) for row in pts[ok]]
