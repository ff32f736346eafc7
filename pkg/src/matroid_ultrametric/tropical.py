"""Min-plus arithmetic, tropical polytopes and the nearest-point map.

Scalars are exact rationals or ``INF`` (``math.inf``), the tropical zero.
The negated Bergman fan of a matroid is the tropical polytope spanned by the
vectors ``v_H`` (``INF`` on a hyperplane ``H``, ``0`` off it); projecting
``-w`` onto it yields minus the subdominant M-ultrametric of ``w``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

INF = math.inf


def trop_add(x, y):
    return min(x, y)


def trop_mul(x, y):
    if x == INF or y == INF:
        return INF
    return x + y


def _coords(p):
    return p.coords if isinstance(p, TropicalPoint) else tuple(p)


def trop_combine(coeffs, points):
    """Componentwise ``min_k (coeffs[k] + points[k])``."""
    coeffs = list(coeffs)
    points = [_coords(p) for p in points]
    if not coeffs or len(coeffs) != len(points):
        raise ValueError("need equally many coefficients and points, at least one")
    if all(a == INF for a in coeffs):
        raise ValueError("every coefficient is the tropical zero")
    n = len(points[0])
    if any(len(p) != n for p in points):
        raise ValueError("points differ in dimension")
    out = [INF] * n
    for a, p in zip(coeffs, points):
        for i in range(n):
            out[i] = trop_add(out[i], trop_mul(a, p[i]))
    return TropicalPoint(out)


@dataclass(frozen=True, eq=False)
class TropicalPoint:
    """A point of tropical projective space.

    Equality and hashing are projective: two points are equal when they
    differ by a constant on every coordinate. ``coords`` keeps the raw
    representative.
    """

    coords: tuple

    def __init__(self, coords):
        coords = tuple(c if c == INF else Fraction(c) for c in coords)
        if all(c == INF for c in coords):
            raise ValueError("a tropical point needs a finite coordinate")
        object.__setattr__(self, "coords", coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def is_finite(self):
        return INF not in self.coords

    def normalized(self):
        """Representative whose smallest finite coordinate is 0."""
        low = min(c for c in self.coords if c != INF)
        return TropicalPoint(c if c == INF else c - low for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, TropicalPoint):
            return NotImplemented
        return self.normalized().coords == other.normalized().coords

    def __hash__(self):
        return hash(self.normalized().coords)

    def __neg__(self):
        if not self.is_finite():
            raise ValueError("cannot negate a point with infinite coordinates")
        return TropicalPoint(-c for c in self.coords)

    def __repr__(self):
        return f"TropicalPoint({', '.join('inf' if c == INF else str(c) for c in self.coords)})"


@dataclass(frozen=True)
class TropicalPolytope:
    """The tropical convex hull of finitely many vertices."""

    vertices: tuple

    def __post_init__(self):
        verts = tuple(v if isinstance(v, TropicalPoint) else TropicalPoint(v) for v in self.vertices)
        if not verts:
            raise ValueError("a tropical polytope needs a vertex")
        if len({len(v) for v in verts}) != 1:
            raise ValueError("vertices differ in dimension")
        object.__setattr__(self, "vertices", verts)

    def combine(self, coeffs):
        return trop_combine(coeffs, self.vertices)


def flat_generator(matroid, flat):
    """``v_F``: ``INF`` on the flat, ``0`` elsewhere."""
    f = matroid.mask(flat)
    if not matroid.is_flat(f):
        raise ValueError(f"{matroid.labels(f)} is not a flat")
    if f == matroid.full:
        raise ValueError("the whole ground set gives the all-infinite vector")
    return TropicalPoint(INF if f >> i & 1 else 0 for i in range(matroid.n))


def matroid_vertex_set(matroid):
    """The polytope spanned by ``v_H`` over the hyperplanes ``H``."""
    return TropicalPolytope(tuple(flat_generator(matroid, h) for h in matroid.hyperplanes))


def tp_distance(x, y):
    """Tropical projective distance ``max_{i,j} |(x_i - x_j) - (y_i - y_j)|``."""
    x, y = _coords(x), _coords(y)
    if len(x) != len(y):
        raise ValueError("points differ in dimension")
    if INF in x or INF in y:
        raise ValueError("distance is defined for finite points only")
    diff = [a - b for a, b in zip(x, y)]
    return max(diff) - min(diff)


def lambda_coefficient(v, x):
    """Least ``lam`` with ``(lam * v) + x == x``: ``max_i (x_i - v_i)`` over finite ``v_i``."""
    v, x = _coords(v), _coords(x)
    if INF in x:
        raise ValueError("x must be finite")
    gaps = [xi - vi for vi, xi in zip(v, x) if vi != INF]
    if not gaps:
        raise ValueError("v has no finite coordinate")
    return max(gaps)


def nearest_point(polytope, x):
    """Nearest-point map onto ``polytope``, keeping the representative of ``x``."""
    lams = [lambda_coefficient(v, x) for v in polytope.vertices]
    return trop_combine(lams, polytope.vertices)


def project_bergman(matroid, weights):
    """``-nearest_point(P_M, -w)`` on raw coordinates; equals the subdominant M-ultrametric."""
    x = TropicalPoint(-w for w in weights)
    p = nearest_point(matroid_vertex_set(matroid), x)
    return tuple(-c for c in p.coords)


def is_vertex_generator(matroid, flat):
    """Whether the proper flat is not an intersection of strictly larger flats."""
    f = matroid.mask(flat)
    if not matroid.is_flat(f):
        raise ValueError(f"{matroid.labels(f)} is not a flat")
    if f == matroid.full:
        raise ValueError("flat must be proper")
    meet = matroid.full
    for g in matroid.flats:
        if g != f and g & f == f:
            meet &= g
    return meet != f

