"""Exact convex hulls and volumes of rational point sets.

Coordinates are scaled to integers by the common denominator, so every
predicate is evaluated in exact integer arithmetic.  In dimension 1 and 2 the
hull is computed directly (monotone chain); from dimension 3 on, qhull
proposes the facets and each one is certified exactly against all points
before its volume contribution is accepted.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = ["HullError", "convex_hull", "simplex_volume", "affine_rank", "det"]


class HullError(RuntimeError):
    """Raised when a proposed facet fails exact certification."""


def det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by Bareiss fraction-free elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def simplex_volume(vertices: Sequence[Sequence]) -> Fraction:
    """Volume of the simplex spanned by ``d + 1`` rational points in R^d."""
    base = [Fraction(x) for x in vertices[0]]
    rows = [[Fraction(x) - b for x, b in zip(v, base)] for v in vertices[1:]]
    L = 1
    for r in rows:
        for x in r:
            L = L * x.denominator // math.gcd(L, x.denominator)
    ints = [[int(x * L) for x in r] for r in rows]
    d = len(rows)
    return Fraction(abs(det(ints)), math.factorial(d) * L ** d)


def _scale(points: list[tuple[Fraction, ...]]) -> tuple[list[tuple[int, ...]], int]:
    L = 1
    for p in points:
        for x in p:
            L = L * x.denominator // math.gcd(L, x.denominator)
    return [tuple(int(x * L) for x in p) for p in points], L


def affine_rank(points: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Rank of the affine hull and the pivot coordinates of its direction space."""
    if not points:
        return -1, []
    base = points[0]
    rows = [[Fraction(x - b) for x, b in zip(p, base)] for p in points[1:]]
    d = len(base)
    pivots: list[int] = []
    r = 0
    for col in range(d):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return r, pivots


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull2d(pts: list[tuple[int, int]]) -> list[tuple[int, int]]:
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts
    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _facet_normal(vs: Sequence[Sequence[int]]) -> list[int]:
    """Integer normal of the hyperplane through ``d`` points in Z^d."""
    d = len(vs[0])
    rows = [[x - y for x, y in zip(v, vs[0])] for v in vs[1:]]
    normal = []
    for j in range(d):
        minor = [[r[k] for k in range(d) if k != j] for r in rows]
        normal.append((-1) ** j * det(minor))
    return normal


def _hull_qhull(pts: list[tuple[int, ...]], approx: np.ndarray) -> tuple[list[tuple[int, ...]], Fraction]:
    from scipy.spatial import ConvexHull

    d = len(pts[0])
    hull = ConvexHull(approx)
    vert_idx = sorted(set(int(i) for i in hull.vertices))
    verts = [pts[i] for i in vert_idx]
    k = len(verts)
    centre = [sum(v[j] for v in verts) for j in range(d)]  # k * centroid
    total = 0
    seen_vertices: set[int] = set()
    for simplex in hull.simplices:
        vs = [pts[int(i)] for i in simplex]
        seen_vertices.update(int(i) for i in simplex)
        n = _facet_normal(vs)
        if not any(n):
            continue  # degenerate sliver from triangulation; contributes no volume
        off = sum(a * b for a, b in zip(n, vs[0]))
        side_c = sum(a * b for a, b in zip(n, centre)) - k * off
        if side_c == 0:
            raise HullError("centroid lies on a proposed facet")
        sgn = 1 if side_c < 0 else -1
        for p in pts:
            if sgn * (sum(a * b for a, b in zip(n, p)) - off) > 0:
                raise HullError("point outside a proposed facet")
        rows = [[k * x - c for x, c in zip(v, centre)] for v in vs]
        total += abs(det(rows))
    vol = Fraction(total, math.factorial(d) * k ** d)
    extreme = [pts[i] for i in sorted(seen_vertices)]
    return extreme, vol


def convex_hull(points: Iterable[Sequence]) -> tuple[list[tuple[Fraction, ...]], Fraction]:
    """Extreme points and exact volume of the convex hull of rational points.

    Lower-dimensional point sets have volume 0; their extreme points are found
    in a coordinate projection that is injective on the affine hull.
    """
    pts = sorted({tuple(Fraction(x) for x in p) for p in points})
    if not pts:
        raise ValueError("convex hull of an empty point set")
    d = len(pts[0])
    ints, L = _scale(pts)
    rank, pivots = affine_rank(ints)
    if rank < d:
        if rank == 0:
            return [pts[0]], Fraction(0)
        projected = {tuple(p[j] for j in pivots): p for p in ints}
        sub, _ = convex_hull(projected.keys())
        verts = [projected[tuple(int(x) for x in v)] for v in sub]
        return [tuple(Fraction(x, L) for x in v) for v in verts], Fraction(0)
    if d == 1:
        lo, hi = min(ints)[0], max(ints)[0]
        return [(Fraction(lo, L),), (Fraction(hi, L),)], Fraction(hi - lo, L)
    if d == 2:
        hull = _hull2d(ints)
        area2 = 0
        for i in range(len(hull)):
            x0, y0 = hull[i]
            x1, y1 = hull[(i + 1) % len(hull)]
            area2 += x0 * y1 - x1 * y0
        verts = [(Fraction(x, L), Fraction(y, L)) for x, y in hull]
        return verts, Fraction(abs(area2), 2 * L * L)
    approx = np.array([[float(x) for x in p] for p in pts])
    verts, vol = _hull_qhull(ints, approx)
    return [tuple(Fraction(x, L) for x in v) for v in verts], vol / L ** d

