"""Truncated value semigroups, cone conditions, and Okounkov bodies.

For a graded family with constant ``beta`` the semigroup has levels

    Gamma_i = {v in N^d : x^v in I_i and |v| <= beta * i}    (family mode)
    Gamma'_i = {v in N^d : |v| <= beta * i}                  (ambient mode)

and the colength of ``I_i`` is ``#Gamma'_i - #Gamma_i``.  The Okounkov body is
the height-one slice of the cone over the semigroup, here the convex hull of
``Gamma_i / i`` over the computed levels.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .families import FamilyConstants, GradedFamily, verify_graded
from .limits import LimitEstimate, estimate_limit
from .monomial import MonomialIdeal, unit_ideal
from .polytope import convex_hull

__all__ = [
    "ConditionReport",
    "OkounkovBody",
    "SemigroupTruncation",
    "body",
    "build_semigroup",
    "check_conditions",
    "count_level",
    "density_trend",
    "ksum_count",
    "lattice_index",
]

FAMILY = "family"
AMBIENT = "ambient"
KSUM_CAP = 2_000_000


@dataclass(frozen=True)
class SemigroupTruncation:
    d: int
    beta: int
    max_level: int
    mode: str
    family: GradedFamily | None  # None in ambient mode; levels are computed on demand

    def ideal(self, i: int) -> MonomialIdeal:
        if not 0 <= i <= self.max_level:
            raise IndexError(f"level {i} outside 0..{self.max_level}")
        if self.family is None:
            return unit_ideal(self.d)
        return self.family.ideal_at(i)

    def bound(self, i: int) -> int:
        return self.beta * i

    def points(self, i: int) -> Iterator[tuple[int, ...]]:
        """Enumerate Gamma_i (use only on small levels)."""
        I = self.ideal(i)
        for v in _simplex_points(self.d, self.bound(i)):
            if I.is_unit() or any(all(a >= b for a, b in zip(v, g)) for g in I.gens):
                yield v

    def generators(self, i: int) -> list[tuple[int, ...]]:
        """Minimal generators of the level's ideal that fit under the bound."""
        T = self.bound(i)
        return [g for g in self.ideal(i).gens if sum(g) <= T]

    def export_jsonl(self, levels: Sequence[int] | None = None) -> str:
        levels = range(1, self.max_level + 1) if levels is None else levels
        return "".join(
            json.dumps({"i": i, "points": [list(v) for v in self.points(i)]}) + "\n" for i in levels
        )


def _simplex_points(d: int, T: int) -> Iterator[tuple[int, ...]]:
    if d == 1:
        for a in range(T + 1):
            yield (a,)
        return
    for a in range(T + 1):
        for rest in _simplex_points(d - 1, T - a):
            yield (a,) + rest


def build_semigroup(
    F: GradedFamily,
    consts: FamilyConstants,
    N: int,
    mode: str = FAMILY,
    check_graded: bool | None = None,
) -> SemigroupTruncation:
    """Truncated semigroup of F up to level N.

    ``check_graded=None`` runs :func:`verify_graded` up to N only for families
    that are not graded by construction (custom lists); pass True to force it.
    """
    if N < 1:
        raise ValueError("truncation level must be >= 1")
    if mode not in (FAMILY, AMBIENT):
        raise ValueError(f"unknown mode {mode!r}")
    if consts.beta < 1 or consts.beta != consts.rho * consts.c:
        raise ValueError("invalid family constants")
    if mode == AMBIENT:
        return SemigroupTruncation(F.d, consts.beta, N, mode, None)
    if F.length is not None and N >= F.length:
        raise IndexError(f"family has only {F.length} ideals")
    if check_graded is None:
        check_graded = not F.graded_by_construction
    if check_graded:
        rep = verify_graded(F, N)
        if not rep.ok:
            raise ValueError(f"family is not graded: violation at {rep.first_violation}")
    return SemigroupTruncation(F.d, consts.beta, N, mode, F)


def _count_in_ideal(gens: tuple[tuple[int, ...], ...], T: int) -> int:
    """Number of v in the ideal generated by ``gens`` with ``|v| <= T``."""
    if T < 0 or not gens:
        return 0
    d = len(gens[0])
    if d == 1:
        return max(0, T - min(g[0] for g in gens) + 1)
    if d == 2:
        # for each value t of the last coordinate, the first coordinate ranges
        # over [lo(t), T - t] with lo(t) = min g_0 over gens with g_1 <= t
        order = sorted(gens, key=lambda g: g[1])
        total, lo, j = 0, None, 0
        for t in range(T + 1):
            while j < len(order) and order[j][1] <= t:
                lo = order[j][0] if lo is None else min(lo, order[j][0])
                j += 1
            if lo is not None and T - t >= lo:
                total += T - t - lo + 1
        return total
    total = 0
    order = sorted(gens, key=lambda g: g[-1])
    active: list[tuple[int, ...]] = []
    j = 0
    for t in range(T + 1):
        while j < len(order) and order[j][-1] <= t:
            active.append(order[j][:-1])
            j += 1
        if active:
            total += _count_in_ideal(tuple(active), T - t)
    return total


def count_level(S: SemigroupTruncation, m: int) -> int:
    """#Gamma_m, counted exactly without enumerating the level."""
    if not 0 <= m <= S.max_level:
        raise IndexError(f"level {m} outside 0..{S.max_level}")
    T = S.bound(m)
    if S.mode == AMBIENT or S.ideal(m).is_unit():
        return math.comb(T + S.d, S.d)
    return _count_in_ideal(S.ideal(m).gens, T)


def ksum_count(S: SemigroupTruncation, p: int, k: int, cap: int = KSUM_CAP) -> int:
    """#(k Gamma_p), the k-fold sumset, by iterated Minkowski sums of point sets."""
    if k < 1:
        raise ValueError("k must be >= 1")
    base = set(S.points(p))
    if len(base) > cap:
        raise MemoryError(f"level {p} has more than {cap} points")
    acc = set(base)
    for _ in range(k - 1):
        if len(acc) * len(base) > 50 * cap:
            raise MemoryError("k-fold sum exceeds the resource cap")
        acc = {tuple(a + b for a, b in zip(x, y)) for x in acc for y in base}
        if len(acc) > cap:
            raise MemoryError("k-fold sum exceeds the resource cap")
    return len(acc)


def lattice_index(vectors, dim: int) -> int:
    """Index of the subgroup of Z^dim generated by ``vectors`` (0 if not full rank).

    Vectors are inserted one at a time into an echelon basis using extended
    gcd row operations, so the basis always spans the same group.
    """
    basis: dict[int, list[int]] = {}
    for vec in vectors:
        v = list(vec)
        for col in range(dim):
            if v[col] == 0:
                continue
            row = basis.get(col)
            if row is None:
                if v[col] < 0:
                    v = [-x for x in v]
                basis[col] = v
                break
            a, b = row[col], v[col]
            g, s, t = _xgcd(a, b)
            new_row = [s * x + t * y for x, y in zip(row, v)]
            v = [(a // g) * y - (b // g) * x for x, y in zip(row, v)]
            basis[col] = new_row
            _reduce_above(basis, col)
        if len(basis) == dim and all(basis[c][c] == 1 for c in basis):
            return 1
    if len(basis) < dim:
        return 0
    return abs(math.prod(basis[c][c] for c in range(dim)))


def _reduce_above(basis: dict[int, list[int]], col: int) -> None:
    # keep entries bounded: reduce rows after col by the pivots below them
    for c in sorted(basis):
        if c <= col:
            continue
        piv = basis[c]
        for r in basis:
            if r < c and basis[r][c]:
                q = basis[r][c] // piv[c]
                if q:
                    basis[r] = [x - q * y for x, y in zip(basis[r], piv)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True)
class ConditionReport:
    cone1: bool
    cone2: bool
    cone3: bool
    lattice_index: int
    beta: int
    verified_at: int

    def to_json(self):
        return {
            "cone1": self.cone1,
            "cone2": self.cone2,
            "cone2_witness_beta": self.beta,
            "cone3": self.cone3,
            "cone3_verified_at": self.verified_at,
            "lattice_index": self.lattice_index,
        }


def _group_generators(S: SemigroupTruncation) -> Iterator[tuple[int, ...]]:
    # Gamma_i is a union of lattice simplices g + {|w| <= beta*i - |g|}; the
    # group it generates is generated by each g and, where room is left,
    # each g + e_k.
    for i in range(1, S.max_level + 1):
        T = S.bound(i)
        for g in S.generators(i):
            yield g + (i,)
            if sum(g) < T:
                for k in range(S.d):
                    yield tuple(x + (j == k) for j, x in enumerate(g)) + (i,)


def check_conditions(S: SemigroupTruncation) -> ConditionReport:
    """(Cone1) Gamma_0 = {0}; (Cone2) Gamma inside the cone over {|v| <= beta};
    (Cone3) the generated group is Z^{d+1}, verified at the truncation level."""
    cone1 = S.ideal(0).is_unit()
    cone2 = all(sum(g) <= S.bound(i) for i in range(1, S.max_level + 1) for g in S.generators(i))
    idx = lattice_index(_group_generators(S), S.d + 1)
    return ConditionReport(cone1, cone2, idx == 1, idx, S.beta, S.max_level)


@dataclass(frozen=True)
class OkounkovBody:
    d: int
    vertices: tuple
    volume: Fraction
    truncation_level: int

    def to_json(self) -> dict:
        return {
            "vertices": [[str(x) for x in v] for v in self.vertices],
            "volume": str(self.volume),
            "truncation": self.truncation_level,
        }


def _level_candidates(S: SemigroupTruncation, i: int) -> Iterator[tuple[int, ...]]:
    # conv(Gamma_i) is the hull of g and g + (beta*i - |g|) e_k over the generators g
    T = S.bound(i)
    for g in S.generators(i):
        room = T - sum(g)
        yield g
        if room:
            for k in range(S.d):
                yield tuple(x + (room if j == k else 0) for j, x in enumerate(g))


def _level_vertices(S: SemigroupTruncation, i: int) -> list[tuple[Fraction, ...]]:
    pts = list(_level_candidates(S, i))
    if len(pts) > S.d + 1:
        pts, _ = convex_hull(pts)
    return [tuple(Fraction(x, i) for x in v) for v in pts]


def body(S: SemigroupTruncation, upto: int | None = None) -> OkounkovBody:
    """Exact hull of ``Gamma_i / i`` for ``1 <= i <= upto`` (default: all levels).

    Each level is first reduced to the vertices of its own hull in integer
    coordinates, which keeps the final rational hull small.
    """
    upto = S.max_level if upto is None else upto
    pts = set()
    for i in range(1, upto + 1):
        pts.update(_level_vertices(S, i))
    if not pts:
        raise ValueError("empty semigroup: no level has points")
    verts, vol = convex_hull(pts)
    return OkounkovBody(S.d, tuple(sorted(verts)), vol, upto)


def density_trend(S: SemigroupTruncation, levels: Sequence[int], with_body: bool = True) -> LimitEstimate:
    """``#Gamma_m / m^d`` at the given levels, with the body volume as reference."""
    ref = body(S).volume if with_body else None
    return estimate_limit(((m, count_level(S, m)) for m in levels), S.d, 1, reference=ref)


def closure_violations(S: SemigroupTruncation, pairs) -> list[tuple[int, int]]:
    """Pairs (a, b) for which Gamma_a + Gamma_b is not inside Gamma_{a+b}."""
    bad = []
    for a, b in pairs:
        target = S.ideal(a + b)
        T = S.bound(a + b)
        for x, y in itertools.product(S.points(a), S.points(b)):
            s = tuple(p + q for p, q in zip(x, y))
            if sum(s) > T or not (target.is_unit() or any(all(u >= w for u, w in zip(s, g)) for g in target.gens)):
                bad.append((a, b))
                break
    return bad
