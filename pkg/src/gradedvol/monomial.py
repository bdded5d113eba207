"""Monomial ideals in k[x_1, ..., x_d] localized at the origin.

An ideal is stored as the antichain of exponent vectors of its minimal
generators.  The empty antichain is the zero ideal, ``{(0, ..., 0)}`` is the
unit ideal.  All operations return new immutable ideals.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "FacePrime",
    "MonomialIdeal",
    "NotPrimaryError",
    "colength",
    "colength_enumerate",
    "colength_inclusion_exclusion",
    "colength_sliced",
    "contains",
    "dimension",
    "ideal_sum",
    "intersect",
    "is_m_primary",
    "is_subset",
    "localize_at_face",
    "max_standard_degree",
    "maximal_ideal",
    "minimalize",
    "newton_complement_volume",
    "power",
    "product",
    "quotient",
    "quotient_length",
    "saturate",
    "unit_ideal",
    "zero_ideal",
]

Exponent = tuple[int, ...]

# inclusion-exclusion is used for colength up to this many generators
IE_MAX_GENERATORS = 12


class NotPrimaryError(ValueError):
    """The ideal is not primary to the maximal ideal (infinite colength)."""


def _dominates(a: Exponent, b: Exponent) -> bool:
    return all(x >= y for x, y in zip(a, b))


def _minimal(raw: Iterable[Exponent]) -> tuple[Exponent, ...]:
    pts = set(raw)
    if not pts:
        return ()
    d = len(next(iter(pts)))
    if d == 1:
        return (min(pts),)
    if d == 2:
        # sweep by first coordinate; keep points that lower the running minimum of the second
        kept = []
        best = None
        for v in sorted(pts):
            if best is None or v[1] < best:
                kept.append(v)
                best = v[1]
        return tuple(kept)
    if len(pts) > 64:
        return _minimal_numpy(pts)
    order = sorted(pts, key=lambda v: (sum(v), v))
    kept: list[Exponent] = []
    for v in order:
        if not any(_dominates(v, g) for g in kept):
            kept.append(v)
    return tuple(sorted(kept))


def _minimal_numpy(pts: set[Exponent]) -> tuple[Exponent, ...]:
    arr = np.array(sorted(pts), dtype=np.int64)
    keep = np.ones(len(arr), dtype=bool)
    for start in range(0, len(arr), 256):
        block = arr[start:start + 256]
        # le[i, j]: arr[j] <= block[i] componentwise; distinct points so j != i means strict
        le = np.all(arr[None, :, :] <= block[:, None, :], axis=2)
        le[np.arange(len(block)), np.arange(start, start + len(block))] = False
        keep[start:start + len(block)] = ~le.any(axis=1)
    return tuple(tuple(int(x) for x in row) for row in arr[keep])


class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    >>> I = MonomialIdeal(2, [(2, 0), (1, 1), (2, 1)])
    >>> I.gens
    ((1, 1), (2, 0))
    """

    __slots__ = ("d", "gens")

    def __init__(self, d: int, gens: Iterable[Sequence[int]] = ()):
        if d < 1:
            raise ValueError("ambient dimension must be >= 1")
        vecs = []
        for g in gens:
            g = tuple(int(x) for x in g)
            if len(g) != d:
                raise ValueError(f"exponent {g} does not have length {d}")
            if min(g) < 0:
                raise ValueError(f"exponent {g} has a negative entry")
            vecs.append(g)
        self.d = d
        self.gens = _minimal(vecs)

    @classmethod
    def _from_minimal(cls, d: int, gens: tuple[Exponent, ...]) -> "MonomialIdeal":
        obj = cls.__new__(cls)
        obj.d = d
        obj.gens = gens
        return obj

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.d,)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.d == other.d and self.gens == other.gens

    def __hash__(self):
        return hash((self.d, self.gens))

    def __mul__(self, other):
        return product(self, other)

    def __pow__(self, n: int):
        return power(self, n)

    def __and__(self, other):
        return intersect(self, other)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __le__(self, other):
        return is_subset(self, other)

    def __repr__(self):
        return f"MonomialIdeal({self.d}, {list(self.gens)})"

    def to_json(self) -> dict:
        return {"d": self.d, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, obj) -> "MonomialIdeal":
        return cls(int(obj["d"]), obj["gens"])


def zero_ideal(d: int) -> MonomialIdeal:
    return MonomialIdeal._from_minimal(d, ())


def unit_ideal(d: int) -> MonomialIdeal:
    return MonomialIdeal._from_minimal(d, ((0,) * d,))


def maximal_ideal(d: int) -> MonomialIdeal:
    return MonomialIdeal._from_minimal(
        d, tuple(sorted(tuple(int(i == k) for i in range(d)) for k in range(d)))
    )


def minimalize(raw: Iterable[Sequence[int]], d: int) -> MonomialIdeal:
    return MonomialIdeal(d, raw)


def _check(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.d != J.d:
        raise ValueError(f"dimension mismatch: {I.d} != {J.d}")


def contains(I: MonomialIdeal, v: Sequence[int]) -> bool:
    if len(v) != I.d:
        raise ValueError(f"exponent of length {len(v)} in dimension {I.d}")
    return any(all(x >= y for x, y in zip(v, g)) for g in I.gens)


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _check(I, J)
    return all(contains(J, g) for g in I.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check(I, J)
    return MonomialIdeal._from_minimal(
        I.d, _minimal(tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens)
    )


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("negative power")
    result = unit_ideal(I.d)
    base = I
    while n:
        if n & 1:
            result = product(result, base)
        n >>= 1
        if n:
            base = product(base, base)
    return result


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check(I, J)
    return MonomialIdeal._from_minimal(I.d, _minimal(I.gens + J.gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check(I, J)
    return MonomialIdeal._from_minimal(
        I.d, _minimal(tuple(max(a, b) for a, b in zip(g, h)) for g in I.gens for h in J.gens)
    )


def _colon_monomial(I: MonomialIdeal, g: Exponent) -> MonomialIdeal:
    return MonomialIdeal._from_minimal(
        I.d, _minimal(tuple(max(a - b, 0) for a, b in zip(h, g)) for h in I.gens)
    )


def quotient(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The colon ideal ``I : J``."""
    _check(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    parts = [_colon_monomial(I, g) for g in J.gens]
    out = parts[0]
    for p in parts[1:]:
        out = intersect(out, p)
    return out


def saturate(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I : J^inf``, the stable value of ``I : J^k``.

    For a monomial ``x^g``, ``I : (x^g)^inf`` sets the variables in the support
    of ``g`` to 1; ``I : J^inf`` is the intersection over the generators of J
    since ``J^k`` and the ideals generated by the ``k``-th powers of its
    generators are cofinal.
    """
    _check(I, J)
    if J.is_zero():
        raise ValueError("saturation by the zero ideal")
    out = None
    for g in J.gens:
        part = MonomialIdeal._from_minimal(
            I.d, _minimal(tuple(0 if gk else hk for hk, gk in zip(h, g)) for h in I.gens)
        )
        out = part if out is None else intersect(out, part)
    return out


def is_m_primary(I: MonomialIdeal) -> bool:
    if I.is_zero():
        return False
    if I.is_unit():
        return True
    for k in range(I.d):
        if not any(g[k] > 0 and sum(g) == g[k] for g in I.gens):
            return False
    return True


def _pure_power(gens: tuple[Exponent, ...], k: int) -> int:
    return min(g[k] for g in gens if sum(g) == g[k])


def _require_primary(I: MonomialIdeal) -> None:
    if not is_m_primary(I):
        raise NotPrimaryError(f"{I!r} is not m-primary")


def _slices(gens: tuple[Exponent, ...]):
    """Yield ``(t0, t1, sliced_gens)``: for last coordinate in ``[t0, t1)`` the
    slice of the ideal is generated by ``sliced_gens`` in one fewer variable."""
    top = _pure_power(gens, len(gens[0]) - 1)
    breaks = sorted({g[-1] for g in gens if g[-1] < top})
    for i, t0 in enumerate(breaks):
        t1 = breaks[i + 1] if i + 1 < len(breaks) else top
        sliced = _minimal(g[:-1] for g in gens if g[-1] <= t0)
        yield t0, t1, sliced


@lru_cache(maxsize=4096)
def _colength_sliced(gens: tuple[Exponent, ...]) -> int:
    if len(gens[0]) == 1:
        return gens[0][0]
    if sum(gens[0]) == 0:
        return 0
    return sum((t1 - t0) * _colength_sliced(s) for t0, t1, s in _slices(gens))


def colength(I: MonomialIdeal) -> int:
    """Number of monomials outside an m-primary monomial ideal."""
    _require_primary(I)
    if I.is_unit():
        return 0
    if len(I.gens) <= IE_MAX_GENERATORS:
        return colength_inclusion_exclusion(I)
    return _colength_sliced(I.gens)


def colength_sliced(I: MonomialIdeal) -> int:
    _require_primary(I)
    return 0 if I.is_unit() else _colength_sliced(I.gens)


def colength_inclusion_exclusion(I: MonomialIdeal) -> int:
    """Colength by inclusion-exclusion over lcms of generators inside the
    box spanned by the pure powers; subsets whose lcm leaves the box are pruned."""
    _require_primary(I)
    if I.is_unit():
        return 0
    d = I.d
    box = tuple(_pure_power(I.gens, k) for k in range(d))
    gens = I.gens
    inside = 0

    def walk(start: int, lcm: Exponent, depth: int) -> None:
        nonlocal inside
        for i in range(start, len(gens)):
            new = tuple(max(a, b) for a, b in zip(lcm, gens[i]))
            if any(x >= b for x, b in zip(new, box)):
                continue
            inside += (-1) ** depth * math.prod(b - x for x, b in zip(new, box))
            walk(i + 1, new, depth + 1)

    walk(0, (0,) * d, 0)
    return math.prod(box) - inside


def colength_enumerate(I: MonomialIdeal) -> int:
    """Colength by visiting every point of the pure-power box."""
    _require_primary(I)
    if I.is_unit():
        return 0
    box = [range(_pure_power(I.gens, k)) for k in range(I.d)]
    return sum(1 for v in itertools.product(*box) if not contains(I, v))


@lru_cache(maxsize=4096)
def _max_degree_sliced(gens: tuple[Exponent, ...]) -> int:
    if sum(gens[0]) == 0:
        return -1
    if len(gens[0]) == 1:
        return gens[0][0] - 1
    best = -1
    for t0, t1, s in _slices(gens):
        sub = _max_degree_sliced(s)
        if sub >= 0:
            best = max(best, t1 - 1 + sub)
    return best


def max_standard_degree(I: MonomialIdeal) -> int:
    """Largest total degree of a monomial outside I (``-1`` for the unit ideal)."""
    _require_primary(I)
    return _max_degree_sliced(I.gens)


def quotient_length(big: MonomialIdeal, small: MonomialIdeal, cap: int = 10**6) -> tuple[int, int]:
    """Length of ``big / small`` for monomial ideals ``small`` inside ``big``.

    Returns ``(length, B)`` where ``B`` is the certified exponent with
    ``m^B * big`` contained in ``small``; every monomial of ``big`` outside
    ``small`` lies within degree ``B`` of a generator of ``big``, which
    bounds the counting box.
    """
    _check(big, small)
    if not is_subset(small, big):
        raise ValueError("quotient_length needs small to be contained in big")
    if big.is_zero():
        return 0, 0
    B = 0
    for g in big.gens:
        colon = _colon_monomial(small, g)
        if not is_m_primary(colon):
            raise NotPrimaryError(f"{big!r}/{small!r} does not have finite length")
        B = max(B, max_standard_degree(colon) + 1)
        if B > cap:
            raise NotPrimaryError(f"box bound {B} exceeds cap {cap}")
    d = big.d
    if B == 0:
        return 0, 0
    if math.comb(B + d - 1, d - 1) * len(big.gens) <= 50_000:
        certify = product(power(maximal_ideal(d), B), big)
        if not is_subset(certify, small):
            raise AssertionError("box certification failed")
    bounds = [max(g[k] for g in big.gens) + B for k in range(d)]
    box = MonomialIdeal._from_minimal(
        d, tuple(sorted(tuple(b if i == k else 0 for i in range(d)) for k, b in enumerate(bounds)))
    )
    return colength(ideal_sum(small, box)) - colength(ideal_sum(big, box)), B


def dimension(I: MonomialIdeal) -> int:
    """Krull dimension of R/I: d minus a minimum vertex cover of the supports.

    The zero ideal has dimension d; the unit ideal raises ValueError.
    """
    if I.is_unit():
        raise ValueError("R/R is the zero ring and has no dimension")
    if I.is_zero():
        return I.d
    supports = [frozenset(k for k, x in enumerate(g) if x) for g in I.gens]
    for size in range(I.d + 1):
        for cover in itertools.combinations(range(I.d), size):
            cs = set(cover)
            if all(s & cs for s in supports):
                return I.d - size
    raise AssertionError("unreachable")


class FacePrime:
    """Prime ideal generated by the variables indexed by ``support`` (0-based)."""

    __slots__ = ("d", "support")

    def __init__(self, d: int, support: Iterable[int]):
        support = tuple(sorted(set(int(k) for k in support)))
        if not support:
            raise ValueError("face prime needs a nonempty support")
        if support[0] < 0 or support[-1] >= d:
            raise ValueError(f"support {support} out of range for d = {d}")
        self.d = d
        self.support = support

    @property
    def height(self) -> int:
        return len(self.support)

    def dim(self) -> int:
        """Dimension of R/p."""
        return self.d - len(self.support)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(
            self.d, [tuple(int(i == k) for i in range(self.d)) for k in self.support]
        )

    def __eq__(self, other):
        return isinstance(other, FacePrime) and (self.d, self.support) == (other.d, other.support)

    def __hash__(self):
        return hash((self.d, self.support))

    def __lt__(self, other):
        return (self.d, self.support) < (other.d, other.support)

    def __repr__(self):
        names = ", ".join(f"x{k + 1}" for k in self.support)
        return f"FacePrime(({names}))"

    def to_json(self) -> dict:
        return {"d": self.d, "support": [k + 1 for k in self.support]}


def localize_at_face(I: MonomialIdeal, p: FacePrime) -> MonomialIdeal:
    """Image of I in the localization at p, as an ideal in the support variables."""
    if I.d != p.d:
        raise ValueError("dimension mismatch")
    e = len(p.support)
    if I.is_zero():
        return zero_ideal(e)
    return MonomialIdeal._from_minimal(e, _minimal(tuple(g[k] for k in p.support) for g in I.gens))


def newton_complement_volume(I: MonomialIdeal) -> Fraction:
    """Exact volume of the orthant minus the Newton polyhedron of I.

    With ``M`` the largest pure-power exponent, the Newton polyhedron meets the
    cube ``[0, M]^d`` in the hull of the generators with any subset of their
    coordinates raised to ``M``, so the complement has volume ``M^d`` minus
    that hull's volume.
    """
    from .polytope import convex_hull

    _require_primary(I)
    if I.is_unit():
        return Fraction(0)
    d = I.d
    M = max(_pure_power(I.gens, k) for k in range(d))
    pts = set()
    for g in I.gens:
        for mask in itertools.product((False, True), repeat=d):
            pts.add(tuple(M if m else x for x, m in zip(g, mask)))
    _, vol = convex_hull(pts)
    return Fraction(M) ** d - vol
