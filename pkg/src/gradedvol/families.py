"""Graded families of monomial ideals.

A graded family ``I_0 = R, I_1, I_2, ...`` satisfies ``I_i I_j ⊆ I_{i+j}``.
Five constructors are provided: powers of a fixed ideal, valuation ideals of a
monomial valuation, a linear staircase rule, generalized symbolic powers
``I^n : J^inf`` and an explicit finite list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .arith import WeightVector, exact_ceil, parse_rational
from .monomial import (
    MonomialIdeal,
    NotPrimaryError,
    is_m_primary,
    is_subset,
    max_standard_degree,
    power,
    product,
    saturate,
    unit_ideal,
)

__all__ = [
    "Custom",
    "FamilyConstants",
    "GradedFamily",
    "GradedReport",
    "Powers",
    "StaircaseRule",
    "SymbolicPowers",
    "ValuationIdeals",
    "family_constants",
    "family_from_json",
    "ideal_at",
    "threshold_ideal",
    "verify_graded",
]

CONSTANT_CAP = 10_000


def _least_multiple(w, rem) -> int:
    """Smallest integer ``t >= 0`` with ``t * w >= rem`` for ``w > 0``."""
    if rem <= 0:
        return 0
    t = max(0, math.ceil(float(rem) / float(w)))
    while t > 0 and (t - 1) * w >= rem:
        t -= 1
    while t * w < rem:
        t += 1
    return t


def threshold_ideal(weights: Sequence, n) -> MonomialIdeal:
    """Monomial ideal of exponents ``v`` with ``sum(v_k * w_k) >= n``.

    Weights must be positive exact numbers (int, Fraction or RadicalNumber).
    Candidates are produced by fixing all coordinates but the last and
    taking the least admissible last coordinate; the enumeration stops in a
    coordinate as soon as the threshold is already met.
    """
    d = len(weights)
    cands: list[tuple[int, ...]] = []

    def walk(k: int, prefix: tuple[int, ...], rem) -> None:
        if k == d - 1:
            cands.append(prefix + (_least_multiple(weights[k], rem),))
            return
        t = 0
        while True:
            walk(k + 1, prefix + (t,), rem)
            if rem <= 0:
                break
            rem = rem - weights[k]
            t += 1

    walk(0, (), n)
    return MonomialIdeal(d, cands)


class GradedFamily:
    """Base class; subclasses implement ``_compute(n)`` for ``n >= 1``."""

    d: int
    kind: str = "abstract"
    # True when I_i I_j ⊆ I_{i+j} follows from the construction itself
    graded_by_construction: bool = False

    def __post_init__(self):
        object.__setattr__(self, "_memo", {})

    def ideal_at(self, n: int) -> MonomialIdeal:
        if n < 0:
            raise ValueError("family index must be >= 0")
        if n == 0:
            return unit_ideal(self.d)
        memo = self._memo
        if n not in memo:
            memo[n] = self._compute(n)
        return memo[n]

    def _compute(self, n: int) -> MonomialIdeal:
        raise NotImplementedError

    @property
    def length(self) -> Optional[int]:
        """Number of available indices, or None for an infinite family."""
        return None

    def valuation_weights(self):
        """Weights ``lambda`` (all >= 1) of a valuation realizing the family, if any."""
        return None

    def rho(self) -> int:
        lam = self.valuation_weights()
        if lam is None:
            return 1
        return max(exact_ceil(x) for x in lam)

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class Powers(GradedFamily):
    ideal: MonomialIdeal
    kind: str = field(default="powers", init=False)
    graded_by_construction = True

    @property
    def d(self) -> int:
        return self.ideal.d

    def _compute(self, n):
        return power(self.ideal, n)

    def to_json(self):
        return {"d": self.d, "kind": "powers", "gens": [list(g) for g in self.ideal.gens]}


@dataclass(frozen=True, eq=False)
class ValuationIdeals(GradedFamily):
    """``I_n = {f : nu(f) >= n}`` for the monomial valuation with the given weights."""

    weights: WeightVector
    kind: str = field(default="valuation", init=False)
    graded_by_construction = True

    @property
    def d(self) -> int:
        return self.weights.d

    def _compute(self, n):
        return threshold_ideal(self.weights.entries, n)

    def valuation_weights(self):
        return self.weights.entries

    def to_json(self):
        return {"d": self.d, "kind": "valuation", "weights": self.weights.to_json(),
                "strict": self.weights.strict}


@dataclass(frozen=True, eq=False)
class StaircaseRule(GradedFamily):
    """``I_n`` generated by ``x^v`` with ``sum(a_k v_k) >= n``.

    With ``a = (1/(2*lam), 1)`` in two variables, ``colength(I_n) / n^2 -> lam``.
    """

    coeffs: tuple
    kind: str = field(default="staircase", init=False)
    graded_by_construction = True

    def __post_init__(self):
        coeffs = tuple(parse_rational(a) for a in self.coeffs)
        if not coeffs or min(coeffs) <= 0:
            raise ValueError("staircase coefficients must be positive")
        object.__setattr__(self, "coeffs", coeffs)
        super().__post_init__()

    @property
    def d(self) -> int:
        return len(self.coeffs)

    def _compute(self, n):
        return threshold_ideal(self.coeffs, n)

    def valuation_weights(self):
        # rescale so the smallest weight is 1; thresholds scale by the same factor
        lo = min(self.coeffs)
        return tuple(a / lo for a in self.coeffs)

    def to_json(self):
        return {"d": self.d, "kind": "staircase", "coeffs": [str(a) for a in self.coeffs]}


@dataclass(frozen=True, eq=False)
class SymbolicPowers(GradedFamily):
    """Generalized symbolic powers ``I_n(J) = I^n : J^inf``."""

    ideal: MonomialIdeal
    divisor: MonomialIdeal
    kind: str = field(default="symbolic", init=False)
    graded_by_construction = True

    def __post_init__(self):
        if self.ideal.d != self.divisor.d:
            raise ValueError("dimension mismatch")
        if self.divisor.is_zero():
            raise ValueError("saturation by the zero ideal")
        super().__post_init__()

    @property
    def d(self) -> int:
        return self.ideal.d

    def _compute(self, n):
        return saturate(power(self.ideal, n), self.divisor)

    def to_json(self):
        return {"d": self.d, "kind": "symbolic", "gens": [list(g) for g in self.ideal.gens],
                "J": [list(g) for g in self.divisor.gens]}


@dataclass(frozen=True, eq=False)
class Custom(GradedFamily):
    """Finite explicit prefix ``[I_0, I_1, ..., I_{L-1}]`` with ``I_0 = R``."""

    ideals: tuple
    kind: str = field(default="custom", init=False)

    def __post_init__(self):
        ideals = tuple(self.ideals)
        if not ideals or not ideals[0].is_unit():
            raise ValueError("custom family must start with the unit ideal")
        if len({I.d for I in ideals}) != 1:
            raise ValueError("custom family mixes dimensions")
        object.__setattr__(self, "ideals", ideals)
        super().__post_init__()

    @property
    def d(self) -> int:
        return self.ideals[0].d

    @property
    def length(self) -> int:
        return len(self.ideals)

    def ideal_at(self, n):
        if not 0 <= n < len(self.ideals):
            raise IndexError(f"custom family has no index {n} (length {len(self.ideals)})")
        return self.ideals[n]

    def to_json(self):
        return {"d": self.d, "kind": "custom", "ideals": [[list(g) for g in I.gens] for I in self.ideals]}


def ideal_at(F: GradedFamily, n: int) -> MonomialIdeal:
    return F.ideal_at(n)


@dataclass
class GradedReport:
    ok: bool
    first_violation: Optional[tuple[int, int]]
    checked_up_to: int

    def to_json(self):
        return {"ok": self.ok, "first_violation": self.first_violation, "checked_up_to": self.checked_up_to}


def verify_graded(F: GradedFamily, N: int) -> GradedReport:
    """Check ``I_i I_j ⊆ I_{i+j}`` for all ``1 <= i <= j`` with ``i + j <= N``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if F.length is not None:
        N = min(N, F.length - 1)
    for total in range(2, N + 1):
        target = F.ideal_at(total)
        for i in range(1, total // 2 + 1):
            if not is_subset(product(F.ideal_at(i), F.ideal_at(total - i)), target):
                return GradedReport(False, (i, total - i), N)
    return GradedReport(True, None, N)


@dataclass(frozen=True)
class FamilyConstants:
    """``c`` with ``m^c ⊆ I_1``; ``rho`` bounding the weights; ``beta = rho * c``.

    ``|v| >= beta * i`` then forces ``x^v`` into ``I_i``, which is what the
    semigroup truncation relies on.
    """

    c: int
    rho: int
    beta: int


def family_constants(F: GradedFamily, check_levels: int = 10) -> FamilyConstants:
    I1 = F.ideal_at(1) if (F.length is None or F.length > 1) else None
    if I1 is None or not is_m_primary(I1):
        raise NotPrimaryError("I_1 is not m-primary; no c with m^c ⊆ I_1")
    c = max(1, max_standard_degree(I1) + 1)
    if c > CONSTANT_CAP:
        raise OverflowError(f"constant c = {c} exceeds cap {CONSTANT_CAP}")
    rho = F.rho()
    beta = rho * c
    top = check_levels if F.length is None else min(check_levels, F.length - 1)
    lam = F.valuation_weights()
    for i in range(1, top + 1):
        Ii = F.ideal_at(i)
        # m^{c i} ⊆ I_i
        if not is_m_primary(Ii) or max_standard_degree(Ii) >= c * i:
            raise AssertionError(f"m^{c * i} is not contained in I_{i}")
        if lam is not None:
            # K_{beta i} ∩ R ⊆ m^{c i}: every generator of the value ideal has degree >= c i
            K = threshold_ideal(lam, beta * i)
            if min(sum(g) for g in K.gens) < c * i:
                raise AssertionError(f"K_{beta * i} is not inside m^{c * i}")
    return FamilyConstants(c=c, rho=rho, beta=beta)


def _ideal_json(d: int, gens) -> MonomialIdeal:
    return MonomialIdeal(d, [tuple(g) for g in gens])


def family_from_json(obj: dict) -> GradedFamily:
    """Build a family from its JSON description; raises KeyError/ValueError naming the field."""
    try:
        kind = obj["kind"]
    except KeyError:
        raise KeyError("kind") from None
    d = obj.get("d")
    if kind == "powers":
        I = MonomialIdeal.from_json(obj["ideal"]) if "ideal" in obj else _ideal_json(int(d), obj["gens"])
        return Powers(I)
    if kind == "valuation":
        w = WeightVector.from_json(obj["weights"], strict=bool(obj.get("strict", True)))
        if d is not None and int(d) != w.d:
            raise ValueError("d: does not match the number of weights")
        return ValuationIdeals(w)
    if kind == "staircase":
        F = StaircaseRule(tuple(obj["coeffs"]))
        if d is not None and int(d) != F.d:
            raise ValueError("d: does not match the number of coefficients")
        return F
    if kind == "symbolic":
        d = int(d)
        return SymbolicPowers(_ideal_json(d, obj["gens"]), _ideal_json(d, obj["J"]))
    if kind == "custom":
        d = int(d)
        return Custom(tuple(_ideal_json(d, gens) for gens in obj["ideals"]))
    raise ValueError(f"kind: unknown family kind {kind!r}")
