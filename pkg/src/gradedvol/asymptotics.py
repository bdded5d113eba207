"""Asymptotic invariants of graded families of monomial ideals.

Every quantity here is an exact integer or rational at each sample; the limit
is estimated by :func:`gradedvol.limits.estimate_limit`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import WeightVector
from .families import Custom, GradedFamily, Powers, ValuationIdeals, _least_multiple
from .limits import LimitEstimate, estimate_limit
from .monomial import (
    FacePrime,
    MonomialIdeal,
    NotPrimaryError,
    colength,
    dimension,
    intersect,
    is_m_primary,
    localize_at_face,
    maximal_ideal,
    newton_complement_volume,
    power,
    quotient,
    quotient_length,
    saturate,
)

__all__ = [
    "AdditivityReport",
    "DimensionNotStable",
    "SampleError",
    "VolumeMultiplicityReport",
    "additivity_check",
    "colength_sequence",
    "comparison_constant",
    "epsilon",
    "epsilon_sequence",
    "face_primes",
    "hilbert_samuel_volume",
    "multiplicity",
    "multiplicity_trend",
    "phi_count",
    "phi_limit",
    "phi_sequence",
    "polynomial_fit_limit",
    "symbolic_multiplicity",
    "symbolic_sequence",
    "threshold_covolume",
    "volume",
    "volume_equals_multiplicity",
]


class SampleError(NotPrimaryError):
    """A sampled ideal fails a precondition; ``n`` names the offending index."""

    def __init__(self, n: int, message: str):
        super().__init__(f"n={n}: {message}")
        self.n = n


class DimensionNotStable(RuntimeError):
    pass


def colength_sequence(F: GradedFamily, samples: Iterable[int]) -> list[tuple[int, int]]:
    out = []
    for n in samples:
        I = F.ideal_at(n)
        if not is_m_primary(I):
            raise SampleError(n, "I_n is not m-primary")
        out.append((n, colength(I)))
    return out


def volume(F: GradedFamily, samples: Iterable[int]) -> LimitEstimate:
    """``colength(I_n) / (n^d / d!)`` and its extrapolated limit vol(I_*)."""
    seq = colength_sequence(F, samples)
    return estimate_limit(seq, F.d, math.factorial(F.d))


def multiplicity(I: MonomialIdeal) -> Fraction:
    """Hilbert-Samuel multiplicity of an m-primary monomial ideal, ``d! * covolume``."""
    if not is_m_primary(I):
        raise NotPrimaryError(f"{I!r} is not m-primary")
    return math.factorial(I.d) * newton_complement_volume(I)


def multiplicity_trend(I: MonomialIdeal, ks: Iterable[int]) -> LimitEstimate:
    """``colength(I^k) * d! / k^d``; converges to :func:`multiplicity`."""
    return volume(Powers(I), ks)


@dataclass
class VolumeMultiplicityReport:
    volume: LimitEstimate
    multiplicities: list[tuple[int, Fraction]]  # (p, e(I_p) / p^d)
    gaps: list[tuple[int, Fraction]]  # |volume.extrapolated - e(I_p)/p^d|
    monotone: bool

    def to_json(self) -> dict:
        return {
            "volume": self.volume.to_json(),
            "multiplicity_ratios": [{"p": p, "value": str(v)} for p, v in self.multiplicities],
            "gaps": [{"p": p, "gap": str(g)} for p, g in self.gaps],
            "monotone_gap": self.monotone,
        }


def volume_equals_multiplicity(
    F: GradedFamily, samples: Sequence[int], p_list: Sequence[int]
) -> VolumeMultiplicityReport:
    vol = volume(F, samples)
    ratios = []
    for p in p_list:
        Ip = F.ideal_at(p)
        if not is_m_primary(Ip):
            raise SampleError(p, "I_p is not m-primary")
        ratios.append((p, multiplicity(Ip) / Fraction(p) ** F.d))
    gaps = [(p, abs(vol.extrapolated - r)) for p, r in ratios]
    monotone = all(a[1] >= b[1] for a, b in zip(gaps, gaps[1:]))
    return VolumeMultiplicityReport(vol, ratios, gaps, monotone)


def epsilon_sequence(I: MonomialIdeal, samples: Iterable[int]) -> list[tuple[int, int]]:
    """``length((I^n)^sat / I^n)``, counted in a certified box."""
    if I.is_zero() or I.is_unit():
        raise ValueError("epsilon needs a proper nonzero ideal")
    m = maximal_ideal(I.d)
    out = []
    for n in samples:
        In = power(I, n)
        try:
            length, _ = quotient_length(saturate(In, m), In)
        except NotPrimaryError as exc:
            raise SampleError(n, str(exc)) from None
        out.append((n, length))
    return out


def epsilon(I: MonomialIdeal, samples: Iterable[int]) -> LimitEstimate:
    """Epsilon multiplicity: ``length(H^0_m(R/I^n)) / (n^d / d!)``."""
    return estimate_limit(epsilon_sequence(I, samples), I.d, math.factorial(I.d))


def symbolic_sequence(I: MonomialIdeal, J: MonomialIdeal, p: FacePrime, samples: Iterable[int]):
    """``length((I_n(J))_p / (I^n)_p)`` with ``I_n(J) = I^n : J^inf``."""
    out = []
    for n in samples:
        In = power(I, n)
        sym = saturate(In, J)
        big, small = localize_at_face(sym, p), localize_at_face(In, p)
        try:
            length, _ = quotient_length(big, small)
        except NotPrimaryError:
            raise SampleError(n, f"localized quotient at {p!r} is not of finite length") from None
        out.append((n, length))
    return out


def symbolic_multiplicity(
    I: MonomialIdeal, J: MonomialIdeal, p: FacePrime, samples: Sequence[int]
) -> LimitEstimate:
    """Localized length of ``I_n(J) / I^n`` at p, normalized by ``n^{d-s} / (d-s)!``
    where ``s = dim R/p``."""
    samples = sorted(samples)
    top = samples[-1]
    In = power(I, top)
    ann = quotient(In, saturate(In, J))
    if not ann.is_unit():
        s_mod = dimension(ann)
        if s_mod != p.dim():
            raise ValueError(f"dim R/p = {p.dim()} but I_n(J)/I^n has dimension {s_mod}")
    h = p.height
    return estimate_limit(symbolic_sequence(I, J, p, samples), h, math.factorial(h))


def face_primes(d: int, dim: int) -> list[FacePrime]:
    """All face primes with ``dim R/p = dim``."""
    return [FacePrime(d, s) for s in itertools.combinations(range(d), d - dim)]


@dataclass
class AdditivityReport:
    s: int
    T: list[FacePrime]
    A: list[FacePrime]
    lhs: LimitEstimate
    rhs_by_prime: dict = field(default_factory=dict)  # FacePrime -> LimitEstimate
    rhs: list[tuple[int, Fraction]] = field(default_factory=list)
    horizon: int = 0
    stable_from: int = 0

    @property
    def rhs_limit(self) -> Fraction:
        return sum((est.extrapolated for est in self.rhs_by_prime.values()), Fraction(0))

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "T": [p.to_json() for p in self.T],
            "A": [p.to_json() for p in self.A],
            "lhs": self.lhs.to_json(),
            "rhs": [{"n": n, "value": str(v)} for n, v in self.rhs],
            "rhs_limit": str(self.rhs_limit),
            "horizon": self.horizon,
            "stable_from": self.stable_from,
        }


def additivity_check(F: GradedFamily, samples: Sequence[int]) -> AdditivityReport:
    """Compare the normalized multiplicity of R/I_n along its top-dimensional
    components with the sum of localized multiplicity limits.

    "For arbitrarily large n" is read as "at the largest sampled n"; the
    report records that horizon.
    """
    if isinstance(F, Custom):
        raise TypeError("additivity_check needs an infinite family")
    samples = sorted(set(samples))
    if len(samples) < 2:
        raise ValueError("need at least two samples")
    dims = []
    for n in samples:
        I = F.ideal_at(n)
        if I.is_unit() or I.is_zero():
            raise SampleError(n, "I_n must be proper and nonzero")
        dims.append(dimension(I))
    s = dims[-1]
    if dims[-2] != s:
        raise DimensionNotStable(f"dim R/I_n = {dims} has not stabilized over the samples")
    if s >= F.d:
        raise ValueError("s(I_*) must be smaller than d")
    first = next(i for i in range(len(dims)) if all(x == s for x in dims[i:]))
    stable = samples[first:]
    top = samples[-1]
    T = [p for p in face_primes(F.d, s) if not localize_at_face(F.ideal_at(top), p).is_unit()]
    A = [q for q in T if all(is_m_primary(localize_at_face(F.ideal_at(n), q)) for n in stable)]
    h = F.d - s
    raw = []
    for n in stable:
        total = 0
        for p in T:
            loc = localize_at_face(F.ideal_at(n), p)
            if not is_m_primary(loc):
                raise SampleError(n, f"(R/I_n) localized at {p!r} is not of finite length")
            total += colength(loc)
        raw.append((n, total))
    lhs = estimate_limit(raw, h, math.factorial(h))
    rhs_by_prime = {}
    for q in A:
        seq = [(n, multiplicity(localize_at_face(F.ideal_at(n), q))) for n in stable]
        rhs_by_prime[q] = estimate_limit(seq, h, 1)
    rhs = []
    for i, n in enumerate(stable):
        rhs.append((n, sum((est.normalized[i][1] for est in rhs_by_prime.values()), Fraction(0))))
    return AdditivityReport(s, T, A, lhs, rhs_by_prime, rhs, top, stable[0])


def phi_count(w: WeightVector, n) -> int:
    """``#{v in N^d, v != 0 : v . lambda < n}``, the number of values of the
    valuation semigroup in the open interval (0, n)."""
    lam = w.entries
    d = len(lam)

    def count(k: int, rem) -> int:
        if rem <= 0:
            return 0
        if k == d - 1:
            return _least_multiple(lam[k], rem)
        total = 0
        while rem > 0:
            total += count(k + 1, rem)
            rem = rem - lam[k]
        return total

    return max(0, count(0, n) - 1)


def phi_sequence(w: WeightVector, samples: Iterable[int], verify: bool = True) -> list[tuple[int, int]]:
    """``phi(n)`` at each sample; with ``verify`` also checks
    ``phi(n) = colength(I_n) - 1`` for the valuation ideals ``I_n``."""
    if not w.strict:
        raise ValueError("weights are not rationally independent; values would collide")
    F = ValuationIdeals(w)
    out = []
    for n in samples:
        phi = phi_count(w, n)
        if verify:
            ell = colength(F.ideal_at(n))
            if phi != ell - 1:
                raise AssertionError(f"n={n}: phi = {phi} but colength - 1 = {ell - 1}")
        out.append((n, phi))
    return out


def phi_limit(w: WeightVector, samples: Iterable[int], verify: bool = False) -> LimitEstimate:
    """``phi(n) / n^d`` (no factorial); multiply by d! for the volume normalization."""
    return estimate_limit(phi_sequence(w, samples, verify=verify), w.d, 1)


def comparison_constant(I: MonomialIdeal, n_max: int, cap: int = 50) -> int:
    """Smallest c with ``m^{cn} ∩ I^n = m^{cn} ∩ (I^n)^sat`` for all ``1 <= n <= n_max``."""
    m = maximal_ideal(I.d)
    pows = [power(I, n) for n in range(1, n_max + 1)]
    sats = [saturate(P, m) for P in pows]
    for c in range(1, cap + 1):
        ok = True
        for n, (P, S) in enumerate(zip(pows, sats), start=1):
            mc = power(m, c * n)
            if intersect(mc, P) != intersect(mc, S):
                ok = False
                break
        if ok:
            return c
    raise OverflowError(f"no comparison constant up to {cap}")


def threshold_covolume(weights: Sequence):
    """Exact volume of ``{x >= 0 : x . w < 1}``, i.e. ``1 / (d! * prod(w))``.

    For a family ``I_n = (x^v : v . w >= n)`` this is the limit of
    ``colength(I_n) / n^d``; for valuation weights it is also the limit of
    ``phi(n) / n^d``.
    """
    prod = Fraction(math.factorial(len(weights)))
    for x in weights:
        prod = prod * x
    if isinstance(prod, Fraction):
        return 1 / prod
    return prod.inverse()


def hilbert_samuel_volume(I: MonomialIdeal, start: int = 0) -> Fraction:
    """``d!`` times the leading coefficient of the Hilbert-Samuel polynomial of I.

    The polynomial is interpolated through ``d + 1`` consecutive values of
    ``colength(I^n)`` beginning at ``n0``; ``n0`` is increased until one more
    value agrees with the interpolant.
    """
    if not is_m_primary(I):
        raise NotPrimaryError(f"{I!r} is not m-primary")
    d = I.d
    n0 = max(start, 1)
    while True:
        ns = list(range(n0, n0 + d + 2))
        vals = [colength(power(I, n)) for n in ns]
        coeffs = _interpolate(ns[:-1], vals[:-1])
        if _evaluate(coeffs, ns[-1]) == vals[-1]:
            return coeffs[-1] * math.factorial(d)
        n0 = 2 * n0


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Coefficients (low to high) of the interpolating polynomial, by divided differences."""
    n = len(xs)
    table = [Fraction(y) for y in ys]
    newton = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
        newton.append(table[0])
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]  # prod (x - xs[j]) for j < level, low to high
    for level in range(n):
        for i, b in enumerate(basis):
            coeffs[i] += newton[level] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= xs[level] * b
        basis = nxt
    return coeffs


def _evaluate(coeffs: Sequence[Fraction], x) -> Fraction:
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def polynomial_fit_limit(samples: Sequence[tuple[int, int]], degree: int, factor=1):
    """Limit of ``raw * factor / n^degree`` if the last ``degree + 2`` samples lie on one
    polynomial of degree ``degree``; ``None`` otherwise (a fit, not a proof)."""
    if len(samples) < degree + 2:
        return None
    tail = sorted(samples)[-(degree + 2):]
    xs = [n for n, _ in tail]
    ys = [r for _, r in tail]
    coeffs = _interpolate(xs[:-1], ys[:-1])
    if _evaluate(coeffs, xs[-1]) != ys[-1]:
        return None
    return coeffs[degree] * Fraction(factor) if len(coeffs) > degree else Fraction(0)
