"""Exact arithmetic in real radical extensions of the rationals.

A :class:`RadicalNumber` is a finite sum ``a_0 + sum_r a_r * sqrt(r)`` where
every ``r`` is a squarefree integer >= 2 and every ``a_r`` is a
:class:`fractions.Fraction`.  Square roots of distinct squarefree integers are
linearly independent over Q, so this representation is canonical and equality
is a coefficientwise check.  Order is decided by outward-rounded integer
interval arithmetic with doubling precision.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Mapping, Union

__all__ = [
    "RadicalNumber",
    "WeightVector",
    "Number",
    "as_radical",
    "exact_ceil",
    "exact_floor",
    "parse_radical",
    "parse_rational",
    "rad_add",
    "rad_compare",
    "rad_mul",
    "rad_to_decimal",
    "squarefree_kernel",
]

Number = Union[int, Fraction, "RadicalNumber"]

_START_BITS = 64


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, an int, or a decimal string into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(str(text).strip())


def squarefree_kernel(n: int) -> tuple[int, int]:
    """Split ``n > 0`` as ``s**2 * k`` with ``k`` squarefree; return ``(s, k)``."""
    if n <= 0:
        raise ValueError("squarefree_kernel needs a positive integer")
    s, k = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            k *= p
        p += 1 if p == 2 else 2
    return s, k * n


def _is_squarefree(n: int) -> bool:
    return n >= 1 and squarefree_kernel(n)[0] == 1


@total_ordering
class RadicalNumber:
    """Immutable element of Q(sqrt(D_1), ..., sqrt(D_k)).

    ``terms`` maps a squarefree radicand to its rational coefficient; the
    radicand ``1`` holds the rational part.  Zero coefficients are dropped,
    which keeps the representation unique.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Fraction | int] | None = None):
        clean: dict[int, Fraction] = {}
        for r, c in (terms or {}).items():
            r = int(r)
            if not _is_squarefree(r):
                raise ValueError(f"radicand {r} is not a squarefree positive integer")
            c = Fraction(c)
            if c:
                clean[r] = clean.get(r, Fraction(0)) + c
        self._terms = {r: c for r, c in sorted(clean.items()) if c}
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> "RadicalNumber":
        obj = cls.__new__(cls)
        obj._terms = {r: terms[r] for r in sorted(terms) if terms[r]}
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, q) -> "RadicalNumber":
        return cls._raw({1: parse_rational(q)})

    @classmethod
    def sqrt(cls, n: int, coeff=1) -> "RadicalNumber":
        """``coeff * sqrt(n)`` for any positive integer ``n``."""
        s, k = squarefree_kernel(int(n))
        return cls._raw({k: parse_rational(coeff) * s})

    # accessors ------------------------------------------------------------
    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def basis(self) -> list[int]:
        """Radicands (>= 2) carrying a nonzero coefficient."""
        return [r for r in self._terms if r != 1]

    @property
    def rational_part(self) -> Fraction:
        return self._terms.get(1, Fraction(0))

    def is_rational(self) -> bool:
        return all(r == 1 for r in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for r, c in other._terms.items():
            out[r] = out.get(r, Fraction(0)) + c
        return RadicalNumber._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return RadicalNumber._raw({r: -c for r, c in self._terms.items()})

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RadicalNumber._raw({r: c * other for r, c in self._terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for r, a in self._terms.items():
            for s, b in other._terms.items():
                g = math.gcd(r, s)
                k = (r // g) * (s // g)
                out[k] = out.get(k, Fraction(0)) + a * b * g
        return RadicalNumber._raw(out)

    __rmul__ = __mul__

    def conjugate(self, p: int) -> "RadicalNumber":
        """Apply the automorphism sqrt(p) -> -sqrt(p) for a prime ``p``."""
        return RadicalNumber._raw(
            {r: (-c if r % p == 0 else c) for r, c in self._terms.items()}
        )

    def inverse(self) -> "RadicalNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num = RadicalNumber._raw({1: Fraction(1)})
        den = self
        # multiply by conjugates prime by prime until the denominator is rational
        while not den.is_rational():
            p = _smallest_prime_factor(max(den.basis))
            conj = den.conjugate(p)
            num = num * conj
            den = den * conj
        return num * (1 / den.rational_part)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    # order ----------------------------------------------------------------
    def sign(self) -> int:
        if not self._terms:
            return 0
        if self.is_rational():
            q = self._terms[1]
            return (q > 0) - (q < 0)
        bits = _START_BITS
        while True:
            lo, hi, _ = self._scaled_bounds(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def _scaled_bounds(self, bits: int) -> tuple[int, int, int]:
        """Integers ``lo <= x * L * 2**bits <= hi`` and the scale ``L * 2**bits``."""
        L = 1
        for c in self._terms.values():
            L = L * c.denominator // math.gcd(L, c.denominator)
        lo = hi = 0
        for r, c in self._terms.items():
            a = c.numerator * (L // c.denominator)
            if r == 1:
                v = a << bits
                lo += v
                hi += v
                continue
            s = math.isqrt(r << (2 * bits))
            if a > 0:
                lo += a * s
                hi += a * (s + 1)
            else:
                lo += a * (s + 1)
                hi += a * s
        return lo, hi, L << bits

    def interval(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        """Rational enclosure of width at most about ``2**-bits`` times the coefficient mass."""
        lo, hi, scale = self._scaled_bounds(bits)
        return Fraction(lo, scale), Fraction(hi, scale)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign() < 0

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.rational_part)
            else:
                self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __float__(self):
        return float(sum(float(c) * math.sqrt(r) for r, c in self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def floor(self) -> int:
        if self.is_rational():
            return math.floor(self.rational_part)
        bits = _START_BITS
        while True:
            lo, hi, scale = self._scaled_bounds(bits)
            if lo // scale == hi // scale:
                return lo // scale
            bits *= 2

    def ceil(self) -> int:
        return -((-self).floor())

    def __floor__(self):
        return self.floor()

    def __ceil__(self):
        return self.ceil()

    # formatting -----------------------------------------------------------
    def to_decimal(self, digits: int) -> str:
        return rad_to_decimal(self, digits)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for r, c in self._terms.items():
            if r == 1:
                parts.append(str(c))
                continue
            root = f"√{r}"
            if c == 1:
                parts.append(root)
            elif c == -1:
                parts.append("-" + root)
            elif c.denominator == 1:
                parts.append(f"{c.numerator}{root}")
            elif abs(c.numerator) == 1:
                parts.append(("-" if c < 0 else "") + f"{root}/{c.denominator}")
            else:
                parts.append(f"{c.numerator}{root}/{c.denominator}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"RadicalNumber({str(self)!r})"

    # serialization --------------------------------------------------------
    def to_json(self) -> dict:
        out = {"rat": str(self.rational_part)}
        out["terms"] = [
            {"radicand": r, "coeff": str(c)} for r, c in self._terms.items() if r != 1
        ]
        return out

    @classmethod
    def from_json(cls, obj) -> "RadicalNumber":
        if isinstance(obj, (int, str)):
            return parse_radical(obj)
        x = cls.rational(parse_rational(obj.get("rat", "0")))
        for t in obj.get("terms", []):
            x = x + cls.sqrt(int(t["radicand"]), parse_rational(t.get("coeff", "1")))
        return x


_TERM = re.compile(
    r"""^(?P<coeff>\d+(?:/\d+)?)?\s*\*?\s*
        (?:(?:sqrt\((?P<r1>\d+)\)|\u221a(?P<r2>\d+)))?
        \s*(?:/\s*(?P<den>\d+))?$""",
    re.VERBOSE,
)


def parse_radical(text) -> RadicalNumber:
    """Parse sums like ``"1 + sqrt(2)"``, ``"3/2*sqrt(5)"``, ``"-√2/4"`` or a plain rational."""
    if isinstance(text, (int, Fraction)):
        return RadicalNumber.rational(text)
    src = str(text).replace(" ", "")
    if not src:
        raise ValueError("empty number")
    out = RadicalNumber()
    for sign, body in re.findall(r"([+-]?)([^+-]+)", src):
        m = _TERM.match(body)
        if not m or not body or "".join(re.findall(r"[+-]?[^+-]+", src)) != src:
            raise ValueError(f"cannot parse {text!r} as a sum of rational multiples of square roots")
        coeff = parse_rational(m["coeff"]) if m["coeff"] else Fraction(1)
        if m["den"]:
            coeff /= int(m["den"])
        if sign == "-":
            coeff = -coeff
        radicand = m["r1"] or m["r2"]
        if radicand is None and not m["coeff"]:
            raise ValueError(f"cannot parse {text!r}")
        out = out + (RadicalNumber.sqrt(int(radicand), coeff) if radicand else RadicalNumber.rational(coeff))
    return out


def _smallest_prime_factor(n: int) -> int:
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def _coerce(x) -> RadicalNumber:
    if isinstance(x, RadicalNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return RadicalNumber._raw({1: Fraction(x)})
    return NotImplemented


def as_radical(x) -> RadicalNumber:
    if isinstance(x, RadicalNumber):
        return x
    return RadicalNumber.rational(parse_rational(x))


def rad_add(a: RadicalNumber, b: RadicalNumber) -> RadicalNumber:
    return as_radical(a) + as_radical(b)


def rad_mul(a: RadicalNumber, b: RadicalNumber) -> RadicalNumber:
    return as_radical(a) * as_radical(b)


def rad_compare(a, b) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to, or greater than ``b``."""
    return (as_radical(a) - as_radical(b)).sign()


def exact_floor(x) -> int:
    if isinstance(x, RadicalNumber):
        return x.floor()
    return math.floor(x)


def exact_ceil(x) -> int:
    if isinstance(x, RadicalNumber):
        return x.ceil()
    return math.ceil(x)


def rad_to_decimal(a, digits: int, with_direction: bool = False):
    """Decimal string for ``a`` with absolute error below ``10**-digits``.

    The magnitude is truncated, so the string is exact or lies strictly
    between zero and ``a``.  With ``with_direction`` the pair
    ``(text, "exact" | "truncated")`` is returned.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    a = as_radical(a)
    neg = a.sign() < 0
    scaled = abs_value(a) * (10 ** digits)
    whole = scaled.floor()
    exact = scaled.is_rational() and scaled.rational_part == whole
    text = str(whole).rjust(digits + 1, "0")
    text = f"{text[:-digits]}.{text[-digits:]}"
    if neg:
        text = "-" + text
    if with_direction:
        return text, "exact" if exact else "truncated"
    return text


def abs_value(a: RadicalNumber) -> RadicalNumber:
    return -a if a.sign() < 0 else a


class WeightVector:
    """Weights ``lambda_1, ..., lambda_d`` of a monomial valuation.

    Every entry must be at least 1.  With ``strict`` the entries must also be
    linearly independent over Q, which makes the valuation of a monomial
    determine its exponent.
    """

    def __init__(self, entries: Iterable, strict: bool = True):
        self.entries = tuple(as_radical(e) for e in entries)
        self.strict = strict
        if not self.entries:
            raise ValueError("weight vector must be nonempty")
        for k, e in enumerate(self.entries):
            if e < 1:
                raise ValueError(f"weight {k} = {e} is smaller than 1")
        if strict and not rationally_independent(self.entries):
            raise ValueError("weights are not linearly independent over Q")

    @property
    def d(self) -> int:
        return len(self.entries)

    def value(self, v) -> RadicalNumber:
        """Valuation of the monomial with exponent ``v``."""
        out: dict[int, Fraction] = {}
        for n, lam in zip(v, self.entries):
            if n:
                for r, c in lam._terms.items():
                    out[r] = out.get(r, Fraction(0)) + n * c
        return RadicalNumber._raw(out)

    def max_ceil(self) -> int:
        return max(e.ceil() for e in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __eq__(self, other):
        return isinstance(other, WeightVector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"WeightVector([{', '.join(str(e) for e in self.entries)}])"

    def to_json(self) -> list:
        return [e.to_json() for e in self.entries]

    @classmethod
    def from_json(cls, obj, strict: bool = True) -> "WeightVector":
        return cls([RadicalNumber.from_json(e) for e in obj], strict=strict)


def rationally_independent(values: Iterable[RadicalNumber]) -> bool:
    """Whether the given radical numbers are linearly independent over Q."""
    values = [as_radical(v) for v in values]
    basis = sorted({r for v in values for r in v._terms})
    rows = [[v._terms.get(r, Fraction(0)) for r in basis] for v in values]
    return _rank(rows) == len(values)


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank
