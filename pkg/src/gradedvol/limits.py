"""Normalized sequences and two-point Richardson extrapolation of their limits."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

__all__ = ["LimitEstimate", "estimate_limit"]


@dataclass(frozen=True)
class LimitEstimate:
    """Exact samples ``raw(n)`` with ``normalized(n) = raw(n) * factor / n**exponent``.

    ``extrapolated`` removes the ``O(n**(exponent-1))`` term of ``raw`` using the
    two largest samples ``m < n``:
    ``(raw(n) - raw(m)) * factor / (n**exponent - m**exponent)``.
    """

    samples: tuple[tuple[int, Fraction], ...]
    normalized: tuple[tuple[int, Fraction], ...]
    extrapolated: Fraction
    error_proxy: Fraction
    exponent: int
    factor: Fraction
    reference: Optional[object] = None

    @property
    def last(self) -> Fraction:
        return self.normalized[-1][1]

    def rows(self) -> list[tuple[int, Fraction, Fraction]]:
        return [(n, raw, norm) for (n, raw), (_, norm) in zip(self.samples, self.normalized)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "raw", "normalized", "extrapolated", "error_proxy"])
        for n, raw, norm in self.rows():
            w.writerow([n, str(raw), str(norm), str(self.extrapolated), str(self.error_proxy)])
        return buf.getvalue()

    def to_json(self) -> dict:
        out = {
            "exponent": self.exponent,
            "factor": str(self.factor),
            "samples": [{"n": n, "raw": str(r), "normalized": str(v)} for n, r, v in self.rows()],
            "extrapolated": str(self.extrapolated),
            "error_proxy": str(self.error_proxy),
        }
        if self.reference is not None:
            out["reference"] = str(self.reference)
        return out


def estimate_limit(
    samples: Iterable[tuple[int, object]],
    exponent: int,
    factor=1,
    reference=None,
) -> LimitEstimate:
    """Build a :class:`LimitEstimate` from ``(n, raw)`` pairs (sorted, deduplicated)."""
    pts = sorted({int(n): Fraction(r) for n, r in samples}.items())
    if not pts:
        raise ValueError("no samples")
    if pts[0][0] <= 0:
        raise ValueError("sample indices must be positive")
    factor = Fraction(factor)
    norm = tuple((n, r * factor / n ** exponent) for n, r in pts)
    if len(pts) >= 2:
        (m, rm), (n, rn) = pts[-2], pts[-1]
        extra = (rn - rm) * factor / (n ** exponent - m ** exponent)
    else:
        extra = norm[-1][1]
    return LimitEstimate(
        samples=tuple(pts),
        normalized=norm,
        extrapolated=extra,
        error_proxy=abs(extra - norm[-1][1]),
        exponent=exponent,
        factor=factor,
        reference=reference,
    )


def linear_schedule(max_n: int, count: int = 10) -> list[int]:
    step = max(1, max_n // count)
    return sorted(set(range(step, max_n + 1, step)) | {max_n})


def schedule(kind: str, max_n: int) -> list[int]:
    """Default sample schedules: geometric ``..., max_n/4, max_n/2, max_n`` or linear."""
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    if kind == "geometric":
        out = []
        n = max_n
        while n >= 1 and len(out) < 8:
            out.append(n)
            n //= 2
        return sorted(set(out))
    if kind == "linear":
        return linear_schedule(max_n)
    raise ValueError(f"schedule: unknown kind {kind!r}")

