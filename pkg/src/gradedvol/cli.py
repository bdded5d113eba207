"""Command line front end.

Reads a JSON family description, runs one computation and writes a CSV or
JSON table plus a one-line summary.  Errors are reported on stderr as a single
``key=value`` line:

    exit 2  invalid input (names the offending field)
    exit 3  computation error (names the sample index n when there is one)
    exit 4  resource cap exceeded
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import asymptotics as asym
from .arith import rad_to_decimal
from .checks import SUITES, run_suite
from .families import (
    GradedFamily,
    Powers,
    StaircaseRule,
    SymbolicPowers,
    ValuationIdeals,
    family_constants,
    family_from_json,
)
from .limits import LimitEstimate, estimate_limit, schedule
from .monomial import FacePrime, MonomialIdeal, NotPrimaryError, colength, is_m_primary
from .okounkov import AMBIENT, FAMILY, body, build_semigroup, check_conditions, density_trend

COMMANDS = ("table", "volume", "multiplicity", "okounkov", "epsilon", "symbolic", "additivity", "phi", "check")


class InputError(Exception):
    def __init__(self, field: str, message: str):
        super().__init__(message)
        self.field = field


def _fail(code: int, kind: str, message: str, **extra) -> int:
    parts = [f"error={kind}"] + [f"{k}={v}" for k, v in extra.items()]
    parts.append("message=" + json.dumps(" ".join(str(message).split()), ensure_ascii=False))
    print(" ".join(parts), file=sys.stderr)
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gradedvol", description=__doc__.split("\n\n")[0])
    p.add_argument("--spec", help="family JSON: a file path or an inline JSON object")
    p.add_argument("--command", choices=COMMANDS, required=True)
    p.add_argument("--max-n", type=int, default=100)
    p.add_argument("--schedule", choices=("geometric", "linear"), default="geometric")
    p.add_argument("--truncation", type=int, default=20, help="semigroup truncation level N (okounkov)")
    p.add_argument("--prime", help="face prime as 1-based variable indices, e.g. 1 or 1,3 (symbolic)")
    p.add_argument("--suite", help="suite name for --command check: " + ", ".join(SUITES))
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--digits", type=int, default=6)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cap-seconds", type=int, default=None)
    return p


def load_family(spec: str | None) -> GradedFamily:
    if spec is None:
        raise InputError("spec", "--spec is required for this command")
    text = spec
    if not spec.lstrip().startswith("{"):
        path = Path(spec)
        if not path.is_file():
            raise InputError("spec", f"no such file: {spec}")
        text = path.read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("spec", f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise InputError("spec", "expected a JSON object")
    try:
        return family_from_json(obj)
    except KeyError as exc:
        raise InputError(str(exc.args[0]), f"missing field {exc.args[0]!r}") from None
    except (ValueError, TypeError) as exc:
        msg = str(exc)
        field = msg.split(":", 1)[0] if ":" in msg and " " not in msg.split(":", 1)[0] else "spec"
        raise InputError(field, msg) from None


def _decimal(x, digits: int) -> str:
    return rad_to_decimal(x, digits)


def _exact_and_decimal(x, digits: int) -> str:
    """Exact form, followed by a decimal when the decimal is only an approximation."""
    dec, how = rad_to_decimal(x, digits, with_direction=True)
    return str(x) if how == "exact" else f"{x} ≈ {dec}"


def _sup(d: int) -> str:
    return str(d).translate(str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹"))


def _colengths(F: GradedFamily, samples, threads: int) -> list[tuple[int, int]]:
    def one(n):
        I = F.ideal_at(n)
        if not is_m_primary(I):
            raise asym.SampleError(n, "I_n is not m-primary")
        return n, colength(I)

    if threads > 1:
        with concurrent.futures.ThreadPoolExecutor(threads) as pool:
            return list(pool.map(one, samples))
    return [one(n) for n in samples]


def _exact_volume(F: GradedFamily):
    """Closed-form vol(I_*) where one is known, else None."""
    if isinstance(F, (StaircaseRule, ValuationIdeals)):
        weights = F.coeffs if isinstance(F, StaircaseRule) else F.weights.entries
        return asym.threshold_covolume(weights) * math.factorial(F.d)
    if isinstance(F, Powers) and is_m_primary(F.ideal):
        return asym.multiplicity(F.ideal)
    return None


def _estimate_line(est: LimitEstimate, digits: int) -> str:
    (m, _), (n, _) = (est.samples[-2], est.samples[-1]) if len(est.samples) > 1 else (est.samples[-1],) * 2
    return f"extrapolated {_exact_and_decimal(est.extrapolated, digits)} from n={m},{n}"


def cmd_table(args, F) -> tuple[object, str]:
    seq = _colengths(F, schedule(args.schedule, args.max_n), args.threads)
    est = estimate_limit(seq, F.d, 1)
    return est, f"ℓ/n{_sup(F.d)} → {_exact_and_decimal(est.extrapolated, args.digits)} ({_estimate_line(est, args.digits)})"


def cmd_volume(args, F) -> tuple[object, str]:
    d = F.d
    seq = _colengths(F, schedule(args.schedule, args.max_n), args.threads)
    exact = _exact_volume(F)
    est = estimate_limit(seq, d, math.factorial(d), reference=exact)
    if exact is None:
        fit = asym.polynomial_fit_limit(seq, d, math.factorial(d))
        exact, how = (fit, "polynomial fit on the samples") if fit is not None else (est.extrapolated, None)
    else:
        how = "closed form"
    per = exact / math.factorial(d) if isinstance(exact, (Fraction, int)) else exact * Fraction(1, math.factorial(d))
    head = f"vol(I_*) = {_exact_and_decimal(exact, args.digits)} (ℓ/n{_sup(d)} → {_exact_and_decimal(per, args.digits)})"
    tail = f"; {how}; {_estimate_line(est, args.digits)}" if how else f"; {_estimate_line(est, args.digits)}"
    return est, head + tail


def _single_ideal(F: GradedFamily, command: str) -> MonomialIdeal:
    if isinstance(F, (Powers, SymbolicPowers)):
        return F.ideal
    raise InputError("kind", f"{command} needs a family of kind 'powers' or 'symbolic'")


def cmd_multiplicity(args, F) -> tuple[object, str]:
    I = _single_ideal(F, "multiplicity")
    if not is_m_primary(I):
        raise InputError("gens", "the ideal is not m-primary, so e(I) is undefined")
    e = asym.multiplicity(I)
    est = asym.multiplicity_trend(I, schedule(args.schedule, args.max_n))
    est = LimitEstimate(est.samples, est.normalized, est.extrapolated, est.error_proxy, est.exponent, est.factor, e)
    return est, f"e(I) = {_exact_and_decimal(e, args.digits)}"


def cmd_okounkov(args, F) -> tuple[object, str]:
    N = args.truncation
    if N < 2:
        raise InputError("truncation", "truncation must be >= 2")
    consts = family_constants(F)
    S = build_semigroup(F, consts, N, mode=FAMILY)
    A = build_semigroup(F, consts, N, mode=AMBIENT)
    cond = check_conditions(S)
    full, half, amb = body(S), body(S, upto=N // 2), body(A)
    levels = schedule(args.schedule, N)
    trend = density_trend(S, levels, with_body=False)
    report = {
        "constants": {"c": consts.c, "rho": consts.rho, "beta": consts.beta},
        "conditions": cond.to_json(),
        "body": full.to_json(),
        "body_half_truncation": {"truncation": half.truncation_level, "volume": str(half.volume)},
        "stability_gap": str(full.volume - half.volume),
        "ambient_body": amb.to_json(),
        "colength_limit": str(amb.volume - full.volume),
        "density": trend.to_json(),
    }
    summary = (
        f"vol(Δ(Γ)) = {_exact_and_decimal(full.volume, args.digits)} at N={N} "
        f"(N={N // 2}: {half.volume}); vol(Δ(Γ')) - vol(Δ(Γ)) = {amb.volume - full.volume}; "
        f"cone conditions {cond.cone1}/{cond.cone2}/{cond.cone3}"
    )
    return (trend if args.format == "csv" else report), summary


def cmd_epsilon(args, F) -> tuple[object, str]:
    I = _single_ideal(F, "epsilon")
    est = asym.epsilon(I, schedule(args.schedule, args.max_n))
    return est, f"ε(I) ≈ {_exact_and_decimal(est.extrapolated, args.digits)} ({_estimate_line(est, args.digits)})"


def _parse_prime(text: str | None, d: int) -> FacePrime:
    if not text:
        raise InputError("prime", "--prime is required, e.g. --prime 1")
    try:
        support = sorted({int(t) - 1 for t in text.split(",")})
    except ValueError:
        raise InputError("prime", f"cannot parse {text!r}") from None
    if not support or support[0] < 0 or support[-1] >= d:
        raise InputError("prime", f"indices must lie in 1..{d}")
    return FacePrime(d, tuple(support))


def cmd_symbolic(args, F) -> tuple[object, str]:
    if not isinstance(F, SymbolicPowers):
        raise InputError("kind", "symbolic needs a family of kind 'symbolic'")
    p = _parse_prime(args.prime, F.d)
    est = asym.symbolic_multiplicity(F.ideal, F.divisor, p, schedule(args.schedule, args.max_n))
    return est, f"symbolic multiplicity at {p.to_json()['support']} ≈ {_exact_and_decimal(est.extrapolated, args.digits)}"


def cmd_additivity(args, F) -> tuple[object, str]:
    rep = asym.additivity_check(F, schedule(args.schedule, args.max_n))
    summary = (
        f"lhs → {_exact_and_decimal(rep.lhs.extrapolated, args.digits)}, rhs → "
        f"{_exact_and_decimal(rep.rhs_limit, args.digits)}; s={rep.s}, "
        f"T={[q.to_json()['support'] for q in rep.T]}, A={[q.to_json()['support'] for q in rep.A]}"
    )
    return (rep.lhs if args.format == "csv" else rep.to_json()), summary


def cmd_phi(args, F) -> tuple[object, str]:
    if not isinstance(F, ValuationIdeals):
        raise InputError("kind", "phi needs a family of kind 'valuation'")
    w = F.weights
    exact = asym.threshold_covolume(w.entries)
    est = asym.phi_limit(w, schedule(args.schedule, args.max_n), verify=args.max_n <= 400)
    est = LimitEstimate(est.samples, est.normalized, est.extrapolated, est.error_proxy, est.exponent, est.factor, exact)
    scaled = exact * math.factorial(w.d)
    summary = (
        f"φ(n)/n{_sup(w.d)} → {_exact_and_decimal(exact, args.digits)} "
        f"(d!-normalized {_exact_and_decimal(scaled, args.digits)}); "
        f"last sample {_decimal(est.last, args.digits)}, {_estimate_line(est, args.digits)}"
    )
    return est, summary


HANDLERS = {
    "table": cmd_table,
    "volume": cmd_volume,
    "multiplicity": cmd_multiplicity,
    "okounkov": cmd_okounkov,
    "epsilon": cmd_epsilon,
    "symbolic": cmd_symbolic,
    "additivity": cmd_additivity,
    "phi": cmd_phi,
}


def _render(result, fmt: str) -> str:
    if isinstance(result, LimitEstimate):
        if fmt == "csv":
            return result.to_csv()
        result = result.to_json()
    return json.dumps(result, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _execute(args) -> tuple[int, str, str]:
    if args.command == "check":
        if args.suite not in SUITES:
            raise InputError("suite", f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
        res = run_suite(args.suite)
        return (0 if res.passed else 1), json.dumps(res.to_json(), indent=2) + "\n", res.summary()
    F = load_family(args.spec)
    result, summary = HANDLERS[args.command](args, F)
    return 0, _render(result, args.format), summary


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_n < 2:
        return _fail(2, "invalid-config", "max-n must be >= 2", field="max-n")
    if args.threads < 1:
        return _fail(2, "invalid-config", "threads must be >= 1", field="threads")
    if args.digits < 1:
        return _fail(2, "invalid-config", "digits must be >= 1", field="digits")
    try:
        if args.cap_seconds:
            pool = concurrent.futures.ThreadPoolExecutor(1)
            future = pool.submit(_execute, args)
            try:
                status, body_text, summary = future.result(timeout=args.cap_seconds)
            except concurrent.futures.TimeoutError:
                _fail(4, "resource-cap", f"time budget of {args.cap_seconds}s exceeded", cap_seconds=args.cap_seconds)
                sys.stderr.flush()
                os._exit(4)
            pool.shutdown(wait=False)
        else:
            status, body_text, summary = _execute(args)
    except InputError as exc:
        return _fail(2, "invalid-spec", exc, field=exc.field)
    except asym.SampleError as exc:
        return _fail(3, "computation", exc, n=exc.n)
    except (NotPrimaryError, asym.DimensionNotStable, AssertionError, IndexError, ValueError, TypeError) as exc:
        return _fail(3, "computation", exc)
    except (MemoryError, OverflowError, RecursionError) as exc:
        return _fail(4, "resource-cap", exc or type(exc).__name__)
    if args.out:
        Path(args.out).write_text(body_text, newline="")
    else:
        sys.stdout.write(body_text)
    # keep stdout clean for piping when the table itself goes there
    print(summary, file=sys.stdout if args.out else sys.stderr)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
