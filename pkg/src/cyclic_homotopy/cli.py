"""Command-line driver.

Exit codes: 0 every check passed, 1 a check failed or a hypothesis is unmet,
2 bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .base import CyclicHomotopyError, PreconditionError, TooLargeError
from .cohomology import ConsistencyError, norm_preimage, t_preimage, tate_quotients
from .freering import UniversalRing
from .operators import (
    GROUPS,
    NoInverseError,
    check_identities,
    check_special_case,
    op_N,
    op_T,
)
from .reports import Record, VerificationReport
from .rings import (
    DEFAULT_ENUM_CAP,
    DEFAULT_SEED,
    ElementParseError,
    RingSpec,
    SpecValidationError,
    build_ring,
    find_norm_one,
    sample,
    sample_pairs,
)

SYMBOLIC_CHECKS = ("eq1", "lemma1", "corollary1", "proposition")
RING_CHECKS = SYMBOLIC_CHECKS + ("homotopy",)
DEFAULT_MAX_N = 8
ECHO_MAX_N = 3


class UsageError(CyclicHomotopyError):
    pass


def _parse_checks(text: str | None, allowed) -> list[str]:
    if not text:
        return list(allowed)
    checks = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in checks if c not in allowed]
    if bad or not checks:
        raise UsageError(f"unknown checks {bad}; choose from {', '.join(allowed)}")
    return checks


def cmd_verify_universal(n_min: int, n_max: int, checks=None, max_n: int = DEFAULT_MAX_N):
    """Symbolic differences of each identity in the free ring, for each ``n``."""
    if not 2 <= n_min <= n_max <= max_n:
        raise UsageError(f"need 2 <= n-min <= n-max <= {max_n}, got {n_min}..{n_max}")
    checks = list(checks or SYMBOLIC_CHECKS)
    report = VerificationReport("verify-universal")
    for n in range(n_min, n_max + 1):
        U = UniversalRing(n)
        for group in checks:
            for name, (lhs, rhs) in GROUPS[group](U, U.x, U.a).items():
                diff = lhs - rhs
                info = {"difference": str(diff)}
                if n <= ECHO_MAX_N:
                    info = {"lhs": str(lhs), "rhs": str(rhs), **info}
                witness = None if diff.is_zero() else {"lhs": str(lhs), "rhs": str(rhs)}
                report.add(Record(f"{group}: {name}", f"U{n}", diff.is_zero(), witness=witness, info=info))
    return report


def _load_ring(spec_path, seed):
    try:
        spec = RingSpec.load(spec_path)
    except OSError as exc:
        raise UsageError(f"cannot read {spec_path}: {exc.strerror}") from None
    return spec, build_ring(spec, seed=seed)


def _parse(ring, text, what):
    try:
        return ring.parse_element(text)
    except ElementParseError as exc:
        raise UsageError(f"bad {what} literal: {exc}") from None


def cmd_ring_verify(spec_path, checks=None, x_literal=None, seed=DEFAULT_SEED, cap=DEFAULT_ENUM_CAP):
    spec, ring = _load_ring(spec_path, seed)
    checks = list(checks or RING_CHECKS)
    desc = ring.describe()
    report = VerificationReport("ring-verify", extra={"ring": desc})
    x = _parse(ring, x_literal, "x") if x_literal is not None else find_norm_one(ring, cap)
    if x_literal is None:
        report.extra["norm_one"] = "none" if x is None else ring.format_element(x)
    else:
        report.extra["x"] = ring.format_element(x)

    singles, single_policy = sample(ring, seed)
    pairs, pair_policy = sample_pairs(ring, seed)
    for group in checks:
        if group == "homotopy":
            if x is None:
                report.add(Record(group, desc, False, witness={"reason": "no norm-one element exists"}))
                continue
            Nx = op_N(ring, x)
            if Nx != ring.one():
                report.add(Record(group, desc, False, witness={
                    "reason": "N(x) is not 1", "x": ring.format_element(x), "N(x)": ring.format_element(Nx)}))
                continue
        if group == "eq1":
            points, policy = [(ring.zero(), a) for a in singles], single_policy
        elif x_literal is not None or group == "homotopy":
            points, policy = [(x, a) for a in singles], single_policy
        else:
            points, policy = pairs, pair_policy
        result = check_identities(ring, group, points)
        info = {"evaluations": result.checked}
        if group == "homotopy" or (x_literal is not None and group != "eq1"):
            info["x"] = ring.format_element(x)
        report.add(Record(group, desc, result.passed, policy, seed, result.witness, info))
    return report


def cmd_cohomology(spec_path, seed=DEFAULT_SEED, cap=DEFAULT_ENUM_CAP):
    spec, ring = _load_ring(spec_path, seed)
    desc = ring.describe()
    report = VerificationReport("cohomology", extra={"ring": desc})
    try:
        tate = tate_quotients(ring, cap)
    except TooLargeError as exc:
        report.add(Record("periodic complex", desc, False, witness={
            "reason": f"{exc}; raise --max-enumerate or use a smaller ring"}))
        return report
    except ConsistencyError as exc:
        report.add(Record("periodic complex", desc, False, witness={"reason": str(exc)}))
        return report
    report.add(Record("im N in ker T, im T in ker N", desc, True))
    even, odd = tate.even_quotient, tate.odd_quotient
    info = {
        "ker T / im N": even.to_dict(),
        "ker N / im T": odd.to_dict(),
        "norm-one element": tate.norm_one if tate.norm_one_found else "none",
        "degree 0 (informational)": tate.degree0,
    }
    if tate.norm_one_found:
        x = ring.parse_element(tate.norm_one)
        if op_N(ring, x) != ring.one():
            raise AssertionError("norm-one witness failed re-verification")
        verdict = tate.vanishes
    else:
        # nothing is claimed without a norm-one element
        verdict = True
    info["vanishing"] = "both quotients trivial" if tate.vanishes else "nontrivial"
    report.add(Record("norm-one element implies vanishing", desc, verdict, info=info))
    return report


def cmd_preimage(spec_path, mode, a_literal, x_literal=None, seed=DEFAULT_SEED, cap=DEFAULT_ENUM_CAP):
    spec, ring = _load_ring(spec_path, seed)
    desc = ring.describe()
    report = VerificationReport(f"preimage-{mode}", extra={"ring": desc})
    a = _parse(ring, a_literal, "a")
    x = _parse(ring, x_literal, "x") if x_literal is not None else find_norm_one(ring, cap)
    fmt = ring.format_element
    name = "N(x a) = a" if mode == "norm" else "T(h_x(a)) = T(h'_x(a)) = a"
    if x is None:
        report.add(Record(name, desc, False, witness={"reason": "no norm-one element exists", "a": fmt(a)}))
        return report
    try:
        if mode == "norm":
            pre = norm_preimage(ring, x, a)
            ok = op_N(ring, pre) == a
            info = {"x": fmt(x), "a": fmt(a), "preimage x a": fmt(pre), "N(preimage)": fmt(op_N(ring, pre))}
        else:
            h, hp = t_preimage(ring, x, a)
            ok = op_T(ring, h) == a and op_T(ring, hp) == a
            info = {"x": fmt(x), "a": fmt(a), "h_x(a)": fmt(h), "h'_x(a)": fmt(hp),
                    "T(h_x(a))": fmt(op_T(ring, h)), "T(h'_x(a))": fmt(op_T(ring, hp))}
    except PreconditionError as exc:
        report.add(Record(name, desc, False, witness={"reason": str(exc), "x": fmt(x), "a": fmt(a)}))
        return report
    report.add(Record(name, desc, ok, info=info, witness=None if ok else info))
    return report


def cmd_special_case(spec_path, seed=DEFAULT_SEED, cap=DEFAULT_ENUM_CAP):
    spec, ring = _load_ring(spec_path, seed)
    desc = ring.describe()
    report = VerificationReport("special-case", extra={"ring": desc})
    singles, policy = sample(ring, seed)
    try:
        result = check_special_case(ring, singles)
    except NoInverseError as exc:
        report.add(Record("closed forms at x = 1/n", desc, False, witness={"reason": str(exc)}))
        return report
    info = {"evaluations": result.checked, **result.detail}
    report.add(Record("closed forms at x = 1/n", desc, result.passed, policy, seed, result.witness, info))
    return report


def _global_flags(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=int, default=default(DEFAULT_SEED),
                        help=f"seed for random sampling (default {DEFAULT_SEED})")
    parser.add_argument("--format", choices=("text", "json"), default=default("text"))
    parser.add_argument("--max-enumerate", type=int, default=default(DEFAULT_ENUM_CAP), metavar="N",
                        help=f"largest ring to enumerate (default {DEFAULT_ENUM_CAP})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclic-homotopy",
        description="Verify homotopy formulas for cyclic group actions on rings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-universal", parents=[common], help="symbolic proofs in the free ring")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="upper bound accepted for --n-max")
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(SYMBOLIC_CHECKS)}")

    p = sub.add_parser("ring-verify", parents=[common], help="check identities on a finite ring")
    p.add_argument("spec")
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(RING_CHECKS)}")
    p.add_argument("--x", dest="x_literal", help="element x (default: a norm-one element)")

    p = sub.add_parser("cohomology", parents=[common], help="Tate quotients of the periodic complex")
    p.add_argument("spec")

    p = sub.add_parser("preimage", parents=[common], help="explicit preimages under N or T")
    p.add_argument("spec")
    p.add_argument("--mode", choices=("norm", "t"), required=True)
    p.add_argument("--a", dest="a_literal", required=True)
    p.add_argument("--x", dest="x_literal")

    p = sub.add_parser("special-case", parents=[common], help="closed forms at x = 1/n")
    p.add_argument("spec")
    return parser


def run(argv=None) -> tuple[int, str]:
    """Run the CLI; return ``(exit_code, output)``."""
    parser = build_parser()
    args = parser.parse_args(argv)
    seed, cap = args.seed, args.max_enumerate
    try:
        if args.command == "verify-universal":
            report = cmd_verify_universal(args.n_min, args.n_max, _parse_checks(args.checks, SYMBOLIC_CHECKS),
                                          args.max_n)
        elif args.command == "ring-verify":
            report = cmd_ring_verify(args.spec, _parse_checks(args.checks, RING_CHECKS), args.x_literal, seed, cap)
        elif args.command == "cohomology":
            report = cmd_cohomology(args.spec, seed, cap)
        elif args.command == "preimage":
            report = cmd_preimage(args.spec, args.mode, args.a_literal, args.x_literal, seed, cap)
        else:
            report = cmd_special_case(args.spec, seed, cap)
    except (UsageError, SpecValidationError) as exc:
        return 2, f"error: {exc}\n"
    return (0 if report.ok else 1), report.render(args.format)


def main(argv=None) -> int:
    try:
        code, out = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    stream = sys.stdout if code != 2 else sys.stderr
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
