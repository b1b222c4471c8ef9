"""Command-line front end.

Exit status: 0 on success, 2 on invalid parameters or usage, 1 when an
internal consistency check fails.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from typing import Sequence

from cpdirac.bounds import bounds_report, sharpness_report
from cpdirac.core import (
    ConsistencyError,
    EmbeddingParams,
    FamilyIndex,
    ParameterError,
    require_odd_dimension,
)
from cpdirac.line_bundle import (
    enumerate_line_bundle,
    family_highest_weight,
    family_multiplicity,
    lower_bound,
    strands,
)
from cpdirac.normal import decompose_normal_spinor, enumerate_normal, lowest_eigenvalue, merge_line_bundles
from cpdirac.render import FORMATS, render_record, render_rows, render_spectrum
from cpdirac.weyl import weyl_dim

class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")

    def exit(self, status: int = 0, message: str | None = None):  # type: ignore[override]
        # --help
        raise UsageError(message or "") if status else _HelpRequested(self.format_help())


class _HelpRequested(Exception):
    pass


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cpdirac", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def leaf(p: argparse.ArgumentParser, *, n: bool = True) -> argparse.ArgumentParser:
        p.add_argument("--d", type=int, required=True, help="odd complex dimension of CP^d")
        if n:
            p.add_argument("--n", type=int, required=True, help="odd ambient dimension n > d")
        p.add_argument("--format", choices=FORMATS, default="table")
        return p

    spectrum = sub.add_parser("spectrum", help="enumerate a spectrum up to --max-eig")
    kinds = spectrum.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    lb = leaf(kinds.add_parser("line-bundle", help="twist by gamma_d^m"), n=False)
    lb.add_argument("--m", type=int, required=True, help="power of the tautological bundle")
    lb.add_argument("--max-eig", type=_nonneg, required=True)
    nb = leaf(kinds.add_parser("normal", help="twist by the normal spinor bundle"))
    nb.add_argument("--max-eig", type=_nonneg, required=True)

    leaf(sub.add_parser("lowest", help="lowest eigenvalue of the normal twist"))
    leaf(sub.add_parser("decompose", help="line-bundle splitting of the normal spinor bundle"))
    b = leaf(sub.add_parser("bounds", help="upper bound, mu and Kirchberg lower bound"))
    b.add_argument("--alpha-sq", type=Fraction, default=Fraction(1))
    leaf(sub.add_parser("sharpness", help="is the upper bound attained"))
    v = leaf(sub.add_parser("verify", help="closed forms against the Weyl formula"))
    v.add_argument("--max-l", type=_nonneg, required=True, help="steps above each lower bound")
    return parser


def _verify(params: EmbeddingParams, max_l: int, fmt: str) -> tuple[int, str]:
    d = params.d
    checked = 0
    for term_s, term in enumerate(decompose_normal_spinor(params)):
        m = term.power
        for family, r, eps in strands(d):
            lo = lower_bound(d, m, family, r, eps or 0)
            for l in range(lo, lo + max_l + 1):
                idx = FamilyIndex(family, l, r=r, epsilon=eps, s=term_s)
                try:
                    closed = family_multiplicity(d, m, idx)
                    oracle = weyl_dim(d, family_highest_weight(d, m, idx))
                except ConsistencyError as exc:
                    return 1, f"verify: FAILED at {idx.describe()} (m={m}): {exc}\n"
                if closed != oracle:
                    return 1, (
                        f"verify: FAILED at {idx.describe()} (m={m}): "
                        f"closed form {closed} != Weyl dimension {oracle}\n"
                    )
                checked += 1
    cutoff = 200
    if enumerate_normal(params, cutoff) != merge_line_bundles(params, cutoff):
        return 1, f"verify: FAILED substitution check below {cutoff}\n"
    record = {
        "d": d,
        "n": params.n,
        "oracle_cases": checked,
        "substitution_cutoff": cutoff,
        "status": "ok",
    }
    return 0, render_record(record, fmt, f"verification d={d} n={params.n}")


def _dispatch(args: argparse.Namespace) -> tuple[int, str]:
    fmt = args.format
    if args.command == "spectrum" and args.kind == "line-bundle":
        require_odd_dimension(args.d)
        return 0, render_spectrum(enumerate_line_bundle(args.d, args.m, args.max_eig), fmt)
    params = EmbeddingParams(args.d, args.n)
    if args.command == "spectrum":
        return 0, render_spectrum(enumerate_normal(params, args.max_eig), fmt)
    if args.command == "lowest":
        record = {"d": params.d, "n": params.n, "lowest": lowest_eigenvalue(params)}
        return 0, render_record(record, fmt, f"lowest eigenvalue d={params.d} n={params.n}")
    if args.command == "decompose":
        rows = [(s, t.power, t.multiplicity) for s, t in enumerate(decompose_normal_spinor(params))]
        return 0, render_rows(("s", "power", "multiplicity"), rows, fmt,
                              f"normal spinor bundle of CP^{params.d} in CP^{params.n}")
    if args.command == "bounds":
        report = bounds_report(params, args.alpha_sq)
        return 0, render_record(report, fmt, f"bounds d={params.d} n={params.n}")
    if args.command == "sharpness":
        report = sharpness_report(params)
        return 0, render_record(report, fmt, f"sharpness d={params.d} n={params.n}")
    return _verify(params, args.max_l, fmt)


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Parse ``argv`` and return ``(exit_code, output_text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _HelpRequested as help_text:
        return 0, str(help_text)
    except UsageError as exc:
        return 2, str(exc)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)
    try:
        return _dispatch(args)
    except ParameterError as exc:
        return 2, f"error: {exc}\n"
    except ArithmeticError as exc:
        return 1, f"internal consistency failure: {exc}\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    (sys.stdout if code == 0 else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
