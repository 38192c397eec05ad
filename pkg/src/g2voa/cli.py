"""Command line interface.

Exit codes: 0 success, 1 mathematical failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import reference
from .rootsys import DomainError, FiniteWeight

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
_VALUE_FLAGS = ("--level", "--mu", "--flip-sign")


class UsageError(Exception):
    pass


def _level(text: str) -> Fraction:
    try:
        k = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if k not in reference.LEVELS:
        raise argparse.ArgumentTypeError(f"unsupported level {text}; choose one of -5/3, -4/3, -2/3")
    return k


def _mu(text: str) -> FiniteWeight:
    try:
        a, b = text.split(",")
        return FiniteWeight(Fraction(a), Fraction(b))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected p/q,p/q, got {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="g2voa", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, level=True):
        if level:
            p.add_argument("--level", type=_level, required=True, help="-5/3, -4/3 or -2/3")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write the report to this file instead of stdout")
        p.add_argument("--check", action="store_true", help="exit 1 on mismatch with built-in values")

    p = sub.add_parser("verify-lemmas", help="check every commutator and reduction identity")
    common(p, level=False)
    p.add_argument(
        "--flip-sign",
        metavar="X,Y",
        help="diagnostic: negate the structure constants of [X,Y] before the commutator checks",
    )
    common(sub.add_parser("singular", help="check that v_k is singular"))
    common(sub.add_parser("zhu-image", help="image of v_k in U(g)"))
    common(sub.add_parser("polynomials", help="zero-weight polynomials q, p1, p2"))
    common(sub.add_parser("classify", help="common zeros and admissibility"))
    p = sub.add_parser("admissible", help="admissibility of k Lambda0 + mu")
    common(p)
    p.add_argument("--mu", type=_mu, required=True, help="finite weight as p/q,p/q")
    return parser


# -- commands ------------------------------------------------------------------------

def cmd_verify_lemmas(args) -> tuple[int, object]:
    from .adjoint_polys import verify_appendix_b
    from .affine_pbw import AffineAlgebra
    from .chevalley import basis, build_structure_table
    from .singular import verify_appendix_a

    algebra = None
    if args.flip_sign:
        try:
            x, y = (basis(n.strip()) for n in args.flip_sign.split(","))
        except (KeyError, ValueError):
            raise UsageError(f"--flip-sign expects two basis names, got {args.flip_sign!r}") from None
        algebra = AffineAlgebra(build_structure_table().with_flipped_sign(x, y))
    results = verify_appendix_a(algebra)
    if algebra is None:
        results += verify_appendix_b()
    ok = all(r.passed for r in results)
    if args.format == "json":
        body = [r.to_json() for r in results]
    else:
        lines = [f"{'pass' if r.passed else 'FAIL'}  {r.identity}" for r in results]
        lines += [f"note  {r.identity}: {r.deviation['note']}" for r in results if r.deviation]
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} identities hold")
        body = "\n".join(lines)
    return (EXIT_OK if ok else EXIT_FAIL), body


def cmd_singular(args) -> tuple[int, object]:
    from .singular import SingularCandidate, check_singular

    cand = SingularCandidate.build(args.level)
    report = check_singular(cand)
    if args.format == "json":
        body = dict(report.to_json(), state=str(cand.state))
    else:
        lines = [f"level {args.level}", f"v_k = {cand.state}"]
        for key, res in report.residuals.items():
            lines.append(f"{key}: {res}")
        lines.append(f"singular: {str(report.is_singular).lower()}")
        body = "\n".join(lines)
    return (EXIT_OK if report.is_singular else EXIT_FAIL), body


def cmd_zhu_image(args) -> tuple[int, object]:
    from .adjoint_polys import zhu_candidate, zhu_generators

    image = zhu_candidate(args.level)
    code = EXIT_OK
    if args.check:
        gens = zhu_generators()
        expected = image.algebra.element()
        for c, word in reference.ZHU_FORMULAS[args.level]:
            term = image.algebra.one()
            for x in word:
                term = term * gens[x]
            expected = expected + c * term
        if expected != image:
            code = EXIT_FAIL
    if args.format == "json":
        body = {"level": str(args.level), "formula": reference.formula_text(args.level), "image": str(image)}
    else:
        body = f"[v_k] = {reference.formula_text(args.level)}\n      = {image}"
    return code, body


def cmd_polynomials(args) -> tuple[int, object]:
    from .adjoint_polys import ProportionalityError, build_zero_weight_polynomials

    try:
        result = build_zero_weight_polynomials(args.level)
    except ProportionalityError as exc:
        return EXIT_FAIL, str(exc)
    if args.format == "json":
        body = result.to_json()
    else:
        lines = [f"level {args.level}"]
        for key in ("q", "p1", "p2"):
            lines.append(f"{key} = {result.reference[key]}")
            lines.append(f"  computed = {result.constants[key]} * {key}")
        body = "\n".join(lines)
    return EXIT_OK, body


def _weight_json(m: FiniteWeight) -> dict:
    return {"mu10": str(m.mu10), "mu01": str(m.mu01)}


def cmd_classify(args) -> tuple[int, object]:
    from .adjoint_polys import build_zero_weight_polynomials
    from .classifier import check_admissible, dominant_integral_filter, level_weight, solve_common_zeros

    polys = build_zero_weight_polynomials(args.level).polys()
    zeros = solve_common_zeros(polys)
    ordered = zeros.sorted()
    dominant = sorted(dominant_integral_filter(ordered), key=lambda m: (m.mu10, m.mu01))
    admissible = [check_admissible(level_weight(args.level, m)).admissible for m in ordered]
    code = EXIT_OK
    if args.check and (
        zeros.flags
        or zeros.zeros != reference.EXPECTED_ZEROS[args.level]
        or set(dominant) != reference.EXPECTED_DOMINANT[args.level]
        or not all(admissible)
    ):
        code = EXIT_FAIL
    if args.format == "json":
        body = {
            "level": str(args.level),
            "zeros": [_weight_json(m) for m in ordered],
            "flags": list(zeros.flags),
            "dominant_integral": [_weight_json(m) for m in dominant],
            "admissible": admissible,
        }
    else:
        lines = [f"level {args.level}: {len(ordered)} common zeros"]
        lines += [f"  {m}  admissible: {str(a).lower()}" for m, a in zip(ordered, admissible)]
        lines.append("dominant integral: " + ", ".join(str(m) for m in dominant))
        lines += [f"flag: {f}" for f in zeros.flags]
        body = "\n".join(lines)
    return code, body


def cmd_admissible(args) -> tuple[int, object]:
    from .classifier import check_admissible, level_weight

    try:
        report = check_admissible(level_weight(args.level, args.mu))
    except DomainError as exc:
        return EXIT_FAIL, str(exc)
    code = EXIT_FAIL if args.check and not report.admissible else EXIT_OK
    if args.format == "json":
        body = {
            "level": str(args.level),
            "mu": _weight_json(args.mu),
            "admissible": report.admissible,
            "pairing_ok": report.pairing_ok,
            "span_ok": report.span_ok,
            "witness_violations": [
                {"root": str(g), "pairing": str(p)} for g, p in report.witness_violations
            ],
        }
    else:
        body = "\n".join([
            f"lambda = {args.level}*L0 + {args.mu}",
            f"admissible: {str(report.admissible).lower()}",
            f"pairing_ok: {str(report.pairing_ok).lower()}",
            f"span_ok: {str(report.span_ok).lower()}",
        ])
    return code, body


COMMANDS = {
    "verify-lemmas": cmd_verify_lemmas,
    "singular": cmd_singular,
    "zhu-image": cmd_zhu_image,
    "polynomials": cmd_polynomials,
    "classify": cmd_classify,
    "admissible": cmd_admissible,
}


def _join_values(argv: Sequence[str]) -> list[str]:
    """Glue ``--level -5/3`` into ``--level=-5/3`` so negative rationals parse."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_join_values(argv))
        code, body = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"g2voa: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    text = json.dumps(body, indent=2) if args.format == "json" else str(body)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
