"""Command-line front end.

Commands:
  poly    construct a family polynomial (symmetric, or non-symmetric via --w)
  norm    closed-form squared norm of the monic family polynomial
  pair    inner product of two polynomials (canonical JSON input)
  raise   apply a raising operator to a family polynomial
  shift   apply a calibrated shift operator (level beta <-> beta+1)
  verify  run named verification suites (exit code 0 iff all cases pass)
  table   labels x norms x eigenvalues as CSV or JSON

Conventions: partitions are comma lists ("2,1"; empty string = empty
partition), permutations are one-line comma lists ("2,1,3"), rationals are
"p/q" strings.  Output is byte-deterministic for a fixed invocation and
seed.  HECKE_POLY_THREADS caps suite parallelism.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import operators as ops_module
from .errors import HeckePolyError
from .families import NonSymLabel, construct
from .parameters import FamilySpec, LAGUERRE
from .pairings import (
    ScaledRational,
    ct_pairing,
    gauss_pairing,
    laguerre_pairing,
    norm_formula,
)
from .polynomials import Polynomial
from .raising import raising_apply
from .shift import calibrate, shift_apply
from .verify import GridSpec, SUITES, reports_to_json, run_all


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise SystemExit(f"usage error: malformed partition {text!r}")
    return parts


def parse_permutation(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise SystemExit(f"usage error: malformed permutation {text!r}")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SystemExit(f"usage error: malformed rational {text!r}")


def _spec_from(args) -> FamilySpec:
    gamma = parse_rational(args.gamma) if args.gamma is not None else None
    if args.family == LAGUERRE and gamma is None:
        raise SystemExit("usage error: the laguerre family needs --gamma")
    try:
        return FamilySpec(args.family, args.n, args.beta, gamma)
    except ValueError as err:
        raise SystemExit(f"usage error: {err}")


@dataclass(frozen=True)
class RunConfig:
    """Canonical invocation record; parse(render(config)) == config."""

    command: str
    options: tuple[tuple[str, str], ...] = field(default_factory=tuple)

    def render(self) -> list[str]:
        argv = [self.command]
        for key, value in self.options:
            argv.extend([f"--{key}", value])
        return argv

    @classmethod
    def parse(cls, argv) -> "RunConfig":
        command = argv[0]
        pairs = []
        i = 1
        while i < len(argv):
            key = argv[i]
            if not key.startswith("--") or i + 1 >= len(argv):
                raise ValueError(f"malformed option list at {key!r}")
            pairs.append((key[2:], argv[i + 1]))
            i += 2
        return cls(command, tuple(pairs))


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _var_letter(family: str) -> str:
    return "u" if family == LAGUERRE else "x"


def cmd_poly(args) -> int:
    spec = _spec_from(args)
    lam = parse_partition(args.lam)
    if args.w is not None:
        w = parse_permutation(args.w)
        if len(lam) < len(w):
            lam = lam + (0,) * (len(w) - len(lam))
        label = NonSymLabel(lam, w)
    else:
        label = lam
    try:
        result = construct(label, spec, args.method)
    except (HeckePolyError, ValueError) as err:
        raise SystemExit(f"error: {err}")
    if args.format == "json":
        _emit(args, json.dumps(result.to_json_dict(), sort_keys=True, indent=2))
    else:
        lines = [
            result.poly.pretty(_var_letter(spec.family)),
            "eigenvalues: " + ", ".join(str(e) for e in result.eigenvalues),
            f"construction: {result.construction}",
        ]
        _emit(args, "\n".join(lines))
    return 0


def cmd_norm(args) -> int:
    spec = _spec_from(args)
    lam = parse_partition(args.lam)
    try:
        value = norm_formula(lam, spec, args.form)
    except (HeckePolyError, ValueError) as err:
        raise SystemExit(f"error: {err}")
    if args.format == "json":
        _emit(args, json.dumps(value.to_json_dict(), sort_keys=True, indent=2))
    else:
        _emit(args, value.render())
    return 0


def _read_poly(text: str) -> Polynomial:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    return Polynomial.from_json_dict(json.loads(text))


def cmd_pair(args) -> int:
    spec = _spec_from(args)
    f = _read_poly(args.f)
    g = _read_poly(args.g)
    try:
        if args.apply_f:
            f = ops_module.operator_from_string(args.apply_f, spec)(f)
        if args.apply_g:
            g = ops_module.operator_from_string(args.apply_g, spec)(g)
    except (HeckePolyError, ValueError, KeyError) as err:
        raise SystemExit(f"usage error: {err}")
    if spec.family == "jack":
        value = ScaledRational(ct_pairing(f, g, spec))
    elif spec.family == "hermite":
        value = gauss_pairing(f, g, spec)
    else:
        value = laguerre_pairing(f, g, spec)
    if args.format == "json":
        _emit(args, json.dumps(value.to_json_dict(), sort_keys=True, indent=2))
    else:
        _emit(args, value.render())
    return 0


def cmd_raise(args) -> int:
    spec = _spec_from(args)
    lam = parse_partition(args.lam)
    try:
        base = construct(lam, spec, args.method)
        constant, raised = raising_apply(args.m, base)
    except (HeckePolyError, ValueError) as err:
        raise SystemExit(f"error: {err}")
    if args.format == "json":
        payload = {
            "constant": str(constant),
            "result": raised.to_json_dict(),
        }
        _emit(args, json.dumps(payload, sort_keys=True, indent=2))
    else:
        _emit(
            args,
            f"constant: {constant}\nlabel: {list(raised.label)}\n"
            + raised.poly.pretty(_var_letter(spec.family)),
        )
    return 0


def cmd_shift(args) -> int:
    spec = _spec_from(args)
    lam = parse_partition(args.lam)
    try:
        base = construct(lam, spec, args.method)
        constant, shifted = shift_apply(args.direction, base)
    except (HeckePolyError, ValueError) as err:
        raise SystemExit(f"error: {err}")
    report = calibrate(
        spec.family,
        spec.n,
        spec.beta if args.direction == "G" else spec.beta - 1,
        spec.gamma,
    )
    if args.format == "json":
        payload = {
            "constant": str(constant),
            "calibration": report.to_json_dict(),
            "result": shifted.to_json_dict(),
        }
        _emit(args, json.dumps(payload, sort_keys=True, indent=2))
    else:
        _emit(
            args,
            f"constant: {constant}\nlabel: {list(shifted.label)} at beta="
            f"{shifted.spec.beta}\ncalibration: {json.dumps(report.to_json_dict(), sort_keys=True)}\n"
            + shifted.poly.pretty(_var_letter(spec.family)),
        )
    return 0


def _grid_from(args) -> GridSpec:
    return GridSpec(
        ns=tuple(int(v) for v in args.n_list.split(",")),
        betas=tuple(int(v) for v in args.beta_list.split(",")),
        gammas=tuple(parse_rational(v) for v in args.gamma_list.split(",")),
        max_weight=args.max_weight,
        degree=args.degree,
        seed=args.seed,
        pairs=args.pairs,
        rand_polys=args.rand_polys,
    )


def cmd_verify(args) -> int:
    grid = _grid_from(args)
    if args.suite and not args.all:
        names = [args.suite]
    else:
        names = list(SUITES)
    reports = run_all(grid, names)
    if args.format == "json":
        _emit(args, reports_to_json(reports))
    else:
        lines = []
        for rep in reports:
            status = "PASS" if rep.passed else "FAIL"
            lines.append(f"{rep.suite}: {status} ({rep.cases_passed}/{rep.cases_run})")
            for failure in rep.failures:
                lines.append(f"  counterexample: {json.dumps(failure, sort_keys=True)}")
        _emit(args, "\n".join(lines))
    return 0 if all(r.passed for r in reports) else 1


def cmd_table(args) -> int:
    spec = _spec_from(args)
    from .combinatorics import partitions_up_to

    rows = []
    for lam in partitions_up_to(args.max_weight, spec.n):
        poly = construct(lam, spec)
        rows.append(
            {
                "family": spec.family,
                "lambda": ",".join(str(p) for p in lam),
                "n": spec.n,
                "beta": spec.beta,
                "gamma": str(spec.gamma) if spec.gamma is not None else "",
                "norm_product": norm_formula(lam, spec, "product_form").render(),
                "norm_hook": norm_formula(lam, spec, "hook_form").render(),
                "eigenvalues": ";".join(str(e) for e in poly.eigenvalues),
            }
        )
    if args.format == "json":
        _emit(args, json.dumps(rows, sort_keys=True, indent=2))
    else:
        buffer = io.StringIO()
        writer = csv.DictWriter(
            buffer,
            fieldnames=[
                "family",
                "lambda",
                "n",
                "beta",
                "gamma",
                "norm_product",
                "norm_hook",
                "eigenvalues",
            ],
        )
        writer.writeheader()
        writer.writerows(rows)
        _emit(args, buffer.getvalue())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckepoly",
        description="Exact operator calculus for Jack, multivariable Hermite, "
        "and multivariable Laguerre polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def family_options(p, need_lambda=True):
        p.add_argument("--family", required=True, choices=["jack", "hermite", "laguerre"])
        if need_lambda:
            p.add_argument("--lambda", dest="lam", required=True,
                           help="partition as a comma list; '' for empty")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--beta", type=int, required=True)
        p.add_argument("--gamma", help="rational p/q (laguerre only)")
        p.add_argument("--format", default="pretty", choices=["pretty", "json"])
        p.add_argument("--output", help="write to a file instead of stdout")

    p_poly = sub.add_parser("poly", help="construct a family polynomial")
    family_options(p_poly)
    p_poly.add_argument("--w", help="one-line permutation for non-symmetric labels")
    p_poly.add_argument("--method", help="construction route (family-specific)")
    p_poly.set_defaults(fn=cmd_poly)

    p_norm = sub.add_parser("norm", help="closed-form squared norm")
    family_options(p_norm)
    p_norm.add_argument(
        "--form", default="product_form", choices=["product_form", "hook_form"]
    )
    p_norm.set_defaults(fn=cmd_norm)

    p_pair = sub.add_parser("pair", help="inner product of two polynomials")
    family_options(p_pair, need_lambda=False)
    p_pair.add_argument("--f", required=True, help="polynomial JSON or @file")
    p_pair.add_argument("--g", required=True, help="polynomial JSON or @file")
    p_pair.add_argument("--apply-f", help='named operator for f, e.g. "cherednikA:j=2"')
    p_pair.add_argument("--apply-g", help='named operator for g, e.g. "dunklA:j=1"')
    p_pair.set_defaults(fn=cmd_pair)

    p_raise = sub.add_parser("raise", help="apply a raising operator")
    family_options(p_raise)
    p_raise.add_argument("--m", type=int, required=True)
    p_raise.add_argument("--method", help="construction route for the input")
    p_raise.set_defaults(fn=cmd_raise)

    p_shift = sub.add_parser("shift", help="apply a calibrated shift operator")
    family_options(p_shift)
    p_shift.add_argument("--direction", required=True, choices=["G", "G_hat"])
    p_shift.add_argument("--method", help="construction route for the input")
    p_shift.set_defaults(fn=cmd_shift)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", choices=sorted(SUITES))
    p_verify.add_argument("--all", action="store_true",
                          help="run every suite (default when --suite is absent)")
    p_verify.add_argument("--n-list", default="2,3")
    p_verify.add_argument("--beta-list", default="0,1,2")
    p_verify.add_argument("--gamma-list", default="0,1/3,1/2")
    p_verify.add_argument("--max-weight", type=int, default=4)
    p_verify.add_argument("--degree", type=int, default=5)
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--pairs", type=int, default=20)
    p_verify.add_argument("--rand-polys", type=int, default=50)
    p_verify.add_argument("--format", default="pretty", choices=["pretty", "json"])
    p_verify.add_argument("--output")
    p_verify.set_defaults(fn=cmd_verify)

    p_table = sub.add_parser("table", help="labels x norms x eigenvalues")
    p_table.add_argument("--family", required=True,
                         choices=["jack", "hermite", "laguerre"])
    p_table.add_argument("--max-weight", type=int, required=True)
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--beta", type=int, required=True)
    p_table.add_argument("--gamma")
    p_table.add_argument("--format", default="csv", choices=["csv", "json"])
    p_table.add_argument("--output")
    p_table.set_defaults(fn=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
