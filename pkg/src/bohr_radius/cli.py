"""Command-line front end.

Subcommands:

* ``solve``  — one radius problem, one output record.
* ``table``  — recompute a whole reference table (cells solved concurrently,
  printed in table order) with reference values and anomaly flags attached.
* ``verify`` — run the cross-check suite; exit 0 only if every check passes.

Exit codes: 0 ok, 1 verification failure, 2 bad arguments, 3 no root in the
unit interval, 4 numeric failure (truncation/quadrature/cost guard).
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from .classes import AlphaConvex, ClassSpec, Janowski, SecondOrder, TypicallyReal
from .errors import (
    CostGuard,
    DomainError,
    NoRootInInterval,
    QuadratureFailure,
    TruncationFailure,
)
from .output import OutputRecord, record_for, records_to_csv, to_json
from .solver import (
    DEFAULT_TOL,
    Area,
    PhiSpec,
    PowerP,
    RadiusProblem,
    Refined,
    SeriesConfig,
    Variant,
    solve_radius,
)
from .tables import TableCell, table_cells
from .verify import DEFAULT_SEED, CheckReport, default_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_ARGS = 2
EXIT_NO_ROOT = 3
EXIT_NUMERIC = 4

CLASS_CHOICES = ("janowski", "alpha-convex", "second-order", "typically-real")
VARIANT_CHOICES = ("refined", "power", "area")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="bracket tolerance")
    common.add_argument(
        "--max-terms", type=int, default=SeriesConfig().max_terms, help="series term budget"
    )
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampling seed")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", type=Path, default=None, help="write output to this path")

    parser = argparse.ArgumentParser(
        prog="bohr-radius",
        description="Sharp Bohr radii for four classes of analytic functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", parents=[common], help="solve one radius problem")
    solve.add_argument("--class", dest="cls", required=True, choices=CLASS_CHOICES)
    solve.add_argument("--A", type=float, default=None, help="Janowski A (also the target of second-order)")
    solve.add_argument("--B", type=float, default=None, help="Janowski B")
    solve.add_argument("--alpha", type=float, default=None, help="alpha-convex parameter")
    solve.add_argument("--beta", type=float, default=None, help="second-order beta")
    solve.add_argument("--gamma", type=float, default=0.0, help="second-order gamma")
    solve.add_argument("--variant", required=True, choices=VARIANT_CHOICES)
    solve.add_argument("--phi", choices=[p.value for p in PhiSpec], default="zero")
    solve.add_argument("--p", type=float, default=None, help="exponent for the power variant")

    table = sub.add_parser("table", parents=[common], help="recompute a reference table")
    table.add_argument("which", type=int, choices=(1, 2, 3, 4, 5))

    verify = sub.add_parser("verify", parents=[common], help="run the cross-check suite")
    verify.add_argument("--samples", type=int, default=64, help="Schwarz sampling density")
    return parser


def _build_class(args: argparse.Namespace) -> ClassSpec:
    if args.cls == "janowski":
        if args.A is None:
            raise DomainError("janowski needs --A (and --B, default 0)")
        return Janowski(args.A, args.B if args.B is not None else 0.0)
    if args.cls == "alpha-convex":
        if args.alpha is None:
            raise DomainError("alpha-convex needs --alpha")
        return AlphaConvex(args.alpha)
    if args.cls == "second-order":
        if args.beta is None or args.A is None:
            raise DomainError("second-order needs --beta (and --gamma) plus --A/--B for the target")
        h = Janowski(args.A, args.B if args.B is not None else 0.0)
        return SecondOrder(args.beta, args.gamma, h)
    return TypicallyReal()


def _build_variant(args: argparse.Namespace) -> Variant:
    if args.variant == "power":
        if args.p is None:
            raise DomainError("the power variant needs --p")
        return PowerP(args.p)
    phi = PhiSpec(args.phi)
    return Refined(phi) if args.variant == "refined" else Area(phi)


def _config(args: argparse.Namespace) -> SeriesConfig:
    return SeriesConfig(max_terms=args.max_terms)


def _emit(text: str, out: Optional[Path]) -> None:
    if out is not None:
        out.write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _solve_cell(cell: TableCell, tol: float, cfg: SeriesConfig) -> OutputRecord:
    prob = cell.problem
    try:
        res = solve_radius(prob, tol, cfg)
    except (NoRootInInterval, TruncationFailure, QuadratureFailure, CostGuard) as exc:
        from .output import class_name, class_params, phi_or_p_label, variant_name

        return OutputRecord(
            cls=class_name(prob.cls),
            params=class_params(prob.cls),
            variant=variant_name(prob.variant),
            phi_or_p=phi_or_p_label(prob.variant),
            root=None,
            residual=None,
            iterations=0,
            paper_value=None,
            abs_diff=None,
            flag=f"error:{type(exc).__name__}",
        )
    return record_for(prob, res, cell.paper_value, cell.flag)


def _run_table(args: argparse.Namespace) -> list[OutputRecord]:
    cells = table_cells(args.which)
    cfg = _config(args)
    with ThreadPoolExecutor(max_workers=min(8, len(cells))) as pool:
        return list(pool.map(lambda c: _solve_cell(c, args.tol, cfg), cells))


def _reports_to_text(reports: Sequence[CheckReport], fmt: str) -> str:
    dicts = [
        {
            "name": r.name,
            "passed": r.passed,
            "max_abs_error": r.max_abs_error,
            "details": r.details,
        }
        for r in reports
    ]
    if fmt == "json":
        return to_json(dicts)
    import csv as _csv
    import io as _io

    buf = _io.StringIO()
    writer = _csv.writer(buf, lineterminator="\n")
    writer.writerow(("name", "passed", "max_abs_error", "details"))
    for d in dicts:
        writer.writerow(
            (d["name"], str(d["passed"]).lower(), repr(d["max_abs_error"]), d["details"])
        )
    return buf.getvalue()


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "solve":
            prob = RadiusProblem(_build_class(args), _build_variant(args))
            res = solve_radius(prob, args.tol, _config(args))
            _emit(to_json(record_for(prob, res).to_dict()), args.out)
            return EXIT_OK
        if args.command == "table":
            records = _run_table(args)
            if args.format == "csv":
                _emit(records_to_csv(records), args.out)
            else:
                _emit(to_json([r.to_dict() for r in records]), args.out)
            return EXIT_OK
        reports = default_suite(_config(args), seed=args.seed, samples=args.samples)
        _emit(_reports_to_text(reports, args.format), args.out)
        return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAILED
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    except NoRootInInterval as exc:
        print(f"no root: {exc}", file=sys.stderr)
        return EXIT_NO_ROOT
    except (TruncationFailure, QuadratureFailure, CostGuard) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
