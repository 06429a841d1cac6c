"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 supercritical
charge, 4 disagreement between shift routes.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import report
from .errors import InvalidState, SupercriticalCharge
from .magnetic import compute_shift, route_mismatch, shift_nonrel
from .quantum_numbers import DEFAULT_C, PhysicalParams, validate_state
from .spectrum import energy
from .wavefunctions import build_radial

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_SUPERCRITICAL, EXIT_ROUTES = 0, 1, 2, 3, 4
ROUTE_TOL = 1e-10
# lets "--kappa -1/2" parse as a value rather than an option
_NEGATIVE_VALUE = re.compile(r"^-(\d+/\d+|(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?)$")


class RouteDisagreement(Exception):
    pass


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    physics = argparse.ArgumentParser(add_help=False)
    physics.add_argument("--Z", type=_positive_float, default=1.0, help="nuclear charge (default 1)")
    physics.add_argument("--c", type=_positive_float, default=DEFAULT_C, help=f"speed of light in a.u. (default {DEFAULT_C})")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("csv", "json", "pretty"), default="pretty")

    parser = argparse.ArgumentParser(
        prog="dirac2d",
        description="Bound states and linear Paschen-Back shifts of the 2-D relativistic hydrogenic atom.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("levels", parents=[physics, fmt], help="energy levels, one row per (n, kappa)")
    p.add_argument("--n-max", type=_positive_int, default=3)

    p = sub.add_parser("zeeman", parents=[physics, fmt], help="first-order magnetic shift of one state")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--kappa", required=True, help="half-integer as a fraction, e.g. -1/2")
    p.add_argument("--mu", required=True, help="half-integer as a fraction, e.g. 3/2")
    p.add_argument("--route", choices=("closed", "quadrature", "both"), default="both")
    p.add_argument("--B", type=float, default=0.0, help="scaled field B/Z^2; energy column becomes E + B*E1")

    p = sub.add_parser("wavefunction", parents=[physics, fmt], help="sample normalized radial amplitudes")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--kappa", required=True)
    p.add_argument("--samples", type=_positive_int, default=50)
    p.add_argument("--r-max", type=_positive_float, default=20.0)

    p = sub.add_parser("tables", parents=[fmt], help="regenerate the level (t1) or shift (t2) table")
    p.add_argument("which", choices=("t1", "t2"))

    p = sub.add_parser("verify", parents=[physics], help="run the invariant suite")
    p.add_argument("--with-grid", action="store_true", help="add finite-difference oracle checks")
    p.add_argument("--tolerance-scale", type=float, default=1.0, help=argparse.SUPPRESS)
    for subparser in sub.choices.values():
        subparser._negative_number_matcher = _NEGATIVE_VALUE
    return parser


def _render(records: list[report.OutputRecord], fmt: str, pretty) -> str:
    if fmt == "json":
        return report.to_json(records)
    if fmt == "csv":
        return report.to_csv(records)
    return pretty(records)


def cmd_levels(args) -> str:
    params = PhysicalParams(args.Z, args.c)
    # every level must exist, so an unbound kappa is an error rather than a gap
    for q in report.level_states(args.n_max, None):
        energy(q, params)
    return _render(report.level_records(args.n_max, params), args.format, report.render_levels_text)


def cmd_zeeman(args) -> str:
    params = PhysicalParams(args.Z, args.c)
    qn = validate_state(args.n, args.kappa, args.mu)
    E = energy(qn, params).E
    if args.route == "both":
        closed = compute_shift(qn, params, "closed").E1
        quad = compute_shift(qn, params, "quadrature").E1
        if route_mismatch(closed, quad) > ROUTE_TOL:
            raise RouteDisagreement(f"closed {closed!r} vs quadrature {quad!r} for {qn}")
        e1 = closed
    else:
        e1 = compute_shift(qn, params, args.route).E1
    rec = report.make_record(qn, E + args.B * e1, e1, shift_nonrel(qn))
    return _render([rec], args.format, report.render_shift_text)


def cmd_wavefunction(args) -> str:
    params = PhysicalParams(args.Z, args.c)
    qn = validate_state(args.n, args.kappa, args.kappa)
    sol = build_radial(qn, params)
    rows = []
    for k in range(1, args.samples + 1):
        r = args.r_max * k / args.samples
        F, G = sol.F(r), sol.G(r)
        rows.append({"r": r, "F": F, "G": G, "density": F * F + sol.lam * G * G})
    if args.format == "json":
        return json.dumps(rows, indent=2) + "\n"
    if args.format == "csv":
        lines = ["r,F,G,density"] + [f"{x['r']!r},{x['F']!r},{x['G']!r},{x['density']!r}" for x in rows]
        return "\n".join(lines) + "\n"
    lines = [f"{'r':>10} {'F':>22} {'G':>22} {'density':>22}"]
    lines += [f"{x['r']:>10.4f} {x['F']:>22.14e} {x['G']:>22.14e} {x['density']:>22.14e}" for x in rows]
    return "\n".join(lines) + "\n"


def cmd_tables(args) -> str:
    params = PhysicalParams()
    if args.which == "t1":
        if args.format == "pretty":
            return report.render_table1(params)
        return _render(report.level_records(3, params), args.format, report.render_levels_text)
    if args.format == "pretty":
        return report.render_table2(params)
    return _render(report.shift_records(3, params), args.format, report.render_shift_text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            from .verify import run_all

            ok = run_all(PhysicalParams(args.Z, args.c), args.with_grid, args.tolerance_scale)
            return EXIT_OK if ok else EXIT_VERIFY
        handler = {
            "levels": cmd_levels,
            "zeeman": cmd_zeeman,
            "wavefunction": cmd_wavefunction,
            "tables": cmd_tables,
        }[args.command]
        sys.stdout.write(handler(args))
    except SupercriticalCharge as exc:
        print(f"dirac2d: supercritical charge: {exc}", file=sys.stderr)
        return EXIT_SUPERCRITICAL
    except InvalidState as exc:
        parser.error(str(exc))
    except RouteDisagreement as exc:
        print(f"dirac2d: shift routes disagree: {exc}", file=sys.stderr)
        return EXIT_ROUTES
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
