"""Command-line front end.

Every command prints one JSON report (or a text rendering of the same report)
and exits 0 when all certificates pass, 1 when a certificate fails and 2 on
invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence

from .errors import BudgetExceeded, CertificateError
from .ffcurves import HyperCurve, curve_report
from .hilbert import SURFACE_E_POLYNOMIALS, SymbolicSurface, hilb_class, hilb_summands, partitions
from .kapranov import SymbolicCurve, lemma_divisibility_report, numerator
from .limits import limit_report, mssp_probe_curve
from .measures import MeasureSpec, apply_measure, e_numerator, hodge_numbers
from .polygons import equals, hodge_polygon, lies_above, newton_polygon
from .polys import IntPoly, t_to_list, uv_to_dict, uv_valuation
from .ring import mod_l_power, to_dict

__all__ = ["main", "build_parser", "run"]

EXIT_OK, EXIT_CERT, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(c) for c in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def parse_newton_points(text: str) -> list[tuple[int, object]]:
    """``"0:0,1:inf,2:1/2"`` -> [(0, 0), (1, None), (2, 1/2)]."""
    points = []
    for item in text.split(","):
        i, sep, v = item.partition(":")
        if not sep:
            raise InputError(f"newton point {item!r} must look like index:valuation")
        try:
            index = int(i)
            val = None if v.strip().lower() in ("inf", "infinity", "oo") else Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse newton point {item!r}")
        points.append((index, val))
    return points


def parse_surface(text: str) -> tuple[str, IntPoly]:
    """A preset name or an explicit ``"i,j,c;i,j,c;..."`` list of E-polynomial terms."""
    if text in SURFACE_E_POLYNOMIALS:
        return text, SURFACE_E_POLYNOMIALS[text]
    terms: dict[tuple[int, int], int] = {}
    for item in text.split(";"):
        parts = item.split(",")
        if len(parts) != 3:
            raise InputError(
                f"surface term {item!r} must be i,j,coeff (presets: {', '.join(SURFACE_E_POLYNOMIALS)})"
            )
        try:
            i, j, c = (int(x) for x in parts)
        except ValueError:
            raise InputError(f"cannot parse surface term {item!r}")
        if i < 0 or j < 0:
            raise InputError("surface term exponents must be non-negative")
        terms[(i, j)] = terms.get((i, j), 0) + c
    return "custom", IntPoly(2, terms)


# commands: each returns (report, certificates_ok)


def cmd_zeta_symbolic(args) -> tuple[dict, bool]:
    order = args.order if args.order is not None else 2 * args.genus + 12
    cert = numerator(SymbolicCurve(args.genus), order)
    return cert.to_dict(), cert.ok


def cmd_lemma(args) -> tuple[dict, bool]:
    report = lemma_divisibility_report(args.n, args.genus)
    return report.to_dict(), report.passed


def cmd_e_newton(args) -> tuple[dict, bool]:
    g = args.genus
    coeffs = e_numerator(g, 2 * g + 3)
    vals = [uv_valuation(c) for c in coeffs]
    newton = newton_polygon(list(enumerate(vals)))
    hodge = hodge_polygon([g, g])
    expected = all(v == max(0, n - g) for n, v in enumerate(vals))
    report = {
        "genus": g,
        "numerator": [uv_to_dict(c) for c in coeffs],
        "uv_valuations": [None if v == float("inf") else v for v in vals],
        "newton": newton.to_dict(),
        "hodge": hodge.to_dict(),
        "lies_above": lies_above(newton, hodge),
        "equals": equals(newton, hodge),
        "valuation_check": expected,
    }
    return report, report["equals"] and expected


def cmd_zeta_curve(args) -> tuple[dict, bool]:
    curve = HyperCurve(args.prime, args.ext, tuple(args.f))
    report = curve_report(curve)
    predictions = all(c["predicted"] == c["counted"] for c in report["prediction_checks"])
    ok = report["class_number_ok"] and report["functional_equation_ok"] and report["lies_above"] and predictions
    return report, ok


def cmd_hilb(args) -> tuple[dict, bool]:
    if args.n < 1:
        raise InputError("hilb needs --n >= 1")
    name, e = (None, None) if args.surface is None else parse_surface(args.surface)
    if e is not None:
        hodge_numbers(e)
    surface = SymbolicSurface("S", e)
    syms = surface.sym_classes(args.n)
    summands = hilb_summands(syms, args.n)
    total = hilb_class(syms, args.n)
    mod_l = not mod_l_power(total - surface.sym(args.n), 1)
    measures = None
    if e is not None:
        e_hilb = apply_measure(MeasureSpec.e_polynomial(), total)
        measures = {
            "e_polynomial": uv_to_dict(e_hilb),
            "poincare": t_to_list(apply_measure(MeasureSpec.poincare(), total)),
            "euler": apply_measure(MeasureSpec.euler(), total),
        }
    report = {
        "n": args.n,
        "surface": name,
        "partition_count": len(partitions(args.n)),
        "summands": [{"partition": list(p.parts), "term": to_dict(t)} for p, t in summands],
        "class": to_dict(total),
        "mod_l_check": mod_l,
        "measures": measures,
    }
    return report, mod_l and len(summands) == report["partition_count"]


def cmd_limit(args) -> tuple[dict, bool]:
    report = limit_report(SymbolicCurve(args.genus), args.precision)
    checks = report["checks"]
    return report, checks["matches_sym_limit"] and checks["class_number_identity"] and checks["geometric_tail"]


def cmd_mssp_probe(args) -> tuple[dict, bool]:
    report = mssp_probe_curve(SymbolicCurve(args.genus), args.depth)
    out = report.to_dict()
    ok = report.convergence_index is not None and out["checks"]["duality_matches_normalization"]
    return out, ok


def cmd_polygon(args) -> tuple[dict, bool]:
    newton = newton_polygon(parse_newton_points(args.newton))
    hodge = hodge_polygon(args.hodge)
    report = {
        "newton": newton.to_dict(),
        "hodge": hodge.to_dict(),
        "lies_above": lies_above(newton, hodge),
        "equals": equals(newton, hodge),
    }
    # a comparison, not a certificate: both answers are valid results
    return report, True


COMMANDS: dict[str, Callable] = {
    "zeta-symbolic": cmd_zeta_symbolic,
    "lemma": cmd_lemma,
    "e-newton": cmd_e_newton,
    "zeta-curve": cmd_zeta_curve,
    "hilb": cmd_hilb,
    "limit": cmd_limit,
    "mssp-probe": cmd_mssp_probe,
    "polygon": cmd_polygon,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="motivic", description="Exact motivic certificates.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeta-symbolic", parents=[common], help="rational numerator of the Kapranov series")
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--order", type=_positive, default=None, help="series order (default 2g+12)")

    p = sub.add_parser("lemma", parents=[common], help="stratum divisibility verifier")
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("e-newton", parents=[common], help="E-measure numerator and its uv-adic Newton polygon")
    p.add_argument("--genus", type=_positive, required=True)

    p = sub.add_parser("zeta-curve", parents=[common], help="point counts and zeta function of y^2 = f(x)")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--ext", type=_positive, default=1)
    p.add_argument("--f", type=_int_list, required=True, help="little-endian coefficients c0,c1,...")

    p = sub.add_parser("hilb", parents=[common], help="class of Hilb^n of a surface")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--surface",
        default=None,
        help=f"preset ({', '.join(SURFACE_E_POLYNOMIALS)}) or E-polynomial terms 'i,j,c;...'",
    )

    p = sub.add_parser("limit", parents=[common], help="L-adic limit of Sym^n C")
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--precision", type=_positive, required=True)

    p = sub.add_parser("mssp-probe", parents=[common], help="dimension-filtration probe of Sym^n C / L^n")
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--depth", type=_positive, required=True)

    p = sub.add_parser("polygon", parents=[common], help="compare a Newton polygon with a Hodge polygon")
    p.add_argument("--newton", required=True, help="points 'i:v,...' with v an integer, fraction or inf")
    p.add_argument("--hodge", type=_int_list, required=True, help="Hodge numbers h0,h1,...")
    return parser


def render_text(value, indent: int = 0) -> str:
    """Plain-text view of a JSON report."""
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key in sorted(value):
            v = value[key]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{key}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return pad + json.dumps(value)
        lines = []
        for v in value:
            if isinstance(v, list) and all(not isinstance(w, (dict, list)) for w in v):
                lines.append(f"{pad}- {json.dumps(v)}")
            elif isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(v)}")
        return "\n".join(lines)
    return pad + json.dumps(value)


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        report, ok = COMMANDS[args.command](args)
    except CertificateError as exc:
        print(f"certificate failed: {exc}", file=err)
        return EXIT_CERT
    except BudgetExceeded as exc:
        print(f"invalid input: {exc}", file=err)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"invalid input: {exc}", file=err)
        return EXIT_INPUT
    text = dumps(report) if args.format == "json" else render_text(report)
    print(text, file=out)
    if not ok:
        print("certificate failed: see report", file=err)
        return EXIT_CERT
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
