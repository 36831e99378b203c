"""Command line front end.

Subcommands: ``classify``, ``enumerate``, ``conjugate`` and ``verify``.
Every command prints a report as text (default) or JSON (``--format json``).

Exit codes: 0 when the question was answered (including negative answers
such as "not periodic"), 1 when ``verify`` finds a failing check, 2 for
usage or parse errors.

Matrices are written row-major as ``a,b,c,d``; translations as ``x,y`` with
each coordinate an integer or ``p/q``.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from .characteristics import (
    CompleteCharacteristic,
    enumerate_general,
    is_admissible,
    kappa_index,
)
from .dynamics import (
    AffineTorusMap,
    complete_characteristic,
    conjugate_test,
    lower_period_set,
    map_period,
)
from .errors import NotPeriodic, OrientationReversing, TorusError
from .exactlin import Mat2, Vec2Q
from .glz import (
    batterson_class,
    has_unit_modulus_spectrum,
    oriented_class,
    period_of,
)
from .verify import run_checks

SCHEMA_VERSION = 1


def parse_matrix(text: str) -> Mat2:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"matrix needs four comma-separated integers, got {text!r}")
    try:
        entries = [int(p.strip()) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"matrix entries must be integers, got {text!r}") from None
    M = Mat2(*entries)
    if M.det() not in (1, -1):
        raise argparse.ArgumentTypeError(f"matrix {text} has determinant {M.det()}, expected +-1")
    return M


def parse_translation(text: str) -> Vec2Q:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"translation needs two comma-separated rationals, got {text!r}")
    try:
        return Vec2Q(*(Fraction(p.strip()) for p in parts))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"cannot parse translation {text!r}") from None


def _point(p) -> List[str]:
    return [str(p[0]), str(p[1])]


def _characteristic(kappa: CompleteCharacteristic) -> dict:
    j = kappa_index(kappa)
    out = {"label": f"κ{j}" if j is not None else None, "text": str(kappa)}
    out.update(kappa.to_dict())
    return out


def report(command: str, inputs: dict, results: dict, diagnostics: List[str]) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "diagnostics": diagnostics,
    }


# -- commands ----------------------------------------------------------------

def cmd_classify(matrix: Mat2, translation: Optional[Vec2Q] = None) -> dict:
    f = AffineTorusMap(matrix, translation or Vec2Q.of(0, 0))
    inputs = {"matrix": list(matrix.entries()), "translation": _point(f.v)}
    diagnostics = []
    results = {
        "det": matrix.det(),
        "trace": matrix.trace(),
        "unit_modulus_spectrum": has_unit_modulus_spectrum(matrix),
    }
    matrix_period = period_of(matrix)
    n = map_period(f)
    results["matrix_period"] = matrix_period if matrix_period is not None else "non-periodic"
    results["period"] = n if n is not None else "non-periodic"
    if results["unit_modulus_spectrum"]:
        results["batterson_class"] = str(batterson_class(matrix))
    else:
        results["batterson_class"] = None
        diagnostics.append("hyperbolic: no Batterson class")
    results["oriented_class"] = str(oriented_class(matrix))
    results["homotopic_to_identity"] = matrix.is_identity()
    results["complete_characteristic"] = None
    results["orbits"] = []

    if n is None:
        diagnostics.append("non-periodic: no complete characteristic")
    elif matrix.det() == -1:
        diagnostics.append("orientation-reversing: out of classification scope")
    else:
        bset = lower_period_set(f)
        results["complete_characteristic"] = _characteristic(complete_characteristic(f))
        results["orbits"] = [
            {
                "points": [_point(p) for p in o.points],
                "n_i": o.n_i,
                "lambda_i": o.lambda_i,
                "delta_i": o.delta_i,
                "d_i": o.d_i,
            }
            for o in bset
        ]
        if not bset:
            diagnostics.append(f"free action: conjugate to the shift by 1/{n}")
    return report("classify", inputs, results, diagnostics)


def cmd_enumerate(genus: int, n_max: int, k_max: int, include_free: bool) -> dict:
    kappas = enumerate_general(genus, n_max, k_max)
    if not include_free:
        kappas = [k for k in kappas if not k.is_free]
    rows = []
    for k in kappas:
        row = _characteristic(k)
        row["modular_genus"] = is_admissible(k).genus
        rows.append(row)
    inputs = {"genus": genus, "max_period": n_max, "max_orbits": k_max, "include_free": include_free}
    return report("enumerate", inputs, {"count": len(rows), "characteristics": rows}, [])


def cmd_conjugate(f: AffineTorusMap, g: AffineTorusMap) -> dict:
    inputs = {
        "map1": {"matrix": list(f.A.entries()), "translation": _point(f.v)},
        "map2": {"matrix": list(g.A.entries()), "translation": _point(g.v)},
    }
    try:
        verdict = conjugate_test(f, g)
    except (NotPeriodic, OrientationReversing) as exc:
        return report("conjugate", inputs, {"conjugate": None, "reason": None}, [str(exc)])
    results = {
        "conjugate": verdict.conjugate,
        "reason": verdict.reason,
        "characteristic1": _characteristic(verdict.first),
        "characteristic2": _characteristic(verdict.second),
    }
    return report("conjugate", inputs, results, [])


def cmd_verify() -> dict:
    checks = run_checks()
    passed = sum(c.passed for c in checks)
    results = {
        "passed": passed,
        "total": len(checks),
        "all_passed": passed == len(checks),
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
    }
    diagnostics = [f"FAILED: {c.name}: {c.detail}" for c in checks if not c.passed]
    return report("verify", {}, results, diagnostics)


# -- rendering ---------------------------------------------------------------

def _render_text(value, indent=0) -> List[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key, item in value.items():
            nested = isinstance(item, dict) or (
                isinstance(item, list) and any(isinstance(i, (dict, list)) for i in item))
            if nested and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                sub = _render_text(item, indent + 1)
                sub[0] = pad + "- " + sub[0].lstrip()
                lines.extend(sub)
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(pad + _scalar(value))
    return lines


def _scalar(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{}"
    return str(value)


def render(rep: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep, indent=2, ensure_ascii=False)
    return "\n".join(_render_text(rep))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="periodic-torus",
        description="Classify periodic maps of the 2-torus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("classify", help="period, classes and characteristic of x -> Ax + v")
    p.add_argument("--matrix", type=parse_matrix, required=True, metavar="A,B,C,D")
    p.add_argument("--translation", type=parse_translation, default=None, metavar="X,Y")
    add_format(p)

    p = sub.add_parser("enumerate", help="list admissible complete characteristics")
    p.add_argument("--genus", type=int, default=1)
    p.add_argument("--max-period", type=int, default=12)
    p.add_argument("--max-orbits", type=int, default=6)
    p.add_argument("--include-free", action="store_true")
    add_format(p)

    p = sub.add_parser("conjugate", help="decide orientation preserving conjugacy of two maps")
    p.add_argument("--matrix1", type=parse_matrix, required=True, metavar="A,B,C,D")
    p.add_argument("--translation1", type=parse_translation, default=None, metavar="X,Y")
    p.add_argument("--matrix2", type=parse_matrix, required=True, metavar="A,B,C,D")
    p.add_argument("--translation2", type=parse_translation, default=None, metavar="X,Y")
    add_format(p)

    p = sub.add_parser("verify", help="recompute the classification and check it")
    add_format(p)
    return parser


_VALUE_OPTIONS = {"--matrix", "--translation", "--matrix1", "--translation1", "--matrix2", "--translation2"}


def _attach_negative_values(argv: List[str]) -> List[str]:
    # argparse takes "-1,0,0,-1" for an option flag; glue it to its option instead
    out = []
    it = iter(argv)
    for token in it:
        if token in _VALUE_OPTIONS:
            value = next(it, None)
            out.append(token if value is None else f"{token}={value}")
        else:
            out.append(token)
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_attach_negative_values(sys.argv[1:] if argv is None else list(argv)))
    zero = Vec2Q.of(0, 0)
    try:
        if args.command == "classify":
            rep = cmd_classify(args.matrix, args.translation)
        elif args.command == "enumerate":
            if args.genus < 0 or args.max_period < 1 or args.max_orbits < 0:
                parser.error("need --genus >= 0, --max-period >= 1, --max-orbits >= 0")
            rep = cmd_enumerate(args.genus, args.max_period, args.max_orbits, args.include_free)
        elif args.command == "conjugate":
            rep = cmd_conjugate(
                AffineTorusMap(args.matrix1, args.translation1 or zero),
                AffineTorusMap(args.matrix2, args.translation2 or zero),
            )
        else:
            rep = cmd_verify()
    except TorusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(rep, args.format))
    for line in rep["diagnostics"]:
        print(line, file=sys.stderr)
    if args.command == "verify" and not rep["results"]["all_passed"]:
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
