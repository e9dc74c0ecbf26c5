"""Command-line front end.

Usage examples::

    orbidim chi o0c:2,3,7
    orbidim hitchin --n 6 o0b1d:2,3,7
    orbidim hitchin --exponents G2 o2
    orbidim rr --canonical-power 2 o0c:2,3,7
    orbidim rr --bundle '{"coarse_degree": -2, "isotropies": [1, 2, 6]}' o0c:2,3,7
    orbidim cover --action action.json o0c:2,2,2,2,2,2
    orbidim double-cover o0b1d:2,3,7
    orbidim presentation --text o0c:2,3,7
    orbidim rigid --n 4 --bounds genus=0,points=3..3,order=100,orientable --csv
    orbidim chi --batch signatures.txt --csv

Output is JSON by default (``--csv`` for CSV).  Rationals are written as
``"p/q"`` strings.  Exit codes: 0 success, 2 parse error, 3 domain error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional

from . import covers, groups, hitchin, picard, riemannroch
from .enumeration import Bounds, enumerate_rigid
from .exceptions import (BundleMismatchError, DomainError, InvalidActionError,
                         NonIntegralError, SignatureSyntaxError)
from .parsing import format_signature, parse_signature
from .signatures import (OrbifoldSignature, orbifold_euler_characteristic,
                         teichmuller_dimension)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    """Malformed option value or input file (exit code 2)."""


def rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# -- per-signature commands -------------------------------------------------

def _cmd_chi(sig, args):
    return {"chi": rational(orbifold_euler_characteristic(sig))}


def _cmd_teich(sig, args):
    return {"dim": teichmuller_dimension(sig)}


def _parse_profile(text: str) -> hitchin.ExponentProfile:
    text = text.strip()
    if text and text[0].isdigit():
        try:
            exps = tuple(int(e) for e in text.split(","))
        except ValueError:
            raise UsageError(f"bad exponent list {text!r}") from None
        return hitchin.ExponentProfile("custom", exps, sum(2 * e + 1 for e in exps))
    return hitchin.exponent_profile(text)


def _cmd_hitchin(sig, args):
    if args.exponents is not None:
        return {"dim": hitchin.hitchin_dimension_exponents(sig, _parse_profile(args.exponents))}
    return {"dim": hitchin.hitchin_dimension_pgl(sig, args.n)}


def _curve_of(sig: OrbifoldSignature):
    if sig.is_closed_orientable:
        return picard.OrbiCurve.from_signature(sig)
    return picard.RealOrbiCurve.from_signature(sig)


def _load_json_arg(text: str):
    path = Path(text)
    try:
        if not text.lstrip().startswith(("{", "[")) and path.exists():
            text = path.read_text(encoding="utf-8")
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {text!r}: {exc}") from None


def _cmd_rr(sig, args):
    curve = _curve_of(sig)
    real = isinstance(curve, picard.RealOrbiCurve)
    if args.bundle is not None:
        L = picard.OrbiLineBundle.from_json(_load_json_arg(args.bundle))
    else:
        L = picard.canonical_power(curve, args.canonical_power)
    chi = (riemannroch.euler_char_sheaf_real if real else riemannroch.euler_char_sheaf)(curve, L)
    out = {
        "field": "real" if real else "complex",
        "genus": curve.genus,
        "coarse_degree": L.coarse_degree,
        "isotropies": list(L.isotropies),
        "degree": rational(picard.degree(L, curve)),
        "chi": chi,
        "coarse_chi": riemannroch.coarse_rr_oracle(curve, L),
    }
    if args.canonical_power is not None and args.canonical_power >= 2:
        out["h0"] = riemannroch.h0_canonical_power(curve, args.canonical_power)
    return out


def _cmd_cover(sig, args):
    action = covers.PermutationAction.from_json(_load_json_arg(args.action))
    report = covers.check_multiplicativity(sig, action)
    return {
        "cover": format_signature(report.cover),
        "degree": report.degree,
        "chi_cover": rational(report.cover_chi),
        "chi_base_times_degree": rational(report.scaled_base_chi),
        "multiplicative": report.holds,
    }


def _cmd_double_cover(sig, args):
    cover = covers.orientation_double_cover(sig)
    return {"cover": format_signature(cover),
            "chi": rational(orbifold_euler_characteristic(cover))}


def _presentation_of(sig):
    if (sig.orientable and sig.genus == 0 and sig.mirror_circles == 1
            and not sig.cone_orders and len(sig.corner_orders) == 3):
        return groups.presentation_coxeter_triangle(*sig.corner_orders)
    return groups.presentation_fuchsian(sig)


def _cmd_presentation(sig, args):
    pres = _presentation_of(sig)
    if args.text:
        return pres.to_text()
    data = pres.to_json()
    del data["relator_letters"]
    return data


# -- rigid ------------------------------------------------------------------

_BOUND_KEYS = {"genus": "genus", "points": "points", "cones": "points", "order": "order",
               "corners": "corners", "mirrors": "mirrors"}


def parse_bounds(text: str) -> Bounds:
    """Parse ``key=value`` pairs such as ``genus=0,points=3..3,order=100,orientable``.

    A value ``a..b`` sets both the lower and the upper bound.
    """
    kwargs = {}
    for item in filter(None, (t.strip() for t in text.split(","))):
        if item == "orientable":
            kwargs["orientable_only"] = True
            continue
        key, _, value = item.partition("=")
        if key not in _BOUND_KEYS or not value:
            raise UsageError(f"bad bound {item!r}; keys: {', '.join(sorted(_BOUND_KEYS))}, orientable")
        name = _BOUND_KEYS[key]
        lo, sep, hi = value.partition("..")
        try:
            if sep:
                if name == "order":
                    raise ValueError
                kwargs[f"min_{name}"] = int(lo)
                kwargs[f"max_{name}"] = int(hi)
            else:
                kwargs[f"max_{name}"] = int(value)
        except ValueError:
            raise UsageError(f"bad bound value {item!r}") from None
    try:
        return Bounds(**kwargs)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _cmd_rigid(args):
    bounds = parse_bounds(args.bounds)
    return [
        {"signature": format_signature(sig),
         "chi": rational(orbifold_euler_characteristic(sig)),
         "dim": hitchin.hitchin_dimension_pgl(sig, args.n)}
        for sig in enumerate_rigid(args.n, bounds)
    ]


# -- output -----------------------------------------------------------------

def _write(rows, fmt, out, single, fields=()):
    if isinstance(rows, str):
        out.write(rows + "\n")
        return
    if fmt == "csv":
        fields = list(fields) or (list(rows[0]) if rows else [])
        if not fields:
            return
        for row in rows[1:]:
            fields += [k for k in row if k not in fields]
        writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict, bool)) else v
                             for k, v in row.items()})
        return
    out.write(json.dumps(rows[0] if single else rows) + "\n")


def _error_payload(exc) -> Dict:
    payload = {"error": str(exc.args[0]) if exc.args else str(exc), "kind": type(exc).__name__}
    if isinstance(exc, SignatureSyntaxError):
        payload["offset"] = exc.offset
        payload["expected"] = list(exc.expected)
    return payload


def _exit_code(exc) -> int:
    if isinstance(exc, (SignatureSyntaxError, UsageError, json.JSONDecodeError)):
        return EXIT_PARSE
    return EXIT_DOMAIN


_HANDLED = (SignatureSyntaxError, UsageError, DomainError, InvalidActionError,
            BundleMismatchError, NonIntegralError)

COMMANDS: Dict[str, Callable] = {
    "chi": _cmd_chi,
    "teich": _cmd_teich,
    "hitchin": _cmd_hitchin,
    "rr": _cmd_rr,
    "cover": _cmd_cover,
    "double-cover": _cmd_double_cover,
    "presentation": _cmd_presentation,
}


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--json", dest="format", action="store_const", const="json",
                       help="JSON output (default)")
    group.add_argument("--csv", dest="format", action="store_const", const="csv",
                       help="CSV output with a header row")

    sig = argparse.ArgumentParser(add_help=False)
    sig.add_argument("signature", nargs="?", help="signature such as o0c:2,3,7")
    sig.add_argument("--batch", metavar="FILE",
                     help="read one signature per line from FILE ('-' for stdin)")

    parser = argparse.ArgumentParser(
        prog="orbidim",
        description="Exact invariants of closed hyperbolic 2-orbifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("chi", parents=[fmt, sig], help="orbifold Euler characteristic")
    sub.add_parser("teich", parents=[fmt, sig], help="Teichmuller space dimension")

    p = sub.add_parser("hitchin", parents=[fmt, sig], help="Hitchin component dimension")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int, help="rank of PGL(n, R)")
    g.add_argument("--exponents", help="Lie type (A5, C3, D4, G2, ...) or comma-separated exponents")

    p = sub.add_parser("rr", parents=[fmt, sig], help="orbifold Riemann-Roch")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--bundle", help="JSON {coarse_degree, isotropies} or a file holding it")
    g.add_argument("--canonical-power", type=int, metavar="D", help="use K^D")

    p = sub.add_parser("cover", parents=[fmt, sig], help="lift along a permutation action")
    p.add_argument("--action", required=True, help="JSON action document or file")

    sub.add_parser("double-cover", parents=[fmt, sig], help="orientation double cover")

    p = sub.add_parser("presentation", parents=[fmt, sig], help="fundamental group presentation")
    p.add_argument("--text", action="store_true", help="plain-text <gens | relators> form")

    p = sub.add_parser("rigid", parents=[fmt], help="signatures with Hitchin dimension zero")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bounds", required=True,
                   help="e.g. genus=0,points=3..3,order=100,corners=0,mirrors=0,orientable")
    return parser


def _batch_lines(path: str, stdin) -> List[str]:
    try:
        text = stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read batch file: {exc}") from None
    return [line.strip() for line in text.splitlines() if line.strip()]


def main(argv: Optional[List[str]] = None, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    fmt = args.format or "json"

    try:
        if args.command == "rigid":
            _write(_cmd_rigid(args), fmt, stdout, single=False,
                   fields=("signature", "chi", "dim"))
            return EXIT_OK
        command = COMMANDS[args.command]
        if args.batch is None:
            if args.signature is None:
                raise UsageError("a signature or --batch FILE is required")
            result = command(parse_signature(args.signature), args)
            _write(result if isinstance(result, str) else [result], fmt, stdout,
                   single=fmt == "json")
            return EXIT_OK
        return _run_batch(command, args, fmt, stdout, stdin)
    except _HANDLED as exc:
        stderr.write(json.dumps(_error_payload(exc)) + "\n")
        return _exit_code(exc)


def _run_batch(command, args, fmt, stdout, stdin) -> int:
    code = EXIT_OK
    rows = []
    for line in _batch_lines(args.batch, stdin):
        try:
            result = command(parse_signature(line), args)
            if isinstance(result, str):
                result = {"text": result}
            row = {"signature": line, **result}
        except _HANDLED as exc:
            row = {"signature": line, **_error_payload(exc)}
            code = code or _exit_code(exc)
        rows.append(row)
    if fmt == "csv":
        _write(rows, fmt, stdout, single=False)
    else:
        for row in rows:
            stdout.write(json.dumps(row) + "\n")
    return code


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
