"""Command-line surface over the library.

Subcommands:
  constants     derived charge/flux scales for a given alpha
  winding       winding number of a loop file about the puncture
  period        canonical coefficient lambda from a generator period
  holonomy      holonomy of a connection around a loop
  reduce        fold lambda onto the moduli circle [0, |e|)
  equiv         gauge equivalence of two connections (periods mod |e|)
  classify      holonomy group of a flux ratio
  spectrum      loop holonomies e^{2 pi i rho n}, optionally as CSV
  gauge-apply   act on a connection by a gauge-map file
  verify-flat   small-loop circulation check of a connection's components

Reports are single JSON documents on stdout, deterministic for identical
inputs (no timestamps; --verbose adds human-readable notes on stderr only).
Exit codes: 0 success, 1 validation error, 2 numerical failure.

File formats (JSON):
  path        {"closed": true, "vertices": [[x, y], ...]}
  connection  {"lambda": 0.25, "beta": <beta>}            (beta optional)
  gauge map   {"kind": "winding", "n": 3}
              {"kind": "exp_beta", "beta": <beta>}
              {"kind": "product", "factors": [<gauge map>, <gauge map>]}
  beta        {"kind": "polynomial", "coeffs": [[i, j, c], ...]}
              {"kind": "radial_log", "c": 0.5}
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any

from . import forms, gauge, geometry, moduli
from .errors import AbflatError, MalformedRatio, NumericalError, ValidationError

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2


class _Parser(argparse.ArgumentParser):
    # Usage problems are validation errors: exit 1, not argparse's default 2.
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def _parse_real(text: str) -> float:
    """A real number, accepting 'p/q' fraction notation (e.g. 1/137.04)."""
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return float(num) / float(den)
        return float(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from exc


def parse_rho(text: str) -> moduli.FluxRatio:
    """Parse a flux-ratio string.

    'p/q' with integer tokens gives an exact rational (reduced into [0, 1)),
    'irrational:<desc>=<float>' a declared irrational, and a bare decimal a
    float ratio.
    """
    s = text.strip()
    if not s:
        raise MalformedRatio("empty flux ratio")
    if s.startswith("irrational:"):
        body = s[len("irrational:"):]
        if "=" not in body:
            raise MalformedRatio(
                f"declared irrational must look like irrational:<desc>=<float>: {text!r}"
            )
        desc, _, value = body.partition("=")
        try:
            return moduli.DeclaredIrrational(desc.strip(), float(value))
        except ValueError as exc:
            raise MalformedRatio(f"bad float in declared irrational: {text!r}") from exc
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            p, q = int(num.strip()), int(den.strip())
        except ValueError as exc:
            raise MalformedRatio(f"fraction tokens must be integers: {text!r}") from exc
        if q <= 0:
            raise MalformedRatio(f"denominator must be positive: {text!r}")
        return moduli.exact_rational(p, q)
    try:
        return moduli.FloatRatio(float(s))
    except ValueError as exc:
        raise MalformedRatio(f"not a flux ratio: {text!r}") from exc


def _load_json(path: str) -> Any:
    p = Path(path)
    if not p.is_file():
        raise ValidationError(f"no such file: {path}")
    try:
        return json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc


def read_path_file(path: str) -> geometry.PolyPath:
    doc = _load_json(path)
    try:
        closed = bool(doc["closed"])
        vertices = [(float(x), float(y)) for x, y in doc["vertices"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(
            f"{path}: path file needs 'closed' and 'vertices' ([[x, y], ...])"
        ) from exc
    return geometry.validate_path(vertices, closed)


def build_beta(doc: Any, where: str) -> forms.ScalarField:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValidationError(f"{where}: beta needs a 'kind' tag")
    kind = doc["kind"]
    if kind == "polynomial":
        try:
            return forms.polynomial_field(doc["coeffs"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(
                f"{where}: polynomial beta needs 'coeffs': [[i, j, c], ...]"
            ) from exc
    if kind == "radial_log":
        try:
            return forms.radial_log_field(float(doc["c"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"{where}: radial_log beta needs a number 'c'") from exc
    raise ValidationError(f"{where}: unknown beta kind {kind!r}")


def read_connection_file(path: str) -> forms.FlatConnection:
    doc = _load_json(path)
    if not isinstance(doc, dict) or "lambda" not in doc:
        raise ValidationError(f"{path}: connection file needs 'lambda'")
    try:
        lam = float(doc["lambda"])
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{path}: 'lambda' must be a number") from exc
    beta = None
    if doc.get("beta") is not None:
        beta = build_beta(doc["beta"], path)
    return forms.FlatConnection(lam, beta)


def read_gauge_file(path: str) -> gauge.GaugeMap:
    doc = _load_json(path)
    return _build_gauge(doc, path)


def _build_gauge(doc: Any, where: str) -> gauge.GaugeMap:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValidationError(f"{where}: gauge map needs a 'kind' tag")
    kind = doc["kind"]
    if kind == "winding":
        try:
            return gauge.construct_fn(int(doc["n"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"{where}: winding map needs an integer 'n'") from exc
    if kind == "exp_beta":
        if "beta" not in doc:
            raise ValidationError(f"{where}: exp_beta map needs 'beta'")
        return gauge.exp_sharp(build_beta(doc["beta"], where))
    if kind == "product":
        factors = doc.get("factors")
        if not isinstance(factors, list) or len(factors) != 2:
            raise ValidationError(f"{where}: product needs 'factors': [left, right]")
        return gauge.Product(
            _build_gauge(factors[0], where), _build_gauge(factors[1], where)
        )
    raise ValidationError(f"{where}: unknown gauge map kind {kind!r}")


def _header(args: argparse.Namespace, consts: moduli.PhysicalConstants) -> dict:
    return {
        "command": args.command,
        "alpha": consts.alpha,
        "e_abs": consts.e_abs,
        "convention_notes": moduli.CONVENTION_NOTES,
        "tolerances": {
            "eps_origin": geometry.EPS_ORIGIN,
            "tol_winding": geometry.TOL_WINDING,
            "tol_quad": forms.TOL_QUAD,
            "tol_grad": forms.TOL_GRAD,
            "tol_flat": forms.TOL_FLAT,
            "equiv_tol": moduli.EQUIV_TOL,
            "rational_tol": moduli.RATIONAL_TOL,
        },
    }


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _verbose(args: argparse.Namespace, message: str) -> None:
    if getattr(args, "verbose", False):
        print(message, file=sys.stderr)


def _angles(radians: float) -> dict:
    return {"radians": radians, "turns": radians / geometry.TWO_PI}


def _group_report(c: moduli.Classification) -> dict:
    g = c.group
    out: dict[str, Any] = {"diagnostics": c.diagnostics}
    if isinstance(g, moduli.Trivial):
        out["holonomy_group"] = {"kind": "trivial"}
        out["group_elements"] = {"turns": [0.0], "radians": [0.0]}
    elif isinstance(g, moduli.Cyclic):
        out["holonomy_group"] = {"kind": "cyclic", "order": g.order}
        turns = [k / g.order for k in range(g.order)]
        out["group_elements"] = {
            "turns": turns,
            "radians": [geometry.TWO_PI * t for t in turns],
        }
    else:
        out["holonomy_group"] = {"kind": "infinite_cyclic"}
    return out


def cmd_constants(args: argparse.Namespace) -> int:
    consts = moduli.make_constants(args.alpha, args.planck_length)
    report = _header(args, consts)
    report.update(
        {
            "phi0": consts.phi0,
            "e_abs_cgs_erg_cm_half": consts.e_abs_cgs(),
            "cgs_conversion_factor_sqrt_hbar_c": moduli.SQRT_HBAR_C_CGS,
        }
    )
    if consts.planck_length is not None:
        report["planck_length"] = consts.planck_length
        report["kk_length"] = consts.kk_length
    _emit(report)
    return EXIT_OK


def cmd_winding(args: argparse.Namespace) -> int:
    loop = read_path_file(args.path)
    w = geometry.winding_number(loop)
    report = _header(args, moduli.make_constants(args.alpha))
    report.update(
        {
            "path": args.path,
            "closed": loop.closed,
            "segments": loop.segment_count,
            "winding": w,
            "angle_sum": _angles(geometry.path_angle_sum(loop)),
        }
    )
    _emit(report)
    return EXIT_OK


def cmd_period(args: argparse.Namespace) -> int:
    consts = moduli.make_constants(args.alpha)
    conn = read_connection_file(args.conn)
    generator = read_path_file(args.path)
    lam = moduli.period(conn, generator, consts)
    report = _header(args, consts)
    report.update({"conn": args.conn, "path": args.path, "lambda": lam})
    _emit(report)
    return EXIT_OK


def cmd_holonomy(args: argparse.Namespace) -> int:
    consts = moduli.make_constants(args.alpha)
    conn = read_connection_file(args.conn)
    loop = read_path_file(args.path)
    h = moduli.holonomy(conn, loop, consts)
    w = geometry.winding_number(loop)
    report = _header(args, consts)
    report.update(
        {
            "conn": args.conn,
            "path": args.path,
            "winding": w,
            "holonomy": {"re": h.real, "im": h.imag},
            "phase": _angles(math.atan2(h.imag, h.real)),
        }
    )
    _emit(report)
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    consts = moduli.make_constants(args.alpha)
    coord = moduli.reduce_to_moduli(args.lam, consts)
    report = _header(args, consts)
    report.update(
        {
            "lambda": args.lam,
            "lambda_mod": coord.lambda_mod,
            "theta": _angles(coord.theta),
            "rho": coord.rho,
            "flux": coord.rho * consts.phi0,
        }
    )
    _emit(report)
    return EXIT_OK


def cmd_equiv(args: argparse.Namespace) -> int:
    if len(args.conn) != 2:
        raise ValidationError("equiv needs exactly two --conn files")
    consts = moduli.make_constants(args.alpha)
    a = read_connection_file(args.conn[0])
    b = read_connection_file(args.conn[1])
    generator = read_path_file(args.path)
    witness = moduli.gauge_equivalent(a, b, generator, consts, args.tol)
    report = _header(args, consts)
    report.update(
        {
            "conn_a": args.conn[0],
            "conn_b": args.conn[1],
            "path": args.path,
            "equivalent": witness.equivalent,
            "connecting_winding": witness.n,
            "residual": witness.residual,
            "tol": witness.tol,
        }
    )
    _emit(report)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    rho = parse_rho(args.rho)
    result = moduli.classify_holonomy(rho, args.qmax, args.tol)
    report = _header(args, moduli.make_constants(args.alpha))
    report["rho"] = args.rho
    report.update(_group_report(result))
    _emit(report)
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    rho = parse_rho(args.rho)
    spectrum = moduli.holonomy_spectrum(rho, args.nmax)
    rows = [(n, z.real, z.imag) for n, z in spectrum]
    report = _header(args, moduli.make_constants(args.alpha))
    report.update({"rho": args.rho, "n_max": args.nmax, "count": len(rows)})
    if args.out:
        lines = ["n,re,im"]
        lines += [f"{n},{re!r},{im!r}" for n, re, im in rows]
        Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
        report["csv"] = args.out
        _verbose(args, f"wrote {len(rows)} rows to {args.out}")
    else:
        report["values"] = [{"n": n, "re": re, "im": im} for n, re, im in rows]
    _emit(report)
    return EXIT_OK


def cmd_gauge_apply(args: argparse.Namespace) -> int:
    consts = moduli.make_constants(args.alpha)
    conn = read_connection_file(args.conn)
    f = read_gauge_file(args.gauge)
    out = gauge.gauge_apply(conn, f, consts.e_abs)
    coord = moduli.reduce_to_moduli(out.lam, consts)
    report = _header(args, consts)
    report.update(
        {
            "conn": args.conn,
            "gauge": args.gauge,
            "lambda_before": conn.lam,
            "lambda": out.lam,
            "lambda_mod": coord.lambda_mod,
            "rho": coord.rho,
            "exact_part": out.exact_part.description if out.exact_part else None,
        }
    )
    _emit(report)
    return EXIT_OK


def cmd_verify_flat(args: argparse.Namespace) -> int:
    consts = moduli.make_constants(args.alpha)
    conn = read_connection_file(args.conn)
    field = forms.connection_field(conn, consts.e_abs)
    probes = [
        (
            args.ring_radius * math.cos(geometry.TWO_PI * k / args.probes),
            args.ring_radius * math.sin(geometry.TWO_PI * k / args.probes),
        )
        for k in range(args.probes)
    ]
    result = forms.verify_flat(field, probes, args.probe_radius)
    report = _header(args, consts)
    report.update(
        {
            "conn": args.conn,
            "flat": result.ok,
            "threshold": result.threshold,
            "probe_radius": args.probe_radius,
            "ring_radius": args.ring_radius,
            "circulations": list(result.circulations),
        }
    )
    _emit(report)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="abflat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler) -> argparse.ArgumentParser:
        p = sub.add_parser(name)
        p.set_defaults(handler=handler)
        p.add_argument("--verbose", action="store_true")
        p.add_argument("--alpha", type=_parse_real, default=moduli.DEFAULT_ALPHA)
        return p

    p = add("constants", cmd_constants)
    p.add_argument("--planck-length", type=_parse_real, default=None)

    p = add("winding", cmd_winding)
    p.add_argument("--path", required=True)

    p = add("period", cmd_period)
    p.add_argument("--conn", required=True)
    p.add_argument("--path", required=True)

    p = add("holonomy", cmd_holonomy)
    p.add_argument("--conn", required=True)
    p.add_argument("--path", required=True)

    p = add("reduce", cmd_reduce)
    p.add_argument("--lambda", dest="lam", type=_parse_real, required=True)

    p = add("equiv", cmd_equiv)
    p.add_argument("--conn", action="append", required=True, help="given twice: a, b")
    p.add_argument("--path", required=True, help="generator loop (winding +-1)")
    p.add_argument("--tol", type=float, default=None)

    p = add("classify", cmd_classify)
    p.add_argument("--rho", required=True)
    p.add_argument("--qmax", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)

    p = add("spectrum", cmd_spectrum)
    p.add_argument("--rho", required=True)
    p.add_argument("--nmax", type=int, default=16)
    p.add_argument("--out", default=None)

    p = add("gauge-apply", cmd_gauge_apply)
    p.add_argument("--conn", required=True)
    p.add_argument("--gauge", required=True)

    p = add("verify-flat", cmd_verify_flat)
    p.add_argument("--conn", required=True)
    p.add_argument("--probes", type=int, default=16)
    p.add_argument("--probe-radius", type=float, default=0.01)
    p.add_argument("--ring-radius", type=float, default=2.0)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValidationError as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)})
        return EXIT_VALIDATION
    except NumericalError as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)})
        return EXIT_NUMERICAL
    except AbflatError as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)})
        return EXIT_VALIDATION
    except ValueError as exc:
        _emit({"error": "ValueError", "detail": str(exc)})
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
