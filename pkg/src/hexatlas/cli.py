"""``hexatlas`` command-line interface.

Exit codes: 0 success, 1 failed atlas check, 2 domain error (infeasible
input, point outside a chart, ...), 3 boundary limit did not converge,
64 usage error (bad flags, malformed names or numbers).
"""
from __future__ import annotations

import argparse
import itertools
import json
import math
import sys
from dataclasses import dataclass, field

from . import __version__
from .arcs import ARCS, parse_triple
from .errors import HexatlasError, NotAdmissible, NotConverged, SequenceSyntaxError
from .foliation import (
    ChartCoords,
    FoliationClass,
    PMFCellComplex,
    charts_containing,
    from_chart,
    pl_transition,
    pmf_cell_complex,
    to_chart,
)
from .hexagon import HexagonLengths, solve_from_triple
from .serialize import (
    chart_to_json,
    csv_text,
    dumps,
    foliation_to_json,
    parse_lengths,
    parse_rationals,
    parse_weights,
)
from .teichmueller import (
    TRACE_HEADER,
    SequenceSpec,
    TeichPoint,
    boundary_chart,
    boundary_limit,
    diverges,
    pants_double,
    projective_embed,
    projective_embed_f,
    thick_margin,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_DOMAIN, EXIT_NOT_CONVERGED, EXIT_USAGE = 0, 1, 2, 3, 64

DEFAULT_TOLERANCES = {"limit": 1e-6, "split": 1e-9}
FORMATS = ("json", "csv", "pretty")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    n_max: int = 40
    format: str = "json"
    trace: bool = False

    def __post_init__(self):
        for name, tol in self.tolerances.items():
            if name not in DEFAULT_TOLERANCES:
                raise UsageError(f"unknown tolerance {name!r}")
            if not (isinstance(tol, float) and math.isfinite(tol) and tol > 0):
                raise UsageError(f"tolerance {name} must be positive, got {tol!r}")
        if self.n_max < 2:
            raise UsageError(f"--nmax must be at least 2, got {self.n_max}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")

    def tol(self, name: str) -> float:
        return self.tolerances[name]


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(message)


# -- output -------------------------------------------------------------------

def _pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_pretty(value, indent + 1).rstrip("\n"))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + ", ".join(json.dumps(v) if isinstance(v, list) else str(v) for v in value))
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines) + "\n"


def _flat_rows(obj, prefix=""):
    for key, value in obj.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flat_rows(value, name + ".")
        elif isinstance(value, list):
            yield name, ";".join(",".join(map(str, v)) if isinstance(v, list) else str(v) for v in value)
        else:
            yield name, "" if value is None else value


def render(obj: dict, cfg: Config) -> str:
    if cfg.format == "json":
        return dumps(obj)
    if cfg.format == "pretty":
        return _pretty(obj)
    return csv_text(("key", "value"), _flat_rows(obj))


# -- argument readers -------------------------------------------------------

def _triple(text):
    return parse_triple(text)


def _lengths(text) -> tuple:
    try:
        values = parse_lengths(text)
    except ValueError:
        raise UsageError(f"cannot read lengths {text!r}") from None
    if len(values) != 3:
        raise UsageError(f"expected three lengths, got {len(values)}")
    return values


def _rationals(text) -> tuple:
    try:
        values = parse_rationals(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read rationals {text!r}") from None
    if len(values) != 3:
        raise UsageError(f"expected three coordinates, got {len(values)}")
    return values


def _weights(text) -> FoliationClass:
    try:
        return parse_weights(text)
    except NotAdmissible:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot read weights {text!r}: {exc}") from None


def _hexagon(args, cfg: Config) -> HexagonLengths:
    return solve_from_triple(_triple(args.triple), *_lengths(args.lengths), tol=cfg.tol("split"))


# -- commands ---------------------------------------------------------------

def cmd_hexagon_solve(args, cfg: Config):
    h = _hexagon(args, cfg)
    return h.to_json(), EXIT_OK


def cmd_foliation_chart(args, cfg: Config):
    cc = ChartCoords(_triple(args.triple), _rationals(args.coords))
    F = from_chart(cc)
    return {**foliation_to_json(F), "chart": chart_to_json(cc)}, EXIT_OK


def cmd_foliation_transition(args, cfg: Config):
    cc = ChartCoords(_triple(args.triple), _rationals(args.coords))
    return chart_to_json(pl_transition(cc, _triple(args.to))), EXIT_OK


def cmd_foliation_classify(args, cfg: Config):
    F = _weights(args.weights)
    charts = charts_containing(F)
    return {**foliation_to_json(F), "charts": [t.names for t in charts]}, EXIT_OK


def cocycle_report() -> dict:
    """Exact chart checks on every foliation with weights in {1, 2} on a face
    of the arc complex: to_chart/from_chart round trips, and for consecutive
    containing charts t1, t2, t3 the composite t1 -> t2 -> t3 equals t1 -> t3."""
    faces = [f for k in (1, 2, 3) for f in itertools.combinations(ARCS, k)]
    samples = roundtrip_failures = cocycle_failures = 0
    for face in faces:
        try:
            FoliationClass({x: 1 for x in face})
        except ValueError:
            continue
        for ws in itertools.product((1, 2), repeat=len(face)):
            F = FoliationClass(dict(zip(face, ws)))
            charts = charts_containing(F)
            samples += 1
            coords = {t: to_chart(F, t) for t in charts}
            roundtrip_failures += sum(from_chart(cc) != F for cc in coords.values())
            for t1, t2, t3 in zip(charts, charts[1:], charts[2:]):
                if pl_transition(pl_transition(coords[t1], t2), t3).coords != coords[t3].coords:
                    cocycle_failures += 1
    return {
        "samples": samples,
        "roundtrip_failures": roundtrip_failures,
        "cocycle_failures": cocycle_failures,
    }


def cmd_atlas_export(args, cfg: Config):
    data = pmf_cell_complex().to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps(data))
        V, E, F = pmf_cell_complex().counts
        return {"written": args.out, "counts": {"V": V, "E": E, "F": F}}, EXIT_OK
    return data, EXIT_OK


def _load_complex(path) -> PMFCellComplex:
    try:
        with open(path, encoding="utf-8") as fh:
            return PMFCellComplex.from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read complex {path!r}: {exc}") from None


def cmd_atlas_check(args, cfg: Config):
    cx = _load_complex(args.complex) if args.complex else pmf_cell_complex()
    V, E, F = cx.counts
    checks = cx.checks()
    checks["counts_9_21_14"] = cx.counts == (9, 21, 14)
    cocycle = cocycle_report()
    checks["chart_roundtrip"] = cocycle["roundtrip_failures"] == 0
    checks["chart_cocycle"] = cocycle["cocycle_failures"] == 0
    ok = all(checks.values())
    report = {
        "ok": ok,
        "counts": {"V": V, "E": E, "F": F},
        "euler_characteristic": cx.euler_characteristic(),
        "checks": checks,
        "cocycle": cocycle,
        "failed": [name for name, passed in checks.items() if not passed],
    }
    return report, EXIT_OK if ok else EXIT_CHECK_FAILED


BOUNDED_MESSAGE = "bounded: does not tend to infinity"


def cmd_teich_limit(args, cfg: Config):
    spec = SequenceSpec.parse(args.seq)
    report = diverges(spec)
    out = {
        "sequence": str(spec),
        "diverges": report.diverges,
        "pattern": report.pattern,
        "method": report.method,
        "witness": report.witness.names if report.witness else None,
    }
    if not report.diverges:
        out["status"] = BOUNDED_MESSAGE
        return out, EXIT_OK
    try:
        result = boundary_limit(spec, n_max=cfg.n_max, tol=cfg.tol("limit"))
    except NotConverged as exc:
        # the classification is still worth reporting
        out["status"] = str(exc)
        _fail(EXIT_NOT_CONVERGED, exc.reason, str(exc))
        return out, EXIT_NOT_CONVERGED
    out.update(result.to_json())
    out["foliation"] = foliation_to_json(result.foliation)["weights"]
    if cfg.trace:
        out["trace"] = {"header": list(TRACE_HEADER), "rows": [list(r) for r in result.trace]}
    return out, EXIT_OK


def cmd_teich_embed(args, cfg: Config):
    if args.weights:
        if args.triple or args.lengths:
            raise UsageError("give either --weights or --triple/--lengths")
        F = _weights(args.weights)
        return {**foliation_to_json(F), "embedding": list(projective_embed_f(F).v)}, EXIT_OK
    if not (args.triple and args.lengths):
        raise UsageError("teich embed needs --triple and --lengths, or --weights")
    p = TeichPoint(_hexagon(args, cfg))
    t, margin = thick_margin(p)
    out = {
        "hexagon": p.hexagon.to_json(),
        "embedding": list(projective_embed(p).v),
        "thick_margin": {"triple": t.names, "epsilon": margin},
    }
    if args.chart:
        point, collar = boundary_chart(p, _triple(args.chart))
        out["boundary_chart"] = {**chart_to_json(point.coords), "collar": collar}
    return out, EXIT_OK


def cmd_pants_double(args, cfg: Config):
    p = TeichPoint(_hexagon(args, cfg))
    return {"cuffs": dict(zip(("a", "b", "c"), pants_double(p)))}, EXIT_OK


# -- parser -------------------------------------------------------------------

def _global_options(parser, suppress: bool):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=FORMATS, default=default("json"))
    for name, value in DEFAULT_TOLERANCES.items():
        parser.add_argument(f"--tol-{name}", type=float, metavar="VAL", default=default(value),
                            dest=f"tol_{name}")
    parser.add_argument("--nmax", type=int, default=default(40))
    parser.add_argument("--trace", action="store_true", default=default(False))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hexatlas", description="Right hexagons, their arc triples and the PMF sphere.")
    parser.add_argument("--version", action="version", version=f"hexatlas {__version__}")
    _global_options(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_options(common, suppress=True)
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    hexagon = groups.add_parser("hexagon", help="hexagon trigonometry").add_subparsers(dest="cmd", required=True)
    p = leaf(hexagon, "solve", cmd_hexagon_solve, "solve a hexagon from an arc triple")
    p.add_argument("--triple", required=True)
    p.add_argument("--lengths", required=True)

    fol = groups.add_parser("foliation", help="measured foliations and charts").add_subparsers(dest="cmd", required=True)
    p = leaf(fol, "chart", cmd_foliation_chart, "foliation with given chart coordinates")
    p.add_argument("--triple", required=True)
    p.add_argument("--coords", required=True)
    p = leaf(fol, "transition", cmd_foliation_transition, "change chart coordinates")
    p.add_argument("--triple", required=True)
    p.add_argument("--coords", required=True)
    p.add_argument("--to", required=True)
    p = leaf(fol, "classify", cmd_foliation_classify, "charts containing a foliation")
    p.add_argument("--weights", required=True)

    atlas = groups.add_parser("atlas", help="the PMF cell complex").add_subparsers(dest="cmd", required=True)
    p = leaf(atlas, "export", cmd_atlas_export, "write the cell complex as JSON")
    p.add_argument("--out")
    p = leaf(atlas, "check", cmd_atlas_check, "run the sphere and chart checks")
    p.add_argument("--complex", help="check this exported complex instead of the built-in one")

    teich = groups.add_parser("teich", help="Teichmüller space and its boundary").add_subparsers(dest="cmd", required=True)
    p = leaf(teich, "limit", cmd_teich_limit, "boundary limit of a sequence of hexagons")
    p.add_argument("--seq", required=True)
    p = leaf(teich, "embed", cmd_teich_embed, "projective embedding of a hexagon or foliation")
    p.add_argument("--triple")
    p.add_argument("--lengths")
    p.add_argument("--weights")
    p.add_argument("--chart", help="also report the boundary chart at this triple")

    pants = groups.add_parser("pants", help="pairs of pants").add_subparsers(dest="cmd", required=True)
    p = leaf(pants, "double", cmd_pants_double, "cuffs of the doubled hexagon")
    p.add_argument("--triple", required=True)
    p.add_argument("--lengths", required=True)
    return parser


def _config(args) -> Config:
    return Config(
        tolerances={name: float(getattr(args, f"tol_{name}")) for name in DEFAULT_TOLERANCES},
        n_max=args.nmax,
        format=args.format,
        trace=args.trace,
    )


def _fail(code: int, reason: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": reason, "message": message}, ensure_ascii=True) + "\n")
    return code


def _trace_csv(out: dict) -> str:
    return csv_text(out["trace"]["header"], out["trace"]["rows"])


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args)
        out, code = args.func(args, cfg)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    except (NotAdmissible, SequenceSyntaxError) as exc:
        return _fail(EXIT_USAGE, exc.reason, str(exc))
    except NotConverged as exc:
        return _fail(EXIT_NOT_CONVERGED, exc.reason, str(exc))
    except HexatlasError as exc:
        return _fail(EXIT_DOMAIN, exc.reason, str(exc))
    except ValueError as exc:
        return _fail(EXIT_USAGE, "invalid_input", str(exc))
    except OSError as exc:
        return _fail(EXIT_USAGE, "io", str(exc))
    if cfg.format == "csv" and "trace" in out:
        text = _trace_csv(out)
    elif cfg.format == "pretty" and "trace" in out:
        trace = out.pop("trace")
        text = render(out, cfg) + csv_text(trace["header"], trace["rows"])
    else:
        text = render(out, cfg)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
