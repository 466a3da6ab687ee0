"""Command-line front end: synthesis, optimization, Bode export, comparison.

Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 oracle
disagreement.  Filter documents are JSON; response and comparison tables
are CSV.  All outputs are deterministic for fixed flags and seed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .cfe import IIRFilter, RealizationSpec, realize
from .errors import FodiError
from .genfunc import (
    FAMILIES,
    GeneratingFunction,
    NOMINAL_ALPHA,
    is_interpolated,
)
from .objective import ObjectiveConfig, evaluate, evaluate_alpha
from .optimize import GAConfig, ga_minimize, grid_search
from .poly import Polynomial, RationalFn
from .response import DEFAULT_POINTS, OMEGA_FLOOR, make_grid, nyquist, response_curves
from .stability import analyze

SCHEMA_VERSION = "1"

KIND_FLAG = {"diff": "differentiator", "int": "integrator"}

#: the full field set of a v1 filter document; unknown fields are rejected
FILTER_DOC_FIELDS = {
    "schema_version", "family", "alpha", "gamma", "kind", "order", "ts",
    "variable", "num", "den", "stability", "provenance",
}

EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_ORACLE = 4

ORACLE_TOL = 5e-3


class _CliParser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _usage_fail(message: str):
    print(f"fodi: error: {message}", file=sys.stderr)
    raise SystemExit(EXIT_USAGE)


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _spec_args(p: _CliParser, with_alpha: bool = True):
    p.add_argument("--family", choices=FAMILIES)
    if with_alpha:
        p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--gamma", type=float)
    p.add_argument("--kind", choices=sorted(KIND_FLAG))
    p.add_argument("--order", type=int)
    p.add_argument("--ts", type=float, default=0.001)
    p.add_argument("--out", default=None)


def _build_spec(args) -> RealizationSpec:
    for flag in ("family", "gamma", "kind", "order"):
        if getattr(args, flag) is None:
            _usage_fail(f"--{flag} is required")
    alpha = getattr(args, "alpha", None)
    if is_interpolated(args.family):
        if alpha is None:
            _usage_fail(f"--alpha is required for family {args.family}")
    elif alpha is not None:
        _usage_fail(f"--alpha is not accepted for pure family {args.family}")
    try:
        gf = GeneratingFunction(args.family, alpha=alpha or 0.0, T=args.ts)
        return RealizationSpec(args.gamma, KIND_FLAG[args.kind], args.order, gf)
    except (FodiError, ValueError) as exc:
        _usage_fail(str(exc))


def _filter_document(f: IIRFilter, provenance=None) -> dict:
    spec = f.spec
    doc = {
        "schema_version": SCHEMA_VERSION,
        "family": spec.gf.family,
        "alpha": spec.gf.alpha if is_interpolated(spec.gf.family) else None,
        "gamma": spec.gamma,
        "kind": spec.kind,
        "order": spec.order,
        "ts": spec.gf.T,
        "variable": "z^-1 ascending",
        "num": list(f.tf.num.coeffs),
        "den": list(f.tf.den.coeffs),
        "stability": analyze(f).classification,
    }
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def _load_filter_document(path: str) -> IIRFilter:
    with open(path) as fh:
        doc = json.load(fh)
    unknown = set(doc) - FILTER_DOC_FIELDS
    if unknown:
        _usage_fail(f"unknown filter-document fields: {sorted(unknown)}")
    missing = FILTER_DOC_FIELDS - {"provenance"} - set(doc)
    if missing:
        _usage_fail(f"filter document missing fields: {sorted(missing)}")
    if doc["schema_version"] != SCHEMA_VERSION:
        _usage_fail(f"unsupported schema_version {doc['schema_version']!r}")
    gf = GeneratingFunction(doc["family"], alpha=doc["alpha"] or 0.0, T=doc["ts"])
    spec = RealizationSpec(doc["gamma"], doc["kind"], doc["order"], gf)
    tf = RationalFn(Polynomial(doc["num"]), Polynomial(doc["den"]))
    return IIRFilter(tf, spec, tf.num.degree, tf.den.degree)


def _filter_csv(f: IIRFilter) -> str:
    lines = ["k,num,den"]
    num, den = f.tf.num.coeffs, f.tf.den.coeffs
    for k in range(max(len(num), len(den))):
        n = repr(num[k]) if k < len(num) else ""
        d = repr(den[k]) if k < len(den) else ""
        lines.append(f"{k},{n},{d}")
    return "\n".join(lines) + "\n"


def cmd_synth(args) -> int:
    spec = _build_spec(args)
    try:
        f = realize(spec)
    except FodiError as exc:
        print(f"fodi synth: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    if args.format == "json":
        text = json.dumps(_filter_document(f), indent=2) + "\n"
    else:
        text = _filter_csv(f)
    _emit(text, args.out)
    return 0


def _objective_config(args, w: float) -> ObjectiveConfig:
    grid = make_grid(OMEGA_FLOOR, nyquist(args.ts), DEFAULT_POINTS)
    return ObjectiveConfig(
        w=w, grid=grid, gamma=args.gamma, kind=KIND_FLAG[args.kind], T=args.ts
    )


def cmd_optimize(args) -> int:
    if not is_interpolated(args.family):
        _usage_fail(f"family {args.family} has no interpolation weight to optimize")
    args.alpha = NOMINAL_ALPHA[args.family]  # placeholder so _build_spec validates
    spec = _build_spec(args)
    if not 0.0 <= args.w <= 1.0:
        _usage_fail(f"--w {args.w} outside [0, 1]")
    cfg = _objective_config(args, args.w)

    def objective(alpha: float) -> float:
        return evaluate_alpha(alpha, args.family, args.order, cfg).J

    ga_cfg = GAConfig(population=args.pop, generations=args.gens, seed=args.seed)
    try:
        result = ga_minimize(objective, ga_cfg, nominal_alpha=NOMINAL_ALPHA[args.family])
    except FodiError as exc:
        print(f"fodi optimize: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL

    best = evaluate_alpha(result.alpha_opt, args.family, args.order, cfg)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "family": args.family,
        "gamma": args.gamma,
        "kind": KIND_FLAG[args.kind],
        "order": args.order,
        "ts": args.ts,
        "w": args.w,
        "norm": cfg.norm,
        "band": [OMEGA_FLOOR, nyquist(args.ts)],
        "points": DEFAULT_POINTS,
        "seed": args.seed,
        "population": ga_cfg.population,
        "generations": ga_cfg.generations,
        "alpha_opt": result.alpha_opt,
        "J_min": result.J_min,
        "J_mag": best.J_mag,
        "J_phase": best.J_phase,
        "nominal_alpha": NOMINAL_ALPHA[args.family],
        "J_nominal": result.J_nominal,
        "evaluations": result.evaluations,
        "history": list(result.history),
    }
    exit_code = 0
    if args.oracle:
        a_grid, j_grid = grid_search(objective, 0.0, 1.0, 1e-3)
        delta = abs(result.alpha_opt - a_grid)
        doc["oracle"] = {"alpha_grid": a_grid, "J_grid": j_grid, "alpha_delta": delta}
        if delta > ORACLE_TOL:
            print(
                f"fodi optimize: GA alpha {result.alpha_opt:.6f} disagrees with "
                f"grid oracle {a_grid:.6f} by {delta:.2e} (> {ORACLE_TOL})",
                file=sys.stderr,
            )
            exit_code = EXIT_ORACLE
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return exit_code


BODE_HEADER = (
    "omega_rad_s,mag_db_ideal,mag_db_filter,phase_deg_ideal,phase_deg_filter,"
    "mag_err_db,phase_err_deg"
)


def cmd_bode(args) -> int:
    if args.doc:
        f = _load_filter_document(args.doc)
    else:
        spec = _build_spec(args)
        try:
            f = realize(spec)
        except FodiError as exc:
            print(f"fodi bode: {type(exc).__name__}: {exc}", file=sys.stderr)
            return EXIT_NUMERICAL
    T = f.spec.gf.T
    if args.band:
        try:
            lo, hi = (float(v) for v in args.band.split(","))
        except ValueError:
            _usage_fail(f"--band must be LO,HI; got {args.band!r}")
    else:
        lo, hi = OMEGA_FLOOR, nyquist(T)
    if hi > nyquist(T) * (1 + 1e-12):
        _usage_fail(f"band upper edge {hi} exceeds the Nyquist frequency {nyquist(T):.6g}")
    try:
        grid = make_grid(lo, hi, args.points)
    except FodiError as exc:
        _usage_fail(str(exc))
    w, mag, phase, ok = response_curves(f.tf, grid, T)
    sign = 1.0 if f.spec.kind == "differentiator" else -1.0
    lines = [BODE_HEADER]
    for o, m, p in zip(w, mag, phase):
        o, m, p = float(o), float(m), float(p)
        im = sign * 20.0 * f.spec.gamma * math.log10(o)
        ip = sign * 90.0 * f.spec.gamma
        lines.append(
            f"{o!r},{im!r},{m!r},{ip!r},{p!r},{im - m!r},{ip - p!r}"
        )
    excluded = int(len(grid.omegas) - len(w))
    print(f"excluded near-pole points: {excluded}", file=sys.stderr)
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_compare(args) -> int:
    if not args.case:
        _usage_fail("at least one --case is required")
    cases = []
    for raw in args.case:
        family, _, alpha_text = raw.partition(":")
        if family not in FAMILIES:
            _usage_fail(f"unknown family in --case {raw!r}")
        alpha = None
        if alpha_text:
            try:
                alpha = float(alpha_text)
            except ValueError:
                _usage_fail(f"bad alpha in --case {raw!r}")
        if is_interpolated(family) and alpha is None:
            _usage_fail(f"--case {raw!r} needs an alpha (family[:alpha])")
        if not is_interpolated(family) and alpha is not None:
            _usage_fail(f"--case {raw!r}: pure family takes no alpha")
        cases.append((family, alpha))
    for flag in ("gamma", "kind", "order"):
        if getattr(args, flag) is None:
            _usage_fail(f"--{flag} is required")
    if not 0.0 <= args.w <= 1.0:
        _usage_fail(f"--w {args.w} outside [0, 1]")
    cfg = _objective_config(args, args.w)
    lines = ["family,alpha,order,J,J_mag,J_phase,stability"]
    for family, alpha in cases:
        gf = GeneratingFunction(family, alpha=alpha or 0.0, T=args.ts)
        spec = RealizationSpec(args.gamma, KIND_FLAG[args.kind], args.order, gf)
        try:
            f = realize(spec)
        except FodiError as exc:
            print(f"fodi compare: {type(exc).__name__}: {exc}", file=sys.stderr)
            return EXIT_NUMERICAL
        val = evaluate(f, cfg)
        cls = analyze(f).classification
        a_text = "" if alpha is None else repr(alpha)
        lines.append(
            f"{family},{a_text},{args.order},{val.J!r},{val.J_mag!r},{val.J_phase!r},{cls}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> _CliParser:
    parser = _CliParser(prog="fodi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", parents=[], help="realize a filter and emit its document")
    _spec_args(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("optimize", help="GA-optimize the interpolation weight")
    _spec_args(p, with_alpha=False)
    p.add_argument("--w", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pop", type=int, default=GAConfig.population)
    p.add_argument("--gens", type=int, default=GAConfig.generations)
    p.add_argument("--oracle", action="store_true",
                   help="also run the grid-search oracle and report the delta")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("bode", help="export Bode data as CSV")
    _spec_args(p)
    p.add_argument("--doc", default=None, help="read the filter from a JSON document")
    p.add_argument("--points", type=int, default=DEFAULT_POINTS)
    p.add_argument("--band", default=None, help="LO,HI in rad/s (default 1e-4,Nyquist)")
    p.set_defaults(func=cmd_bode)

    p = sub.add_parser("compare", help="objective summary for several schemes")
    p.add_argument("--case", action="append", default=[],
                   help="family or family:alpha; repeatable")
    p.add_argument("--gamma", type=float)
    p.add_argument("--kind", choices=sorted(KIND_FLAG))
    p.add_argument("--order", type=int)
    p.add_argument("--ts", type=float, default=0.001)
    p.add_argument("--w", type=float, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
