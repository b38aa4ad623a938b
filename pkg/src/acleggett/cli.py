"""Command-line front end: scans, single evaluations, geometry, reports.

Exit codes: 0 success, 1 verification failure, 2 configuration or parse
error. All numeric output uses 12 significant digits.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from math import pi, sqrt

import numpy as np

from . import geometry, inequalities, measurement, spinstates, verify
from .evolution import PhaseSet, evolve
from .measurement import DegenerateNormalization, Setting
from .spinstates import Direction

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_CONFIG = 2


def _fmt(x):
    if isinstance(x, bool) or x is None:
        return "" if x is None else str(x).lower()
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _round12(obj):
    """Recursively format floats to 12 significant digits for JSON output."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _open_output(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _write_rows(rows, columns, config):
    out, close = _open_output(config.output)
    try:
        if config.format == "json":
            json.dump([_round12(r) for r in rows], out, indent=2)
            out.write("\n")
        else:
            writer = csv.writer(out)
            writer.writerow(columns)
            for r in rows:
                writer.writerow([_fmt(r[c]) for c in columns])
    finally:
        if close:
            out.close()


def _emit_record(record, config):
    out, close = _open_output(config.output)
    try:
        json.dump(_round12(record), out, indent=2)
        out.write("\n")
    finally:
        if close:
            out.close()


def cmd_leggett_scan(config) -> int:
    if config.steps < 1:
        raise SystemExit("leggett-scan: --steps must be >= 1")
    rows = []
    for phi in np.linspace(config.phi_min, config.phi_max, config.steps):
        s = inequalities.leggett_settings(phi)
        lhs = inequalities.leggett_lhs(measurement.analytic_correlation, s)
        bound = inequalities.leggett_bound(phi)
        rows.append(
            {
                "phi": float(phi),
                "lhs": lhs,
                "bound": bound,
                "violation": lhs - bound,
                "violated_flag": lhs > bound,
            }
        )
    _write_rows(rows, ["phi", "lhs", "bound", "violation", "violated_flag"], config)
    if config.plot:
        from . import plots

        plots.leggett_scan_figure(rows, config.plot)
    return EXIT_OK


def _load_chsh_settings(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
        return inequalities.ChshSettings(
            **{k: Setting(*doc[n]) for k, n in (("a", "a"), ("ap", "a'"), ("b", "b"), ("bp", "b'"))}
        )
    except (OSError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise SystemExit(f"chsh: malformed settings file {path}: {exc}")


def cmd_chsh(config) -> int:
    s = _load_chsh_settings(config.settings) if config.settings else inequalities.chsh_settings()
    value = inequalities.chsh_value(measurement.operator_correlation, s)
    _emit_record({"value": value, "bound": 2.0, "violated": value > 2.0}, config)
    return EXIT_OK


def cmd_correlate(config) -> int:
    a = Setting(config.theta_a, config.phi_a)
    b = Setting(config.theta_b, config.phi_b)
    phases = PhaseSet(config.phi_a, config.phi_b, 0.0, 0.0)
    psi_f = evolve(spinstates.initial_state(), phases)
    probs = measurement.joint_probabilities(
        psi_f, Direction(pi / 2, config.theta_a), Direction(pi / 2, config.theta_b)
    )
    record = {
        "operator": measurement.operator_correlation(a, b),
        "analytic": measurement.analytic_correlation(a, b),
        "p00": probs[0, 0],
        "p01": probs[0, 1],
        "p10": probs[1, 0],
        "p11": probs[1, 1],
    }
    try:
        record["pipeline"] = measurement.normalized_correlation(probs)
        record["degenerate"] = False
    except DegenerateNormalization:
        record["pipeline"] = None
        record["degenerate"] = True
    _emit_record(record, config)
    return EXIT_OK


def cmd_geometry(config) -> int:
    try:
        with open(config.layout) as fh:
            layout = geometry.load_layout(fh)
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        raise SystemExit(f"geometry: cannot load layout {config.layout}: {exc}")
    try:
        result = geometry.layout_phases(layout)
    except geometry.ExclusionZoneViolation as exc:
        raise SystemExit(f"geometry: {exc}")
    rows = []
    for idx, (num, ana) in enumerate(zip(result.numeric, result.analytic), start=1):
        rows.append(
            {
                "path_id": f"l{idx}",
                "phase_numeric": num,
                "phase_analytic": ana,
                "abs_diff": abs(num - ana),
                "winding": None,
            }
        )
    p = result.phases
    loop_phase = -2 * pi * layout.charge.k * result.loop_winding
    rows.append(
        {
            "path_id": "loop",
            "phase_numeric": loop_phase,
            "phase_analytic": loop_phase,
            "abs_diff": 0.0,
            "winding": result.loop_winding,
        }
    )
    _write_rows(rows, ["path_id", "phase_numeric", "phase_analytic", "abs_diff", "winding"], config)
    summary = {
        "phi1": p.phi1, "phi2": p.phi2, "phi3": p.phi3, "phi4": p.phi4,
        "phi_A": p.phi_a, "phi_B": p.phi_b, "gamma": p.gamma,
        "loop_winding": result.loop_winding,
    }
    print(json.dumps(_round12(summary)))
    if config.plot:
        from . import plots

        plots.layout_figure(layout, config.plot)
    return EXIT_OK


def cmd_convention_report(config) -> int:
    rng = np.random.default_rng(config.seed)
    phase_sets = [PhaseSet(*rng.uniform(-pi, pi, size=4)) for _ in range(config.n_phases)]
    thetas = [tuple(rng.uniform(0, 2 * pi, size=2)) for _ in range(config.n_thetas)]
    rows, summary = measurement.convention_report(phase_sets, thetas, eps_norm=config.tolerance)
    _write_rows(rows, measurement.CONVENTION_COLUMNS, config)
    summary["seed"] = config.seed
    summary["rng"] = "numpy default_rng (PCG64)"
    print(json.dumps(_round12(summary)))
    if config.plot:
        from . import plots

        plots.convention_report_figure(rows, config.plot)
    return EXIT_OK


def cmd_verify(config) -> int:
    names = config.suite or list(verify.SUITES)
    unknown = [n for n in names if n not in verify.SUITES]
    if unknown:
        raise SystemExit(f"verify: unknown suite(s) {', '.join(unknown)}")
    results = verify.run_suites(names, seed=config.seed)
    width = max(len(f"{r.suite}.{r.name}") for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.suite + '.' + r.name:<{width}}  {status}  {r.detail}")
    if "measurement" in names:
        rng = np.random.default_rng(config.seed)
        phase_sets = [PhaseSet(*rng.uniform(-pi, pi, size=4)) for _ in range(5)]
        thetas = [tuple(rng.uniform(0, 2 * pi, size=2)) for _ in range(5)]
        _, summary = measurement.convention_report(phase_sets, thetas)
        print("convention report (informational):", json.dumps(_round12(summary)))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ac-leggett",
        description="Four-spin phase-gate simulator and inequality toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", default=None, help="output file (default stdout)")
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--tolerance", type=float, default=1e-10)
        p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("leggett-scan", help="scan the inequality over a phase range")
    common(p)
    p.add_argument("--phi-min", type=float, default=0.0)
    p.add_argument("--phi-max", type=float, default=pi)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--plot", default=None, help="save a figure of the scan")
    p.set_defaults(func=cmd_leggett_scan)

    p = sub.add_parser("chsh", help="evaluate the four-setting Bell test")
    common(p)
    p.add_argument("--settings", default=None, help="JSON file with a, a', b, b' as [theta, phi]")
    p.set_defaults(func=cmd_chsh)

    p = sub.add_parser("correlate", help="single correlation evaluation, all routes")
    common(p)
    p.add_argument("--theta-a", type=float, required=True)
    p.add_argument("--phi-a", type=float, required=True)
    p.add_argument("--theta-b", type=float, required=True)
    p.add_argument("--phi-b", type=float, required=True)
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("geometry", help="phases from a layout JSON file")
    common(p)
    p.add_argument("--layout", required=True)
    p.add_argument("--plot", default=None, help="save a figure of the layout")
    p.set_defaults(func=cmd_geometry)

    p = sub.add_parser("convention-report", help="compare the two correlation conventions")
    common(p)
    p.add_argument("--n-phases", type=int, default=20)
    p.add_argument("--n-thetas", type=int, default=20)
    p.add_argument("--plot", default=None, help="save a figure of the comparison")
    p.set_defaults(func=cmd_convention_report)

    p = sub.add_parser("verify", help="run the invariant suites")
    common(p)
    p.add_argument("--suite", action="append", help="restrict to one suite (repeatable)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_CONFIG
        raise


if __name__ == "__main__":
    sys.exit(main())
