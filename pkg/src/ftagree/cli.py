"""Command-line surface.

Subcommands:
  simulate <file> [--out traj.csv] [--report report.json]
  bounds <file>
  spectral <file>
  repro [--outdir DIR]

Exit codes: 0 success, 2 config/parse error, 3 disconnected topology
where a bound was requested, 4 simulation timed out before agreement.
"""

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import bounds as bounds_mod
from .engine import Scenario, integrate
from .errors import DisconnectedTopology, FtagreeError, ValidationError
from .graph import exponent_transform, is_connected, laplacian
from .output import write_trajectory_csv
from .protocols import ProtocolKind
from .repro import run_repro
from .scenario import parse_scenario
from .spectral import algebraic_connectivity, eigenvalues_symmetric

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DISCONNECTED = 3
EXIT_TIMEOUT = 4


def bounds_command(sc: Scenario) -> bounds_mod.BoundsReport:
    """Compose spectral quantities and the closed-form time bounds for a
    scenario. All referenced topologies must be connected."""
    alpha = sc.protocol.alpha
    if sc.protocol.kind is ProtocolKind.LINEAR or not 0.0 < alpha < 1.0:
        raise ValidationError("time bounds require a nonlinear protocol with alpha in (0,1)")
    if sc.schedule is not None:
        referenced = [name for name, _ in sc.schedule.phases]
    else:
        referenced = [sc.topology]
    for name in referenced:
        if not is_connected(sc.topologies[name]):
            raise DisconnectedTopology(f"topology {name!r} is not connected")

    base = sc.topologies[referenced[0]]
    lam2_a = algebraic_connectivity(base)
    lam2_b = algebraic_connectivity(exponent_transform(base, alpha))
    v1_0 = bounds_mod.v1(base, sc.x0)
    v2_0 = bounds_mod.v2(sc.x0)
    t1 = bounds_mod.t1_bound(v1_0, lam2_a, alpha)
    t2 = bounds_mod.t2_bound(v2_0, lam2_b, alpha)
    if sc.schedule is not None:
        lam_min = min(
            algebraic_connectivity(exponent_transform(sc.topologies[name], alpha))
            for name in dict.fromkeys(referenced)
        )
        t3 = bounds_mod.t3_bound(v2_0, lam_min, alpha)
    else:
        t3 = t2
    return bounds_mod.BoundsReport(
        v1_0=v1_0,
        v2_0=v2_0,
        lambda2_A=lam2_a,
        lambda2_B=lam2_b,
        t1=t1,
        t2=t2,
        t3=t3,
        t1_limit_alpha0=bounds_mod.t1_limit_alpha0(v1_0, lam2_a),
        alpha=alpha,
    )


def _read_scenario(path: str) -> Scenario:
    return parse_scenario(Path(path).read_text(encoding="utf-8"))


def _cmd_simulate(args) -> int:
    sc = _read_scenario(args.file)
    traj = integrate(sc)
    if args.out:
        write_trajectory_csv(traj, args.out)
    if args.report:
        summary = {
            "status": traj.status,
            "converged_at": traj.converged_at,
            "final_value": traj.final_value,
            "samples": len(traj.samples),
        }
        Path(args.report).write_text(
            json.dumps(summary, indent=2) + "\n", encoding="utf-8"
        )
    print(f"status = {traj.status}")
    if traj.converged_at is not None:
        print(f"converged_at = {traj.converged_at:.6f}")
        print(f"final_value = {traj.final_value:.9g}")
    if traj.status != "Converged":
        print("simulation timed out before agreement", file=sys.stderr)
        return EXIT_TIMEOUT
    return EXIT_OK


def _cmd_bounds(args) -> int:
    sc = _read_scenario(args.file)
    report = bounds_command(sc)
    for key, value in dataclasses.asdict(report).items():
        print(f"{key} = {value:.6f}")
    return EXIT_OK


def _cmd_spectral(args) -> int:
    sc = _read_scenario(args.file)
    for name in sorted(sc.topologies):
        spec = eigenvalues_symmetric(laplacian(sc.topologies[name]))
        vals = ", ".join(f"{v:.9g}" for v in spec.eigenvalues)
        print(f"{name}: [{vals}] (residual {spec.residual:.3g})")
    return EXIT_OK


def _cmd_repro(args) -> int:
    result = run_repro()
    rows = [dataclasses.asdict(r) for r in result.reports]
    print(f"{'quantity':<32}{'paper':>12}{'computed':>14}{'abs_error':>12}")
    for r in result.reports:
        print(
            f"{r.quantity:<32}{r.paper_value:>12.4f}{r.computed_value:>14.6f}"
            f"{r.abs_error:>12.3g}"
        )
    print(f"reconstructed candidates: {len(result.candidates)}")
    print(f"lambda_min over schedule: {result.lambda_min:.6f}")
    for label, traj in (
        ("p1", result.traj_p1),
        ("p2", result.traj_p2),
        ("switching", result.traj_switching),
    ):
        print(f"{label}: {traj.status} at {traj.converged_at}")
    if args.outdir:
        outdir = Path(args.outdir)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "report.json").write_text(
            json.dumps(rows, indent=2) + "\n", encoding="utf-8"
        )
        write_trajectory_csv(result.traj_p1, outdir / "protocol1.csv")
        write_trajectory_csv(result.traj_p2, outdir / "protocol2.csv")
        write_trajectory_csv(result.traj_switching, outdir / "switching.csv")
    if any(
        t.status != "Converged"
        for t in (result.traj_p1, result.traj_p2, result.traj_switching)
    ):
        return EXIT_TIMEOUT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ftagree", description="Finite-time agreement simulator"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="integrate a scenario file")
    p_sim.add_argument("file")
    p_sim.add_argument("--out", help="trajectory CSV destination")
    p_sim.add_argument("--report", help="run-summary JSON destination")
    p_sim.set_defaults(func=_cmd_simulate)

    p_bounds = sub.add_parser("bounds", help="closed-form convergence bounds")
    p_bounds.add_argument("file")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_spec = sub.add_parser("spectral", help="Laplacian eigenvalues per topology")
    p_spec.add_argument("file")
    p_spec.set_defaults(func=_cmd_spectral)

    p_repro = sub.add_parser(
        "repro", help="reproduce the published six-agent example"
    )
    p_repro.add_argument("--outdir", help="directory for CSVs and report.json")
    p_repro.set_defaults(func=_cmd_repro)
    return parser


def run_cli(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        return args.func(args)
    except DisconnectedTopology as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (FtagreeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def entry() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    entry()
