"""Command-line front end.

Every subcommand produces one table. CSV output is a header line plus one
line per row; JSON output is ``{"params": {...}, "rows": [...]}`` with the
same column names. Floats are written as their shortest round-trip decimal
(``repr``) in both formats, so the two encode identical values.

Exit status is 0 on success and 2 on bad arguments or out-of-domain values.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict

import numpy as np

from .channel import joint_distribution, mutual_information
from .copier import MediumNoise, SourceDistribution, copy_closed_form
from .energy import copy_bound, energy_report, sweep
from .mc_oracle import (
    McConfig,
    empirical_energy_audit,
    empirical_mutual_information,
    mutual_information_std_error,
    simulate_channel,
)
from .thermo import ThermalMedium


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _plain(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


def render(params: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        doc = {
            "params": {k: _plain(v) for k, v in params.items()},
            "rows": [{k: _plain(v) for k, v in row.items()} for row in rows],
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(rows[0]))
    for row in rows:
        writer.writerow([_fmt(v) for v in row.values()])
    return buf.getvalue()


def _cmd_sweep(args):
    spacing = "log" if args.log else "linear"
    rows = sweep(args.beta, args.delta_min, args.delta_max, args.steps, spacing)
    params = {
        "beta": args.beta,
        "delta_min": args.delta_min,
        "delta_max": args.delta_max,
        "steps": args.steps,
        "spacing": spacing,
    }
    return params, [r.asdict() for r in rows]


def _cmd_limit(args):
    return {"beta": args.beta}, [{"beta": args.beta, "w_min": copy_bound(args.beta)}]


def _cmd_report(args):
    r = energy_report(ThermalMedium(args.beta, args.delta))
    row = {"beta": args.beta, **asdict(r)}
    row["w"] = row.pop("w_per_useful_bit")
    return {"beta": args.beta, "delta": args.delta}, [row]


def _cmd_copy(args):
    result = copy_closed_form(SourceDistribution(args.p0), MediumNoise(args.b))
    rows = []
    for name in ("reduced_a", "reduced_b"):
        diag = getattr(result, name).diagonal()
        rows += [{"quantity": name, "row": i, "col": i, "value": float(diag[i])} for i in range(2)]
    joint = result.joint_after.matrix
    for i in range(4):
        for j in range(4):
            rows.append({"quantity": "joint_after", "row": i, "col": j, "value": float(joint[i, j].real)})
    return {"p0": args.p0, "b": args.b}, rows


def _cmd_channel(args):
    joint = joint_distribution(SourceDistribution(args.p0), MediumNoise(args.b))
    row = {"p0": args.p0, "b": args.b}
    for i in range(2):
        for j in range(2):
            row[f"p_x{i}y{j}"] = float(joint.p_xy[i, j])
    row["p_y0"], row["p_y1"] = float(joint.p_y[0]), float(joint.p_y[1])
    row["info_bits"] = mutual_information(joint)
    return {"p0": args.p0, "b": args.b}, [row]


def _cmd_mc(args):
    config = McConfig(args.trials, args.seed, args.p0, args.b)
    counts = simulate_channel(config, workers=args.workers)
    exact = mutual_information(joint_distribution(SourceDistribution(args.p0), MediumNoise(args.b)))
    row = asdict(counts)
    row["info_bits"] = empirical_mutual_information(counts)
    row["std_error"] = mutual_information_std_error(counts)
    row["info_bits_closed_form"] = exact
    params = {"p0": args.p0, "b": args.b, "trials": args.trials, "seed": args.seed}
    return params, [row]


def _cmd_mc_energy(args):
    medium = ThermalMedium(args.beta, args.delta)
    w_emp = empirical_energy_audit(medium, args.trials, args.seed, workers=args.workers)
    params = {"beta": args.beta, "delta": args.delta, "trials": args.trials, "seed": args.seed}
    row = {**params, "w_empirical": w_emp, "w_closed_form": energy_report(medium).w_per_useful_bit}
    return params, [row]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thermocopy",
        description="Energy cost of copying a bit onto a thermally noisy two-level medium.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", parents=[common], help="energy per useful bit over a delta grid")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--delta-min", type=float, required=True)
    p.add_argument("--delta-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--log", action="store_true", help="logarithmic grid (default linear)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("limit", parents=[common], help="delta -> 0 limit ln(4)/beta")
    p.add_argument("--beta", type=float, required=True)
    p.set_defaults(func=_cmd_limit)

    p = sub.add_parser("report", parents=[common], help="full energy report at one point")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("copy", parents=[common], help="density matrices after copying")
    p.add_argument("--p0", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.set_defaults(func=_cmd_copy)

    p = sub.add_parser("channel", parents=[common], help="joint table and transinformation")
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--p0", type=float, default=0.5)
    p.set_defaults(func=_cmd_channel)

    p = sub.add_parser("mc", parents=[common], help="sample the channel")
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p0", type=float, default=0.5)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=_cmd_mc)

    p = sub.add_parser("mc-energy", parents=[common], help="sampled energy per useful bit")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=_cmd_mc_energy)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        params, rows = args.func(args)
    except ValueError as exc:
        print(f"thermocopy {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text = render(params, rows, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())
