"""Command-line entry point: ``qcorr point | sweep | figure``.

Exit status is 0 on success, 2 on usage errors and 1 on numeric or domain
errors.
"""
from __future__ import annotations

import argparse
import csv
import math
import re
import sys
from pathlib import Path

from .errors import QcorrError
from .hawking_channel import hawking_temperature
from .measures import UinConvention
from .output import render_svg, series_extrema, write_csv, write_metadata
from .presets import PRESET_IDS, PRESET_VERSION, get_preset
from .states import Bipartition
from .sweep import CSV_COLUMNS, SweepSpec, run_point, run_sweep

_PI_EXPR = re.compile(r"^\s*(?:([0-9.eE+-]+)\s*\*\s*)?pi\s*(?:/\s*([0-9.eE+-]+))?\s*$")


def real_or_pi(text: str) -> float:
    """Parse a float, or an expression like ``pi/4`` or ``3*pi/8``."""
    try:
        return float(text)
    except ValueError:
        pass
    m = _PI_EXPR.match(text.lower())
    if not m:
        raise argparse.ArgumentTypeError(f"not a number or pi expression: {text!r}")
    num = float(m.group(1)) if m.group(1) else 1.0
    den = float(m.group(2)) if m.group(2) else 1.0
    return num * math.pi / den


def regenerate_figure(fig_id: str, out_dir, svg: bool = False, workers: int | None = None) -> dict:
    """Run a figure preset and write ``<id>.csv``, ``<id>_meta.json`` and optionally ``<id>.svg``."""
    preset = get_preset(fig_id)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    records = run_sweep(preset.spec, workers=workers)
    write_csv(records, out_dir / f"{fig_id}.csv")
    if svg:
        render_svg(records, out_dir / f"{fig_id}.svg", x_axis=preset.x_axis, title=preset.caption)
    meta = {
        "figure": fig_id,
        "preset_version": PRESET_VERSION,
        "caption": preset.caption,
        "convention": preset.spec.convention.value,
        "assumptions": list(preset.assumptions),
        "rows": len(records),
        "flagged_rows": sum(1 for r in records if r.flags),
        "uin_minima": series_extrema(records, preset.x_axis, "uin"),
        "consonance_minima": series_extrema(records, preset.x_axis, "consonance"),
    }
    write_metadata(meta, out_dir / f"{fig_id}_meta.json")
    return meta


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcorr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pt = sub.add_parser("point", help="evaluate one parameter point and print a CSV row")
    pt.add_argument("--lambda", dest="lam", type=real_or_pi, required=True)
    pt.add_argument("--psi", type=real_or_pi, required=True, help="radians; 'pi/4' style accepted")
    pt.add_argument("--omega", type=real_or_pi, required=True)
    temp = pt.add_mutually_exclusive_group(required=True)
    temp.add_argument("--temp", type=real_or_pi, help="Hawking temperature T_H")
    temp.add_argument("--mass", type=real_or_pi, help="black-hole mass; T_H = 1/(8 pi M)")
    pt.add_argument("--region", choices=[b.value for b in Bipartition], required=True)
    pt.add_argument("--convention", choices=[c.value for c in UinConvention], default="strict")

    sw = sub.add_parser("sweep", help="run a sweep described by a JSON config")
    sw.add_argument("--config", required=True, type=Path)
    sw.add_argument("--out", type=Path, default=Path("."))

    fg = sub.add_parser("figure", help="regenerate a figure preset")
    fg.add_argument("figure", choices=PRESET_IDS)
    fg.add_argument("--out", type=Path, default=Path("."))
    fg.add_argument("--svg", action="store_true", help="also render an SVG chart")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "point":
            t_h = args.temp if args.temp is not None else hawking_temperature(args.mass).t_hawking
            rec = run_point(args.lam, args.psi, args.omega, t_h, args.region, args.convention)
            writer = csv.writer(sys.stdout, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            writer.writerow(rec.csv_fields())
        elif args.command == "sweep":
            spec = SweepSpec.from_json(args.config)
            args.out.mkdir(parents=True, exist_ok=True)
            path = args.out / "sweep.csv"
            write_csv(run_sweep(spec), path)
            print(path)
        else:
            meta = regenerate_figure(args.figure, args.out, svg=args.svg)
            print(f"{args.figure}: {meta['rows']} rows written to {args.out}")
    except (QcorrError, OSError, ValueError) as exc:
        print(f"qcorr: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
