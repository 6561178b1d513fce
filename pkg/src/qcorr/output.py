"""CSV, SVG and metadata writers.  All output is byte-deterministic."""
from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from .sweep import CSV_COLUMNS, MeasureRecord, group_series

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22",
)
MEASURES = ("consonance", "uin")

PANEL_W, PANEL_H = 420, 300
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 60, 20, 30, 45
LEGEND_W = 230


def write_csv(records: Sequence[MeasureRecord], path) -> None:
    if not records:
        raise ValueError("write_csv needs at least one record")
    path = Path(path)
    try:
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for rec in records:
                writer.writerow(rec.csv_fields())
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc.strerror or exc}") from exc


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _label(key: tuple) -> str:
    region, *pairs = key
    names = {"lambda": "λ", "psi": "ψ", "omega": "ω", "t_hawking": "T"}
    return region + " " + " ".join(f"{names[k]}={v:.4g}" for k, v in pairs)


def _x_value(rec: MeasureRecord, x_axis: str) -> float:
    return {"lambda": rec.lam, "psi": rec.psi, "omega": rec.omega, "t_hawking": rec.t_hawking}[x_axis]


def render_svg(records: Sequence[MeasureRecord], path, x_axis: str = "t_hawking",
               series_keys: Sequence[str] = MEASURES, title: str = "") -> None:
    """Line chart with one panel per measure in ``series_keys`` and one curve per series.

    The x axis is logarithmic when it is ``t_hawking``; non-positive x values
    are dropped from a log axis.
    """
    if not records:
        raise ValueError("render_svg needs at least one record")
    log_x = x_axis == "t_hawking"
    groups = group_series(records, x_axis)

    def xform(x: float) -> float:
        return math.log10(x) if log_x else x

    xs = [xform(_x_value(r, x_axis)) for r in records if not (log_x and _x_value(r, x_axis) <= 0)]
    if not xs:
        raise ValueError("no plottable x values")
    x_lo, x_hi = min(xs), max(xs)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5

    n_panels = len(series_keys)
    width = n_panels * PANEL_W + LEGEND_W
    height = PANEL_H + 20
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{width / 2:.1f}" y="14" text-anchor="middle" font-size="12">{escape(title)}</text>')

    for p, measure in enumerate(series_keys):
        ox = p * PANEL_W
        ys = [getattr(r, measure) for r in records]
        y_lo, y_hi = 0.0, max(1.0, max(ys))
        pw = PANEL_W - MARGIN_L - MARGIN_R
        ph = PANEL_H - MARGIN_T - MARGIN_B

        def px(x, _ox=ox, _pw=pw):
            return _ox + MARGIN_L + (xform(x) - x_lo) / (x_hi - x_lo) * _pw

        def py(y, _ph=ph, _hi=y_hi):
            return MARGIN_T + 20 + (1 - (y - y_lo) / (_hi - y_lo)) * _ph

        x0, y0 = ox + MARGIN_L, MARGIN_T + 20 + ph
        out.append(f'<rect x="{x0}" y="{MARGIN_T + 20}" width="{pw}" height="{ph}" fill="none" stroke="black"/>')
        out.append(f'<text x="{x0 + pw / 2:.1f}" y="{MARGIN_T + 14}" text-anchor="middle">{escape(measure)}</text>')
        for i in range(6):
            yv = y_lo + (y_hi - y_lo) * i / 5
            out.append(f'<text x="{x0 - 5}" y="{_fmt(py(yv) + 4)}" text-anchor="end">{yv:.2f}</text>')
        if log_x:
            ticks = [10.0**k for k in range(math.ceil(x_lo), math.floor(x_hi) + 1)]
        else:
            ticks = [x_lo + (x_hi - x_lo) * i / 5 for i in range(6)]
        for tv in ticks:
            label = f"1e{round(math.log10(tv))}" if log_x else f"{tv:.2f}"
            out.append(f'<text x="{_fmt(px(tv))}" y="{y0 + 15}" text-anchor="middle">{label}</text>')
        out.append(f'<text x="{x0 + pw / 2:.1f}" y="{y0 + 32}" text-anchor="middle">{escape(x_axis)}</text>')

        for s, (key, recs) in enumerate(groups.items()):
            pts = [(px(_x_value(r, x_axis)), py(getattr(r, measure)))
                   for r in recs if not (log_x and _x_value(r, x_axis) <= 0)]
            if not pts:
                continue
            color = PALETTE[s % len(PALETTE)]
            coords = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in pts)
            out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{coords}"/>')

    lx = n_panels * PANEL_W + 10
    for s, key in enumerate(groups):
        y = MARGIN_T + 30 + 16 * s
        color = PALETTE[s % len(PALETTE)]
        out.append(f'<line x1="{lx}" y1="{y - 4}" x2="{lx + 18}" y2="{y - 4}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 24}" y="{y}">{escape(_label(key))}</text>')
    out.append("</svg>")

    path = Path(path)
    try:
        path.write_text("\n".join(out) + "\n", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OSError(f"cannot write SVG to {path}: {exc.strerror or exc}") from exc


def series_extrema(records: Sequence[MeasureRecord], x_axis: str, measure: str) -> list[dict]:
    """Locate the minimum of ``measure`` along each series.

    A minimum counts as interior only if it lies strictly below the values at
    both ends of the series; a flat run starting at the first point is not a dip.
    """
    out = []
    for key, recs in group_series(records, x_axis).items():
        vals = [getattr(r, measure) for r in recs]
        k = min(range(len(vals)), key=vals.__getitem__)
        out.append({
            "series": _label(key),
            "measure": measure,
            "min_value": vals[k],
            "min_at": _x_value(recs[k], x_axis),
            "min_index": k,
            "interior": 0 < k < len(vals) - 1 and vals[k] < vals[0] and vals[k] < vals[-1],
            "first_value": vals[0],
            "last_value": vals[-1],
        })
    return out


def write_metadata(meta: dict, path) -> None:
    Path(path).write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n", encoding="utf-8", newline="\n")
