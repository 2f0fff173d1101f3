"""Deterministic CSV / JSON / SVG emitters for CLI artifacts.

All output is byte-identical across runs: fixed float formatting, fixed
key order, no timestamps, and SVG built from plain strings (no plotting
library metadata).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

CSV_SCHEMA_VERSION = 1


def fmt(x) -> str:
    """Canonical scalar formatting: 12 significant digits for floats."""
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        return f"{x:.12g}"
    if x is None:
        return ""
    return str(x)


def render_csv(schema: str, header: Sequence[str], rows: Sequence[Sequence]) -> str:
    lines = [f"# diracmorse csv v{CSV_SCHEMA_VERSION} schema={schema}"]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_csv(text: str):
    """Round-trip loader for render_csv output: (schema, header, rows)."""
    lines = [ln for ln in text.splitlines() if ln]
    head = lines[0]
    if not head.startswith("# diracmorse csv"):
        raise ValueError("not a diracmorse csv file")
    schema = head.split("schema=", 1)[1]
    header = lines[1].split(",")
    rows = []
    for ln in lines[2:]:
        row = []
        for cell in ln.split(","):
            if cell == "":
                row.append(None)
            else:
                try:
                    row.append(float(cell))
                except ValueError:
                    row.append(cell)
        rows.append(row)
    return schema, header, rows


def render_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# --- minimal self-contained SVG plotting --------------------------------

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
           "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


@dataclass
class Series:
    name: str
    x: List[float]
    y: List[float]
    kind: str = "line"  # line | scatter


def _ticks(lo: float, hi: float, target: int = 6) -> List[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / target
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 5.0, 10.0):
        if raw <= mult * mag:
            step = mult * mag
            break
    first = math.ceil(lo / step) * step
    out = []
    t = first
    while t <= hi + 1e-12 * abs(step):
        out.append(0.0 if abs(t) < 1e-12 * abs(step) else t)
        t += step
    return out


def svg_plot(
    series: Sequence[Series],
    title: str,
    xlabel: str,
    ylabel: str,
    width: int = 640,
    height: int = 480,
) -> str:
    """Self-contained SVG 1.1 line/scatter plot with axes and legend."""
    ml, mr, mt, mb = 70, 20, 36, 52
    pw, ph = width - ml - mr, height - mt - mb

    xs = [v for s in series for v in s.x if math.isfinite(v)]
    ys = [v for s in series for v in s.y if math.isfinite(v)]
    if not xs or not ys:
        xs, ys = [0.0, 1.0], [0.0, 1.0]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    padx, pady = 0.04 * (x1 - x0), 0.06 * (y1 - y0)
    x0, x1, y0, y1 = x0 - padx, x1 + padx, y0 - pady, y1 + pady

    def px(x: float) -> float:
        return ml + (x - x0) / (x1 - x0) * pw

    def py(y: float) -> float:
        return mt + ph - (y - y0) / (y1 - y0) * ph

    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">'
    )
    out.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>')
    out.append(
        f'<rect x="{ml}" y="{mt}" width="{pw}" height="{ph}" '
        f'fill="none" stroke="black" stroke-width="1"/>'
    )
    style = 'font-family="sans-serif" font-size="12"'
    for t in _ticks(x0 + padx, x1 - padx):
        X = px(t)
        out.append(f'<line x1="{X:.2f}" y1="{mt+ph}" x2="{X:.2f}" y2="{mt+ph+5}" stroke="black"/>')
        out.append(f'<text x="{X:.2f}" y="{mt+ph+18}" {style} text-anchor="middle">{t:g}</text>')
    for t in _ticks(y0 + pady, y1 - pady):
        Y = py(t)
        out.append(f'<line x1="{ml-5}" y1="{Y:.2f}" x2="{ml}" y2="{Y:.2f}" stroke="black"/>')
        out.append(f'<text x="{ml-8}" y="{Y+4:.2f}" {style} text-anchor="end">{t:g}</text>')
    out.append(
        f'<text x="{ml + pw/2:.0f}" y="{height-14}" {style} text-anchor="middle">{xlabel}</text>'
    )
    out.append(
        f'<text x="18" y="{mt + ph/2:.0f}" {style} text-anchor="middle" '
        f'transform="rotate(-90 18 {mt + ph/2:.0f})">{ylabel}</text>'
    )
    out.append(
        f'<text x="{width/2:.0f}" y="22" font-family="sans-serif" '
        f'font-size="14" text-anchor="middle">{title}</text>'
    )

    for i, s in enumerate(series):
        color = PALETTE[i % len(PALETTE)]
        pts = [
            (px(x), py(y))
            for x, y in zip(s.x, s.y)
            if math.isfinite(x) and math.isfinite(y)
        ]
        if s.kind == "scatter":
            for X, Y in pts:
                out.append(f'<circle cx="{X:.2f}" cy="{Y:.2f}" r="3" fill="{color}"/>')
        else:
            path = " ".join(
                f"{'M' if j == 0 else 'L'}{X:.2f},{Y:.2f}" for j, (X, Y) in enumerate(pts)
            )
            if path:
                out.append(f'<path d="{path}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = mt + 16 + 16 * i
        out.append(f'<line x1="{ml+pw-120}" y1="{ly-4}" x2="{ml+pw-100}" y2="{ly-4}" stroke="{color}" stroke-width="3"/>')
        out.append(f'<text x="{ml+pw-94}" y="{ly}" {style}>{s.name}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"


def svg_stack(panels: Sequence[str], width: int = 640, panel_height: int = 480) -> str:
    """Stack per-panel SVGs vertically into one self-contained document."""
    if len(panels) == 1:
        return panels[0]
    total = panel_height * len(panels)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{total}" viewBox="0 0 {width} {total}">'
    ]
    for i, panel in enumerate(panels):
        body = panel.replace('<svg xmlns="http://www.w3.org/2000/svg" ', f'<svg y="{i * panel_height}" ', 1)
        out.append(body.rstrip("\n"))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def figure_to_svg(payload: dict, width: int = 640, panel_height: int = 480) -> str:
    """Render a figure payload (panels of series) to a stacked SVG."""
    panels = []
    for panel in payload["panels"]:
        series = [
            Series(name=s["name"], x=list(s["x"]), y=list(s["y"]), kind=s.get("kind", "line"))
            for s in panel["series"]
        ]
        panels.append(
            svg_plot(
                series,
                title=f"{payload['name']}: {panel['name']}",
                xlabel=panel.get("xlabel", ""),
                ylabel=panel.get("ylabel", ""),
                width=width,
                height=panel_height,
            )
        )
    return svg_stack(panels, width=width, panel_height=panel_height)


def figure_to_rows(payload: dict):
    """Flatten a figure payload into CSV rows (panel, series, kind, x, y)."""
    rows = []
    for panel in payload["panels"]:
        for s in panel["series"]:
            for x, y in zip(s["x"], s["y"]):
                rows.append([panel["name"], s["name"], s.get("kind", "line"), float(x), float(y)])
    return rows
