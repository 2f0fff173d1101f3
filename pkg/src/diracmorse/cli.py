"""Command-line front end.

The CLI is a thin client of the HTTP service: by default it mounts the
FastAPI app in-process (no server needed), and --server points it at a
remote instance instead.  Exit codes: 0 success, 1 numeric failure,
2 usage error, 3 reproduction outside tolerance.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

import httpx

from . import reproduce as repro
from .render import (
    Series,
    figure_to_rows,
    figure_to_svg,
    render_csv,
    render_json,
    svg_plot,
    svg_stack,
)
from .service import app

EXIT_OK = 0
EXIT_NUMERIC = 1
EXIT_USAGE = 2
EXIT_TOLERANCE = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def make_client(server: Optional[str]) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    # In-process client over the same ASGI app; no server process needed.
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

        return TestClient(app, raise_server_exceptions=False)


def post(client: httpx.Client, path: str, payload: Optional[dict] = None) -> dict:
    try:
        resp = client.post(path, json=payload)
    except httpx.HTTPError as exc:
        raise CliError(f"request failed: {exc}", EXIT_NUMERIC) from exc
    if resp.status_code in (400, 422):
        raise CliError(f"invalid request: {resp.text}", EXIT_USAGE)
    if resp.status_code != 200:
        raise CliError(f"numeric failure: {resp.text}", EXIT_NUMERIC)
    return resp.json()


def parse_grid(text: str) -> list:
    """Grid syntax: 'lo:hi:n' (inclusive linspace) or 'v1,v2,...'."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise CliError(f"bad grid {text!r}, expected lo:hi:n", EXIT_USAGE)
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        if n < 1:
            raise CliError("grid point count must be >= 1", EXIT_USAGE)
        if n == 1:
            return [lo]
        step = (hi - lo) / (n - 1)
        return [lo + i * step for i in range(n)]
    return [float(v) for v in text.split(",") if v]


def write_output(text: str, out: Optional[str], default: str = "-") -> None:
    target = out if out is not None else default
    if target == "-":
        sys.stdout.write(text)
    else:
        with open(target, "w") as fh:
            fh.write(text)


def add_model_flags(p: argparse.ArgumentParser, require_model: bool = True) -> None:
    p.add_argument("--units", choices=("fm", "au"), default="fm")
    p.add_argument("--V0", type=float, required=require_model)
    p.add_argument("--r0", type=float, required=require_model)
    p.add_argument("--alpha", type=float, required=require_model)
    p.add_argument("--M", type=float, required=require_model)
    p.add_argument("--kappa", type=int, required=require_model)
    p.add_argument("--theta", type=float, default=70.0, help="rotation angle in degrees")
    p.add_argument("--Nmax", type=int, default=200)
    p.add_argument("--b0", type=float, default=None, help="oscillator length (default r0/4)")
    p.add_argument("--quad-order", type=int, default=None)
    p.add_argument("--c-factor", type=float, default=1.0)
    p.add_argument("--bound-tol", type=float, default=None)
    p.add_argument("--stab-tol", type=float, default=None)


def add_output_flags(p: argparse.ArgumentParser, formats=("csv", "json", "svg")) -> None:
    p.add_argument("--out", default=None, help="output path ('-' for stdout)")
    p.add_argument("--format", choices=formats, default="csv")


def model_payload(args) -> dict:
    payload = dict(
        units=args.units,
        V0=args.V0,
        r0=args.r0,
        alpha=args.alpha,
        M=args.M,
        kappa=args.kappa,
        theta_deg=args.theta,
        N_max=args.Nmax,
        c_factor=args.c_factor,
    )
    if args.b0 is not None:
        payload["b0"] = args.b0
    if args.quad_order is not None:
        payload["quad_order"] = args.quad_order
    if args.bound_tol is not None:
        payload["bound_tol"] = args.bound_tol
    if args.stab_tol is not None:
        payload["stab_tol"] = args.stab_tol
    return payload


SPECTRUM_HEADER = ("class", "E_r", "E_i", "Gamma", "kappa", "index", "label")
CLASS_ORDER = {"bound": 0, "resonance": 1, "continuum": 2}


def cmd_solve(args, client: httpx.Client) -> int:
    data = post(client, "/solve", model_payload(args))
    states = sorted(data["states"], key=lambda s: (CLASS_ORDER[s["cls"]], s["E_r"], s["E_i"]))
    if args.format == "json":
        write_output(render_json(data), args.out)
    elif args.format == "csv":
        rows = [
            [s["cls"], s["E_r"], s["E_i"], s["Gamma"], s["kappa"], s["index"], s["label"]]
            for s in states
        ]
        write_output(render_csv("spectrum", SPECTRUM_HEADER, rows), args.out)
    else:
        series = []
        for cls in ("bound", "resonance", "continuum"):
            pts = [s for s in states if s["cls"] == cls]
            series.append(
                Series(cls, [s["E_r"] for s in pts], [s["E_i"] for s in pts], "scatter")
            )
        svg = svg_plot(series, "spectrum", f"E_r ({args.units})", f"E_i ({args.units})")
        write_output(svg, args.out, default="spectrum.svg")
    return EXIT_OK


def cmd_scan(args, client: httpx.Client) -> int:
    payload = model_payload(args)
    payload["which"] = args.which
    payload["grid"] = parse_grid(args.grid)
    data = post(client, "/scan", payload)
    if args.format == "json":
        write_output(render_json(data), args.out)
        return EXIT_OK
    if args.format == "csv":
        rows = []
        for tr in data["trajectories"]:
            for g, pt in zip(tr["grid"], tr["points"]):
                if pt is None:
                    continue
                rows.append([args.which, tr["key"], g, pt["cls"], pt["E_r"], pt["E_i"], pt["Gamma"]])
        header = ("parameter", "trajectory", "value", "class", "E_r", "E_i", "Gamma")
        write_output(render_csv("trajectories", header, rows), args.out)
        return EXIT_OK
    panels = []
    for yname in ("E_r", "Gamma"):
        series = []
        for tr in data["trajectories"]:
            xs = [g for g, pt in zip(tr["grid"], tr["points"]) if pt is not None]
            ys = [pt[yname] for pt in tr["points"] if pt is not None]
            if len(xs) >= 2:
                series.append(Series(f"state {tr['key']}", xs, ys, "line"))
        panels.append(svg_plot(series, f"{yname} vs {args.which}", args.which, yname))
    write_output(svg_stack(panels), args.out, default="scan.svg")
    return EXIT_OK


def cmd_pss(args, client: httpx.Client) -> int:
    payload = model_payload(args)
    if args.which is not None:
        if args.grid is None:
            raise CliError("--grid is required with --which", EXIT_USAGE)
        payload["which"] = args.which
        payload["grid"] = parse_grid(args.grid)
        data = post(client, "/pss/splittings", payload)
        if args.format == "json":
            write_output(render_json(data), args.out)
            return EXIT_OK
        rows = []
        for point in data["points"]:
            for i, m in enumerate(point["report"]["members"], start=1):
                rows.append([args.which, point["value"], i, m["dE"], m["dGamma"]])
        header = ("parameter", "value", "pair", "dE", "dGamma")
        write_output(render_csv("splittings", header, rows), args.out)
        return EXIT_OK
    data = post(client, "/pss/doublets", payload)
    if args.format == "json":
        write_output(render_json(data), args.out)
        return EXIT_OK
    rows = []
    ka, kb = data["kappa_pair"]
    for i, m in enumerate(data["members"], start=1):
        rows.append(
            [i, ka, kb, m["a"]["E_r"], m["a"]["Gamma"], m["b"]["E_r"], m["b"]["Gamma"], m["dE"], m["dGamma"]]
        )
    header = ("pair", "kappa_a", "kappa_b", "a_E_r", "a_Gamma", "b_E_r", "b_Gamma", "dE", "dGamma")
    write_output(render_csv("doublets", header, rows), args.out)
    return EXIT_OK


TABLE_HEADER = (
    "column", "row", "ref_re", "ref_im", "computed_re", "computed_im",
    "deviation", "tolerance", "passed",
)


def cmd_reproduce(args, client: httpx.Client) -> int:
    data = post(client, f"/reproduce/{args.target}")
    if data["kind"] == "table":
        if args.format == "svg":
            raise CliError("table targets support csv and json only", EXIT_USAGE)
        if args.format == "json":
            write_output(render_json(data), args.out, default=f"{args.target}.json")
        else:
            rows = [[r[k] for k in TABLE_HEADER] for r in data["rows"]]
            write_output(render_csv("comparison", TABLE_HEADER, rows), args.out,
                         default=f"{args.target}.csv")
        if not data["passed"]:
            failing = [r for r in data["rows"] if not r["passed"]]
            for r in failing:
                sys.stderr.write(
                    f"FAIL {args.target} {r['column']} row {r['row']}: "
                    f"deviation {r['deviation']:.3e} > tolerance {r['tolerance']:.1e}\n"
                )
            return EXIT_TOLERANCE
        return EXIT_OK
    if args.format == "json":
        write_output(render_json(data), args.out, default=f"{args.target}.json")
    elif args.format == "csv":
        header = ("panel", "series", "kind", "x", "y")
        write_output(render_csv("figure", header, figure_to_rows(data)), args.out,
                     default=f"{args.target}.csv")
    else:
        write_output(figure_to_svg(data), args.out, default=f"{args.target}.svg")
    return EXIT_OK


def cmd_serve(args, client: httpx.Client) -> int:
    import uvicorn

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diracmorse",
        description="Dirac-Morse bound/resonant states by complex scaling",
    )
    parser.add_argument("--server", default=None, help="base URL of a remote service")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("solve", help="solve one configuration")
    add_model_flags(p)
    add_output_flags(p)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("scan", help="trajectory scan over one parameter")
    add_model_flags(p)
    p.add_argument("--which", choices=("V0", "r0", "alpha"), required=True)
    p.add_argument("--grid", required=True, help="lo:hi:n or comma-separated values")
    add_output_flags(p)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("pss", help="pseudospin doublet pairing / splitting scan")
    add_model_flags(p)
    p.add_argument("--which", choices=("V0", "r0", "alpha"), default=None)
    p.add_argument("--grid", default=None)
    add_output_flags(p, formats=("csv", "json"))
    p.set_defaults(fn=cmd_pss)

    p = sub.add_parser("reproduce", help="regenerate a benchmark artifact")
    p.add_argument("target", choices=repro.TARGETS)
    add_output_flags(p)
    p.set_defaults(fn=cmd_reproduce)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with make_client(args.server) as client:
            return args.fn(args, client)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except Exception as exc:  # numeric or environment failure
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
