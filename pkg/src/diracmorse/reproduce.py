"""Reproduction artifacts: benchmark tables and figure-style datasets.

Every builder returns a JSON-serializable dict; the CLI renders these
to CSV/SVG and the service returns them directly.  Table builders carry
per-row pass/fail against the embedded reference values.
"""

from __future__ import annotations

import math
from typing import List, Optional

import numpy as np

from . import refvalues as ref
from .basis import BasisSpec
from .model import ModelParams, UnitSystem
from .pss import solve_doublet, splitting_scan
from .scan import scan_parameter
from .spectrum import StateClass, nonrel_limit, resonance_states, solve

TARGETS = ("table1", "table2", "fig1", "fig2", "fig3", "fig4", "fig5")


def _table1_params(**over) -> ModelParams:
    kw = dict(ref.TABLE1_PARAMS, units=UnitSystem.NaturalFm)
    kw.update(over)
    return ModelParams(**kw)


def _table2_params(**over) -> ModelParams:
    kw = dict(ref.TABLE2_PARAMS, units=UnitSystem.AtomicUnits)
    kw.update(over)
    return ModelParams(**kw)


def _pss_params(kappa: int = -1, **over) -> ModelParams:
    kw = dict(ref.PSS_PARAMS, kappa=kappa, units=UnitSystem.AtomicUnits)
    kw.update(over)
    return ModelParams(**kw)


def _pss_solve_kwargs() -> dict:
    return dict(
        theta_offsets=tuple(math.radians(d) for d in ref.PSS_THETA_OFFSETS_DEG)
    )


def _pss_spec() -> BasisSpec:
    return BasisSpec(b0=ref.PSS_B0, theta=math.radians(ref.PSS_THETA_DEG))


def _compare_column(
    computed: List[complex],
    reference: List[Optional[complex]],
    column: str,
    tolerances: List[float],
) -> List[dict]:
    vals = np.array(computed)
    rows = []
    for i, (target, tol) in enumerate(zip(reference, tolerances)):
        if target is None:
            continue
        j = int(np.argmin(np.abs(vals - target)))
        got = vals[j]
        dev = max(abs(got.real - target.real), abs(got.imag - target.imag))
        rows.append(
            dict(
                column=column,
                row=i + 1,
                ref_re=target.real,
                ref_im=target.imag,
                computed_re=float(got.real),
                computed_im=float(got.imag),
                deviation=float(dev),
                tolerance=tol,
                passed=bool(dev <= tol),
            )
        )
    return rows


def _physical_energies(spectrum) -> List[complex]:
    return [s.energy for s in spectrum.physical]


def reproduce_table1() -> dict:
    """Reference-A comparison: relativistic, nonrel limit, and J-matrix."""
    params = _table1_params()
    spec = BasisSpec(b0=ref.TABLE1_B0)
    rel = _physical_energies(solve(params, spec))
    nr = _physical_energies(nonrel_limit(params, spec))

    n = len(ref.TABLE1_RELATIVISTIC)
    tols = [ref.TABLE1_TOL_FIRST3] * 3 + [ref.TABLE1_TOL] * (n - 3)
    rows = []
    rows += _compare_column(rel, ref.TABLE1_RELATIVISTIC, "relativistic", tols)
    rows += _compare_column(nr, ref.TABLE1_NONREL_LIMIT, "nonrel_limit", tols)
    rows += _compare_column(nr, ref.TABLE1_NASSER, "nasser", [ref.TABLE1_NASSER_TOL] * n)
    return dict(kind="table", name="table1", rows=rows, passed=all(r["passed"] for r in rows))


def reproduce_table2() -> dict:
    """Reference-B comparison (kappa = 2, atomic units)."""
    params = _table2_params()
    spec = BasisSpec(b0=ref.TABLE2_B0)
    rel = _physical_energies(solve(params, spec))
    nr = _physical_energies(nonrel_limit(params, spec))

    tols = [ref.TABLE2_TOL] * len(ref.TABLE2_RELATIVISTIC)
    rows = []
    rows += _compare_column(rel, ref.TABLE2_RELATIVISTIC, "relativistic", tols)
    rows += _compare_column(nr, ref.TABLE2_NONREL_LIMIT[:5], "nonrel_limit", tols)
    rows += _compare_column(nr, ref.TABLE2_NASSER, "nasser", tols)
    return dict(kind="table", name="table2", rows=rows, passed=all(r["passed"] for r in rows))


def reproduce_fig1() -> dict:
    """Eigenvalue cloud of the Reference-A setup, classified."""
    spectrum = solve(_table1_params(), BasisSpec(b0=ref.TABLE1_B0))
    panels = []
    series = []
    for cls in (StateClass.Bound, StateClass.Resonance, StateClass.Continuum):
        pts = [s.energy for s in spectrum.by_class(cls)]
        series.append(
            dict(
                name=cls.value,
                kind="scatter",
                x=[v.real for v in pts],
                y=[v.imag for v in pts],
            )
        )
    panels.append(
        dict(name="eigenvalues", xlabel="E_r (fm^-2)", ylabel="E_i (fm^-2)", series=series)
    )
    return dict(kind="figure", name="fig1", panels=panels)


def _trajectory_panels(base: ModelParams, spec: BasisSpec, ranges: dict, points: int) -> list:
    panels = []
    for which, (lo, hi) in ranges.items():
        grid = np.linspace(lo, hi, points)
        trajectories = scan_parameter(base, spec, which, grid)
        for yname, getter in (("E_r", lambda p: p.E_r), ("Gamma", lambda p: p.Gamma)):
            series = []
            for tr in trajectories:
                pairs = tr.matched
                if len(pairs) < 2:
                    continue
                series.append(
                    dict(
                        name=f"state {tr.key}",
                        kind="line",
                        x=[g for g, _ in pairs],
                        y=[getter(p) for _, p in pairs],
                    )
                )
            panels.append(dict(name=f"{yname} vs {which}", xlabel=which, ylabel=yname, series=series))
    return panels


def reproduce_fig2(points: int = 10) -> dict:
    """Resonance trajectories against each potential parameter (fm units)."""
    base = _table1_params()
    spec = BasisSpec(b0=ref.TABLE1_B0)
    panels = _trajectory_panels(base, spec, ref.FIG2_RANGES, points)
    return dict(kind="figure", name="fig2", panels=panels)


def reproduce_fig3(points: int = 481) -> dict:
    """Morse potential curves on the reported energy scale."""
    r = np.linspace(0.0, 12.0, points)
    panels = []
    base = dict(ref.TABLE1_PARAMS)
    for which, values in ref.FIG3_CURVES.items():
        series = []
        for val in values:
            kw = dict(base)
            kw[which] = val
            w = np.exp(-(r - kw["r0"]) * kw["alpha"])
            v = kw["V0"] * w * (2.0 - w)  # V0 already on the reported axis
            series.append(dict(name=f"{which}={val:g}", kind="line", x=list(r), y=list(v)))
        panels.append(dict(name=f"vary {which}", xlabel="r (fm)", ylabel="V (fm^-2)", series=series))
    return dict(kind="figure", name="fig3", panels=panels)


def reproduce_fig4() -> dict:
    """Doublet partner positions in the complex energy plane."""
    spec = _pss_spec()
    panels = []
    for kappa_a in ref.PSS_FAMILIES:
        report = solve_doublet(_pss_params(kappa_a), spec, **_pss_solve_kwargs())
        a_pts = [m[0] for m in report.members]
        b_pts = [m[1] for m in report.members]
        series = [
            dict(
                name=f"kappa={report.kappa_pair[0]}",
                kind="scatter",
                x=[s.E_r for s in a_pts],
                y=[-0.5 * s.Gamma for s in a_pts],
            ),
            dict(
                name=f"kappa={report.kappa_pair[1]}",
                kind="scatter",
                x=[s.E_r for s in b_pts],
                y=[-0.5 * s.Gamma for s in b_pts],
            ),
        ]
        panels.append(
            dict(
                name=f"doublet ({report.kappa_pair[0]}, {report.kappa_pair[1]})",
                xlabel="E_r (a.u.)",
                ylabel="E_i (a.u.)",
                series=series,
            )
        )
    return dict(kind="figure", name="fig4", panels=panels)


def reproduce_fig5(points: int = 8) -> dict:
    """First-pair doublet splittings against each potential parameter."""
    spec = _pss_spec()
    panels = []
    for which, (lo, hi) in ref.PSS_SCAN_RANGES.items():
        grid = np.linspace(lo, hi, points)
        de_series, dg_series = [], []
        for kappa_a in ref.PSS_FAMILIES:
            rows = splitting_scan(
                _pss_params(kappa_a), spec, which, grid, kappa_a=kappa_a, **_pss_solve_kwargs()
            )
            # narrowest exposed pair: stable identity along the grid
            # (the broad end of the ladder gains/loses pairs as the
            # exposure window moves)
            xs = [v for v, rep in rows if rep.dE]
            de = [rep.dE[-1] for _, rep in rows if rep.dE]
            dg = [rep.dGamma[-1] for _, rep in rows if rep.dGamma]
            label = f"kappa=({kappa_a},{1 - kappa_a})"
            de_series.append(dict(name=label, kind="line", x=xs, y=de))
            dg_series.append(dict(name=label, kind="line", x=xs, y=dg))
        panels.append(dict(name=f"dE vs {which}", xlabel=which, ylabel="dE (a.u.)", series=de_series))
        panels.append(dict(name=f"dGamma vs {which}", xlabel=which, ylabel="dGamma (a.u.)", series=dg_series))
    return dict(kind="figure", name="fig5", panels=panels)


def reproduce(target: str) -> dict:
    if target not in TARGETS:
        raise ValueError(f"unknown reproduction target {target!r}, expected one of {TARGETS}")
    builder = {
        "table1": reproduce_table1,
        "table2": reproduce_table2,
        "fig1": reproduce_fig1,
        "fig2": reproduce_fig2,
        "fig3": reproduce_fig3,
        "fig4": reproduce_fig4,
        "fig5": reproduce_fig5,
    }[target]
    return builder()
