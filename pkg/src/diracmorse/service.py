"""FastAPI service exposing the solver, scans, and doublet analysis.

The service is stateless: every request carries the full problem
definition, so instances can be load-balanced freely and the CLI can
run the same app in-process.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import reproduce as repro
from .model import DomainError
from .pss import pair_doublets, solve_doublet, splitting_scan
from .scan import AmbiguousLinkError, scan_parameter
from .schemas import (
    DoubletRequest,
    DoubletResponse,
    PairRecord,
    ScanRequest,
    ScanResponse,
    SolveRequest,
    SolveResponse,
    SplittingPoint,
    SplittingScanRequest,
    SplittingScanResponse,
    StateRecord,
    TrajectoryRecord,
)
from .spectrum import ClassificationError, ResonanceState, StateClass, resonance_states, solve

app = FastAPI(
    title="diracmorse",
    description="Dirac-Morse bound/resonant states by complex scaling",
)


def _numeric_guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (DomainError, ClassificationError, AmbiguousLinkError, ArithmeticError) as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _state_record(rs: ResonanceState) -> StateRecord:
    return StateRecord(
        cls=rs.cls.value,
        E_r=rs.E_r,
        E_i=-0.5 * rs.Gamma,
        Gamma=rs.Gamma,
        kappa=rs.kappa,
        index=rs.index,
        label=rs.label,
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/solve", response_model=SolveResponse)
def solve_endpoint(req: SolveRequest) -> SolveResponse:
    params = _numeric_guard(req.to_params)
    spec = _numeric_guard(req.to_basis)
    spectrum = _numeric_guard(solve, params, spec, **req.solve_kwargs())

    records = [_state_record(rs) for rs in resonance_states(spectrum)]
    for st in spectrum.by_class(StateClass.Continuum):
        records.append(
            StateRecord(
                cls="continuum",
                E_r=st.energy.real,
                E_i=st.energy.imag,
                Gamma=st.width,
                kappa=params.kappa,
            )
        )
    return SolveResponse(
        units=req.units,
        theta_deg=req.theta_deg,
        kappa=params.kappa,
        n_bound=len(spectrum.by_class(StateClass.Bound)),
        n_resonance=len(spectrum.by_class(StateClass.Resonance)),
        states=records,
    )


@app.post("/scan", response_model=ScanResponse)
def scan_endpoint(req: ScanRequest) -> ScanResponse:
    params = _numeric_guard(req.to_params)
    spec = _numeric_guard(req.to_basis)
    trajectories = _numeric_guard(
        scan_parameter, params, spec, req.which, req.grid, **req.solve_kwargs()
    )
    records = [
        TrajectoryRecord(
            key=tr.key,
            parameter=tr.parameter,
            grid=list(tr.grid),
            points=[_state_record(p) if p is not None else None for p in tr.points],
        )
        for tr in trajectories
    ]
    return ScanResponse(which=req.which, grid=list(req.grid), trajectories=records)


def _doublet_response(report) -> DoubletResponse:
    return DoubletResponse(
        kappa_pair=report.kappa_pair,
        members=[
            PairRecord(a=_state_record(a), b=_state_record(b), dE=de, dGamma=dg)
            for (a, b), de, dg in zip(report.members, report.dE, report.dGamma)
        ],
        unpaired_a=[_state_record(s) for s in report.unpaired_a],
        unpaired_b=[_state_record(s) for s in report.unpaired_b],
    )


@app.post("/pss/doublets", response_model=DoubletResponse)
def doublets_endpoint(req: DoubletRequest) -> DoubletResponse:
    params = _numeric_guard(req.to_params)
    spec = _numeric_guard(req.to_basis)
    report = _numeric_guard(solve_doublet, params, spec, **req.solve_kwargs())
    return _doublet_response(report)


@app.post("/pss/splittings", response_model=SplittingScanResponse)
def splittings_endpoint(req: SplittingScanRequest) -> SplittingScanResponse:
    params = _numeric_guard(req.to_params)
    spec = _numeric_guard(req.to_basis)
    rows = _numeric_guard(
        splitting_scan,
        params,
        spec,
        req.which,
        req.grid,
        kappa_a=req.kappa,
        **req.solve_kwargs(),
    )
    return SplittingScanResponse(
        which=req.which,
        kappa_pair=(req.kappa, 1 - req.kappa),
        points=[SplittingPoint(value=v, report=_doublet_response(rep)) for v, rep in rows],
    )


@app.post("/reproduce/{target}")
def reproduce_endpoint(target: str) -> dict:
    if target not in repro.TARGETS:
        raise HTTPException(
            status_code=422,
            detail=f"unknown target {target!r}, expected one of {repro.TARGETS}",
        )
    return _numeric_guard(repro.reproduce, target)
