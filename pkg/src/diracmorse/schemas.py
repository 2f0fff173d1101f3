"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

import math
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from .basis import BasisSpec
from .model import ModelParams, UnitSystem
from .spectrum import BOUND_TOL, STAB_TOL


class SolveRequest(BaseModel):
    units: Literal["fm", "au"] = "fm"
    V0: float
    r0: float = Field(gt=0)
    alpha: float = Field(gt=0)
    M: float = Field(gt=0)
    kappa: int
    c_factor: float = Field(default=1.0, ge=1.0)
    theta_deg: float = Field(default=70.0, gt=0.0, lt=90.0)
    N_max: int = Field(default=200, ge=0)
    b0: Optional[float] = Field(default=None, gt=0)
    quad_order: Optional[int] = Field(default=None, ge=1)
    bound_tol: float = Field(default=BOUND_TOL, gt=0)
    stab_tol: float = Field(default=STAB_TOL, gt=0)
    theta_offsets_deg: Tuple[float, float] = (-5.0, 5.0)

    @field_validator("kappa")
    @classmethod
    def _kappa_nonzero(cls, v: int) -> int:
        if v == 0:
            raise ValueError("kappa must be a nonzero integer")
        return v

    def to_params(self) -> ModelParams:
        return ModelParams(
            V0=self.V0,
            r0=self.r0,
            alpha=self.alpha,
            M=self.M,
            kappa=self.kappa,
            c_factor=self.c_factor,
            units=UnitSystem(self.units),
        )

    def to_basis(self) -> BasisSpec:
        b0 = self.b0 if self.b0 is not None else self.r0 / 4.0
        return BasisSpec(
            N_max=self.N_max,
            b0=b0,
            theta=math.radians(self.theta_deg),
            quad_order=self.quad_order,
        )

    def solve_kwargs(self) -> dict:
        return dict(
            bound_tol=self.bound_tol,
            stab_tol=self.stab_tol,
            theta_offsets=tuple(math.radians(d) for d in self.theta_offsets_deg),
        )


class StateRecord(BaseModel):
    cls: Literal["bound", "resonance", "continuum"]
    E_r: float
    E_i: float
    Gamma: float
    kappa: int
    index: Optional[int] = None
    label: Optional[str] = None


class SolveResponse(BaseModel):
    units: str
    theta_deg: float
    kappa: int
    n_bound: int
    n_resonance: int
    states: List[StateRecord]


class ScanRequest(SolveRequest):
    which: Literal["V0", "r0", "alpha"]
    grid: List[float] = Field(min_length=1)


class TrajectoryRecord(BaseModel):
    key: int
    parameter: str
    grid: List[float]
    points: List[Optional[StateRecord]]


class ScanResponse(BaseModel):
    which: str
    grid: List[float]
    trajectories: List[TrajectoryRecord]


class DoubletRequest(SolveRequest):
    @field_validator("kappa")
    @classmethod
    def _kappa_negative(cls, v: int) -> int:
        if v >= 0:
            raise ValueError("doublet analysis requires the negative kappa of the pair")
        return v


class PairRecord(BaseModel):
    a: StateRecord
    b: StateRecord
    dE: float
    dGamma: float


class DoubletResponse(BaseModel):
    kappa_pair: Tuple[int, int]
    members: List[PairRecord]
    unpaired_a: List[StateRecord]
    unpaired_b: List[StateRecord]


class SplittingScanRequest(DoubletRequest):
    which: Literal["V0", "r0", "alpha"]
    grid: List[float] = Field(min_length=1)


class SplittingPoint(BaseModel):
    value: float
    report: DoubletResponse


class SplittingScanResponse(BaseModel):
    which: str
    kappa_pair: Tuple[int, int]
    points: List[SplittingPoint]
