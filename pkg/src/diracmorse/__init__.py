"""Bound and resonant Dirac-Morse states by complex scaling."""

from .basis import BasisSpec, QuadratureRule, gauss_laguerre, ho_radial
from .model import ModelParams, UnitSystem, morse_potential, report_energy
from .pss import DoubletReport, pair_doublets, solve_doublet, splitting_scan
from .scan import Trajectory, scan_parameter
from .spectrum import (
    ResonanceState,
    Spectrum,
    StateClass,
    classify,
    nonrel_limit,
    resonance_states,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "BasisSpec",
    "DoubletReport",
    "ModelParams",
    "QuadratureRule",
    "ResonanceState",
    "Spectrum",
    "StateClass",
    "Trajectory",
    "UnitSystem",
    "classify",
    "gauss_laguerre",
    "ho_radial",
    "morse_potential",
    "nonrel_limit",
    "pair_doublets",
    "report_energy",
    "resonance_states",
    "scan_parameter",
    "solve",
    "solve_doublet",
    "splitting_scan",
]
