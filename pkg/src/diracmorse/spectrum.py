"""Solve H_theta, classify eigenvalues, and take the nonrelativistic limit.

Classification follows the ABC theorem: bound and resonant eigenvalues
are stationary under changes of the rotation angle while the rotated
continuum sweeps with 2*theta.  A state is accepted as physical only if
it is reproduced at every angle of a three-angle scan (broad states at
the bottom of the spectrum need three angles; two-point stability is
not enough there).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .basis import BasisSpec
from .eig import eig_dense
from .model import ModelParams, UnitSystem, spectroscopic_label
from .operator import assemble_folded

# Classification defaults (reported-energy units), CLI-overridable.
# bound_tol must sit above the residual imaginary part that basis
# truncation leaves on a genuine bound state (a few 1e-4 at the default
# b0) and below the width scale of any negative-energy resonance.
BOUND_TOL = 1e-3
STAB_TOL = 1e-3
# Offsets (radians) of the companion angles used for the stability scan.
THETA_OFFSETS = (math.radians(-5.0), math.radians(5.0))


class StateClass(enum.Enum):
    Bound = "bound"
    Resonance = "resonance"
    Continuum = "continuum"


class ClassificationError(RuntimeError):
    """Ambiguous theta-matching: several candidates inside tolerance."""

    def __init__(self, collisions):
        self.collisions = list(collisions)
        lines = ", ".join(
            f"target {t:.6g} matched {k} candidates at theta={math.degrees(th):.1f} deg"
            for t, th, k in self.collisions
        )
        super().__init__(f"ambiguous eigenvalue matching: {lines}")


@dataclass(frozen=True)
class State:
    energy: complex  # reported scale
    cls: StateClass

    @property
    def width(self) -> float:
        return max(0.0, -2.0 * self.energy.imag)


@dataclass(frozen=True)
class Spectrum:
    params: ModelParams
    spec: BasisSpec
    states: tuple
    theta_used: float

    def by_class(self, cls: StateClass) -> list:
        return [s for s in self.states if s.cls is cls]

    @property
    def physical(self) -> list:
        """Bound and resonant states, ascending real energy."""
        out = [s for s in self.states if s.cls is not StateClass.Continuum]
        return sorted(out, key=lambda s: (s.energy.real, s.energy.imag))


@dataclass(frozen=True)
class ResonanceState:
    """One physical state on the reported energy scale."""

    E_r: float
    Gamma: float
    kappa: int
    index: int  # 1-based, ascending E_r among physical states
    label: str
    cls: StateClass = StateClass.Resonance

    @property
    def energy(self) -> complex:
        return complex(self.E_r, -0.5 * self.Gamma)


def _reported_eigenvalues(params: ModelParams, spec: BasisSpec) -> np.ndarray:
    """Eigenvalues of H_theta on the reported scale, rest mass removed.

    Diagonalizes the folded operator K = H^2 - (Mc^2)^2 and maps each
    eigenvalue mu back through e = eps - Mc^2.  The branch (particle vs
    negative-energy) is decided by the sign of the Hermitian Rayleigh
    quotient of H on the corresponding eigenvector; the particle branch
    uses the cancellation-free form e = mu / (Mc^2 + sqrt(M^2c^4 + mu)).
    """
    K, H, mc2 = assemble_folded(params, spec)
    mu, U = np.linalg.eig(K)
    HU = H @ U
    rho = np.einsum("ij,ij->j", U.conj(), HU) / np.einsum("ij,ij->j", U.conj(), U)
    s = np.sqrt(mc2 * mc2 + mu)
    e = np.where(rho.real >= 0.0, mu / (mc2 + s), -s - mc2)
    scale = 2.0 * params.M if params.units is UnitSystem.NaturalFm else 1.0
    rep = scale * e
    return rep[np.lexsort((rep.imag, rep.real))]


def solve_raw(params: ModelParams, spec: BasisSpec) -> Spectrum:
    """Single-angle spectrum with classification pending (all Continuum)."""
    rep = _reported_eigenvalues(params, spec)
    states = tuple(State(complex(v), StateClass.Continuum) for v in rep)
    return Spectrum(params=params, spec=spec, states=states, theta_used=spec.theta)


def classify(
    primary: Spectrum,
    *references: Spectrum,
    bound_tol: float = BOUND_TOL,
    stab_tol: float = STAB_TOL,
) -> Spectrum:
    """Label the primary spectrum by stability against reference angles.

    An eigenvalue is stable when every reference spectrum contains a
    match within stab_tol (scaled by max(1, |E|)); stable eigenvalues
    with E_r < 0 and |E_i| < bound_tol are bound, other stable ones are
    resonances, movers are continuum.  Two reference candidates inside
    the tolerance of one stable target raise ClassificationError.
    """
    if not references:
        raise ValueError("classify needs at least one reference spectrum")
    for ref in references:
        if abs(ref.theta_used - primary.theta_used) < 1e-12:
            raise ValueError("reference angle must differ from the primary angle")

    p = primary.params
    scale = 2.0 * p.M if p.units is UnitSystem.NaturalFm else 1.0
    # Everything below half the -2Mc^2 offset is the negative-energy
    # continuum; it is dense on the reported scale and never physical.
    sea_floor = -scale * p.M * p.c ** 2

    ref_vals = [np.array([s.energy for s in ref.states]) for ref in references]
    out = []
    collisions = []
    for st in primary.states:
        v = st.energy
        if v.real < sea_floor:
            out.append(State(v, StateClass.Continuum))
            continue
        tol = stab_tol * max(1.0, abs(v))
        stable = True
        for ref, vals in zip(references, ref_vals):
            dist = np.abs(vals - v)
            if dist.min() >= tol:
                stable = False
                break
        if not stable:
            cls = StateClass.Continuum
        elif v.real < 0 and abs(v.imag) < bound_tol:
            cls = StateClass.Bound
        elif v.imag <= bound_tol:
            cls = StateClass.Resonance
        else:
            cls = StateClass.Continuum  # stable but in the upper half plane
        if cls is not StateClass.Continuum:
            for ref, vals in zip(references, ref_vals):
                hits = int(np.count_nonzero(np.abs(vals - v) < tol))
                if hits > 1:
                    collisions.append((v, ref.theta_used, hits))
        out.append(State(v, cls))
    if collisions:
        raise ClassificationError(collisions)
    return replace(primary, states=tuple(out))


def solve(
    params: ModelParams,
    spec: BasisSpec,
    bound_tol: float = BOUND_TOL,
    stab_tol: float = STAB_TOL,
    theta_offsets: Sequence[float] = THETA_OFFSETS,
) -> Spectrum:
    """Full pipeline: assemble, diagonalize at a three-angle set, classify."""
    primary = solve_raw(params, spec)
    refs = []
    for off in theta_offsets:
        theta = spec.theta + off
        if not (0.0 < theta < math.pi / 2):
            raise ValueError(
                f"stability angle {math.degrees(theta):.1f} deg outside (0, 90)"
            )
        refs.append(solve_raw(params, replace(spec, theta=theta)))
    return classify(primary, *refs, bound_tol=bound_tol, stab_tol=stab_tol)


def nonrel_limit(
    params: ModelParams,
    spec: BasisSpec,
    c_factor: float = 100.0,
    **kwargs,
) -> Spectrum:
    """Same pipeline with the speed of light scaled up, mass fixed."""
    return solve(params.with_c_factor(c_factor), spec, **kwargs)


def resonance_states(spectrum: Spectrum) -> list:
    """Physical states as ResonanceState records, indexed by ascending E_r."""
    out = []
    l = spectrum.params.l
    for i, st in enumerate(spectrum.physical, start=1):
        out.append(
            ResonanceState(
                E_r=st.energy.real,
                Gamma=st.width,
                kappa=spectrum.params.kappa,
                index=i,
                label=spectroscopic_label(i, l, spectrum.params.kappa),
                cls=st.cls,
            )
        )
    return out


def continuum_argument(spectrum: Spectrum) -> float:
    """Central complex argument (radians) of the rotated-continuum cloud.

    Only the particle-branch continuum enters; the negative-energy
    branch sits a rest-mass gap below zero and is excluded by an energy
    floor halfway down the gap.  The median is used because basis
    truncation leaves a few stray eigenvalues off the rotated cut and a
    plain mean would chase them.
    """
    p = spectrum.params
    scale = 2.0 * p.M if p.units is UnitSystem.NaturalFm else 1.0
    floor = -scale * p.M * p.c ** 2  # half of the -2Mc^2 branch offset
    args = [
        math.atan2(s.energy.imag, s.energy.real)
        for s in spectrum.by_class(StateClass.Continuum)
        if s.energy.real > floor and abs(s.energy) > 1e-12
    ]
    if not args:
        raise ValueError("no particle-branch continuum states found")
    return float(np.median(args))


def b0_plateau(
    params: ModelParams,
    spec: BasisSpec,
    b0_grid: Sequence[float],
    **solve_kwargs,
) -> list:
    """Stability-plateau scan over the oscillator length.

    Returns (b0, spectrum, drift) per grid point, where drift is the
    largest displacement of any physical state relative to its nearest
    neighbour at the previous b0 (NaN for the first point).  Minimal
    drift locates the plateau the ABC theorem promises.
    """
    rows = []
    prev = None
    for b0 in b0_grid:
        sp = solve(params, replace(spec, b0=b0), **solve_kwargs)
        cur = np.array([s.energy for s in sp.physical])
        drift = math.nan
        if prev is not None and len(cur) and len(prev):
            drift = float(max(np.abs(prev - v).min() for v in cur))
        rows.append((b0, sp, drift))
        prev = cur
    return rows
