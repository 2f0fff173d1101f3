"""Physical parameter set, unit conventions, and the Morse potential.

Two unit systems are supported:

* ``NaturalFm``: lengths in fm, hbar = 1, masses in fm^-1.  Reported
  energies carry the conventional 2M/hbar^2 factor so that the bound
  state of the standard test case lands at -8.1096 fm^-2.
* ``AtomicUnits``: hbar = m = 1; reported energies are eps - M c^2 in
  hartree.

In both systems the internal Hamiltonian carries an explicit speed of
light with baseline value C_BASELINE (the inverse fine-structure
constant).  The nonrelativistic limit is reached by scaling c up via
``c_factor`` with the mass held fixed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

# Inverse fine-structure constant (CODATA).  Used as the baseline speed
# of light in both unit systems; c_factor multiplies it.
C_BASELINE = 137.035999084

# Largest magnitude allowed for the real part of the Morse exponent.
# Beyond this exp() overflows double precision and the matrix elements
# would be silently poisoned, so we raise instead.
EXP_GUARD = 700.0


class UnitSystem(enum.Enum):
    NaturalFm = "fm"
    AtomicUnits = "au"


class DomainError(ValueError):
    """Raised when an evaluation leaves the representable domain."""


@dataclass(frozen=True)
class ModelParams:
    """Definition of the physical problem.

    V0, r0, alpha define the Morse potential
    V(r) = V0 * exp(-(r-r0)*alpha) * (2 - exp(-(r-r0)*alpha));
    in NaturalFm units V0 is quoted in the reported fm^-2 scale.
    kappa is the relativistic angular quantum number, kappa = +-(j+1/2).
    c_factor scales the baseline speed of light (100 gives the
    nonrelativistic limit).
    """

    V0: float
    r0: float
    alpha: float
    M: float
    kappa: int
    c_factor: float = 1.0
    units: UnitSystem = UnitSystem.NaturalFm

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.r0 <= 0:
            raise ValueError(f"r0 must be positive, got {self.r0}")
        if self.kappa == 0:
            raise ValueError("kappa must be a nonzero integer")
        if self.M <= 0:
            raise ValueError(f"M must be positive, got {self.M}")
        if self.c_factor < 1:
            raise ValueError(f"c_factor must be >= 1, got {self.c_factor}")

    @property
    def l(self) -> int:
        """Orbital angular momentum of the large component."""
        return self.kappa if self.kappa > 0 else -self.kappa - 1

    @property
    def l_tilde(self) -> int:
        """Orbital angular momentum of the small component."""
        return self.kappa - 1 if self.kappa > 0 else -self.kappa

    @property
    def c(self) -> float:
        """Effective speed of light."""
        return C_BASELINE * self.c_factor

    @property
    def V0_internal(self) -> float:
        """Potential strength on the internal energy scale.

        NaturalFm quotes V0 on the reported (2M-scaled) energy axis, so
        the internal strength divides that factor back out.
        """
        if self.units is UnitSystem.NaturalFm:
            return self.V0 / (2.0 * self.M)
        return self.V0

    def with_kappa(self, kappa: int) -> "ModelParams":
        return replace(self, kappa=kappa)

    def with_c_factor(self, c_factor: float) -> "ModelParams":
        return replace(self, c_factor=c_factor)


def morse_potential(params: ModelParams, z: complex) -> complex:
    """Morse potential at (possibly complex) radius z, internal scale.

    V(z) = V0 * w * (2 - w) with w = exp(-(z - r0) * alpha).  For real
    z -> +inf the value tends to 0; at z = r0 it equals V0 exactly.

    Raises DomainError when the exponent (or the squared factor w**2)
    would overflow double precision.
    """
    expo = -(z - params.r0) * params.alpha
    re = np.real(expo)
    # w*(2-w) contains w**2, which overflows at half the exp() limit.
    if abs(re) > EXP_GUARD or re > 0.5 * EXP_GUARD:
        raise DomainError(
            f"Morse exponent Re={re:.1f} at z={z} exceeds the overflow guard"
        )
    w = np.exp(expo)
    val = params.V0_internal * w * (2.0 - w)
    if not np.isfinite(val.real) or not np.isfinite(val.imag):
        raise DomainError(f"Morse potential overflowed at z={z}")
    return complex(val)


def morse_potential_grid(params: ModelParams, z: np.ndarray) -> np.ndarray:
    """Vectorized morse_potential over an array of complex radii."""
    z = np.asarray(z, dtype=complex)
    expo = -(z - params.r0) * params.alpha
    re = expo.real
    if np.any(np.abs(re) > EXP_GUARD) or np.any(re > 0.5 * EXP_GUARD):
        i = int(np.argmax(np.where(np.abs(re) > 0.5 * EXP_GUARD, np.abs(re), re)))
        raise DomainError(
            f"Morse exponent overflow at grid index {i}, z={z.flat[i]}"
        )
    w = np.exp(expo)
    out = params.V0_internal * w * (2.0 - w)
    if not np.all(np.isfinite(out.view(float))):
        bad = int(np.argmin(np.isfinite(out.real) & np.isfinite(out.imag)))
        raise DomainError(f"Morse potential overflowed at grid index {bad}")
    return out


def report_energy(params: ModelParams, eps: complex) -> complex:
    """Convert an internal eigenvalue to the reported energy scale.

    The rest mass M c^2 is subtracted; NaturalFm additionally multiplies
    by 2M (hbar = 1) so energies come out in fm^-2.  The same affine map
    applies to real and imaginary parts; the width is -2 Im(reported).
    """
    mc2 = params.M * params.c ** 2
    shifted = eps - mc2
    if params.units is UnitSystem.NaturalFm:
        return 2.0 * params.M * shifted
    return shifted


def unreport_energy(params: ModelParams, reported: complex) -> complex:
    """Inverse of report_energy (exact affine round trip)."""
    mc2 = params.M * params.c ** 2
    if params.units is UnitSystem.NaturalFm:
        return reported / (2.0 * params.M) + mc2
    return reported + mc2


def width(reported: complex) -> float:
    """Resonance width Gamma = -2 Im(E)."""
    return -2.0 * reported.imag


def spectroscopic_label(n: int, l: int, kappa: int) -> str:
    """Spectroscopic label like '1s1/2' or '2d3/2' from (n, l, kappa)."""
    letters = "spdfghiklmnoq"
    lchar = letters[l] if l < len(letters) else f"[l={l}]"
    j2 = 2 * abs(kappa) - 1  # j = |kappa| - 1/2
    return f"{n}{lchar}{j2}/2"
