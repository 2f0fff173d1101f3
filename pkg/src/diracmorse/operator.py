"""Assembly of the complex-scaled radial Dirac Hamiltonian matrix.

The Hamiltonian in the oscillator basis is the complex symmetric block
matrix

    H_theta = [[ V^(l) + M c^2 I,   c B^T          ],
               [ c B,               V^(l~) - M c^2 I ]]

where V^(l) are potential blocks evaluated by generalized Gauss-Laguerre
quadrature (the potential sampled at r e^{i theta}) and B is the
closed-form bidiagonal kinetic block carrying the global e^{-i theta}.

A folded form K = (H - M c^2)(H + M c^2) is also provided.  Resonance
eigenvectors of H_theta are nearly self-orthogonal and the rest-mass
shift dominates the spectrum at large c, so eigenvalues of H computed
directly lose up to ~eps_mach * Mc^2 * cond accuracy; folding removes
the rest mass symbolically and makes the nonrelativistic limit
(c_factor = 100) numerically stable in double precision.
"""

from __future__ import annotations

import math

import numpy as np

from .basis import BasisSpec, gauss_laguerre, ho_norms, laguerre_table
from .model import EXP_GUARD, DomainError, ModelParams

SYMMETRY_TOL = 1e-12


def _morse_even_odd(params: ModelParams, x: np.ndarray, theta: float,
                    b0: float):
    """Even/odd split of the Morse factor under r = b0 sqrt(x).

    V(b0 sqrt(x) e^{i theta}) = f(x) + sqrt(x) g(x) with f, g entire in
    x: with t = alpha b0 e^{i theta} sqrt(x) the exponentials split as
    exp(-t) = cosh(t) - sinh(t), and cosh(t), sinh(t)/t are even in t,
    hence analytic in x.  Integrating f and g by separate Gauss-Laguerre
    rules keeps the quadrature spectrally convergent; feeding the full
    factor to a single rule stalls near 1e-6 because of the sqrt(x)
    branch point at the origin.
    """
    a = params.alpha * b0 * np.exp(1j * theta)
    t = a * np.sqrt(x)
    for scale in (1.0, 2.0):
        re = scale * (params.alpha * params.r0 + np.abs(t.real))
        if np.any(re > EXP_GUARD):
            raise DomainError(
                f"Morse exponent Re={float(np.max(re)):.1f} exceeds the overflow guard"
            )
    w0 = math.exp(params.alpha * params.r0)
    # sinh(t)/t, even in t; series near 0 avoids 0/0
    small = np.abs(t) < 1e-6
    sinhc = np.where(small, 1.0 + t * t / 6.0,
                     np.sinh(np.where(small, 1.0, t)) / np.where(small, 1.0, t))
    f = params.V0_internal * (2.0 * w0 * np.cosh(t) - w0 * w0 * np.cosh(2.0 * t))
    g = params.V0_internal * a * (-2.0 * w0 * sinhc + 2.0 * w0 * w0 * np.cosh(t) * sinhc)
    if not (np.all(np.isfinite(f.view(float))) and np.all(np.isfinite(g.view(float)))):
        raise DomainError("Morse potential overflowed on the quadrature grid")
    return f, g


def potential_block(params: ModelParams, spec: BasisSpec, l_block: int, size: int) -> np.ndarray:
    """Potential matrix V_{nn'} = <R_nl | V(r e^{i theta}) | R_n'l>.

    After x = r^2/b0^2 the integral becomes generalized Gauss-Laguerre
    sums: the even part of the Morse factor against the weight
    x^{l+1/2} e^{-x} and the odd part against x^{l+1} e^{-x}.  Only the
    (analytic) even/odd factors are approximated; the
    Gaussian-polynomial part is integrated exactly.
    """
    alpha_q = l_block + 0.5
    order = spec.effective_quad_order(size)
    norms = ho_norms(size, l_block)
    out = np.zeros((size, size), dtype=complex)
    for exponent, part in ((alpha_q, 0), (alpha_q + 0.5, 1)):
        rule = gauss_laguerre(order, exponent)
        try:
            f, g = _morse_even_odd(params, rule.nodes, spec.theta, spec.b0)
        except DomainError as exc:
            raise DomainError(f"potential_block(l={l_block}): {exc}") from exc
        v = f if part == 0 else g
        phi = norms[:, None] * laguerre_table(size, alpha_q, rule.nodes)
        out += 0.5 * (phi * (rule.weights * v)) @ phi.T
    return out


def kinetic_block(params: ModelParams, spec: BasisSpec) -> np.ndarray:
    """Closed-form kinetic coupling B (small-component rows).

    Bidiagonal in the radial quantum numbers, with the branch on the
    sign of kappa; the complex rotation enters only through the global
    factor 1/(b0 e^{i theta}).
    """
    l = params.l
    n_max = spec.n_max(l)
    nt_max = spec.n_tilde_max(params.l_tilde)
    B = np.zeros((nt_max, n_max), dtype=complex)
    pref = 1.0 / (spec.b0 * np.exp(1j * spec.theta))
    for nt in range(1, nt_max + 1):
        if params.kappa < 0:
            if nt <= n_max:
                B[nt - 1, nt - 1] = -pref * np.sqrt(nt + l + 0.5)
            if nt + 1 <= n_max:
                B[nt - 1, nt] = -pref * np.sqrt(nt)
        else:
            if nt <= n_max:
                B[nt - 1, nt - 1] = pref * np.sqrt(nt + l - 0.5)
            if nt >= 2 and nt - 1 <= n_max:
                B[nt - 1, nt - 2] = pref * np.sqrt(nt - 1)
    return B


def assemble(params: ModelParams, spec: BasisSpec) -> np.ndarray:
    """Full complex symmetric H_theta of dimension n_max + n~_max."""
    n = spec.n_max(params.l)
    nt = spec.n_tilde_max(params.l_tilde)
    c = params.c
    mc2 = params.M * c * c
    Vl = potential_block(params, spec, params.l, n)
    Vlt = potential_block(params, spec, params.l_tilde, nt)
    B = kinetic_block(params, spec)
    H = np.zeros((n + nt, n + nt), dtype=complex)
    H[:n, :n] = Vl + mc2 * np.eye(n)
    H[n:, n:] = Vlt - mc2 * np.eye(nt)
    H[:n, n:] = c * B.T
    H[n:, :n] = c * B
    return H


def assemble_folded(params: ModelParams, spec: BasisSpec):
    """Blocks of the folded operator K = H^2 - (M c^2)^2 I.

    Built blockwise so the rest-mass term cancels symbolically:

        K11 = V_l^2  + 2 M c^2 V_l  + c^2 B^T B
        K22 = V_l~^2 - 2 M c^2 V_l~ + c^2 B B^T
        K12 = c (V_l B^T + B^T V_l~),   K21 = K12^T

    Returns (K, H, mc2); H is the unfolded matrix reassembled from the
    same blocks, used for branch selection and residual checks.
    """
    n = spec.n_max(params.l)
    nt = spec.n_tilde_max(params.l_tilde)
    c = params.c
    mc2 = params.M * c * c
    Vl = potential_block(params, spec, params.l, n)
    Vlt = potential_block(params, spec, params.l_tilde, nt)
    B = kinetic_block(params, spec)

    K = np.zeros((n + nt, n + nt), dtype=complex)
    K[:n, :n] = Vl @ Vl + 2.0 * mc2 * Vl + c * c * (B.T @ B)
    K[n:, n:] = Vlt @ Vlt - 2.0 * mc2 * Vlt + c * c * (B @ B.T)
    K[:n, n:] = c * (Vl @ B.T + B.T @ Vlt)
    K[n:, :n] = c * (B @ Vl + Vlt @ B)

    H = np.zeros((n + nt, n + nt), dtype=complex)
    H[:n, :n] = Vl + mc2 * np.eye(n)
    H[n:, n:] = Vlt - mc2 * np.eye(nt)
    H[:n, n:] = c * B.T
    H[n:, :n] = c * B
    return K, H, mc2


def symmetry_defect(H: np.ndarray) -> float:
    """Largest entrywise deviation from H = H^T."""
    return float(np.max(np.abs(H - H.T)))


def dump_matrix(H: np.ndarray, path: str) -> None:
    """Debug dump: one '<row> <col> <re> <im>' line per entry."""
    with open(path, "w") as fh:
        for i in range(H.shape[0]):
            for j in range(H.shape[1]):
                fh.write(f"{i} {j} {H[i, j].real:.17g} {H[i, j].imag:.17g}\n")
