"""Spherical harmonic-oscillator radial basis and Gauss-Laguerre rules.

The radial functions are

    R_nl(r) = N_nl b0^{-3/2} (r/b0)^l exp(-r^2 / 2 b0^2)
              L^{(l+1/2)}_{n-1}(r^2 / b0^2),      n = 1, 2, ...

normalized so that the L^2([0, inf), r^2 dr) norm is one.  Potential
matrix elements reduce, after the substitution x = r^2/b0^2, to
generalized Gauss-Laguerre quadratures with weight x^{l+1/2} e^{-x}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import special

# Extra quadrature nodes beyond the block size; absorbs the
# non-polynomial Morse factor.  Convergence is verified by doubling.
QUAD_MARGIN = 40


@dataclass(frozen=True)
class BasisSpec:
    """Numerical discretization: shell cutoff, oscillator length, angle.

    N_max is the major-shell cutoff for the large component (the small
    component extends one shell higher for kinetic balance, see
    n_tilde_max).  theta is the complex-rotation angle in radians.
    quad_order of None means block size + QUAD_MARGIN.
    """

    N_max: int = 200
    b0: float = 1.0
    theta: float = math.radians(70.0)
    quad_order: Optional[int] = None

    def __post_init__(self):
        if self.N_max < 0 or self.N_max % 2 != 0:
            raise ValueError(f"N_max must be a nonnegative even integer, got {self.N_max}")
        if self.b0 <= 0:
            raise ValueError(f"b0 must be positive, got {self.b0}")
        if not (0 <= self.theta < math.pi / 2):
            raise ValueError("theta must lie in [0, pi/2)")

    def n_max(self, l: int) -> int:
        """Number of large-component radial states for orbital momentum l."""
        n = (self.N_max - l) // 2 + 1
        if n < 1:
            raise ValueError(f"N_max={self.N_max} admits no states with l={l}")
        return n

    def n_tilde_max(self, l_tilde: int) -> int:
        """Number of small-component radial states.

        The small component is truncated one major shell above the large
        one (kinetic balance): with this choice the matrix of the kinetic
        operator satisfies B^T B = p^2 exactly on the large-component
        space, which removes a systematic truncation error in the
        nonrelativistic limit.
        """
        n = (self.N_max + 1 - l_tilde) // 2 + 1
        if n < 1:
            raise ValueError(f"N_max={self.N_max} admits no states with l_tilde={l_tilde}")
        return n

    def effective_quad_order(self, block_size: int) -> int:
        if self.quad_order is not None:
            return self.quad_order
        return block_size + QUAD_MARGIN


@dataclass(frozen=True)
class QuadratureRule:
    """Generalized Gauss-Laguerre rule for weight x^exponent e^{-x}."""

    nodes: np.ndarray
    weights: np.ndarray
    exponent: float

    def __post_init__(self):
        if np.any(np.diff(self.nodes) <= 0):
            raise ValueError("quadrature nodes must be strictly increasing")
        if np.any(self.weights <= 0):
            raise ValueError("quadrature weights must be positive")

    def integrate(self, fvals: np.ndarray) -> complex:
        """Sum w_i * f(x_i) for f sampled on the nodes."""
        return complex(np.dot(self.weights, fvals))


def gauss_laguerre(order: int, exponent: float) -> QuadratureRule:
    """Nodes and weights of the generalized Gauss-Laguerre rule.

    Exact for integrals of x^exponent e^{-x} p(x) with p polynomial of
    degree <= 2*order - 1.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if exponent <= -1:
        raise ValueError(f"exponent must exceed -1, got {exponent}")
    nodes, weights = special.roots_genlaguerre(order, exponent)
    if not (np.all(np.isfinite(nodes)) and np.all(np.isfinite(weights))):
        bad = int(np.argmin(np.isfinite(nodes) & np.isfinite(weights)))
        raise ArithmeticError(f"Gauss-Laguerre rule failed at node index {bad}")
    # For orders beyond ~190 the far-tail weights underflow to exactly
    # zero in double precision; those nodes contribute nothing, so drop
    # them rather than fail the positivity check.
    keep = weights > 0.0
    if not np.any(keep):
        raise ArithmeticError("all Gauss-Laguerre weights underflowed")
    return QuadratureRule(nodes=nodes[keep], weights=weights[keep],
                          exponent=exponent)


def laguerre_table(n_count: int, alpha: float, x: np.ndarray) -> np.ndarray:
    """Values L^{(alpha)}_k(x) for k = 0 .. n_count-1, shape (n_count, len(x)).

    Upward three-term recurrence; stable for the oscillator arguments
    used here (x > 0, n up to a few hundred).
    """
    x = np.asarray(x)
    out = np.empty((n_count, x.size), dtype=x.dtype)
    out[0] = 1.0
    if n_count > 1:
        out[1] = 1.0 + alpha - x
    for k in range(1, n_count - 1):
        out[k + 1] = ((2 * k + 1 + alpha - x) * out[k] - (k + alpha) * out[k - 1]) / (k + 1)
    return out


def ho_norms(n_count: int, l: int) -> np.ndarray:
    """Normalization constants N_nl for n = 1 .. n_count.

    N_nl^2 = 2 (n-1)! / Gamma(n + l + 1/2), evaluated through log-gamma
    so n ~ 100 does not overflow.
    """
    n = np.arange(1, n_count + 1)
    logs = math.log(2.0) + special.gammaln(n) - special.gammaln(n + l + 0.5)
    return np.exp(0.5 * logs)


def ho_radial(n: int, l: int, b0: float, r) -> np.ndarray:
    """Radial oscillator function R_nl(r), unit L^2(r^2 dr) norm.

    n starts at 1.  Accepts scalar or array r >= 0.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}")
    if b0 <= 0:
        raise ValueError(f"b0 must be positive, got {b0}")
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("r must be nonnegative")
    scalar = r.ndim == 0
    r = np.atleast_1d(r)
    x = (r / b0) ** 2
    lag = laguerre_table(n, l + 0.5, x)[n - 1]
    norm = ho_norms(n, l)[-1]
    val = norm * b0 ** (-1.5) * (r / b0) ** l * np.exp(-x / 2.0) * lag
    return float(val[0]) if scalar else val
