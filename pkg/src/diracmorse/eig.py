"""Dense eigendecomposition of complex non-Hermitian matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass(frozen=True)
class EigenResult:
    """Full spectrum of a dense complex matrix.

    eigenvalues are sorted lexicographically by (Re, Im) so downstream
    state tracking is deterministic.  eigenvectors (columns, aligned
    with eigenvalues) and residuals ||Hv - ev|| / ||v|| are present when
    vectors were requested.
    """

    eigenvalues: np.ndarray
    eigenvectors: Optional[np.ndarray] = None
    residuals: Optional[np.ndarray] = None


def _sort_key(values: np.ndarray) -> np.ndarray:
    return np.lexsort((values.imag, values.real))


def eig_dense(H: np.ndarray, want_vectors: bool = False) -> EigenResult:
    """Eigendecomposition via LAPACK's balanced Hessenberg-QR (zgeev).

    Dimensions here stay around 200, so the O(n^3) dense algorithm is
    the robust choice over anything iterative.
    """
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {H.shape}")
    if H.shape[0] < 1:
        raise ValueError("matrix dimension must be >= 1")
    if not np.all(np.isfinite(H.view(float))):
        raise ValueError("matrix contains non-finite entries")

    try:
        if want_vectors:
            values, vectors = np.linalg.eig(H)
        else:
            values = np.linalg.eigvals(H)
            vectors = None
    except np.linalg.LinAlgError as exc:
        raise ArithmeticError(f"QR eigenvalue iteration failed: {exc}") from exc

    order = _sort_key(values)
    values = values[order]
    residuals = None
    if vectors is not None:
        vectors = vectors[:, order]
        # c-normalization (v^T v = 1) is the natural convention for
        # complex symmetric operators; fall back to unit Euclidean norm
        # for near self-orthogonal vectors.
        vtv = np.einsum("ij,ij->j", vectors, vectors)
        norms = np.linalg.norm(vectors, axis=0)
        safe = np.abs(vtv) > 1e-8 * norms ** 2
        scale = np.where(safe, np.sqrt(vtv, where=safe, out=np.ones_like(vtv)), norms)
        vectors = vectors / scale
        resid = H @ vectors - vectors * values
        residuals = np.linalg.norm(resid, axis=0) / np.linalg.norm(vectors, axis=0)
    return EigenResult(eigenvalues=values, eigenvectors=vectors, residuals=residuals)
