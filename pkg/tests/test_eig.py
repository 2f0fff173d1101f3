import numpy as np
import pytest

from diracmorse.eig import EigenResult, eig_dense

from ._oracles import charpoly_coeffs


def random_complex_symmetric(n, seed):
    rng = np.random.default_rng(seed)
    A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (A + A.T)


class TestEigDense:
    def test_diagonal(self):
        res = eig_dense(np.diag([3.0 + 0j, 1.0 + 2.0j]))
        assert np.allclose(res.eigenvalues, [1.0 + 2.0j, 3.0 + 0j])

    def test_antidiagonal(self):
        # [[0, i], [i, 0]] has eigenvalues +-i
        H = np.array([[0.0, 1j], [1j, 0.0]])
        v = eig_dense(H).eigenvalues
        got = sorted(v, key=lambda e: e.imag)
        assert abs(got[0] - (-1j)) < 1e-14 and abs(got[1] - 1j) < 1e-14

    def test_sorted_lexicographically(self):
        res = eig_dense(random_complex_symmetric(12, seed=7))
        v = res.eigenvalues
        key = list(zip(v.real, v.imag))
        assert key == sorted(key)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_vs_characteristic_polynomial(self, seed):
        A = random_complex_symmetric(8, seed=seed)
        roots = np.roots(charpoly_coeffs(A))
        roots = roots[np.lexsort((roots.imag, roots.real))]
        got = eig_dense(A).eigenvalues
        assert np.max(np.abs(got - roots)) < 1e-8

    def test_trace_and_determinant(self):
        A = random_complex_symmetric(10, seed=3)
        v = eig_dense(A).eigenvalues
        assert np.sum(v) == pytest.approx(np.trace(A), rel=1e-12)
        assert np.prod(v) == pytest.approx(np.linalg.det(A), rel=1e-9)

    def test_similarity_invariance(self):
        A = random_complex_symmetric(9, seed=11)
        rng = np.random.default_rng(5)
        S = rng.standard_normal((9, 9)) + 0.1 * np.eye(9)
        B = np.linalg.solve(S, A @ S)
        va = eig_dense(A).eigenvalues
        vb = eig_dense(B).eigenvalues
        assert np.max(np.abs(va - vb)) < 1e-9

    def test_residuals_small(self):
        A = random_complex_symmetric(15, seed=21)
        res = eig_dense(A, want_vectors=True)
        assert res.eigenvectors is not None
        assert np.max(res.residuals) < 1e-12

    def test_c_normalization(self):
        A = random_complex_symmetric(8, seed=42)
        res = eig_dense(A, want_vectors=True)
        vtv = np.einsum("ij,ij->j", res.eigenvectors, res.eigenvectors)
        assert np.max(np.abs(vtv - 1.0)) < 1e-10

    def test_left_eigenvectors_by_transpose(self):
        # for complex symmetric A the right eigenvectors are also left
        # eigenvectors: v^T A = e v^T
        A = random_complex_symmetric(8, seed=9)
        res = eig_dense(A, want_vectors=True)
        V, e = res.eigenvectors, res.eigenvalues
        assert np.max(np.abs(V.T @ A - e[:, None] * V.T)) < 1e-10

    def test_no_vectors_by_default(self):
        res = eig_dense(np.eye(3, dtype=complex))
        assert res.eigenvectors is None and res.residuals is None


class TestValidation:
    def test_non_square(self):
        with pytest.raises(ValueError):
            eig_dense(np.zeros((2, 3)))

    def test_empty(self):
        with pytest.raises(ValueError):
            eig_dense(np.zeros((0, 0)))

    def test_non_finite(self):
        H = np.eye(3, dtype=complex)
        H[1, 1] = np.nan
        with pytest.raises(ValueError):
            eig_dense(H)
