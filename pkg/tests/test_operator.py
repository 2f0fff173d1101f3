import math

import numpy as np
import pytest

from diracmorse.basis import BasisSpec
from diracmorse.model import ModelParams, UnitSystem
from diracmorse.operator import (
    assemble,
    assemble_folded,
    dump_matrix,
    kinetic_block,
    potential_block,
    symmetry_defect,
)

from ._oracles import kinetic_entry_quad, potential_entry_quad

KAPPAS = (-3, -1, 2, 4)


def make_params(kappa=-1, **kw):
    base = dict(V0=6.0, r0=4.0, alpha=0.3, M=0.5, kappa=kappa,
                units=UnitSystem.NaturalFm)
    base.update(kw)
    return ModelParams(**base)


class TestKineticBlock:
    @pytest.mark.parametrize("kappa", KAPPAS)
    def test_near_diagonal_vs_quadrature(self, kappa):
        # full n,n~ <= 20 sweep lives in the acceptance suite; here the
        # structurally nonzero band plus its neighbours
        b0 = 0.8
        p = make_params(kappa=kappa)
        spec = BasisSpec(N_max=44, b0=b0, theta=0.0)
        B = kinetic_block(p, spec)
        assert np.max(np.abs(B.imag)) == 0.0
        for nt in range(1, 13):
            for n in range(max(1, nt - 2), min(12, nt + 2) + 1):
                ref = kinetic_entry_quad(nt, n, kappa, b0)
                assert abs(B[nt - 1, n - 1].real - ref) < 1e-11, (nt, n)

    @pytest.mark.parametrize("kappa", KAPPAS)
    def test_bidiagonal_structure(self, kappa):
        p = make_params(kappa=kappa)
        B = kinetic_block(p, BasisSpec(N_max=40, b0=0.8, theta=0.0))
        shift = 1 if kappa < 0 else -1
        mask = np.ones_like(B, dtype=bool)
        np.fill_diagonal(mask, False)
        np.fill_diagonal(mask[max(0, -shift):, max(0, shift):], False)
        assert np.max(np.abs(B[mask])) == 0.0

    @pytest.mark.parametrize("kappa", KAPPAS)
    def test_rotation_is_global_phase(self, kappa):
        p = make_params(kappa=kappa)
        theta = math.radians(35.0)
        B0 = kinetic_block(p, BasisSpec(N_max=40, b0=0.8, theta=0.0))
        Bt = kinetic_block(p, BasisSpec(N_max=40, b0=0.8, theta=theta))
        assert np.max(np.abs(Bt - B0 * np.exp(-1j * theta))) < 1e-14

    @pytest.mark.parametrize("kappa", KAPPAS)
    def test_kinetic_balance_identity(self, kappa):
        # with the small component one shell higher, B^T B equals the
        # exact harmonic-oscillator matrix of -d2/dr2 + l(l+1)/r2
        p = make_params(kappa=kappa)
        b0 = 0.8
        B = kinetic_block(p, BasisSpec(N_max=40, b0=b0, theta=0.0)).real
        M = B.T @ B * b0 ** 2
        l = p.l
        n = np.arange(1, M.shape[0] + 1)
        assert np.max(np.abs(np.diag(M) - (2.0 * (n - 1) + l + 1.5))) < 1e-12
        off = np.abs(np.diag(M, 1))
        assert np.max(np.abs(off - np.sqrt(n[:-1] * (n[:-1] + l + 0.5)))) < 1e-12
        assert np.max(np.abs(np.triu(M, 2))) == 0.0


class TestPotentialBlock:
    def test_entries_vs_adaptive_quadrature(self):
        p = make_params()
        theta = math.radians(40.0)
        spec = BasisSpec(N_max=20, b0=0.8, theta=theta)
        size = spec.n_max(p.l)
        V = potential_block(p, spec, p.l, size)
        for (i, j) in [(0, 0), (0, 3), (2, 5), (7, 7), (10, 4)]:
            ref = potential_entry_quad(p, i + 1, j + 1, p.l, 0.8, theta)
            assert abs(V[i, j] - ref) < 1e-9, (i, j)

    def test_quadrature_order_converged(self):
        p = make_params()
        spec = BasisSpec(N_max=60, b0=0.8, theta=math.radians(70.0))
        size = spec.n_max(p.l)
        V1 = potential_block(p, spec, p.l, size)
        spec2 = BasisSpec(N_max=60, b0=0.8, theta=math.radians(70.0),
                          quad_order=2 * spec.effective_quad_order(size))
        V2 = potential_block(p, spec2, p.l, size)
        assert np.max(np.abs(V1 - V2)) < 1e-10

    def test_symmetric(self):
        p = make_params(kappa=2)
        spec = BasisSpec(N_max=40, b0=0.5, theta=math.radians(55.0))
        V = potential_block(p, spec, p.l, spec.n_max(p.l))
        assert np.max(np.abs(V - V.T)) < 1e-13

    def test_zero_strength(self):
        p = make_params(V0=0.0)
        spec = BasisSpec(N_max=20, b0=0.8)
        V = potential_block(p, spec, p.l, spec.n_max(p.l))
        assert np.max(np.abs(V)) == 0.0

    def test_real_at_zero_angle(self):
        p = make_params()
        spec = BasisSpec(N_max=20, b0=0.8, theta=0.0)
        V = potential_block(p, spec, p.l, spec.n_max(p.l))
        assert np.max(np.abs(V.imag)) == 0.0


class TestAssembly:
    def test_dimensions(self):
        p = make_params(kappa=-1)
        spec = BasisSpec(N_max=20, b0=0.8)
        H = assemble(p, spec)
        assert H.shape == (spec.n_max(0) + spec.n_tilde_max(1),) * 2

    @pytest.mark.parametrize("kappa", KAPPAS)
    def test_complex_symmetric(self, kappa):
        p = make_params(kappa=kappa)
        H = assemble(p, BasisSpec(N_max=30, b0=0.8))
        assert symmetry_defect(H) < 1e-11 * np.max(np.abs(H))

    def test_rest_mass_on_diagonal(self):
        p = make_params(V0=0.0)
        spec = BasisSpec(N_max=10, b0=0.8)
        H = assemble(p, spec)
        n = spec.n_max(p.l)
        mc2 = p.M * p.c ** 2
        assert np.allclose(np.diag(H)[:n], mc2)
        assert np.allclose(np.diag(H)[n:], -mc2)

    def test_folded_consistent_with_square(self):
        p = make_params()
        spec = BasisSpec(N_max=16, b0=0.8, theta=math.radians(30.0))
        K, H, mc2 = assemble_folded(p, spec)
        direct = H @ H - mc2 ** 2 * np.eye(H.shape[0])
        scale = np.max(np.abs(direct))
        assert np.max(np.abs(K - direct)) < 1e-12 * scale
        assert mc2 == pytest.approx(p.M * p.c ** 2)

    def test_folded_matches_assemble(self):
        p = make_params(kappa=2)
        spec = BasisSpec(N_max=16, b0=0.8, theta=math.radians(30.0))
        _, H, _ = assemble_folded(p, spec)
        assert np.max(np.abs(H - assemble(p, spec))) == 0.0


class TestDump:
    def test_round_trip(self, tmp_path):
        p = make_params()
        spec = BasisSpec(N_max=4, b0=0.8, theta=math.radians(20.0))
        H = assemble(p, spec)
        path = tmp_path / "h.txt"
        dump_matrix(H, str(path))
        lines = path.read_text().strip().splitlines()
        assert len(lines) == H.size
        row, col, re, im = lines[H.shape[1] + 2].split()
        assert (int(row), int(col)) == (1, 2)
        assert complex(float(re), float(im)) == H[1, 2]
