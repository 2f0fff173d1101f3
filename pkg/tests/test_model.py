import cmath
import math

import numpy as np
import pytest

from diracmorse.model import (
    C_BASELINE,
    DomainError,
    ModelParams,
    UnitSystem,
    morse_potential,
    morse_potential_grid,
    report_energy,
    spectroscopic_label,
    unreport_energy,
    width,
)


def make(units=UnitSystem.NaturalFm, **kw):
    base = dict(V0=6.0, r0=4.0, alpha=0.3, M=0.5, kappa=-1, units=units)
    base.update(kw)
    return ModelParams(**base)


class TestModelParams:
    def test_orbital_quantum_numbers_negative_kappa(self):
        p = make(kappa=-1)
        assert p.l == 0
        assert p.l_tilde == 1

    def test_orbital_quantum_numbers_positive_kappa(self):
        p = make(kappa=2)
        assert p.l == 2
        assert p.l_tilde == 1

    @pytest.mark.parametrize("kappa,l,lt", [(-3, 2, 3), (-2, 1, 2),
                                            (1, 1, 0), (3, 3, 2)])
    def test_orbital_table(self, kappa, l, lt):
        p = make(kappa=kappa)
        assert (p.l, p.l_tilde) == (l, lt)

    def test_kappa_zero_rejected(self):
        with pytest.raises(ValueError):
            make(kappa=0)

    @pytest.mark.parametrize("field", ["r0", "alpha", "M"])
    def test_nonpositive_scale_rejected(self, field):
        with pytest.raises(ValueError):
            make(**{field: 0.0})

    def test_speed_of_light_scaling(self):
        assert make().c == pytest.approx(C_BASELINE)
        assert make(c_factor=100.0).c == pytest.approx(100.0 * C_BASELINE)

    def test_internal_strength_fm_units(self):
        p = make(V0=6.0, M=0.5, units=UnitSystem.NaturalFm)
        assert p.V0_internal == pytest.approx(6.0)

    def test_internal_strength_atomic_units(self):
        p = make(V0=10.0, M=1.0, units=UnitSystem.AtomicUnits)
        assert p.V0_internal == pytest.approx(10.0)

    def test_with_kappa_preserves_rest(self):
        p = make(kappa=-1)
        q = p.with_kappa(2)
        assert q.kappa == 2
        assert q.V0 == p.V0 and q.alpha == p.alpha and q.units == p.units

    def test_with_c_factor(self):
        q = make().with_c_factor(100.0)
        assert q.c_factor == 100.0


class TestMorsePotential:
    def test_barrier_peak_at_r0(self):
        p = make()
        r = np.linspace(0.5, 12.0, 2000)
        v = morse_potential_grid(p, r)
        assert r[np.argmax(v.real)] == pytest.approx(p.r0, abs=0.01)
        assert v.real.max() == pytest.approx(p.V0_internal, abs=1e-4)

    def test_barrier_height(self):
        p = make()
        assert morse_potential(p, p.r0) == pytest.approx(p.V0_internal)

    def test_asymptotic_decay(self):
        p = make()
        assert abs(morse_potential(p, 60.0)) < 1e-6

    def test_pocket_at_origin(self):
        p = make()
        v = morse_potential(p, 0.0)
        assert v.real < 0.0

    def test_closed_form_value(self):
        p = make(V0=2.0, r0=1.0, alpha=0.5, M=0.5)
        r = 3.0
        y = math.exp(-(r - 1.0) * 0.5)
        expected = 2.0 * y * (2.0 - y)
        assert morse_potential(p, r) == pytest.approx(expected, rel=1e-14)

    def test_complex_argument_analytic_continuation(self):
        p = make()
        z = 2.0 * cmath.exp(1j * math.radians(30.0))
        y = cmath.exp(-(z - p.r0) * p.alpha)
        expected = p.V0_internal * y * (2.0 - y)
        got = morse_potential(p, z)
        assert got == pytest.approx(expected, rel=1e-13)

    def test_grid_matches_scalar(self):
        p = make()
        r = np.linspace(0.1, 10.0, 17)
        v = morse_potential_grid(p, r)
        for ri, vi in zip(r, v):
            assert vi == pytest.approx(morse_potential(p, ri), rel=1e-14)

    def test_overflow_guard(self):
        p = make(alpha=5.0, r0=1.0)
        with pytest.raises(DomainError):
            morse_potential(p, -200.0)


class TestEnergyReporting:
    def test_fm_round_trip(self):
        p = make(units=UnitSystem.NaturalFm)
        eps = p.M * p.c**2 + (-4.05 + 0.1j) / (2.0 * p.M)
        e = report_energy(p, eps)
        assert unreport_energy(p, e) == pytest.approx(eps, rel=1e-14)

    def test_au_round_trip(self):
        p = make(units=UnitSystem.AtomicUnits)
        eps = p.M * p.c**2 - 3.2 + 0.5j
        e = report_energy(p, eps)
        assert e == pytest.approx(-3.2 + 0.5j, rel=1e-12)
        assert unreport_energy(p, e) == pytest.approx(eps, rel=1e-14)

    def test_width_convention(self):
        assert width(1.0 - 0.25j) == pytest.approx(0.5)
        assert width(2.0 + 0.0j) == 0.0


class TestLabels:
    @pytest.mark.parametrize("n,l,kappa,label", [
        (1, 0, -1, "1s1/2"),
        (2, 1, 1, "2p1/2"),
        (1, 1, -2, "1p3/2"),
        (3, 2, 2, "3d3/2"),
        (1, 3, -4, "1f7/2"),
    ])
    def test_spectroscopic(self, n, l, kappa, label):
        assert spectroscopic_label(n, l, kappa) == label
