import numpy as np
import pytest

from eulersph.errors import StateError
from eulersph.state import (ConservedState, PrimitiveState, EosModel,
                            conserved_from_primitive, ideal_gas,
                            primitive_from_conserved, sound_speed,
                            weakly_compressible)


def arr(*vals):
    return np.array(vals, dtype=np.float64)


def test_ideal_gas_pressure_example():
    # rho=1, v=0, E=2.5, gamma=1.4 -> p = 1.0
    eos = ideal_gas(1.4)
    U = ConservedState(arr(1.0), arr(0.0), arr(0.0), arr(2.5))
    q = primitive_from_conserved(U, eos)
    assert q.p[0] == pytest.approx(1.0)
    assert q.u[0] == 0.0 and q.v[0] == 0.0


def test_weakly_compressible_reference_state():
    eos = weakly_compressible(rho0=1.0, u_max=1.0)
    assert eos.c0 == pytest.approx(10.0)
    U = ConservedState(arr(1.0), arr(0.3), arr(-0.1), None)
    q = primitive_from_conserved(U, eos)
    assert q.p[0] == pytest.approx(0.0)


def test_round_trip_identity_both_regimes():
    # conserved -> primitive -> conserved on 1000 random valid states
    rng = np.random.default_rng(42)
    n = 1000
    for eos in (ideal_gas(1.4), weakly_compressible(1.0, 1.0)):
        rho = rng.uniform(0.1, 10.0, n)
        u = rng.uniform(-5, 5, n)
        v = rng.uniform(-5, 5, n)
        if eos.compressible:
            p = rng.uniform(0.01, 10.0, n)
        else:
            p = eos.pressure(rho)
        U = conserved_from_primitive(PrimitiveState(rho, u, v, p), eos)
        back = conserved_from_primitive(primitive_from_conserved(U, eos), eos)
        np.testing.assert_allclose(back.rho, U.rho, rtol=1e-14)
        np.testing.assert_allclose(back.mom_x, U.mom_x, rtol=1e-14, atol=1e-14)
        np.testing.assert_allclose(back.mom_y, U.mom_y, rtol=1e-14, atol=1e-14)
        if eos.compressible:
            np.testing.assert_allclose(back.energy, U.energy, rtol=1e-14)
        else:
            assert back.energy is None


def test_sound_speed_free_stream():
    # p = 1/gamma, rho = 1: the free stream has unit sound speed.
    eos = ideal_gas(1.4)
    q = PrimitiveState(arr(1.0), arr(0.0), arr(0.0), arr(1.0 / 1.4))
    assert sound_speed(q, eos)[0] == pytest.approx(1.0)


def test_sound_speed_arithmetic():
    eos = ideal_gas(1.4)
    q = PrimitiveState(arr(1.0), arr(0.0), arr(0.0), arr(1.0))
    assert sound_speed(q, eos)[0] == pytest.approx(np.sqrt(1.4))


def test_sound_speed_weakly_compressible_constant():
    eos = weakly_compressible(rho0=1.0, u_max=1.0)
    q = PrimitiveState(arr(0.9, 1.1), arr(0, 0), arr(0, 0), eos.pressure(arr(0.9, 1.1)))
    np.testing.assert_allclose(sound_speed(q, eos), 10.0)


def test_sound_speed_monotone_in_pressure():
    eos = ideal_gas(1.4)
    p = np.linspace(0.1, 5.0, 50)
    q = PrimitiveState(np.ones_like(p), np.zeros_like(p), np.zeros_like(p), p)
    c = sound_speed(q, eos)
    assert np.all(np.diff(c) > 0)


def test_negative_density_raises_with_index():
    eos = ideal_gas(1.4)
    U = ConservedState(arr(1.0, -0.5), arr(0, 0), arr(0, 0), arr(2.5, 2.5))
    with pytest.raises(StateError) as err:
        primitive_from_conserved(U, eos, time=0.125)
    assert err.value.particle == 1
    assert err.value.time == 0.125


def test_negative_internal_energy_raises():
    eos = ideal_gas(1.4)
    U = ConservedState(arr(1.0), arr(10.0), arr(0.0), arr(2.5))
    with pytest.raises(StateError):
        primitive_from_conserved(U, eos)


def test_wc_mode_has_no_energy_field():
    eos = weakly_compressible(1.0, 1.0)
    q = PrimitiveState(arr(1.01), arr(0.5), arr(0.0), eos.pressure(arr(1.01)))
    U = conserved_from_primitive(q, eos)
    assert U.energy is None


def test_invalid_eos_parameters():
    with pytest.raises(ValueError):
        EosModel("ideal_gas", gamma=1.0)
    with pytest.raises(ValueError):
        EosModel("weakly_compressible", rho0=1.0, c0=0.0)
    with pytest.raises(ValueError):
        EosModel("isothermal")
