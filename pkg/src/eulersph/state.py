"""Flow-state model: conserved/primitive conversions for both EOS regimes.

Compressible flow uses the ideal-gas law p = rho*(gamma-1)*e with total
energy carried as a conserved field.  Weakly compressible flow uses the
stiff artificial EOS p = c0^2*(rho - rho0) with the sound speed pinned to
c0 = 10*U_max; no energy field exists at all in that regime, so stale
energy values cannot leak into it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import StateError

IDEAL_GAS = "ideal_gas"
WEAKLY_COMPRESSIBLE = "weakly_compressible"


@dataclass(frozen=True)
class EosModel:
    regime: str
    gamma: float = 1.4
    rho0: float = 1.0
    c0: float = 0.0  # artificial sound speed, 10*U_max

    def __post_init__(self):
        if self.regime not in (IDEAL_GAS, WEAKLY_COMPRESSIBLE):
            raise ValueError(f"unknown EOS regime {self.regime!r}")
        if self.regime == IDEAL_GAS and self.gamma <= 1.0:
            raise ValueError("heat-capacity ratio must exceed 1")
        if self.regime == WEAKLY_COMPRESSIBLE:
            if self.rho0 <= 0.0 or self.c0 <= 0.0:
                raise ValueError("weakly compressible EOS needs rho0 > 0, c0 > 0")

    @property
    def compressible(self) -> bool:
        return self.regime == IDEAL_GAS

    def pressure(self, rho, internal_energy=None):
        """EOS closure: p(rho, e) or p(rho) depending on regime."""
        if self.compressible:
            return rho * (self.gamma - 1.0) * internal_energy
        return self.c0 ** 2 * (rho - self.rho0)

    def density_from_pressure(self, p):
        """Invert the artificial EOS (weakly compressible only)."""
        if self.compressible:
            raise ValueError("ideal-gas EOS is not invertible from p alone")
        return self.rho0 + p / self.c0 ** 2


def ideal_gas(gamma: float = 1.4) -> EosModel:
    return EosModel(IDEAL_GAS, gamma=gamma)


def weakly_compressible(rho0: float, u_max: float) -> EosModel:
    return EosModel(WEAKLY_COMPRESSIBLE, rho0=rho0, c0=10.0 * u_max)


@dataclass
class ConservedState:
    """Per-particle conserved fields; ``energy`` is None in WC mode."""

    rho: np.ndarray
    mom_x: np.ndarray
    mom_y: np.ndarray
    energy: np.ndarray | None = None

    def copy(self):
        e = None if self.energy is None else self.energy.copy()
        return ConservedState(self.rho.copy(), self.mom_x.copy(),
                              self.mom_y.copy(), e)


@dataclass
class PrimitiveState:
    rho: np.ndarray
    u: np.ndarray
    v: np.ndarray
    p: np.ndarray


def primitive_from_conserved(U: ConservedState, eos: EosModel,
                             time=None) -> PrimitiveState:
    """Convert conserved fields to primitives, validating physicality."""
    rho = np.asarray(U.rho, dtype=np.float64)
    bad = np.flatnonzero(~(rho > 0.0))
    if bad.size:
        raise StateError(f"non-positive density {rho[bad[0]]!r}",
                         particle=int(bad[0]), time=time)
    u = U.mom_x / rho
    v = U.mom_y / rho
    if eos.compressible:
        if U.energy is None:
            raise StateError("compressible state is missing the energy field")
        e_int = U.energy - 0.5 * rho * (u * u + v * v)
        bad = np.flatnonzero(~(e_int > 0.0))
        if bad.size:
            raise StateError(f"non-positive internal energy {e_int[bad[0]]!r}",
                             particle=int(bad[0]), time=time)
        p = (eos.gamma - 1.0) * e_int
    else:
        p = eos.pressure(rho)
    return PrimitiveState(rho, u, v, p)


def conserved_from_primitive(q: PrimitiveState, eos: EosModel) -> ConservedState:
    rho = np.asarray(q.rho, dtype=np.float64)
    mom_x = rho * q.u
    mom_y = rho * q.v
    if eos.compressible:
        energy = q.p / (eos.gamma - 1.0) + 0.5 * rho * (q.u * q.u + q.v * q.v)
        return ConservedState(rho.copy(), mom_x, mom_y, energy)
    return ConservedState(rho.copy(), mom_x, mom_y, None)


def sound_speed(q: PrimitiveState, eos: EosModel, time=None):
    """c = sqrt(gamma*p/rho) for ideal gas; the constant c0 otherwise."""
    if not eos.compressible:
        return np.full_like(np.asarray(q.rho, dtype=np.float64), eos.c0)
    arg = eos.gamma * np.asarray(q.p) / np.asarray(q.rho)
    bad = np.flatnonzero(~(arg > 0.0))
    if bad.size:
        raise StateError("non-positive sound-speed argument",
                         particle=int(bad[0]), time=time)
    return np.sqrt(arg)


def total_energy(rho, u, v, p, gamma):
    """E = p/(gamma-1) + rho*|v|^2/2 (scalar or array)."""
    return p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v)
