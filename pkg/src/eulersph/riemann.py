"""Interface Riemann solvers.

Two production solvers plus one oracle:

* ``hllc_star`` — three-wave solver for the ideal-gas regime.  Wave speeds
  come from density-averaged velocity/sound speed (enthalpy-based), while
  the star velocity and pressure use the acoustic-impedance form scaled by
  a dissipation limiter beta = min(eta*|u_l-u_r|/c_bar, 1).  With beta = 0
  the scheme is central; near shocks beta -> 1 restores full upwinding.
* ``linearized_star`` — acoustic solver for the weakly compressible
  regime; its limiter only activates under compression
  (beta = min(eta*max(u_l-u_r, 0)/c_bar, 1)), with beta^2 scaling the
  pressure-difference term of u* and beta the velocity-difference term
  of p*.
* ``exact_star`` / ``exact_sample`` — classic iterative exact solver, kept
  as an independent test oracle (pure Python, no shared code with the
  production solvers).

All solvers take velocities projected on the interface unit normal; the
left state sits on the negative side of the normal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import RiemannError
from .state import total_energy

# Slack allowed on the S_l <= u* <= S_r wave ordering before erroring out.
WAVE_ORDER_SLACK = 1e-12
# Floor applied to the squared averaged sound speed, relative to u_tilde^2.
CTILDE_FLOOR = 1e-12

ETA_HLLC = 1.0
ETA_LINEARIZED = 15.0


@dataclass(frozen=True)
class RiemannInput:
    """Left/right primitive states and the interface unit normal."""

    rho_l: float
    u_l: float
    v_l: float
    p_l: float
    rho_r: float
    u_r: float
    v_r: float
    p_r: float
    nx: float
    ny: float

    def __post_init__(self):
        mag = math.hypot(self.nx, self.ny)
        if abs(mag - 1.0) > 1e-12:
            raise ValueError(f"interface normal must be unit length, |n|={mag!r}")

    @property
    def q_l(self) -> float:
        return self.u_l * self.nx + self.v_l * self.ny

    @property
    def q_r(self) -> float:
        return self.u_r * self.nx + self.v_r * self.ny


@dataclass
class StarState:
    """Resolved star-region values; compressible-only fields may be None."""

    u_star: float
    p_star: float
    beta: float
    v_star_x: float
    v_star_y: float
    s_l: float | None = None
    s_r: float | None = None
    rho_star_l: float | None = None
    rho_star_r: float | None = None
    e_star_l: float | None = None
    e_star_r: float | None = None
    ctilde_clamped: bool = False


@njit(cache=True)
def hllc_core(rho_l, ql, pl, el, rho_r, qr, pr, er, gamma, eta):
    """Scalar HLLC star computation on normal-projected states.

    el/er are total energies of the full (2D) states; they enter the
    enthalpy averages and the star energies.  Returns
    (u*, p*, S_l, S_r, rho*_l, rho*_r, E*_l, E*_r, beta, clamped, order_ok).
    """
    cl = math.sqrt(gamma * pl / rho_l)
    cr = math.sqrt(gamma * pr / rho_r)

    hl = (el + pl) / rho_l
    hr = (er + pr) / rho_r
    h_t = (rho_l * hl + rho_r * hr) / (rho_l + rho_r)
    u_t = (rho_l * ql + rho_r * qr) / (rho_l + rho_r)
    rad = (gamma - 1.0) * (h_t - 0.5 * u_t * u_t)
    clamped = False
    floor = CTILDE_FLOOR * u_t * u_t
    if rad < floor:
        rad = floor
        clamped = True
    c_t = math.sqrt(rad)
    s_l = u_t - c_t
    s_r = u_t + c_t

    c_bar = 0.5 * (cl + cr)
    beta = eta * abs(ql - qr) / c_bar
    if beta > 1.0:
        beta = 1.0

    zl = rho_l * cl
    zr = rho_r * cr
    u_star = (zl * ql + zr * qr + (pl - pr) * beta * beta) / (zl + zr)
    p_star = 0.5 * (pl + pr) + 0.5 * beta * (zl * (ql - u_star) + zr * (u_star - qr))

    order_ok = (s_l <= u_star + WAVE_ORDER_SLACK) and (u_star <= s_r + WAVE_ORDER_SLACK)

    rho_sl = rho_l * (s_l - ql) / (s_l - u_star)
    rho_sr = rho_r * (s_r - qr) / (s_r - u_star)
    e_sl = ((s_l - ql) * el - pl * ql + p_star * u_star) / (s_l - u_star)
    e_sr = ((s_r - qr) * er - pr * qr + p_star * u_star) / (s_r - u_star)

    return u_star, p_star, s_l, s_r, rho_sl, rho_sr, e_sl, e_sr, beta, clamped, order_ok


@njit(cache=True)
def linearized_core(ql, pl, qr, pr, rho_bar, c_bar, eta):
    """Scalar linearized (acoustic) star computation; returns (u*, p*, beta)."""
    beta = eta * (ql - qr) / c_bar
    if beta < 0.0:
        beta = 0.0
    elif beta > 1.0:
        beta = 1.0
    z = rho_bar * c_bar
    u_star = 0.5 * (ql + qr) + 0.5 * (pl - pr) / z * beta * beta
    p_star = 0.5 * (pl + pr) + 0.5 * beta * z * (ql - qr)
    return u_star, p_star, beta


def _tangential_mean(inp: RiemannInput, u_star):
    # Eq.-style star velocity vector: normal part u*, tangential part the
    # arithmetic mean of the two sides (no upwinding of the tangent).
    qm = 0.5 * (inp.q_l + inp.q_r)
    vx = u_star * inp.nx + 0.5 * (inp.u_l + inp.u_r) - qm * inp.nx
    vy = u_star * inp.ny + 0.5 * (inp.v_l + inp.v_r) - qm * inp.ny
    return vx, vy


def hllc_star(inp: RiemannInput, gamma: float, eta: float = ETA_HLLC) -> StarState:
    """HLLC star state with dissipation limiter (compressible regime)."""
    el = total_energy(inp.rho_l, inp.u_l, inp.v_l, inp.p_l, gamma)
    er = total_energy(inp.rho_r, inp.u_r, inp.v_r, inp.p_r, gamma)
    (u_star, p_star, s_l, s_r, rho_sl, rho_sr, e_sl, e_sr,
     beta, clamped, order_ok) = hllc_core(
        inp.rho_l, inp.q_l, inp.p_l, el,
        inp.rho_r, inp.q_r, inp.p_r, er, gamma, eta)
    if not order_ok:
        raise RiemannError(
            f"wave ordering violated: S_l={s_l!r}, S_*={u_star!r}, S_r={s_r!r} "
            f"for L=({inp.rho_l}, {inp.q_l}, {inp.p_l}) "
            f"R=({inp.rho_r}, {inp.q_r}, {inp.p_r})")
    vx, vy = _tangential_mean(inp, u_star)
    return StarState(u_star, p_star, beta, vx, vy, s_l, s_r,
                     rho_sl, rho_sr, e_sl, e_sr, clamped)


def linearized_star(inp: RiemannInput, rho_bar: float, c_bar: float,
                    eta: float = ETA_LINEARIZED) -> StarState:
    """Linearized star state (weakly compressible regime)."""
    u_star, p_star, beta = linearized_core(
        inp.q_l, inp.p_l, inp.q_r, inp.p_r, rho_bar, c_bar, eta)
    vx, vy = _tangential_mean(inp, u_star)
    return StarState(u_star, p_star, beta, vx, vy)


# ----------------------------------------------------------------------
# Exact solver (test oracle; deliberately independent of the code above).
# ----------------------------------------------------------------------

def _pressure_fn(p, rho_k, p_k, c_k, gamma):
    """f_K(p) and its derivative for one side of the exact solver."""
    if p > p_k:  # shock branch
        a = 2.0 / ((gamma + 1.0) * rho_k)
        b = (gamma - 1.0) / (gamma + 1.0) * p_k
        root = math.sqrt(a / (p + b))
        f = (p - p_k) * root
        df = root * (1.0 - 0.5 * (p - p_k) / (p + b))
    else:  # rarefaction branch
        f = 2.0 * c_k / (gamma - 1.0) * ((p / p_k) ** ((gamma - 1.0) / (2.0 * gamma)) - 1.0)
        df = (p / p_k) ** (-(gamma + 1.0) / (2.0 * gamma)) / (rho_k * c_k)
    return f, df


def exact_star(inp: RiemannInput, gamma: float,
               tol: float = 1e-12, max_iter: int = 200):
    """Exact star (u*, p*) by Newton iteration on the pressure function."""
    rho_l, p_l, rho_r, p_r = inp.rho_l, inp.p_l, inp.rho_r, inp.p_r
    ql, qr = inp.q_l, inp.q_r
    c_l = math.sqrt(gamma * p_l / rho_l)
    c_r = math.sqrt(gamma * p_r / rho_r)
    if 2.0 * (c_l + c_r) / (gamma - 1.0) <= qr - ql:
        raise RiemannError("states generate vacuum; exact solver undefined")

    # linearized (primitive-variable) initial guess, floored at a tiny pressure
    p = max(1e-14, 0.5 * (p_l + p_r)
            - 0.125 * (qr - ql) * (rho_l + rho_r) * (c_l + c_r))
    for _ in range(max_iter):
        f_l, df_l = _pressure_fn(p, rho_l, p_l, c_l, gamma)
        f_r, df_r = _pressure_fn(p, rho_r, p_r, c_r, gamma)
        f = f_l + f_r + (qr - ql)
        dp = f / (df_l + df_r)
        p_new = p - dp
        if p_new <= 0.0:
            p_new = 0.5 * p
        p = p_new
        if abs(f) <= tol and abs(dp) <= tol * max(p, 1.0):
            break
    f_l, _ = _pressure_fn(p, rho_l, p_l, c_l, gamma)
    f_r, _ = _pressure_fn(p, rho_r, p_r, c_r, gamma)
    u = 0.5 * (ql + qr) + 0.5 * (f_r - f_l)
    return u, p


def exact_sample(rho_l, u_l, p_l, rho_r, u_r, p_r, gamma, xi):
    """Sample the exact self-similar solution at speeds xi = x/t.

    Returns (rho, u, p) arrays.  Used as the oracle for shock-tube L1
    error measurements.
    """
    inp = RiemannInput(rho_l, u_l, 0.0, p_l, rho_r, u_r, 0.0, p_r, 1.0, 0.0)
    u_s, p_s = exact_star(inp, gamma)
    c_l = math.sqrt(gamma * p_l / rho_l)
    c_r = math.sqrt(gamma * p_r / rho_r)
    gm1, gp1 = gamma - 1.0, gamma + 1.0

    xi = np.asarray(xi, dtype=np.float64)
    rho = np.empty_like(xi)
    u = np.empty_like(xi)
    p = np.empty_like(xi)

    for i, s in enumerate(xi):
        if s <= u_s:  # left of contact
            if p_s > p_l:  # left shock
                sl = u_l - c_l * math.sqrt(gp1 / (2 * gamma) * p_s / p_l
                                           + gm1 / (2 * gamma))
                if s < sl:
                    rho[i], u[i], p[i] = rho_l, u_l, p_l
                else:
                    rho[i] = rho_l * ((p_s / p_l + gm1 / gp1)
                                      / (gm1 / gp1 * p_s / p_l + 1.0))
                    u[i], p[i] = u_s, p_s
            else:  # left rarefaction
                head = u_l - c_l
                c_sl = c_l * (p_s / p_l) ** (gm1 / (2 * gamma))
                tail = u_s - c_sl
                if s < head:
                    rho[i], u[i], p[i] = rho_l, u_l, p_l
                elif s > tail:
                    rho[i] = rho_l * (p_s / p_l) ** (1.0 / gamma)
                    u[i], p[i] = u_s, p_s
                else:  # inside the fan
                    u[i] = 2.0 / gp1 * (c_l + 0.5 * gm1 * u_l + s)
                    c = c_l - 0.5 * gm1 * (u[i] - u_l)
                    rho[i] = rho_l * (c / c_l) ** (2.0 / gm1)
                    p[i] = p_l * (c / c_l) ** (2.0 * gamma / gm1)
        else:  # right of contact
            if p_s > p_r:  # right shock
                sr = u_r + c_r * math.sqrt(gp1 / (2 * gamma) * p_s / p_r
                                           + gm1 / (2 * gamma))
                if s > sr:
                    rho[i], u[i], p[i] = rho_r, u_r, p_r
                else:
                    rho[i] = rho_r * ((p_s / p_r + gm1 / gp1)
                                      / (gm1 / gp1 * p_s / p_r + 1.0))
                    u[i], p[i] = u_s, p_s
            else:  # right rarefaction
                head = u_r + c_r
                c_sr = c_r * (p_s / p_r) ** (gm1 / (2 * gamma))
                tail = u_s + c_sr
                if s > head:
                    rho[i], u[i], p[i] = rho_r, u_r, p_r
                elif s < tail:
                    rho[i] = rho_r * (p_s / p_r) ** (1.0 / gamma)
                    u[i], p[i] = u_s, p_s
                else:
                    u[i] = 2.0 / gp1 * (-c_r + 0.5 * gm1 * u_r + s)
                    c = c_r + 0.5 * gm1 * (u[i] - u_r)
                    rho[i] = rho_r * (c / c_r) ** (2.0 / gm1)
                    p[i] = p_r * (c / c_r) ** (2.0 * gamma / gm1)
    return rho, u, p
