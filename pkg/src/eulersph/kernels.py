"""Compact-support smoothing kernels.

The solver only ever needs W(r) and dW/dr(r); every discrete operator is
built from those two scalars plus the pair unit vector, so kernels are
interchangeable.  The default is a Wendland C2 rescaled so that its
support radius equals ``SUPPORT_FACTOR * dp``.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit
from scipy.integrate import quad

# Cut-off radius in units of the initial particle spacing dp.
SUPPORT_FACTOR = 2.6


@njit(cache=True)
def _wendland_w(r, h, sigma):
    q = r / h
    if q >= 2.0:
        return 0.0
    a = 1.0 - 0.5 * q
    return sigma * a * a * a * a * (2.0 * q + 1.0)


@njit(cache=True)
def _wendland_dwdr(r, h, sigma):
    q = r / h
    if q >= 2.0:
        return 0.0
    a = 1.0 - 0.5 * q
    return -5.0 * sigma * q * a * a * a / h


class WendlandC2Kernel:
    """Wendland C2 kernel in 2D with support radius 2h.

    The normalization constant is computed by quadrature at construction
    (rather than hard-coded) so rescaled supports stay exactly normalized;
    the known closed form 7/(4*pi*h^2) serves as a cross-check in tests.
    """

    def __init__(self, dp: float):
        if dp <= 0.0:
            raise ValueError("particle spacing dp must be positive")
        self.dp = dp
        self.support_radius = SUPPORT_FACTOR * dp
        self.smoothing_scale = 0.5 * self.support_radius

        h = self.smoothing_scale
        # 2D normalization: sigma * integral(shape * 2*pi*r) dr = 1.
        raw, _ = quad(lambda r: _wendland_w(r, h, 1.0) * 2.0 * math.pi * r,
                      0.0, self.support_radius, limit=200)
        self.normalization_constant = 1.0 / raw

        total = self.integrate()
        if abs(total - 1.0) > 1e-6:
            raise ValueError(f"kernel normalization off: integral = {total!r}")

    def value(self, r):
        """W(r); zero at and beyond the support radius."""
        if np.isscalar(r):
            return _wendland_w(float(r), self.smoothing_scale,
                               self.normalization_constant)
        r = np.asarray(r, dtype=np.float64)
        return _kernel_value_arr(r, self.smoothing_scale,
                                 self.normalization_constant)

    def gradient_magnitude(self, r):
        """dW/dr(r); non-positive, zero at r=0 and beyond the support."""
        if np.isscalar(r):
            return _wendland_dwdr(float(r), self.smoothing_scale,
                                  self.normalization_constant)
        r = np.asarray(r, dtype=np.float64)
        return _kernel_dwdr_arr(r, self.smoothing_scale,
                                self.normalization_constant)

    def integrate(self) -> float:
        """Numeric quadrature of W over its 2D support (should be 1)."""
        h, sig = self.smoothing_scale, self.normalization_constant
        total, _ = quad(lambda r: _wendland_w(r, h, sig) * 2.0 * math.pi * r,
                        0.0, self.support_radius, limit=200)
        return total


@njit(cache=True)
def _kernel_value_arr(r, h, sigma):
    out = np.empty_like(r)
    for i in range(r.shape[0]):
        out[i] = _wendland_w(r[i], h, sigma)
    return out


@njit(cache=True)
def _kernel_dwdr_arr(r, h, sigma):
    out = np.empty_like(r)
    for i in range(r.shape[0]):
        out[i] = _wendland_dwdr(r[i], h, sigma)
    return out


def default_kernel(dp: float) -> WendlandC2Kernel:
    return WendlandC2Kernel(dp)
