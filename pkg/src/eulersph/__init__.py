"""Eulerian SPH solver with flux-closed boundary surface records."""

__version__ = "0.1.0"

from .kernels import WendlandC2Kernel, default_kernel, SUPPORT_FACTOR

__all__ = [
    "WendlandC2Kernel",
    "default_kernel",
    "SUPPORT_FACTOR",
    "__version__",
]
