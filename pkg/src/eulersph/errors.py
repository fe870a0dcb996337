"""Exception types shared across the solver."""


class ConfigError(ValueError):
    """Invalid case configuration; raised at load time, exit code 2."""


class StateError(RuntimeError):
    """Unphysical flow state (non-positive density or internal energy)."""

    def __init__(self, message, particle=None, time=None):
        if particle is not None:
            message = f"{message} (particle {particle}, t={time})"
        super().__init__(message)
        self.particle = particle
        self.time = time


class SolverError(RuntimeError):
    """Numerical failure during flux assembly or time integration."""

    def __init__(self, message, particle=None, neighbor=None, time=None):
        detail = []
        if particle is not None:
            detail.append(f"particle {particle}")
        if neighbor is not None:
            detail.append(f"neighbor {neighbor}")
        if time is not None:
            detail.append(f"t={time}")
        if detail:
            message = f"{message} ({', '.join(detail)})"
        super().__init__(message)
        self.particle = particle
        self.neighbor = neighbor
        self.time = time


class RiemannError(SolverError):
    """Riemann solver received states it cannot resolve (e.g. near vacuum)."""
