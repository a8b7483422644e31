"""Exception types shared across the toolkit."""


class SurrovvError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(SurrovvError):
    """Invalid or incomplete configuration (validation failures, unknown keys)."""


class DimensionError(SurrovvError):
    """Mismatched grids, state dimensions, or array shapes."""


class ContractViolationError(SurrovvError):
    """A caller-supplied object does not honour its declared interface."""


class DivergedTrajectoryError(SurrovvError):
    """Non-finite state encountered during integration."""

    def __init__(self, step, message=None):
        self.step = step
        super().__init__(message or f"non-finite state at integration step {step}")


class SingularNetworkError(SurrovvError):
    """Network algebra is singular (X_eq = 0)."""


class InfeasibleDispatchError(SurrovvError):
    """Requested mechanical power has no equilibrium angle."""


class CalibrationFailureError(SurrovvError):
    """Amplitude bisection could not bracket or converge on the interface budget."""

    def __init__(self, message, sweep=None):
        self.sweep = sweep if sweep is not None else []
        super().__init__(message)


class DegenerateCouplingError(SurrovvError):
    """Interface has no influence on the bound (K_yz = 0); the bound is vacuous."""


class EstimationFailureError(SurrovvError):
    """Too many operating-point samples were skipped during constant estimation."""


class TrainingDivergenceError(SurrovvError):
    """Training loss became non-finite."""


class NoCertificateError(SurrovvError):
    """Calibration produced an infinite quantile; no finite interface bound exists."""
