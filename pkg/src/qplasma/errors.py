"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented domain restriction."""


class QuadratureFailure(RuntimeError):
    """Adaptive integration could not reach the requested tolerance.

    Carries the best partial result (an ``IntegralResult``) so callers can
    inspect how far the integrator got before giving up.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
