"""Exception types shared across the package."""


class TwistRegError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(TwistRegError, ValueError):
    pass


class PoleError(DomainError):
    """Argument lies on (or within tolerance of) a Gamma pole."""

    def __init__(self, message: str, pole: int):
        super().__init__(message)
        self.pole = pole


class AccuracyError(TwistRegError, ArithmeticError):
    pass


class SectorError(TwistRegError, ValueError):
    pass


class AmbiguityError(TwistRegError, ValueError):
    def __init__(self, message: str, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class FrameError(TwistRegError, ValueError):
    pass


class CaseError(TwistRegError, ValueError):
    """Requested operation does not apply to the discriminant case at hand."""


class InputError(TwistRegError, ValueError):
    pass


class AnomalyError(TwistRegError):
    """A root pattern that the classification rules do not cover was detected."""

    def __init__(self, message: str, warnings=()):
        super().__init__(message)
        self.warnings = list(warnings)


class IntegrationError(AccuracyError):
    """The reference ODE integrator could not complete."""
