"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """An argument is outside the domain an operation accepts."""


class BracketError(RuntimeError):
    """A bisection bracket does not contain a sign change."""


class DegenerateDenominatorError(ZeroDivisionError):
    """A moment ratio has a denominator below the guard threshold."""


class IntegrationDiagnosticError(RuntimeError):
    """Raised when a time step violates positivity or mass conservation.

    Attributes
    ----------
    subsystem : int
        1-based subsystem number (1 ruler, 2 citizens, 3 competing group).
    step : int
        Index of the offending step, counted from the start of the run.
    """

    def __init__(self, message, subsystem, step):
        super().__init__(f"{message} (subsystem {subsystem}, step {step})")
        self.subsystem = subsystem
        self.step = step


class ConfigError(ValueError):
    """A run configuration is malformed. ``key`` holds the dotted key path."""

    def __init__(self, key, message):
        super().__init__(f"{key}: {message}" if key else message)
        self.key = key
