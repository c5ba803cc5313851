"""Exception hierarchy.

Two broad families matter to callers (and to the CLI exit codes):
input problems (ValidationError and its config subtypes) and numerical
failures (NumericalError and friends). Everything derives from
ThzPatchError so library users can catch one base.
"""

from __future__ import annotations


class ThzPatchError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(ThzPatchError):
    """An input value is outside its accepted domain."""


class InfeasibleDesignError(ValidationError):
    """The requested design has no physical solution (e.g. patch length <= 0)."""


class ConfigError(ValidationError):
    """Config file problem; messages name the offending key and line."""


class UnitError(ConfigError):
    """A quantity is missing its unit suffix or carries an unknown one."""


class NumericalError(ThzPatchError):
    """A solver failed to produce a trustworthy result."""


class ConvergenceError(NumericalError):
    """Iteration budget exhausted before reaching the residual target."""

    def __init__(self, message: str, last_residual: float | None = None):
        super().__init__(message)
        self.last_residual = last_residual


class NoBoundModeError(NumericalError):
    """The sheet does not bind a surface mode at this frequency."""


class BracketError(NumericalError):
    """A bisection bracket does not contain the requested root."""


class InstabilityError(NumericalError):
    """A time-domain run diverged (field magnitude beyond the guard)."""
