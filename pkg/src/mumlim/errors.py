"""Exception types shared across the package."""


class MumlimError(Exception):
    """Base class for all domain errors raised by mumlim."""


class PoleAtZero(MumlimError):
    """A rational function that must be analytic at t=0 has a pole there."""


class NotMaximallyUnipotent(MumlimError):
    """The operator fails the q_j(0) = 0 test.

    Attributes:
        failures: list of (j, reason, value) with reason "pole" or "nonzero";
            j is 1-based as in q_1..q_r, value is q_j(0) when finite.
        indicial: the indicial polynomial when every q_j is finite at 0,
            else None.
    """

    def __init__(self, message, failures=(), indicial=None):
        super().__init__(message)
        self.failures = list(failures)
        self.indicial = indicial


class NonUnipotent(MumlimError):
    """Matrix logarithm requested for a matrix gamma with (gamma-I)^r != 0."""


class NotAnalyticAtZero(MumlimError):
    """A functional-family symbol has a coefficient with a pole at t=0."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ZeroArgument(MumlimError):
    """Evaluation requested at the singular point t=0."""


class OutOfDisk(MumlimError):
    """Evaluation point lies outside the configured disk of validity."""


class PoleInDisk(MumlimError):
    """A symbol coefficient has a pole at the requested evaluation point."""


class QuadratureNoConvergence(MumlimError):
    """Quadrature refinement levels disagree beyond the requested tolerance."""


class InternalMismatch(MumlimError):
    """Two independent computation routes disagree beyond tolerance.

    Deliberately surfaced: it signals an implementation bug, not bad input.
    """


class OperatorSyntaxError(MumlimError):
    """Operator/symbol expression failed to parse; carries the position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ZeroLeadingCoefficient(MumlimError):
    """Expression collapsed to the zero operator or has no theta part."""


class InvalidDivisor(MumlimError):
    """Division of operators is only defined by theta-free expressions."""


class DegreeOverflow(MumlimError):
    """Symbol has theta-degree >= the operator order r."""
