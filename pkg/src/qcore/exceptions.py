"""Exception hierarchy shared by every module of the toolkit."""
from typing import Any, Dict, List, Optional


class EURError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(EURError):
    """A quantum object or parameter failed one of its invariants.

    ``violation`` is the structured report: which invariant failed, by how much,
    plus free-form detail. ``violations`` holds every failed invariant when the
    validator collected more than one.
    """

    invariant = 'validation'

    def __init__(self, message: str, amount: float = float('nan'), detail: Any = None,
                 invariant: Optional[str] = None, violations: Optional[List[Dict[str, Any]]] = None):
        super().__init__(message)
        if invariant is not None:
            self.invariant = invariant
        self.amount = float(amount)
        self.detail = detail
        self.violation = {'invariant': self.invariant, 'amount': self.amount, 'detail': detail or message}
        self.violations = violations if violations is not None else [self.violation]


class HermiticityError(ValidationError):
    invariant = 'hermiticity'


class TraceError(ValidationError):
    invariant = 'unit_trace'


class PositivityError(ValidationError):
    invariant = 'positive_semidefinite'


class OrthonormalityError(ValidationError):
    invariant = 'orthonormality'


class ProbabilityError(ValidationError):
    invariant = 'probability_vector'


class FiniteError(ValidationError):
    invariant = 'finite_entries'


class RangeError(ValidationError):
    """A scalar parameter lies outside its admissible range."""
    invariant = 'parameter_range'


class DimensionError(EURError):
    """Dimension or subsystem mismatch."""


class ConsistencyError(EURError):
    """Two independent evaluation routes disagree beyond tolerance."""

    def __init__(self, message: str, discrepancy: float = float('nan')):
        super().__init__(message)
        self.discrepancy = float(discrepancy)


class GuardError(EURError):
    """A combinatorial guard refused an oversized search."""


class UnsupportedError(EURError):
    """The operation is not defined for the given structure."""


class RegistryError(EURError):
    """The plug-in bound registry cannot be used as given."""


_BY_INVARIANT = {cls.invariant: cls for cls in (
    HermiticityError, TraceError, PositivityError, OrthonormalityError,
    ProbabilityError, FiniteError, RangeError)}


def error_for(violations: List[Dict[str, Any]], prefix: str) -> ValidationError:
    """Build the exception for the first violation, carrying the full list."""
    first = violations[0]
    cls = _BY_INVARIANT.get(first['invariant'], ValidationError)
    message = f"{prefix}: {first['invariant']} violated by {first['amount']:.3e} ({first['detail']})"
    return cls(message, amount=first['amount'], detail=first['detail'],
               invariant=first['invariant'], violations=violations)
