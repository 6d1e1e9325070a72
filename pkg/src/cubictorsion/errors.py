"""Exception types shared across the package.

Every failure mode a caller is expected to handle has its own type;
anything raised as ContractViolationError means an internal invariant
broke and the result of the whole computation must not be trusted.
"""

from __future__ import annotations


class CubicTorsionError(Exception):
    """Base class for all package-specific errors."""


class InputError(CubicTorsionError):
    """Malformed user input (bad JSON, unparseable rational, wrong shape)."""


class ReducibleCubicError(CubicTorsionError):
    """A degree-3 polynomial expected to be irreducible has a rational root."""


class SingularCurveError(CubicTorsionError):
    """A Weierstrass model with discriminant zero."""


class ExcludedParameterError(CubicTorsionError):
    """A family parameter outside the family's domain.

    Carries a human-readable reason; sweep drivers turn this into an
    EXCLUDED report rather than a failure.
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class UndecidedError(CubicTorsionError):
    """The precision ladder was exhausted without an exact decision.

    Raised instead of guessing.  Distinct from a negative answer: callers
    must surface this as UNDECIDED, never as "no".
    """


class ContractViolationError(CubicTorsionError):
    """An internal invariant failed.  Results are not trustworthy."""
