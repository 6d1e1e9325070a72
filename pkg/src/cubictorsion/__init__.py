"""cubictorsion: exact verification of elliptic curve torsion growth over cubic fields."""

from .errors import (
    ContractViolationError,
    CubicTorsionError,
    ExcludedParameterError,
    InputError,
    ReducibleCubicError,
    SingularCurveError,
    UndecidedError,
)

__version__ = "0.1.0"
