"""Named error types.

Errors are split in two families so the command line can map them to
exit codes: :class:`InputError` (bad user input, exit 3) and
:class:`InvariantViolation` (a computed object failed a structural
check, exit 2).
"""

import warnings


class GradusError(Exception):
    """Base class of all package errors."""

    exit_code = 1

    def to_json(self):
        return {"error": type(self).__name__, "message": str(self)}


class InputError(GradusError):
    exit_code = 3


class InvariantViolation(GradusError):
    exit_code = 2


# laurent
class NegativeExponent(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class ParseError(InputError):
    pass


# rootsys
class UnknownType(InputError):
    pass


class NonTerminating(InputError):
    pass


class NonIntegralPairing(InputError):
    pass


class InvalidGrading(InputError):
    pass


class Inconsistent(InputError):
    pass


class InvalidRootSystem(InputError):
    pass


# form / facets
class OnWall(InputError):
    pass


class FiniteModulus(InputError):
    pass


class InconsistentRow(InvariantViolation):
    pass


# bases
class LiftFailure(InvariantViolation):
    pass


class NotABasis(InvariantViolation):
    pass


class RadicalNotMapped(InvariantViolation):
    pass


class NonPolynomialEntry(InvariantViolation):
    pass


class SignedBasisSearchExhausted(InvariantViolation):
    pass


class RigidityMismatch(InvariantViolation):
    """The two signs of the recursion disagree on rigidity of ``[0]``."""


# restrict
class NonLatticeCoefficient(InvariantViolation):
    pass


# springer
class AmbiguousMatching(InvariantViolation):
    pass


class InfeasibleMatching(InvariantViolation):
    pass


class NotUnique(InvariantViolation):
    pass


class UnsupportedType(InputError):
    pass


class BoundTooSmall(UserWarning):
    """Raised through :mod:`warnings` when a search bound changes the output."""


def warn_bound(message):
    warnings.warn(message, BoundTooSmall, stacklevel=3)
