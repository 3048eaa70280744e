"""
Module containing error classes.
"""


class BaseError(Exception):
    """Base class for all errors."""

    def __init__(self, message, **kws):
        """
        Stores the error message in the `message` attribute.

        Args:
            message (str): The error message.
            **kws: Additional keyword arguments.
        """
        super().__init__(message)
        self.message = message

    def __str__(self):
        """Returns the error message."""
        return f"{self.message}"


class ProjlineError(BaseError):
    """Root of all errors raised by projline operations."""


class SettingsError(BaseError):
    """Raised for errors in loading projline settings."""


class UnknownSuiteError(ProjlineError):
    """Raised when a named verification suite does not exist."""


# numfield

class NumFieldError(ProjlineError):
    """Raised for exact-arithmetic errors."""


class ZeroPolynomialError(NumFieldError):
    """Raised when an operation needs a nonzero polynomial."""


class EndpointIsRootError(NumFieldError):
    """Raised when an interval endpoint is a root of the polynomial being counted."""


class NotSquarefreeError(NumFieldError):
    """Raised when a squarefree polynomial is required."""


class DivisionByZeroError(NumFieldError, ZeroDivisionError):
    """Raised on division by an exact zero."""


class ContextMismatchError(NumFieldError):
    """Raised when field elements from different number fields are combined."""


class InternalLimitError(NumFieldError):
    """Raised when interval refinement exceeds the configured bisection cap."""


class ScalarParseError(NumFieldError):
    """Raised when a scalar, point or polynomial encoding cannot be read."""


# moebius

class MoebiusError(ProjlineError):
    """Raised for Möbius transformation errors."""


class DegenerateMatrixError(MoebiusError):
    """Raised for matrices with zero determinant."""


class OrientationViolation(MoebiusError):
    """Raised when a map would reverse the orientation of the circle."""


class IdentityInputError(MoebiusError):
    """Raised when an operation is undefined on the identity."""


class NonDistinctPointsError(MoebiusError):
    """Raised when points that must be pairwise distinct coincide."""


class UndefinedDerivativeError(MoebiusError):
    """Raised when a derivative cannot be expressed in the available charts."""


# pwhomeo

class HomeoError(ProjlineError):
    """Raised for piecewise projective homeomorphism errors."""


class ContinuityViolation(HomeoError):
    """Raised when adjacent pieces disagree at their shared breakpoint."""

    def __init__(self, message, point=None, **kws):
        super().__init__(message, **kws)
        self.point = point


class InjectivityViolation(HomeoError):
    """Raised when the images of the pieces overlap or are out of cyclic order."""


class NonPartitionError(HomeoError):
    """Raised when the arcs of the pieces do not partition the circle."""


class DoesNotFixInfinityError(HomeoError):
    """Raised when a germ at infinity is requested from a map moving infinity."""


class PointNotFixedError(HomeoError):
    """Raised when a map is split at a point it does not fix."""


# catalog

class CatalogError(ProjlineError):
    """Raised for generator set and word errors."""


class UnknownGeneratorError(CatalogError):
    """Raised when a word names a generator missing from the generator set."""


class UnknownPresetError(CatalogError):
    """Raised when a preset generator set does not exist."""


class WordSyntaxError(CatalogError):
    """Raised for malformed words."""


class WitnessFailureError(CatalogError):
    """Raised when a breakpoint lacks a valid hyperbolic witness."""


class LambdaNotGreaterThanOneError(CatalogError):
    """Raised when a construction requires λ > 1."""


# obstruct

class ObstructError(ProjlineError):
    """Raised for malformed input to the obstruction audits."""


# treemodel

class TreeModelError(ProjlineError):
    """Raised for binary tree model errors."""


class SequenceSyntaxError(TreeModelError):
    """Raised for malformed eventually periodic sequences."""


# flow

class FlowError(ProjlineError):
    """Raised for one-parameter flow errors."""


class EllipticInputError(FlowError):
    """Raised when an elliptic map has no real flow through it."""


class NegativeTraceError(FlowError):
    """Raised when no positive-trace representative exists."""


class NotInFlowError(FlowError):
    """Raised when a map is not a time of the given flow."""


class TrivialFlowError(FlowError):
    """Raised when the identity or a zero generator is used to define a flow."""
