"""Exception hierarchy shared by every module of the package."""


class CurveMilnorError(Exception):
    """Base class for all errors raised by curvemilnor."""


class MalformedScalar(CurveMilnorError, ValueError):
    pass


class ZeroDenominator(CurveMilnorError, ZeroDivisionError):
    pass


class FieldMismatch(CurveMilnorError, ValueError):
    pass


class ArityMismatch(CurveMilnorError, ValueError):
    pass


class NotDivisible(CurveMilnorError, ArithmeticError):
    pass


class DivideByExactZero(CurveMilnorError, ZeroDivisionError):
    pass


class NotNumerical(CurveMilnorError, ValueError):
    """Generators with gcd > 1: the semigroup has no finite conductor."""


class NotClosed(CurveMilnorError, ValueError):
    pass


class ConductorNotCertified(CurveMilnorError, ValueError):
    pass


class DimensionMismatch(CurveMilnorError, ValueError):
    pass


class NotUnique(CurveMilnorError, ValueError):
    """The value set has no unique componentwise-minimal nonzero element."""


class ConductorMismatch(CurveMilnorError, ValueError):
    pass


class ValidationError(CurveMilnorError, ValueError):
    """Input that fails the curve document contract (CLI exit code 2)."""


class SchemaError(ValidationError):
    pass


class DegenerateBranch(ValidationError):
    pass


class CoincidentBranches(ValidationError):
    pass


class NotLocal(ValidationError):
    pass


class UnsupportedCharacteristic(ValidationError):
    pass


class PrecisionExhausted(CurveMilnorError, RuntimeError):
    """Truncated model could not be certified below the precision cap."""


class NotLocalChain(CurveMilnorError, ValueError):
    pass


class NoSuperficialFound(CurveMilnorError, RuntimeError):
    pass


class NotNZD(CurveMilnorError, ValueError):
    """Element vanishes identically on some branch."""


class InvariantViolation(CurveMilnorError, AssertionError):
    """An internal identity failed; signals an engine bug (CLI exit code 4)."""
