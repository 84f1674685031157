"""Exception types shared across the package."""


class PermcodesError(Exception):
    """Base class for all errors raised by this package."""


class NotAPrimePower(PermcodesError):
    """The integer is not of the form p^m with p prime, m >= 1."""


class SpecMismatch(PermcodesError):
    """Operands belong to different field specs (or an incompatible spec)."""


class ParameterError(PermcodesError):
    """A precondition on plain parameters (ranges, shapes) is violated."""


class DimensionMismatch(PermcodesError):
    """Matrix/vector dimensions do not line up."""


class LengthMismatch(PermcodesError):
    """Permutations or vectors of different lengths were combined."""


class BudgetExceeded(PermcodesError):
    """An enumeration would exceed the caller-supplied work budget."""


class PreconditionViolated(PermcodesError):
    """A structural precondition (subgroup membership, distance floor) fails."""


class NotFullWeight(PermcodesError):
    """A vector expected to have no zero coordinate has one."""


class NotInDual(PermcodesError):
    """A vector expected to lie in the dual code does not."""


class ParseError(PermcodesError):
    """A file being read does not match its format; message carries the line."""


class VerificationFailed(PermcodesError):
    """A recomputed property (distance, header consistency) does not hold."""
