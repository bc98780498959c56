"""Exception types shared across the package."""


class VennLogicError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(VennLogicError, ValueError):
    """A numeric argument is outside its admissible range."""


class DisjointnessViolation(VennLogicError):
    """Disjoint aggregation applied to values whose truth mass is too large."""


class LengthMismatch(VennLogicError):
    """Sequences that must share a common length do not."""


class TooManyVariables(VennLogicError):
    """Requested diagram size exceeds the supported maximum."""


class UnknownVariable(VennLogicError):
    """An expression uses a variable missing from the declared ordering."""


class ArityMismatch(VennLogicError):
    """An assignment does not fit the diagram or logic it is used with."""


class OracleTooLarge(VennLogicError):
    """A brute-force expansion would exceed its term budget."""


class VerificationFailure(VennLogicError):
    """A numeric cross-check deviated beyond its tolerance."""


class SelfTestFailure(VennLogicError):
    """A selftest suite found a counterexample."""


class ParseError(VennLogicError):
    """Bad surface syntax.

    Carries the byte offset of the failure and the set of token kinds that
    would have been accepted there.
    """

    def __init__(self, message, offset, expected=()):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset
        self.expected = frozenset(expected)
