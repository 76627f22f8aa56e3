"""Exception types raised across the package."""


class NcalexError(Exception):
    pass


class InvalidGeneratorError(NcalexError, ValueError):
    """A letter is 0 or exceeds the generator count."""


class ArityError(NcalexError, ValueError):
    """Operands carry different generator counts or truncation orders."""


class NonUnitError(NcalexError, ArithmeticError):
    """Attempt to invert something without an invertible constant part."""


class DomainError(NcalexError, ValueError):
    """Input lies outside the domain of an operation (log, exp, chi)."""


class NotHermitianError(DomainError):
    pass


class SeifertBasisError(DomainError):
    pass


class MoveError(DomainError):
    """A move cannot be applied to the given matrix."""
