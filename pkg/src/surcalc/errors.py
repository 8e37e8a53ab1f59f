"""Exception types shared by the surcalc modules."""


class SurrealError(ArithmeticError):
    pass


class SignFormatError(SurrealError, ValueError):
    """A sign sequence contained something other than '+' or '-'."""


class CutViolation(SurrealError, ValueError):
    """Some left option was not strictly below every right option."""


class UnsupportedOrdinal(SurrealError):
    pass


class MalformedStream(SurrealError, ValueError):
    """Exponents in a term stream failed to strictly decrease."""


class ZeroDivisor(SurrealError, ZeroDivisionError):
    pass


class IrrationalCoefficient(SurrealError):
    pass


class TranscendentalConstant(SurrealError):
    """The exact answer needs e**r or ln(r) for a rational r."""


class UnsupportedDomain(SurrealError):
    """The argument lies outside the region where g, h, exp or log are closed."""


class Undecided(SurrealError):
    """A question could not be settled within the allotted budget."""


class NoProgress(SurrealError):
    """Asymptotic integration stopped improving the approximation."""


class LevelOutOfBound(SurrealError, ValueError):
    pass


class ParseError(SurrealError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset
