"""Exception types shared across the package."""


class HopfForgeError(Exception):
    """Base class for all errors raised by this package."""


class AlgebraMismatchError(HopfForgeError):
    """Operands live over different alphabets or base fields."""


class UnknownGeneratorError(HopfForgeError):
    """A generator name is not part of the declared alphabet."""


class DegreeOverflowError(HopfForgeError):
    """A computation needs words beyond the completion degree bound."""

    def __init__(self, required: int, bound: int):
        super().__init__(
            f"degree {required} exceeds the completion bound {bound}; "
            f"recomplete with degree_bound >= {required}"
        )
        self.required = required
        self.bound = bound


class ParseError(HopfForgeError):
    """Malformed textual input; carries line/column of the offending token."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class CharacteristicError(HopfForgeError):
    """A construction is unavailable over the requested field characteristic."""


class NotFiniteDimensionalError(HopfForgeError):
    """The normal-word basis did not stabilize at the probed degree."""

    def __init__(self, degree: int):
        super().__init__(f"basis still grows past degree {degree}")
        self.degree = degree
