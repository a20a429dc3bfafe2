"""Exception types.

Two families are kept apart on purpose: ``OutOfRange`` (and friends) mean the
question itself was ill-posed, while a well-posed query that merely has a
negative answer returns ``False`` / ``None`` instead of raising.
"""


class CodePosetError(Exception):
    """Base class for every domain error raised by this package."""


class ParseError(CodePosetError, ValueError):
    pass


class DegreeMismatch(CodePosetError, ValueError):
    pass


class OutOfRange(CodePosetError, ValueError):
    pass


class StaircaseViolation(CodePosetError, ValueError):
    """A part exceeds its staircase bound ``alpha_i <= n - i``."""

    def __init__(self, index: int, value: int, n: int):
        self.index = index
        self.value = value
        self.n = n
        super().__init__(
            f"part {index} is {value}, but parts of a code in S_{n} "
            f"must satisfy alpha_{index} <= {n - index}"
        )


class NoDescent(CodePosetError, ValueError):
    pass


class NotRemovable(CodePosetError, ValueError):
    pass


class NotInsertable(CodePosetError, ValueError):
    pass


class PatternMismatch(CodePosetError, ValueError):
    pass


class InvalidWitness(CodePosetError, ValueError):
    pass


class ResourceCap(CodePosetError, RuntimeError):
    pass
