"""Exception hierarchy shared by the library and the CLI.

Every domain failure derives from :class:`NilpotError`; the CLI maps those to
exit status 1 and prints the class name so the failing case is visible.
"""

from __future__ import annotations


class NilpotError(Exception):
    """Base class for domain errors."""


class PolySyntaxError(NilpotError, ValueError):
    """Malformed polynomial text. ``offset`` is the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class NonIntegralReduction(NilpotError, ArithmeticError):
    pass


class ZeroArgument(NilpotError, ValueError):
    pass


class DuplicateNode(NilpotError, ValueError):
    pass


class NotRealizable(NilpotError):
    """No integer polynomial realizes the requested point map or pattern."""


class InvalidSequence(NilpotError, ValueError):
    pass


class NotApplicable(NilpotError):
    pass


class DomainError(NilpotError, ValueError):
    pass


class ZeroStart(NilpotError, ValueError):
    pass


class NonMinimalInput(NilpotError, ValueError):
    pass


class InvalidForm(NilpotError, ValueError):
    pass


class UnknownSuite(NilpotError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
