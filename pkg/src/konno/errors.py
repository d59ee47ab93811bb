"""Typed errors shared by every module.

Each concrete error carries the CLI exit code it maps to:
2 for bad input, 3 for violated mathematical preconditions, 4 for caps.
"""


class KonnoError(Exception):
    exit_code = 1


class InputError(KonnoError, ValueError):
    exit_code = 2


class ParseError(InputError):
    def __init__(self, offset, expected, found, text=None):
        self.offset = offset
        self.expected = expected
        self.found = found
        super().__init__(f"at offset {offset}: expected {expected}, found {found}")


class UnknownVariable(ParseError):
    def __init__(self, offset, name, allowed):
        super().__init__(offset, "one of " + ", ".join(allowed), repr(name))
        self.name = name


class NonMonomialTerm(ParseError):
    def __init__(self, offset, found):
        super().__init__(offset, "a single monomial", found)


class DimensionMismatch(InputError):
    pass


class NotHomogeneous(InputError):
    pass


class MathError(KonnoError):
    exit_code = 3


class InfiniteColength(MathError):
    pass


class UnitIdeal(MathError):
    pass


class FixedComponent(MathError):
    pass


class NonRationalBasePoint(MathError):
    def __init__(self, message, eliminant=None):
        super().__init__(f"{message}; eliminant: {eliminant}")
        self.eliminant = eliminant


class InconsistentBezout(MathError):
    pass


class InvalidGenus(MathError):
    pass


class DepthExceeded(KonnoError):
    exit_code = 4
