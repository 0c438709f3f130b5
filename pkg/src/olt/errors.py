"""Exception classes shared across the package.

Each class carries the process exit code the command-line front end uses
when the error escapes a verb.
"""


class OLTError(Exception):
    exit_code = 1


class FormatError(OLTError, ValueError):
    """A serialized file could not be parsed."""

    exit_code = 3


class ParamsMismatch(OLTError, ValueError):
    """Two objects were built over different groups."""

    exit_code = 4


class DuplicateInput(OLTError, ValueError):
    exit_code = 5


class NotClosed(OLTError, ValueError):
    """A repeatable table needs f(X) to be a subset of X."""

    exit_code = 6


class TableTooLarge(OLTError, ValueError):
    exit_code = 7


class DimensionMismatch(OLTError, ValueError):
    exit_code = 8


class InvalidMessage(OLTError, ValueError):
    """Plaintext is not a member of the order-q subgroup."""

    exit_code = 9


class SingularMatrix(OLTError, ArithmeticError):
    exit_code = 10


class UnknownInput(OLTError, KeyError):
    exit_code = 11

    def __str__(self):
        return Exception.__str__(self)


class InvalidParams(OLTError, ValueError):
    exit_code = 12
