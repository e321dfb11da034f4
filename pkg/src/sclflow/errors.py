"""Exception hierarchy shared by all sclflow modules.

The CLI maps these onto exit codes: InputError -> 2, LimitExceeded -> 3,
InternalCheckError -> 4.
"""


class SclflowError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SclflowError):
    """Malformed or invalid input (bad word syntax, dimension mismatch, ...)."""


class ParseError(InputError):
    """Word text does not match the grammar; message names the offending token."""


class PromiseViolation(InputError):
    """A promise-problem input does not satisfy its promise."""


class LimitExceeded(SclflowError):
    """Requested computation exceeds a configured size cap; refused, not attempted."""


class InternalCheckError(SclflowError):
    """An internal invariant that should hold by theorem failed; indicates a bug."""
