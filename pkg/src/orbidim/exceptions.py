"""Exception hierarchy shared by all modules."""


class OrbidimError(Exception):
    """Base class for every error raised by this package."""


class SignatureError(OrbidimError, ValueError):
    """Invalid orbifold signature data.

    ``field`` names the offending part of the signature (``"genus"``,
    ``"mirror_circles"``, ``"cone_orders"`` or ``"corner_orders"``) so that
    callers such as the grammar parser can point at the right token.
    """

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class SignatureSyntaxError(SignatureError):
    """The signature string does not match the grammar."""

    def __init__(self, message, offset, expected=(), field=None):
        super().__init__(message, field=field)
        self.offset = offset
        self.expected = tuple(expected)

    def __str__(self):
        msg = f"{self.args[0]} at offset {self.offset}"
        if self.expected:
            msg += " (expected one of: " + ", ".join(self.expected) + ")"
        return msg


class DomainError(OrbidimError, ValueError):
    """An operation was called outside its domain (e.g. a non-hyperbolic orbifold)."""


class BundleMismatchError(OrbidimError, ValueError):
    """Line-bundle data is not aligned with the cone points of its curve."""


class NonIntegralError(OrbidimError, ArithmeticError):
    """A quantity that must be an integer came out fractional.

    This never happens for consistent input; it flags corrupted data.
    """


class InvalidActionError(OrbidimError, ValueError):
    """A permutation action does not define a cover of the orbifold."""
