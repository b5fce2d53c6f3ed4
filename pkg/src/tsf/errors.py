"""Exception hierarchy shared by the library and the command line."""


class TSFError(Exception):
    """Base class for every error raised by tsf."""


class ValidationError(TSFError, ValueError):
    """An argument is out of range, malformed or of the wrong shape."""


class ShapeError(ValidationError):
    pass


class KeyMismatchError(ValidationError):
    pass


class EncodingError(ValidationError):
    """A character has no symbol in the text alphabet."""

    def __init__(self, char, position):
        super().__init__(f"cannot encode {char!r} at position {position}")
        self.char = char
        self.position = position


class KeyOverflowError(TSFError, OverflowError):
    """Integer arithmetic on the key would leave the signed 64-bit range."""


class ContractError(TSFError, RuntimeError):
    """A caller broke an operation's precondition."""
