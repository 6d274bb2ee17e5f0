"""Exception hierarchy shared by the library and the command line."""


class CloneError(ValueError):
    """Base class; the CLI maps every subclass to exit status 2."""


class ParseError(CloneError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.reason = message
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)


class DomainError(CloneError):
    """A value is not valid for the structure it was handed to."""


class MonoidMismatch(CloneError):
    pass


class ArityMismatch(CloneError):
    pass


class UnsupportedVariety(CloneError):
    pass


class ResourceLimit(CloneError):
    pass
