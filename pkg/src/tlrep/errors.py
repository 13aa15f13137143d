"""Exception types shared by the library and the command-line front end."""


class DomainError(ValueError):
    """Raised when an input is well formed but meaningless for the chosen algebra."""


class ParseError(ValueError):
    """Raised when a module spec cannot be parsed.

    ``offset`` is the byte offset in the input where parsing failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
