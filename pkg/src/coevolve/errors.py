"""Exception types shared across the package."""


class ModelError(Exception):
    """Base class for all model handling errors."""


class ParseError(ModelError):
    """Raised when a document is not well-formed JSON or misses required fields.

    ``position`` carries (line, column) when the underlying JSON decoder
    reported one.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class FormatVersionError(ParseError):
    """Raised for an unknown or missing formatVersion field."""


class InvariantError(ModelError):
    """Raised when a parsed model violates a structural invariant.

    ``subject`` names the offending element.
    """

    def __init__(self, message, subject=None):
        super().__init__(message)
        self.subject = subject


class DiffConflictError(ModelError):
    """Raised by patch application when an entry's old-side element is
    missing from, or duplicated in, the metamodel being patched."""


class MissingElementError(ModelError, LookupError):
    """Raised by correspondence helpers when an element was deleted and has
    no counterpart in the new metamodel."""
