"""Exception taxonomy shared across the library, the text formats and the CLI."""


class PolynatError(Exception):
    """Base class for every error raised deliberately by this package."""


class DomainError(PolynatError):
    """An operation was applied outside its mathematical domain.

    Examples: predecessor of zero, popping a digit from zero, subtracting a
    larger value with the generic algorithm.
    """


class DuplicateElementError(DomainError):
    """A set was built from a sequence containing repeated elements."""


class ResourceLimitError(PolynatError):
    """A result would exceed a configured magnitude or nesting guard."""


class ParseError(PolynatError):
    """Malformed input text. Carries the zero-based offset of the offence."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class OracleOverflowError(PolynatError):
    """Test-infrastructure error: a word-oracle result left the word range."""
