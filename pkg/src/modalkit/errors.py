"""Exception types shared across the library."""


class ModalkitError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(ModalkitError):
    """Input text does not match the expected grammar.

    Carries ``position``, the character offset of the offending token.
    """

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InternalError(ModalkitError):
    """An internal consistency check failed; indicates a bug."""


class NotAMode(ModalkitError):
    """A seven-note scale does not decompose into base chord + tension triad."""


class NotInterleavable(ModalkitError):
    """Base chord and tension triad do not interleave into a modal scale."""


class StrandMismatch(ModalkitError):
    """Braid words over different strand counts cannot be combined."""


class PatternMismatch(ModalkitError):
    """A rewrite rule's pattern does not match at the requested position."""


class IndexOutOfRange(ModalkitError):
    """A braid generator index lies outside [1, strands - 1]."""


class SizeMismatch(ModalkitError):
    """Chords of different sizes cannot be voice-led without padding."""
