"""Exception types shared across the package."""


class CspaceError(Exception):
    """Base class for all library errors."""


class EmptyInputError(CspaceError):
    """An operation received an empty region where a non-empty one is required."""


class InvalidRingError(CspaceError):
    """A ring is degenerate (fewer than 3 distinct vertices) or self-intersecting."""


class UndefinedDistanceError(CspaceError):
    """A containment/covering distance is undefined because its erosion base is empty."""

    def __init__(self, message: str = "erosion base is empty; distance undefined"):
        super().__init__(message)


class ParseError(CspaceError):
    """Constraint text failed to parse.

    Carries the character offset and the token classes that would have been
    accepted at that position.
    """

    def __init__(self, message: str, pos: int, expected: tuple[str, ...] = ()):
        detail = f"{message} at position {pos}"
        if expected:
            detail += " (expected " + ", ".join(expected) + ")"
        super().__init__(detail)
        self.pos = pos
        self.expected = expected


class SceneError(CspaceError):
    """Scene JSON violated the schema. `pointer` is a JSON pointer to the offender."""

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{message} [at {pointer or '/'}]")
        self.pointer = pointer


class UnknownObjectError(CspaceError):
    """An expression referenced an object name missing from the scene."""


class UnknownGroupError(CspaceError):
    """An expression referenced a group name missing from the scene."""


class MixedSubjectsError(CspaceError):
    """Region evaluation needs a single moving subject; the expression has several."""


class OracleMismatchError(CspaceError):
    """Fast path and brute-force oracle disagree beyond tolerance."""
