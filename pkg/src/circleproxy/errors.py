"""Exception types shared across the package.

The CLI maps these onto process exit codes: usage/config problems exit
with 1, parse failures with 2, and degenerate or invalid shapes with 3.
"""


class CircleProxyError(Exception):
    """Base class for all package-specific errors."""


class ParseError(CircleProxyError):
    """Input document could not be parsed.

    ``offset`` is the byte/character offset into the document where the
    problem was detected, or ``None`` when unknown.
    """

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class ShapeInvalidError(CircleProxyError):
    """Parsed geometry violates shape invariants (zero area, bad holes, ...)."""


class DegenerateShapeError(CircleProxyError):
    """Geometry too degenerate to process (e.g. all boundary points collinear)."""


class GenerationError(CircleProxyError):
    """Point generation failed to produce the requested samples."""


class ConfigError(CircleProxyError):
    """Configuration values are inconsistent or out of range."""
