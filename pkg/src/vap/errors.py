"""Exception types shared across the package."""


class VapError(Exception):
    """Base class for all package-specific errors."""


class InvalidEmbeddingError(VapError):
    """Zero-norm or non-finite embedding input."""


class DimensionMismatchError(VapError):
    """Operands disagree on embedding dimension or raster shape."""


class NoCandidatesError(VapError):
    """Selection was asked to choose from an empty proposal list."""


class NoTriggerError(VapError):
    """The instruction contains no ``my <category>`` trigger."""


class TooLargeError(VapError):
    """Exhaustive assignment enumeration would exceed the configured cap."""


class UndefinedMetricError(VapError):
    """An alignment metric is undefined for the given inputs."""


class FormatError(VapError):
    """Malformed file contents; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class ConfigError(VapError):
    """Invalid scene or experiment configuration."""
