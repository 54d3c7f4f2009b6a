"""Exception types shared across the library."""


class DimensionError(ValueError):
    """Operands have incompatible lengths or shapes."""


class UnsupportedLengthError(ValueError):
    """A fast transform was asked for a length it does not support."""


class ResourceLimitError(RuntimeError):
    """A dense materialization would exceed the configured cap."""


class VectorParseError(ValueError):
    """An input file could not be parsed as a complex vector."""
