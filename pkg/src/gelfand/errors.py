"""Exception types shared across the toolkit."""


class InvalidParameterError(ValueError):
    """A caller-supplied parameter is outside the operation's domain."""


class SpecParseError(ValueError):
    """A group or pair spec string failed to parse.

    Carries the byte offset of the failure and what was expected there.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size budget."""


class InternalConsistencyError(RuntimeError):
    """An exact invariant failed; signals a bug, never bad user input."""


class NumericalQualityError(RuntimeError):
    """Floating-point results too far from exact values to round safely."""
