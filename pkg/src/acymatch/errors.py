"""Exception hierarchy shared by the library and the CLI."""


class AcymatchError(Exception):
    """Base class for every error raised by acymatch."""


class StructuralError(AcymatchError, ValueError):
    """Malformed input: wrong coordinate count, bad modulus, unknown matching."""


class ValidationError(AcymatchError, ValueError):
    """A subset pair violates the preconditions of a matching problem."""


class SizeMismatchError(ValidationError):
    pass


class DuplicateElementError(ValidationError):
    pass


class ZeroInBError(ValidationError):
    pass


class CapExceededError(AcymatchError):
    """Refusal to materialize more matchings than the configured cap."""

    def __init__(self, needed: int, cap: int):
        super().__init__(
            f"{needed} matchings exceed the materialization cap of {cap} "
            f"(raise it with ACYMATCH_CAP)"
        )
        self.needed = needed
        self.cap = cap


class NoMatchingsError(AcymatchError):
    """Raised when an analysis needs at least one matching and there are none."""

    def __init__(self, message: str = "no matchings exist"):
        super().__init__(message)


class UnsupportedGroupError(AcymatchError, ValueError):
    """The operation needs a finite group but got an infinite factor."""
