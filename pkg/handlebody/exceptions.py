"""
Exceptions raised by the handlebody classification library.

Every error the library raises derives from ``HandlebodyError`` and carries a
short ``kind`` used by the CLI and the HTTP surface to report it in one line.
"""


class HandlebodyError(Exception):
    kind = "error"

    def __init__(self, message):
        super().__init__(message)
        self.message = message

    def __str__(self):
        return self.message


class DescriptorError(HandlebodyError):
    """Malformed group descriptor, marked-vector text or element name."""

    kind = "descriptor"


class InvalidGroupError(HandlebodyError):
    """A multiplication table that violates the group laws."""

    kind = "group"


class CapExceeded(HandlebodyError):
    kind = "cap"

    def __init__(self, what, requested, cap):
        super().__init__(f"{what} {requested} exceeds cap {cap}")
        self.what = what
        self.requested = requested
        self.cap = cap


class NotGeneratingError(HandlebodyError):
    kind = "not-generating"


class MoveError(HandlebodyError):
    kind = "move"


class GenusError(HandlebodyError):
    kind = "genus"


class NotAbelianError(HandlebodyError):
    kind = "not-abelian"


class ConsistencyError(HandlebodyError):
    """Two independent computations of the same quantity disagree."""

    kind = "consistency"
