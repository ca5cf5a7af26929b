"""Exception types shared across the package."""


class GhpKerrError(Exception):
    """Base class for all errors raised by ghpkerr."""


class UsageError(GhpKerrError, ValueError):
    """Invalid arguments: bad index, wrong weight, non-unit quaternion, ..."""


class DomainError(GhpKerrError, ValueError):
    """Evaluation outside the domain of a chart, a trivialization or a jet.

    ``coords`` carries the offending coordinates when they are known.
    """

    def __init__(self, message, coords=None):
        super().__init__(message)
        self.coords = None if coords is None else tuple(coords)

    def __str__(self):
        msg = super().__str__()
        if self.coords is not None:
            msg += " at coords=" + repr(self.coords)
        return msg
