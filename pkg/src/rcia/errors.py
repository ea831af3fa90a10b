"""Exception types shared across the package."""


class RciaError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(RciaError):
    """Matrix or vector dimensions are inconsistent or empty where forbidden."""


class UnsupportedConfigError(RciaError):
    """Antenna configuration outside the class a builder or region supports."""


class CausalityError(RciaError):
    """A schedule action needs information that is provably unavailable yet.

    Raised e.g. when a receiver is told to replay symbols the engine cannot
    certify as decoded before the replay slot.  Carries the partial run state
    so callers can report diagnostics instead of crashing.
    """

    def __init__(self, message, transcript=None, result=None):
        super().__init__(message)
        self.transcript = transcript
        self.result = result


class VisibilityError(RciaError):
    """A decode tried to use a coefficient the receiver cannot compute."""


class PowerGuardError(RciaError):
    """Instantaneous transmit power exceeded the sanity guard in noisy mode."""


class UnboundedRegionError(RciaError):
    """Vertex enumeration was asked for an unbounded constraint set."""
