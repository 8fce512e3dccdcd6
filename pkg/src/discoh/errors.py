"""Exception types shared across the package.

Every error raised on purpose derives from DiscohError so callers (the CLI
in particular) can map validation failures to a single exit path.  The
subclass chosen names the violated invariant.
"""


class DiscohError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(DiscohError, ValueError):
    """Operands have incompatible or unexpected dimensions."""


class HermiticityError(DiscohError, ValueError):
    """Matrix is not Hermitian within tolerance."""


class TraceError(DiscohError, ValueError):
    """Matrix trace differs from the required value beyond tolerance."""


class PositivityError(DiscohError, ValueError):
    """Matrix has an eigenvalue below the admissible floor."""


class PurityError(DiscohError, ValueError):
    """tr(rho^2) exceeds 1 beyond tolerance."""


class NormalizationError(DiscohError, ValueError):
    """Vector norm differs from 1 beyond tolerance."""


class UnitarityError(DiscohError, ValueError):
    """Matrix is not unitary within tolerance."""


class ChannelError(DiscohError, ValueError):
    """Kraus operators do not form a trace-preserving channel."""


class UnsupportedDimensionError(DiscohError, ValueError):
    """Operation is only defined for other subsystem dimensions."""


class StateFormatError(DiscohError, ValueError):
    """State file is malformed or carries non-finite entries."""


class MixedStateError(DiscohError, ValueError):
    """Operation needs a pure state but the input is mixed."""


class ConsistencyError(DiscohError, RuntimeError):
    """Internal cross-check between two computation routes failed."""
