"""Exception types shared across the package."""


class PwdpError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(PwdpError):
    """Malformed instance file. Carries the 1-based line number."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class GraphError(PwdpError):
    """Invalid graph construction (self-loop, bad id, duplicate edge, ...)."""


class DecompositionError(PwdpError):
    """Invalid path decomposition.

    kind is one of 'uncovered-edge', 'non-contiguous-vertex', 'missing-vertex',
    'bad-structure'.
    """

    def __init__(self, kind, detail):
        self.kind = kind
        self.detail = detail
        super().__init__(f"{kind}: {detail}")


class SizeLimitError(PwdpError):
    """Instance too large for an exhaustive routine."""


class CapacityError(PwdpError):
    """State space exceeds the configured per-node slot limit."""


class PluginInconsistencyError(PwdpError):
    """A plugin produced a state outside its declared domain."""


class UnknownStateError(PwdpError):
    """State not present in a state index (non-canonical or out of domain)."""


class ReconstructionUnavailableError(PwdpError):
    """Solution reconstruction requested but tables were not retained."""


class NotApplicableError(PwdpError):
    """Operation preconditions not met (e.g. pruning on a non-grid order)."""
