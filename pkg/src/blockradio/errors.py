"""Exception hierarchy shared by every module.

All domain failures derive from :class:`RadioError` so that the CLI can map
them to exit code 1 with a one-line diagnostic.
"""


class RadioError(ValueError):
    """Base class for domain errors."""


class GraphFormatError(RadioError):
    """Malformed graph, labeling or ordering input."""


class NotConnectedError(RadioError):
    pass


class NotBlockGraphError(RadioError):
    pass


class DiameterError(RadioError):
    pass


class OrderingError(RadioError):
    """An ordering is not a permutation, or is incompatible with a construction."""


class SolverLimitError(RadioError):
    pass


class FamilyError(RadioError):
    """Family parameters out of range, or operation unsupported for the family."""


class HypothesisError(RadioError):
    """The hypotheses of a conditional check are not met."""


class InternalConsistencyError(AssertionError):
    """Two independent routes disagreed; this indicates an implementation bug."""
