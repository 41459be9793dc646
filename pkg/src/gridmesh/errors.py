"""Exception hierarchy shared across the package."""


class GridMeshError(Exception):
    """Base class for all gridmesh errors."""


class InvalidSpecError(GridMeshError):
    """Grid spec or algorithm input violates a structural constraint."""


class UnknownNodeError(GridMeshError):
    """A node id does not exist in the topology."""


class TopologyFormatError(GridMeshError):
    """A topology document failed to parse or violates an invariant."""


class ChannelRangeError(GridMeshError):
    """A channel id lies outside the available channel set."""


class UncoveredLinkError(GridMeshError):
    """A link's endpoints share no channel."""


class IncompleteAssignmentError(GridMeshError):
    """An operation needed a complete assignment but got a partial one."""


class InfeasibleError(GridMeshError):
    """No topology-preserving assignment exists within the channel set."""


class MismatchedTopologyError(GridMeshError):
    """Reports being compared were computed over different topologies."""


class ScenarioError(GridMeshError):
    """The traffic scenario cannot be built for this topology."""
