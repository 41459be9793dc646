"""Channel assignment planning and evaluation for grid wireless mesh networks."""

from .baselines import BfcaResult, SearchBudget, assign_bfca, assign_cca
from .ca import (
    ChannelAssignment,
    ValidityReport,
    assignment_from_sets,
    load_assignment,
    operating_channel,
    save_assignment,
    validate,
)
from .capacity import (
    CapacityBound,
    Flow,
    TrafficScenario,
    build_scenario,
    path_capacity,
    upper_bound,
    verify_flow_conservation,
)
from .conflict import ConflictGraph, active_conflicts, build_conflict_graph
from .metrics import MetricReport, compare, evaluate, usage_string
from .nocag import NocagTrace, assign_nocag, step_count
from .topology import (
    GridSpec,
    Topology,
    load_topology,
    make_grid,
    neighbors,
    save_topology,
)

__all__ = [
    "BfcaResult",
    "CapacityBound",
    "ChannelAssignment",
    "ConflictGraph",
    "Flow",
    "GridSpec",
    "MetricReport",
    "NocagTrace",
    "SearchBudget",
    "Topology",
    "TrafficScenario",
    "ValidityReport",
    "active_conflicts",
    "assign_bfca",
    "assign_cca",
    "assign_nocag",
    "assignment_from_sets",
    "build_conflict_graph",
    "build_scenario",
    "compare",
    "evaluate",
    "load_assignment",
    "load_topology",
    "make_grid",
    "neighbors",
    "operating_channel",
    "path_capacity",
    "save_assignment",
    "save_topology",
    "step_count",
    "upper_bound",
    "usage_string",
    "validate",
    "verify_flow_conservation",
]
