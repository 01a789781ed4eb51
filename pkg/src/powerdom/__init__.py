"""powerdom: zero forcing and power domination on small graphs.

Exact solvers for six graph invariants, the Mycielskian/shadow/central/middle
transformations, structural characterizations, and a verification harness
that checks every closed formula against brute force.
"""

from powerdom.graph import (
    Edge,
    Graph,
    GraphMetrics,
    VertexSet,
    are_twins,
    build_graph,
    closed_neighborhood,
    connected_components,
    delete_edge,
    induced_subgraph,
    is_acyclic,
    is_connected,
    metrics,
    open_neighborhood,
)
from powerdom.families import FamilySpec, make_family
from powerdom.transforms import (
    cartesian_product,
    central,
    middle,
    mycielskian,
    shadow,
)
from powerdom.forcing import (
    ForceStep,
    PropagationTrace,
    forcing_chains,
    is_power_dominating_set,
    is_zero_forcing_set,
    monitored_sets,
    monitored_trace,
    zero_forcing_closure,
)
from powerdom.solvers import (
    CapExceeded,
    InvariantResult,
    domination_number,
    edge_domination_number,
    gamma_p,
    is_spider,
    path_cover_number,
    spider_number,
    zero_forcing_number,
)
from powerdom.kernel import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "Edge",
    "Graph",
    "GraphMetrics",
    "VertexSet",
    "are_twins",
    "build_graph",
    "closed_neighborhood",
    "connected_components",
    "delete_edge",
    "induced_subgraph",
    "is_acyclic",
    "is_connected",
    "metrics",
    "open_neighborhood",
    "FamilySpec",
    "make_family",
    "cartesian_product",
    "central",
    "middle",
    "mycielskian",
    "shadow",
    "ForceStep",
    "PropagationTrace",
    "forcing_chains",
    "is_power_dominating_set",
    "is_zero_forcing_set",
    "monitored_sets",
    "monitored_trace",
    "zero_forcing_closure",
    "CapExceeded",
    "InvariantResult",
    "domination_number",
    "edge_domination_number",
    "gamma_p",
    "is_spider",
    "path_cover_number",
    "spider_number",
    "zero_forcing_number",
    "KERNEL_BACKEND",
    "__version__",
]
