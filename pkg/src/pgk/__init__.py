"""Power graphs of finite groups: construction, CCG-set detection,
directed-power-graph reconstruction, and polynomial-time isomorphism
testing for the nilpotent case."""

from .graph_core import (
    ColoredDiGraph,
    ColoredGraph,
    brute_force_color_iso,
    closed_twin_partition_directed,
    closed_twin_partition_undirected,
    induced_subgraph,
    strong_product,
)
from .group_core import (
    FiniteGroup,
    cyclic_group,
    direct_product,
    group_from_cayley_table,
    parse_group_spec,
)
from .nilpotent_iso import dpow_iso_nilpotent, graph_iso_nilpotent
from .powergraph_build import (
    directed_power_graph,
    enhanced_power_graph,
    power_graph,
)
from .reconstruction import (
    dpow_from_enhanced_graph,
    dpow_from_power_graph,
    epow_from_dpow,
    pow_from_dpow,
)

__version__ = "0.1.0"
