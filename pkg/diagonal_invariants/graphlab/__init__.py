from .cycles import (
    CycleData,
    OrientedCycle,
    boundary_kernel_dimension,
    boundary_matrix,
    connected_components,
    cycle_data,
    cycle_representation,
    edge_representation,
    edge_sign_character,
    epsilon_sign,
    fundamental_cycles,
    graph_stabilizer,
    signed_edge_image,
    spanning_forest,
    split_order,
)
from .graph import NAMED_GRAPHS, Edge, IsoClass, SimpleGraph, canonical_form, complete_graph_edges, enumerate_graphs, iso_classes

__all__: list[str] = [
    "CycleData",
    "Edge",
    "IsoClass",
    "NAMED_GRAPHS",
    "OrientedCycle",
    "SimpleGraph",
    "boundary_kernel_dimension",
    "boundary_matrix",
    "canonical_form",
    "complete_graph_edges",
    "connected_components",
    "cycle_data",
    "cycle_representation",
    "edge_representation",
    "edge_sign_character",
    "enumerate_graphs",
    "epsilon_sign",
    "fundamental_cycles",
    "graph_stabilizer",
    "iso_classes",
    "signed_edge_image",
    "spanning_forest",
    "split_order",
]
