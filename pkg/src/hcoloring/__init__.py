"""H-colorings of multigraphs: two exact deciders, a witness checker and filters."""

from .formats import (
    ParseError,
    UnsupportedGraphError,
    parse_any,
    parse_edge_list,
    parse_graph6,
    parse_sparse6,
    write_any,
    write_edge_list,
    write_graph6,
    write_sparse6,
)
from .graph import (
    BUILTINS,
    Edge,
    GraphError,
    Multigraph,
    builtin,
    expand_vertex_to_triangle,
    is_2_connected,
    is_2_edge_connected,
    line_graph,
)
from .solver import (
    HColoringWitness,
    SearchBudgetExceeded,
    SearchStats,
    candidate_images,
    compatible_colors,
    select_branch_edge,
    solve,
)
from .structure import (
    EvenCycleDecomposition,
    chromatic_index,
    decomposition_size,
    enumerate_even_cycle_decompositions,
    find_ecd_of_size_at_most,
    has_ecd_of_size_at_most,
    has_ecd_of_size_exactly,
    is_k_edge_colorable,
    validate_decomposition,
)
from .verifier import brute_force_colorable, identity_witness, solve_vertex_first, verify_witness

__version__ = "0.1.0"
