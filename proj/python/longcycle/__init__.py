"""Long cycles in essentially 4-connected planar graphs."""

from ._longcycle import (  # noqa: F401
    Error,
    antiprism_hamiltonian_cycle,
    certify,
    check_essentially_4_connected,
    find_cycle,
    gen_inserted_antiprism,
    length_bound,
    longest_cycle,
    named_graph,
    named_graph_names,
    parse_graph,
    serialize_graph,
    validate_oi3,
)

__all__ = [
    "Error",
    "antiprism_hamiltonian_cycle",
    "certify",
    "check_essentially_4_connected",
    "find_cycle",
    "gen_inserted_antiprism",
    "length_bound",
    "longest_cycle",
    "named_graph",
    "named_graph_names",
    "parse_graph",
    "serialize_graph",
    "validate_oi3",
]
