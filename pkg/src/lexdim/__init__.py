"""Exact local metric and local adjacency dimensions of lexicographic products."""

from .errors import CapExceededError, DomainError, GraphFormatError, LexdimError
from .graph import (
    Graph,
    complement,
    components,
    distance_matrix,
    from_graph6,
    generate,
    girth,
    is_connected,
    join,
    disjoint_union,
    parse_graph_spec,
    radius,
    to_graph6,
    true_twin_classes,
    truncated_distance,
)
from .solvers import GeneratorKind, Truncated, all_minimum_bases, dim_t, dimension, is_generator
from .families import classify, in_family_g, in_family_g_prime, in_phi, theorem11_predicate
from .lexicographic import Family, parse_family, product, product_distance
from .formula import adim_l_formula, decompose, dim_l_formula, dim_l_via_k1, equality_condition
from .verify import SweepConfig, enumerate_small_connected, sweep, verify_instance

__version__ = "0.1.0"
