"""Membership tests for the empty-graph family, family G and family G'.

A graph ``H`` is in family G when every local adjacency basis ``B`` of ``H``
fits in some open neighborhood, ``B <= N(v)``. It is in G' when some local
metric basis of ``K1 + H`` uses the apex vertex. The two families coincide;
both are computed independently so the equality can be checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graph import (
    Graph,
    complete,
    components,
    induced_subgraph,
    is_bipartite,
    join,
    mask_of,
    radius,
)
from .solvers import DEFAULT_ORDER_CAP, GeneratorKind, all_minimum_bases


def in_phi(h: Graph) -> bool:
    """True for edgeless graphs (including ``K1``)."""
    return h.num_edges == 0


@dataclass(frozen=True)
class FamilyMembership:
    in_phi: bool
    in_g: bool
    in_g_prime: bool
    # basis -> a vertex whose open neighborhood contains it (when in_g)
    dominators: dict[tuple[int, ...], int] = field(default_factory=dict, compare=False)
    # a basis no open neighborhood contains (when not in_g)
    violation: tuple[int, ...] | None = None


def family_g_witness(
    h: Graph, cap: int = DEFAULT_ORDER_CAP
) -> tuple[dict[tuple[int, ...], int], tuple[int, ...] | None]:
    """Map each local adjacency basis to its least dominating vertex.

    Stops at the first basis with no dominating vertex and returns it as the
    violation.
    """
    if h.order == 0:
        return {}, ()
    dominators = {}
    for basis in all_minimum_bases(h, GeneratorKind.LOCAL_ADJACENCY, cap):
        bm = mask_of(basis)
        v = next((v for v in range(h.order) if bm & ~h.rows[v] == 0), None)
        if v is None:
            return dominators, basis
        dominators[basis] = v
    return dominators, None


@lru_cache(maxsize=4096)
def _in_family_g(h: Graph, cap: int) -> bool:
    _, violation = family_g_witness(h, cap)
    return violation is None


def in_family_g(h: Graph, cap: int = DEFAULT_ORDER_CAP) -> bool:
    return _in_family_g(h, cap)


def apex_join(h: Graph) -> Graph:
    """``K1 + H`` with the apex labeled last (vertex ``h.order``)."""
    return join(h, complete(1))


@lru_cache(maxsize=4096)
def _in_family_g_prime(h: Graph, cap: int) -> bool:
    k1h = apex_join(h)
    apex = h.order
    bases = all_minimum_bases(k1h, GeneratorKind.LOCAL_METRIC, cap)
    return any(apex in b for b in bases)


def in_family_g_prime(h: Graph, cap: int = DEFAULT_ORDER_CAP) -> bool:
    return _in_family_g_prime(h, cap)


def classify(h: Graph, cap: int = DEFAULT_ORDER_CAP) -> FamilyMembership:
    dominators, violation = family_g_witness(h, cap)
    return FamilyMembership(
        in_phi=in_phi(h),
        in_g=violation is None,
        in_g_prime=in_family_g_prime(h, cap),
        dominators=dominators,
        violation=violation,
    )


def theorem11_predicate(h: Graph) -> bool:
    """Non-empty bipartite graph with one non-trivial component of radius <= 2."""
    if in_phi(h) or not is_bipartite(h):
        return False
    big = [c for c in components(h) if len(c) >= 2]
    if len(big) != 1:
        return False
    return radius(induced_subgraph(h, big[0])) <= 2
