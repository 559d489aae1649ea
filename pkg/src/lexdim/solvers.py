"""Generator predicates and exact minimum-generator search.

Every generator notion reduces to a hitting-set problem: each vertex pair that
must be told apart contributes the bitmask of vertices that distinguish it
(the pair's own endpoints included), and ``S`` is a generator iff it meets
every such mask. Minimum sets are found by enumerating candidate subsets in
increasing cardinality, lexicographically within a cardinality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import CapExceededError, DomainError
from .graph import Graph, distance_matrix, iter_bits, mask_of

DEFAULT_ORDER_CAP = 16
DEFAULT_BASES_CAP = 10**6
# combination masks live in uint64 arrays
_HARD_ORDER_CAP = 63


class GeneratorKind(enum.Enum):
    METRIC = "metric"
    ADJACENCY = "adjacency"
    LOCAL_METRIC = "local_metric"
    LOCAL_ADJACENCY = "local_adjacency"

    @property
    def local(self) -> bool:
        return self in (GeneratorKind.LOCAL_METRIC, GeneratorKind.LOCAL_ADJACENCY)


@dataclass(frozen=True)
class Truncated:
    """Metric generators of the space ``(V, min(d_G, t))``."""

    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("truncation parameter must be >= 1")

    local = False


Kind = Union[GeneratorKind, Truncated]


@dataclass(frozen=True)
class DimensionResult:
    value: int
    witness: tuple[int, ...]
    all_bases: tuple[tuple[int, ...], ...] | None = field(default=None, compare=False)


def _profile(g: Graph, kind: Kind) -> np.ndarray:
    dm = distance_matrix(g)
    if isinstance(kind, Truncated):
        return dm.truncated(kind.t)
    if kind in (GeneratorKind.ADJACENCY, GeneratorKind.LOCAL_ADJACENCY):
        return dm.truncated(2)
    if not dm.is_connected():
        raise DomainError(f"{kind.value} generators require a connected graph")
    return dm.values


def _pairs(g: Graph, kind: Kind) -> list[tuple[int, int]]:
    if kind.local:
        return g.edges()
    return list(combinations(range(g.order), 2))


def distinguishing_masks(g: Graph, kind: Kind) -> np.ndarray:
    """One bitmask per pair that ``kind`` requires to be resolved.

    Bit ``z`` of a pair's mask is set when ``z`` distinguishes the pair.
    """
    if g.order > _HARD_ORDER_CAP:
        raise CapExceededError("generator search order", g.order, _HARD_ORDER_CAP)
    prof = _profile(g, kind)
    pairs = _pairs(g, kind)
    if not pairs:
        return np.zeros(0, dtype=np.uint64)
    xs, ys = np.array(pairs).T
    differ = prof[:, xs] != prof[:, ys]
    weights = np.uint64(1) << np.arange(g.order, dtype=np.uint64)
    return (differ.astype(np.uint64) * weights[:, None]).sum(axis=0, dtype=np.uint64)


def is_generator(g: Graph, s: Iterable[int], kind: Kind) -> bool:
    s = set(s)
    if any(not 0 <= v < g.order for v in s):
        raise IndexError("vertex set not contained in V(g)")
    sm = np.uint64(mask_of(s))
    masks = distinguishing_masks(g, kind)
    return bool(((masks & sm) != 0).all())


@lru_cache(maxsize=512)
def _combination_indices(m: int, k: int) -> np.ndarray:
    if k == 0:
        return np.zeros((1, 0), dtype=np.intp)
    flat = np.fromiter(
        (i for c in combinations(range(m), k) for i in c), dtype=np.intp
    )
    return flat.reshape(-1, k)


def minimum_hitting_sets(
    masks: Sequence[int] | np.ndarray,
    candidates: Sequence[int],
    *,
    find_all: bool = False,
    limit: int = DEFAULT_BASES_CAP,
) -> tuple[int, list[tuple[int, ...]]]:
    """Minimum subsets of ``candidates`` meeting every mask.

    Returns the minimum size and either the lexicographically least set or
    every minimum set in lexicographic order (``find_all``).
    """
    candidates = sorted(candidates)
    if candidates and candidates[-1] > _HARD_ORDER_CAP:
        raise CapExceededError("hitting-set universe", candidates[-1] + 1, _HARD_ORDER_CAP)
    universe = mask_of(candidates)
    masks = sorted({int(x) & universe for x in np.asarray(masks, dtype=np.uint64).tolist()},
                   key=int.bit_count)
    if masks and masks[0] == 0:
        raise ValueError("a required pair cannot be distinguished by any candidate")
    bits = np.array([1 << v for v in candidates], dtype=np.uint64)
    arr_masks = [np.uint64(x) for x in masks]
    m = len(candidates)
    for k in range(m + 1):
        idx = _combination_indices(m, k)
        cand = bits[idx].sum(axis=1, dtype=np.uint64) if k else np.zeros(1, dtype=np.uint64)
        for pm in arr_masks:
            cand = cand[(cand & pm) != 0]
            if cand.size == 0:
                break
        if cand.size:
            if not find_all:
                cand = cand[:1]
            elif cand.size > limit:
                raise CapExceededError("number of minimum sets", int(cand.size), limit)
            return k, [tuple(iter_bits(int(x))) for x in cand.tolist()]
    raise AssertionError("unreachable: the full candidate set meets every mask")


def _check_cap(g: Graph, cap: int):
    if g.order > cap:
        raise CapExceededError("dimension search order", g.order, cap)


def dimension(g: Graph, kind: Kind, cap: int = DEFAULT_ORDER_CAP) -> DimensionResult:
    """Exact minimum generator size with the lexicographically least basis."""
    _check_cap(g, cap)
    value, (witness,) = minimum_hitting_sets(distinguishing_masks(g, kind), range(g.order))
    return DimensionResult(value, witness)


def all_minimum_bases(
    g: Graph, kind: Kind, cap: int = DEFAULT_ORDER_CAP, limit: int = DEFAULT_BASES_CAP
) -> list[tuple[int, ...]]:
    _check_cap(g, cap)
    _, bases = minimum_hitting_sets(
        distinguishing_masks(g, kind), range(g.order), find_all=True, limit=limit
    )
    return bases


def dimension_with_bases(
    g: Graph, kind: Kind, cap: int = DEFAULT_ORDER_CAP, limit: int = DEFAULT_BASES_CAP
) -> DimensionResult:
    bases = all_minimum_bases(g, kind, cap, limit)
    return DimensionResult(len(bases[0]), bases[0], tuple(bases))


def dim_t(g: Graph, t: int, cap: int = DEFAULT_ORDER_CAP) -> DimensionResult:
    """Metric dimension of ``(V, min(d_G, t))``; disconnected graphs allowed."""
    return dimension(g, Truncated(t), cap)


def dim(g: Graph, cap: int = DEFAULT_ORDER_CAP) -> int:
    return dimension(g, GeneratorKind.METRIC, cap).value


def adim(g: Graph, cap: int = DEFAULT_ORDER_CAP) -> int:
    return dimension(g, GeneratorKind.ADJACENCY, cap).value


def dim_l(g: Graph, cap: int = DEFAULT_ORDER_CAP) -> int:
    return dimension(g, GeneratorKind.LOCAL_METRIC, cap).value


@lru_cache(maxsize=4096)
def _adim_l_cached(g: Graph, cap: int) -> int:
    return dimension(g, GeneratorKind.LOCAL_ADJACENCY, cap).value


def adim_l(g: Graph, cap: int = DEFAULT_ORDER_CAP) -> int:
    return _adim_l_cached(g, cap)
