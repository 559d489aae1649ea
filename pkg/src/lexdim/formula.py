"""Closed-form local metric and local adjacency dimensions of ``G o H``.

The decomposition works on the base graph ``G`` (vertices ``u_i``, numbered
from 0) and the family members ``H_i``:

* ``T``: vertices in non-singleton true-twin classes ``U_j``
* ``V_E``: vertices outside ``T`` whose member is edgeless
* ``I``: vertices whose member is in family G
* ``I_j = I & U_j``; one representative per non-empty ``I_j`` is kept and the
  rest form ``I'_j``
* ``X_E = I - union(I'_j)``
* ``R``-pairs: adjacent ``u_i, u_j`` in ``X_E`` that no vertex outside
  ``V_E + {u_i, u_j}`` distinguishes; ``rho`` is the minimum number of
  ``X_E`` vertices needed to distinguish all of them. ``R'`` and ``rho'`` are
  the same with distances capped at 2.

Then::

    dim_l(G o H)  = sum adim_l(H_i) + sum (|I_j| - 1) + rho
    adim_l(G o H) = sum adim_l(H_i) + sum (|I_j| - 1) + rho'
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Mapping

import numpy as np

from .errors import DomainError
from .families import apex_join, in_family_g, in_family_g_prime, in_phi
from .graph import Graph, TwinPartition, distance_matrix, is_connected, true_twin_classes
from .lexicographic import Family
from .solvers import DEFAULT_ORDER_CAP, adim_l, dim_l, minimum_hitting_sets


@dataclass(frozen=True)
class DecompositionReport:
    twin_classes: tuple[tuple[int, ...], ...]
    nonsingleton: tuple[tuple[int, ...], ...]
    T: tuple[int, ...]
    V_E: tuple[int, ...]
    I: tuple[int, ...]
    # keyed by index into ``nonsingleton``; only classes with I_j non-empty
    I_parts: dict[int, tuple[int, ...]]
    representatives: dict[int, int]
    I_prime: dict[int, tuple[int, ...]]
    X_E: tuple[int, ...]
    R_pairs: tuple[tuple[int, int], ...]
    R_prime_pairs: tuple[tuple[int, int], ...]
    rho: int
    rho_witness: tuple[int, ...]
    rho_prime: int
    rho_prime_witness: tuple[int, ...]
    tau: int
    member_adim_l: tuple[int, ...]
    member_in_g: tuple[bool, ...]

    @property
    def adim_sum(self) -> int:
        return sum(self.member_adim_l)

    @property
    def twin_term(self) -> int:
        return sum(len(p) - 1 for p in self.I_parts.values())

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("I_parts", "representatives", "I_prime"):
            d[key] = {str(k): v for k, v in d[key].items()}
        d["adim_sum"] = self.adim_sum
        d["twin_term"] = self.twin_term
        return _jsonable(d)

    @classmethod
    def from_dict(cls, d: Mapping) -> DecompositionReport:
        def tup(x):
            return tuple(tup(v) for v in x) if isinstance(x, (list, tuple)) else x

        kw = {k: d[k] for k in cls.__dataclass_fields__}
        for key in ("I_parts", "I_prime"):
            kw[key] = {int(k): tuple(v) for k, v in kw[key].items()}
        kw["representatives"] = {int(k): v for k, v in kw["representatives"].items()}
        for key in kw:
            if isinstance(kw[key], list):
                kw[key] = tup(kw[key])
        return cls(**kw)


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _check_base(base: Graph):
    if base.order < 2:
        raise DomainError("the base graph needs order >= 2")
    if not is_connected(base):
        raise DomainError("the base graph must be connected")


def _equal_profile_pairs(
    base: Graph, prof: np.ndarray, x_e: tuple[int, ...], excluded: set[int]
) -> list[tuple[int, int]]:
    pairs = []
    for a in x_e:
        for b in x_e:
            if a < b and base.adjacent(a, b):
                others = [u for u in range(base.order) if u not in excluded and u not in (a, b)]
                if all(prof[u, a] == prof[u, b] for u in others):
                    pairs.append((a, b))
    return pairs


def _min_distinguishing_subset(
    prof: np.ndarray, pairs: list[tuple[int, int]], x_e: tuple[int, ...]
) -> tuple[int, tuple[int, ...]]:
    if not pairs:
        return 0, ()
    masks = []
    for a, b in pairs:
        m = 0
        for z in x_e:
            if prof[z, a] != prof[z, b]:
                m |= 1 << z
        masks.append(m)
    k, (witness,) = minimum_hitting_sets(masks, x_e)
    return k, witness


def decompose(
    fam: Family,
    representatives: Mapping[int, int] | None = None,
    cap: int = DEFAULT_ORDER_CAP,
) -> DecompositionReport:
    """Compute every set and parameter of the closed forms.

    ``representatives`` optionally fixes the vertex kept from each non-empty
    ``I_j`` (keyed by non-singleton class index); the default keeps the
    minimum-index vertex.
    """
    base = fam.base
    _check_base(base)
    n = base.order
    adims = tuple(adim_l(h, cap) for h in fam.members)
    in_g = tuple(in_family_g(h, cap) for h in fam.members)

    twins: TwinPartition = true_twin_classes(base)
    classes = twins.nonsingleton
    t_set = twins.twin_vertices
    v_e = tuple(i for i in range(n) if i not in t_set and in_phi(fam.members[i]))
    i_set = tuple(i for i in range(n) if in_g[i])

    i_parts = {}
    reps = {}
    i_prime = {}
    for j, cls in enumerate(classes):
        part = tuple(v for v in cls if in_g[v])
        if not part:
            continue
        i_parts[j] = part
        rep = part[0]
        if representatives is not None and j in representatives:
            rep = representatives[j]
            if rep not in part:
                raise ValueError(f"representative {rep} is not in I_{j} = {part}")
        reps[j] = rep
        i_prime[j] = tuple(v for v in part if v != rep)
    dropped = {v for p in i_prime.values() for v in p}
    x_e = tuple(i for i in i_set if i not in dropped)

    dm = distance_matrix(base)
    d1 = dm.values
    d2 = dm.truncated(2)
    r_pairs = _equal_profile_pairs(base, d1, x_e, set(v_e))
    r_prime_pairs = _equal_profile_pairs(base, d2, x_e, set(v_e))
    rho, rho_w = _min_distinguishing_subset(d1, r_pairs, x_e)
    rho_p, rho_pw = _min_distinguishing_subset(d2, r_prime_pairs, x_e)

    return DecompositionReport(
        twin_classes=twins.classes,
        nonsingleton=classes,
        T=tuple(sorted(t_set)),
        V_E=v_e,
        I=i_set,
        I_parts=i_parts,
        representatives=reps,
        I_prime=i_prime,
        X_E=x_e,
        R_pairs=tuple(r_pairs),
        R_prime_pairs=tuple(r_prime_pairs),
        rho=rho,
        rho_witness=rho_w,
        rho_prime=rho_p,
        rho_prime_witness=rho_pw,
        tau=len(i_parts),
        member_adim_l=adims,
        member_in_g=in_g,
    )


@dataclass(frozen=True)
class FormulaValue:
    adim_sum: int
    twin_term: int
    rho: int

    @property
    def value(self) -> int:
        return self.adim_sum + self.twin_term + self.rho


def dim_l_formula(fam: Family, report: DecompositionReport | None = None) -> FormulaValue:
    """Local metric dimension of the product from its factors."""
    r = report or decompose(fam)
    return FormulaValue(r.adim_sum, r.twin_term, r.rho)


def adim_l_formula(fam: Family, report: DecompositionReport | None = None) -> FormulaValue:
    """Local adjacency dimension of the product from its factors."""
    r = report or decompose(fam)
    return FormulaValue(r.adim_sum, r.twin_term, r.rho_prime)


@dataclass(frozen=True)
class ApexJoinValue:
    apex_sum: int  # sum of dim_l(K1 + H_i)
    tau: int  # twin classes holding a member in G'
    outside_twins: int  # vertices outside T whose member is in G'
    rho: int

    @property
    def value(self) -> int:
        return self.apex_sum - self.tau - self.outside_twins + self.rho

    @property
    def uncorrected(self) -> int:
        """Value when members outside twin classes are not discounted."""
        return self.apex_sum - self.tau + self.rho


def dim_l_via_k1(
    fam: Family, report: DecompositionReport | None = None, cap: int = DEFAULT_ORDER_CAP
) -> ApexJoinValue:
    """Local metric dimension of the product via ``dim_l(K1 + H_i)``.

    Each ``K1 + H_i`` is solved exactly and G' membership is taken from the
    apex-join basis search, not from family G.

    ``dim_l(K1 + H) = adim_l(H) + 1`` for every ``H`` in G', so every such
    member must be discounted once: the twin classes contribute ``tau`` and
    the remaining members outside ``T`` one each.
    """
    r = report or decompose(fam, cap=cap)
    apex_sum = sum(dim_l(apex_join(h), cap) for h in fam.members)
    g_prime = [in_family_g_prime(h, cap) for h in fam.members]
    t_set = set(r.T)
    tau = sum(1 for cls in r.nonsingleton if any(g_prime[v] for v in cls))
    outside = sum(1 for i, flag in enumerate(g_prime) if flag and i not in t_set)
    return ApexJoinValue(apex_sum, tau, outside, r.rho)


def equality_condition(
    fam: Family, cap: int = DEFAULT_ORDER_CAP, twin_vertices_count: bool = True
) -> bool:
    """Criterion for ``dim_l = adim_l = sum adim_l(H_i) + sum (|I_j| - 1)``.

    Holds when every adjacent pair ``u_i, u_j`` from distinct twin classes has
    a member outside family G, or some ``u_l`` other than the pair itself in
    ``N(u_i) ^ N(u_j)`` that separates the pair's copies in the product.

    A separating ``u_l`` has a non-empty member or lies in a non-singleton
    twin class (such a class always places a vertex in a minimum generator
    even when all its members are edgeless). With ``twin_vertices_count``
    false only non-empty members count; that stricter reading misses the
    twin-class case and can report false while ``rho' = 0``.
    """
    base = fam.base
    _check_base(base)
    twins = true_twin_classes(base)
    t_set = twins.twin_vertices if twin_vertices_count else frozenset()

    def separates(l: int) -> bool:
        return l in t_set or not in_phi(fam.members[l])

    for a, b in base.edges():
        if twins.class_of(a) == twins.class_of(b):
            continue
        if not (in_family_g(fam.members[a], cap) and in_family_g(fam.members[b], cap)):
            continue
        sym = (base.rows[a] ^ base.rows[b]) & ~(1 << a | 1 << b)
        if not any(sym >> l & 1 and separates(l) for l in range(base.order)):
            return False
    return True
