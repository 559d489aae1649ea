"""Check the closed forms against brute-force search on concrete products."""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from .errors import CapExceededError, GraphFormatError
from .formula import adim_l_formula, decompose, dim_l_formula, dim_l_via_k1
from .graph import Graph, from_graph6, is_connected, labeled_graphs, parse_graph_spec, to_graph6
from .lexicographic import Family, product
from .solvers import DEFAULT_ORDER_CAP, GeneratorKind, dimension

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"

CHECKS = (
    "dim_l_formula",
    "adim_l_formula",
    "via_k1",
    "rho_prime_ge_rho",
    "equal_dims_iff_equal_rho",
)


def enumerate_small_connected(n: int) -> list[Graph]:
    """All connected labeled graphs on ``n <= 5`` vertices (no isomorphism reduction)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > 5:
        raise ValueError(
            f"exhaustive enumeration is limited to order 5 (asked for {n}); "
            "supply larger bases as a graph6 file instead"
        )
    return [g for g in labeled_graphs(n) if is_connected(g)]


@dataclass
class VerificationReport:
    base: str
    members: list[str]
    status: str
    reason: str | None = None
    formula: dict[str, int] = field(default_factory=dict)
    brute_force: dict[str, int] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    decomposition: dict = field(default_factory=dict)
    seconds: float | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("seconds")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        return cls(**d)

    @property
    def exit_code(self) -> int:
        return {PASS: 0, FAIL: 1, SKIP: 2}[self.status]


def verify_instance(fam: Family, cap: int = DEFAULT_ORDER_CAP) -> VerificationReport:
    """Compare every closed form with exact search on the constructed product."""
    base_label, member_labels = fam.labels
    report = VerificationReport(base_label, list(member_labels), SKIP)
    start = time.perf_counter()
    try:
        prod = product(fam)
        if prod.graph.order > cap:
            raise CapExceededError("product order", prod.graph.order, cap)
        dec = decompose(fam, cap=cap)
        f_dim = dim_l_formula(fam, dec).value
        f_adim = adim_l_formula(fam, dec).value
        via = dim_l_via_k1(fam, dec, cap=cap).value
        bf_dim = dimension(prod.graph, GeneratorKind.LOCAL_METRIC, cap).value
        bf_adim = dimension(prod.graph, GeneratorKind.LOCAL_ADJACENCY, cap).value
    except CapExceededError as exc:
        report.reason = str(exc)
        report.seconds = time.perf_counter() - start
        return report

    report.formula = {"dim_l": f_dim, "adim_l": f_adim, "via_k1": via}
    report.brute_force = {"dim_l": bf_dim, "adim_l": bf_adim}
    report.checks = {
        "dim_l_formula": f_dim == bf_dim,
        "adim_l_formula": f_adim == bf_adim,
        "via_k1": via == f_dim,
        "rho_prime_ge_rho": dec.rho_prime >= dec.rho,
        "equal_dims_iff_equal_rho": (bf_dim == bf_adim) == (dec.rho == dec.rho_prime),
    }
    report.decomposition = {
        "T": list(dec.T),
        "V_E": list(dec.V_E),
        "I": list(dec.I),
        "X_E": list(dec.X_E),
        "adim_sum": dec.adim_sum,
        "twin_term": dec.twin_term,
        "rho": dec.rho,
        "rho_prime": dec.rho_prime,
        "tau": dec.tau,
    }
    report.status = PASS if all(report.checks.values()) else FAIL
    report.seconds = time.perf_counter() - start
    return report


def read_spec_list(text: str) -> list[str]:
    """Graph specs, one per line; ``#`` comments and blank lines ignored."""
    return [s for s in (line.split("#", 1)[0].strip() for line in text.splitlines()) if s]


@dataclass(frozen=True)
class SweepConfig:
    pool: tuple[str, ...]
    max_base_order: int = 4
    # base orders up to this value use every member combination; larger ones sample
    exhaustive_max_order: int = 2
    exhaustive_pool: tuple[str, ...] | None = None
    samples: int = 200
    seed: int = 1
    cap: int = DEFAULT_ORDER_CAP
    base_graph6: tuple[str, ...] | None = None

    def __post_init__(self):
        if not self.pool:
            raise ValueError("member pool is empty")
        if self.exhaustive_pool is not None and not self.exhaustive_pool:
            raise ValueError("exhaustive member pool is empty")
        if self.base_graph6 is None and self.max_base_order > 5:
            raise ValueError("exhaustive bases stop at order 5; pass bases as graph6 instead")


def _bases_by_order(cfg: SweepConfig) -> dict[int, list[tuple[str, Graph]]]:
    out: dict[int, list[tuple[str, Graph]]] = {}
    if cfg.base_graph6 is not None:
        for line in cfg.base_graph6:
            g = from_graph6(line)
            if g.order >= 2 and is_connected(g):
                out.setdefault(g.order, []).append(("g6:" + line, g))
        return dict(sorted(out.items()))
    for n in range(2, cfg.max_base_order + 1):
        out[n] = [("g6:" + to_graph6(g), g) for g in enumerate_small_connected(n)]
    return out


def iter_instances(cfg: SweepConfig) -> Iterator[Family]:
    """Deterministic instance stream for ``cfg``."""
    parsed = {s: parse_graph_spec(s) for s in set(cfg.pool) | set(cfg.exhaustive_pool or ())}
    rng = random.Random(cfg.seed)
    ex_pool = cfg.exhaustive_pool or cfg.pool
    for n, bases in _bases_by_order(cfg).items():
        if n <= cfg.exhaustive_max_order:
            for label, g in bases:
                for members in itertools.product(ex_pool, repeat=n):
                    yield Family(g, tuple(parsed[m] for m in members), label, members)
        else:
            for _ in range(cfg.samples):
                label, g = rng.choice(bases)
                members = tuple(rng.choice(cfg.pool) for _ in range(n))
                yield Family(g, tuple(parsed[m] for m in members), label, members)


def _verify_for_sweep(args: tuple[Family, int]) -> VerificationReport:
    fam, cap = args
    return verify_instance(fam, cap)


def sweep(cfg: SweepConfig, jobs: int = 1) -> dict:
    """Verify every instance of ``cfg``; the summary is independent of ``jobs``."""
    instances = list(iter_instances(cfg))
    work = [(fam, cfg.cap) for fam in instances]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_for_sweep, work, chunksize=16))
    else:
        reports = [_verify_for_sweep(w) for w in work]

    counts = {PASS: 0, FAIL: 0, SKIP: 0}
    by_order: dict[str, dict[str, int]] = {}
    failures = []
    skips = []
    for fam, rep in zip(instances, reports):
        counts[rep.status] += 1
        per = by_order.setdefault(str(fam.base.order), {PASS: 0, FAIL: 0, SKIP: 0})
        per[rep.status] += 1
        if rep.status == FAIL:
            failures.append({
                "report": rep.to_dict(timing=False),
                "family_file": Family(fam.base, fam.members).to_text(),
                "product_g6": to_graph6(product(fam).graph),
            })
        elif rep.status == SKIP:
            skips.append({"base": rep.base, "members": rep.members, "reason": rep.reason})
    return {
        "config": {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(cfg).items()},
        "instances": len(instances),
        "counts": {k.lower(): v for k, v in counts.items()},
        "by_base_order": {o: {k.lower(): v for k, v in c.items()} for o, c in by_order.items()},
        "failures": failures,
        "skipped": skips,
    }


def load_pool(path: str | Path) -> tuple[str, ...]:
    specs = read_spec_list(Path(path).read_text())
    for s in specs:
        parse_graph_spec(s)
    if not specs:
        raise GraphFormatError(f"pool file {path} lists no graphs")
    return tuple(specs)


def load_graph6_lines(path: str | Path) -> tuple[str, ...]:
    return tuple(read_spec_list(Path(path).read_text()))


def pool_specs(specs: Sequence[str]) -> tuple[str, ...]:
    for s in specs:
        parse_graph_spec(s)
    return tuple(specs)
