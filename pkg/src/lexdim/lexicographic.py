"""Lexicographic products ``G o H`` of a base graph with an ordered family.

Product vertices are numbered block by block: the copy of ``H_i`` occupies
ids ``offsets[i] .. offsets[i] + |H_i| - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from pathlib import Path
from typing import Sequence

from .errors import CapExceededError, DomainError, GraphFormatError
from .graph import ORDER_CAP, Graph, distance_matrix, is_connected, parse_graph_spec, to_graph6


def graph_label(g: Graph) -> str:
    return "g6:" + to_graph6(g)


@dataclass(frozen=True)
class Family:
    """A base graph paired with one member graph per base vertex."""

    base: Graph
    members: tuple[Graph, ...]
    base_spec: str | None = field(default=None, compare=False)
    member_specs: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if len(self.members) != self.base.order:
            raise ValueError(
                f"family has {len(self.members)} members but the base has order {self.base.order}"
            )
        for i, h in enumerate(self.members):
            if h.order < 1:
                raise ValueError(f"member {i} has order 0")
        if self.member_specs is not None:
            object.__setattr__(self, "member_specs", tuple(self.member_specs))

    @classmethod
    def uniform(cls, base: Graph, member: Graph) -> Family:
        """The standard product ``G o H``: every member is ``H``."""
        return cls(base, (member,) * base.order)

    @property
    def labels(self) -> tuple[str, tuple[str, ...]]:
        base = self.base_spec or graph_label(self.base)
        members = self.member_specs or tuple(graph_label(h) for h in self.members)
        return base, tuple(members)

    def to_text(self) -> str:
        """Serialize in the family file format."""
        base, members = self.labels
        return "\n".join([base, *members]) + "\n"


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    offsets: tuple[int, ...]
    sizes: tuple[int, ...]

    def vertex(self, i: int, a: int) -> int:
        if not 0 <= a < self.sizes[i]:
            raise IndexError(f"member vertex {a} out of range for block {i}")
        return self.offsets[i] + a

    def pair(self, p: int) -> tuple[int, int]:
        """Inverse of :meth:`vertex`."""
        for i in range(len(self.offsets) - 1, -1, -1):
            if p >= self.offsets[i]:
                return i, p - self.offsets[i]
        raise IndexError(p)

    def block(self, i: int) -> range:
        return range(self.offsets[i], self.offsets[i] + self.sizes[i])


def product(fam: Family, cap: int = ORDER_CAP) -> ProductGraph:
    sizes = tuple(h.order for h in fam.members)
    total = sum(sizes)
    if total > cap:
        raise CapExceededError("product order", total, cap)
    offsets = (0, *accumulate(sizes))[:-1]
    block_masks = [((1 << s) - 1) << o for s, o in zip(sizes, offsets)]
    rows = []
    for i, h in enumerate(fam.members):
        cross = 0
        for j in range(fam.base.order):
            if fam.base.rows[i] >> j & 1:
                cross |= block_masks[j]
        rows.extend((r << offsets[i]) | cross for r in h.rows)
    return ProductGraph(Graph(total, tuple(rows)), offsets, sizes)


def product_distance(fam: Family, x: tuple[int, int], y: tuple[int, int]) -> int:
    """Product distance computed from the factors alone (base must be connected)."""
    if not is_connected(fam.base):
        raise DomainError("product distances need a connected base")
    (i, b), (j, d) = x, y
    if i != j:
        return distance_matrix(fam.base)[i, j]
    if b == d:
        return 0
    return 1 if fam.members[i].adjacent(b, d) else 2


def parse_family(text: str) -> Family:
    """Parse the family file format: base spec, then one member spec per line."""
    specs = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            specs.append(line)
            lines.append(lineno)
    if not specs:
        raise GraphFormatError("family file has no base graph line")
    graphs = []
    for spec, lineno in zip(specs, lines):
        try:
            graphs.append(parse_graph_spec(spec))
        except GraphFormatError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from exc
    base, members = graphs[0], graphs[1:]
    if len(members) != base.order:
        raise GraphFormatError(
            f"base has order {base.order} but {len(members)} member lines were given"
        )
    return Family(base, tuple(members), specs[0], tuple(specs[1:]))


def read_family(path: str | Path) -> Family:
    return parse_family(Path(path).read_text())


def family_from_specs(base: str, members: Sequence[str]) -> Family:
    return Family(
        parse_graph_spec(base),
        tuple(parse_graph_spec(m) for m in members),
        base,
        tuple(members),
    )
