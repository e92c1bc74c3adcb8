"""Simultaneous 2-locally-balanced partition of two forests.

Pipeline: decompose both forests into sibling groups, link the groups by the
bipartite multigraph whose edges are the vertices, balance-color its edges,
and give each vertex the color of its edge. Every sibling group then has
imbalance at most 1, and a vertex's neighborhood is its children group plus
at most the parent, so the neighborhood imbalance is at most 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .auxgraph import BipartiteMultigraph, build_aux
from .coloring import EdgeColoring, balanced_two_coloring
from .decomposition import RootedDecomposition, choose_roots, decompose
from .exceptions import InvariantError, LengthMismatch, ValidationError, VertexOutOfRange
from .graph import ForestPair, VertexPartition, discrepancy, neighborhood_discrepancies

__all__ = [
    "BOUND",
    "BalanceReport",
    "Certificate",
    "SolveContext",
    "solve",
    "run_pipeline",
    "verify",
    "certificate",
]

BOUND = 2


@dataclass(frozen=True, eq=False)
class BalanceReport:
    per_vertex_b1: np.ndarray
    per_vertex_b2: np.ndarray

    @property
    def max_b1(self) -> int:
        return int(self.per_vertex_b1.max(initial=0))

    @property
    def max_b2(self) -> int:
        return int(self.per_vertex_b2.max(initial=0))

    @property
    def achieved_k(self) -> int:
        return max(self.max_b1, self.max_b2)

    def to_dict(self) -> dict:
        return {
            "per_vertex_b1": self.per_vertex_b1.tolist(),
            "per_vertex_b2": self.per_vertex_b2.tolist(),
            "achieved_k": self.achieved_k,
        }

    def __eq__(self, other):
        if not isinstance(other, BalanceReport):
            return NotImplemented
        return np.array_equal(self.per_vertex_b1, other.per_vertex_b1) and np.array_equal(
            self.per_vertex_b2, other.per_vertex_b2
        )


@dataclass(frozen=True)
class Certificate:
    """The inequality chain at one vertex of one forest.

    ``neighborhood_b <= children_group_b + 1 <= 2`` when the vertex has
    children, ``neighborhood_b <= 1`` otherwise.
    """

    vertex: int
    forest: int
    children_group_b: int | None
    parent: int | None
    neighborhood_b: int

    @property
    def holds(self) -> bool:
        if self.children_group_b is None:
            return self.neighborhood_b <= 1
        return self.neighborhood_b <= self.children_group_b + 1 <= BOUND


@dataclass(frozen=True, eq=False)
class SolveContext:
    pair: ForestPair
    root_strategy: str
    seed: int | None
    decompositions: tuple[RootedDecomposition, RootedDecomposition]
    aux: BipartiteMultigraph
    coloring: EdgeColoring
    partition: VertexPartition
    report: BalanceReport


def run_pipeline(pair: ForestPair, root_strategy: str = "min-id", seed: int | None = None) -> SolveContext:
    """Run the full construction and keep every intermediate for inspection."""
    if not isinstance(pair, ForestPair):
        raise ValidationError(f"expected a ForestPair, got {type(pair).__name__}")
    d1 = decompose(pair.g1, choose_roots(pair.g1, root_strategy, seed))
    # the second forest draws its roots from a distinct stream
    seed2 = None if seed is None else (seed + 1) % 2**64
    d2 = decompose(pair.g2, choose_roots(pair.g2, root_strategy, seed2))
    h = build_aux(d1, d2)
    phi = balanced_two_coloring(h)
    # edge index == vertex id
    partition = VertexPartition(phi.bits)
    report = verify(pair, partition)
    if report.achieved_k > BOUND:
        raise InvariantError(
            f"construction produced imbalance {report.achieved_k} > {BOUND}; this is a bug"
        )
    return SolveContext(pair, root_strategy, seed, (d1, d2), h, phi, partition, report)


def solve(pair: ForestPair, root_strategy: str = "min-id", seed: int | None = None):
    """Return ``(partition, report)`` with ``report.achieved_k <= 2``."""
    ctx = run_pipeline(pair, root_strategy, seed)
    return ctx.partition, ctx.report


def verify(pair: ForestPair, partition: VertexPartition) -> BalanceReport:
    """Recompute every neighborhood imbalance from the graphs alone."""
    if not isinstance(partition, VertexPartition):
        partition = VertexPartition(partition)
    n = pair.vertex_count
    if len(partition) != n:
        raise LengthMismatch(f"partition has length {len(partition)}, instance has {n} vertices")
    b1 = neighborhood_discrepancies(pair.g1, partition)
    b2 = neighborhood_discrepancies(pair.g2, partition)
    b1.setflags(write=False)
    b2.setflags(write=False)
    return BalanceReport(b1, b2)


def certificate(ctx: SolveContext, v: int, forest: int) -> Certificate:
    if forest not in (1, 2):
        raise ValidationError(f"forest must be 1 or 2, got {forest!r}")
    n = ctx.pair.vertex_count
    if not 0 <= v < n:
        raise VertexOutOfRange(f"vertex {v} not in [0, {n})")
    d = ctx.decompositions[forest - 1]
    g = ctx.pair[forest]
    nbrs = g.neighbors_of(v).tolist()
    cg = int(d.child_group[v])
    parent = int(d.parent[v])
    parent = None if parent < 0 else parent
    if cg >= 0:
        members = d.group_members(cg)
        rest = set(nbrs) - set(members)
        if len(rest) > 1 or (rest and rest != {parent}):
            raise InvariantError(f"vertex {v}: neighbors outside the children group: {sorted(rest)}")
        cg_b = discrepancy(ctx.partition, members)
    else:
        if len(nbrs) > 1:
            raise InvariantError(f"vertex {v} has no children but {len(nbrs)} neighbors")
        cg_b = None
    cert = Certificate(v, forest, cg_b, parent, discrepancy(ctx.partition, nbrs))
    if not cert.holds:
        raise InvariantError(f"certificate fails at vertex {v} of forest {forest}: {cert}")
    return cert
