"""Balanced 2-coloring of the edges of a bipartite multigraph.

Odd-degree nodes are paired off through two dummy nodes so that every degree
becomes even. Each connected component then has an Eulerian circuit, and
coloring its edges alternately 1, 0, 1, 0, ... leaves every node with equally
many edges of each color (circuits in a bipartite graph have even length).
Dropping the dummy edges changes each originally odd node by exactly one, so
the final imbalance at a node equals its degree mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .auxgraph import BipartiteMultigraph
from .exceptions import OddCircuitLength, OddDegree, ValidationError
from .graph import _frozen

__all__ = [
    "EdgeColoring",
    "AugmentedMultigraph",
    "augment_even",
    "euler_circuits",
    "alternate_colors",
    "balanced_two_coloring",
    "node_discrepancies",
]


class EdgeColoring:
    """One bit per edge, read-only."""

    __slots__ = ("_bits",)

    def __init__(self, bits):
        self._bits = _frozen(np.asarray(bits, dtype=np.uint8))

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    def tolist(self):
        return self._bits.tolist()

    def __len__(self):
        return len(self._bits)

    def __getitem__(self, e):
        return int(self._bits[e])

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return np.array_equal(self._bits, other._bits)

    def __repr__(self):
        return f"EdgeColoring({self.tolist() if len(self) <= 32 else f'<{len(self)} bits>'})"


@dataclass(frozen=True, eq=False)
class AugmentedMultigraph:
    """A bipartite multigraph with dummy nodes making every degree even.

    Nodes use one global numbering: left nodes ``0..L-1``, then the left
    dummy ``alpha`` (id ``L``), then right nodes ``L+1..L+R``, then the right
    dummy ``beta`` (id ``L+R+1``). The dummy ids are reserved even when the
    dummy is absent. Edges ``0..original_edge_count-1`` are the input edges;
    the rest are dummy edges.
    """

    left_count: int
    right_count: int
    has_alpha: bool
    has_beta: bool
    left: np.ndarray
    right: np.ndarray
    original_edge_count: int

    @property
    def node_count(self) -> int:
        return self.left_count + self.right_count + 2

    @property
    def alpha(self) -> int:
        return self.left_count

    @property
    def beta(self) -> int:
        return self.left_count + self.right_count + 1

    @property
    def edge_count(self) -> int:
        return len(self.left)

    @property
    def is_dummy(self) -> np.ndarray:
        return np.arange(self.edge_count) >= self.original_edge_count

    @property
    def endpoints(self) -> tuple[np.ndarray, np.ndarray]:
        """Global node ids ``(u, w)`` of every edge, ``u`` on the left side."""
        return self.left, self.right + self.left_count + 1

    def degrees(self) -> np.ndarray:
        u, w = self.endpoints
        return np.bincount(np.concatenate([u, w]), minlength=self.node_count)


def augment_even(h: BipartiteMultigraph) -> AugmentedMultigraph:
    """Join odd left nodes to beta, odd right nodes to alpha, and fix up alpha/beta.

    Dummy edges are appended in this order: (odd left node, beta) by
    ascending node, (alpha, odd right node) by ascending node, then one
    alpha--beta edge if the two dummies would otherwise be odd.
    """
    L, R = h.left_count, h.right_count
    odd_left = np.flatnonzero(h.degrees("left") % 2)
    odd_right = np.flatnonzero(h.degrees("right") % 2)
    # |odd_left| and |odd_right| share parity (both sides' degree sums equal m)
    bridge = len(odd_left) % 2 == 1
    left = [h.left, odd_left, np.full(len(odd_right), L, dtype=np.int64)]
    right = [h.right, np.full(len(odd_left), R, dtype=np.int64), odd_right]
    if bridge:
        left.append(np.array([L], dtype=np.int64))
        right.append(np.array([R], dtype=np.int64))
    return AugmentedMultigraph(
        left_count=L,
        right_count=R,
        has_alpha=bool(len(odd_right) or bridge),
        has_beta=bool(len(odd_left) or bridge),
        left=_frozen(np.concatenate(left).astype(np.int64)),
        right=_frozen(np.concatenate(right).astype(np.int64)),
        original_edge_count=h.edge_count,
    )


def euler_circuits(h: AugmentedMultigraph) -> list[list[int]]:
    """Hierholzer's algorithm, one closed circuit per component with edges.

    Components are taken by ascending least node id; each circuit starts at
    that node and always leaves a node through its lowest-index unused edge.
    """
    u, w = h.endpoints
    N = h.node_count
    M = h.edge_count
    ends = np.concatenate([u, w])
    deg = np.bincount(ends, minlength=N)
    if (deg % 2).any():
        raise OddDegree(f"node {int(np.flatnonzero(deg % 2)[0])} has odd degree")
    # each node lies on one side only, so a stable sort keeps edge ids ascending
    order = np.argsort(ends, kind="stable")
    inc = (order % M).tolist() if M else []
    end = np.cumsum(deg).tolist()
    ptr = [e - d for e, d in zip(end, deg.tolist())]
    other = (u ^ w).tolist()
    used = bytearray(M)

    circuits = []
    for s in range(N):
        if ptr[s] == end[s]:
            continue
        # every component is exhausted once visited, so s still has unused edges
        # exactly when it is the least node of an untouched component
        trail_v = []
        trail_e = []
        push_v, push_e = trail_v.append, trail_e.append
        pop_v, pop_e = trail_v.pop, trail_e.pop
        out = []
        emit = out.append
        v = s
        while True:
            p = ptr[v]
            stop = end[v]
            while p < stop and used[inc[p]]:
                p += 1
            if p < stop:
                e = inc[p]
                used[e] = 1
                ptr[v] = p + 1
                push_v(v)
                push_e(e)
                v = other[e] ^ v
                continue
            ptr[v] = p
            if not trail_e:
                break
            emit(pop_e())
            v = pop_v()
        out.reverse()
        circuits.append(out)
    return circuits


def alternate_colors(circuits, edge_count: int) -> EdgeColoring:
    """Color each circuit 1, 0, 1, 0, ... in traversal order."""
    lengths = np.fromiter(map(len, circuits), dtype=np.int64, count=len(circuits))
    if (lengths % 2).any():
        bad = int(lengths[np.flatnonzero(lengths % 2)[0]])
        raise OddCircuitLength(f"circuit of odd length {bad}; the multigraph is not bipartite")
    flat = np.fromiter(
        (e for circ in circuits for e in circ), dtype=np.int64, count=int(lengths.sum())
    )
    if flat.size and (flat.min() < 0 or flat.max() >= edge_count):
        raise ValidationError("circuit references an edge out of range")
    if flat.size != edge_count or (np.bincount(flat, minlength=edge_count) != 1).any():
        raise ValidationError("circuits must use every edge exactly once")
    # position of each edge within its own circuit
    pos = np.arange(flat.size) - np.repeat(np.cumsum(lengths) - lengths, lengths)
    bits = np.zeros(edge_count, dtype=np.uint8)
    bits[flat[pos % 2 == 0]] = 1
    return EdgeColoring(bits)


def balanced_two_coloring(h: BipartiteMultigraph) -> EdgeColoring:
    """Edge 2-coloring where each node's color imbalance equals its degree mod 2."""
    aug = augment_even(h)
    colors = alternate_colors(euler_circuits(aug), aug.edge_count)
    return EdgeColoring(colors.bits[: h.edge_count])


def node_discrepancies(h: BipartiteMultigraph, coloring: EdgeColoring, side) -> np.ndarray:
    """Per-node ``|#color1 - #color0|`` over incident edges on one side."""
    ends = h.left if side in ("left", 1) else h.right
    count = h.left_count if side in ("left", 1) else h.right_count
    signed = 2 * coloring.bits.astype(np.int64) - 1
    return np.abs(np.bincount(ends, weights=signed, minlength=count)).astype(np.int64)
