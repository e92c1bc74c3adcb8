"""The bipartite multigraph linking the group families of two forests.

Left nodes are the groups of the first decomposition, right nodes the groups
of the second. Each vertex ``v`` of the shared vertex set becomes exactly one
edge, joining the group containing ``v`` on each side. Edge ``i`` carries
label ``i``, so the vertex/edge correspondence is the identity on indices.
"""

from __future__ import annotations

import numpy as np

from .decomposition import RootedDecomposition
from .exceptions import NodeOutOfRange, ValidationError, VertexCountMismatch
from .graph import _frozen

__all__ = ["BipartiteMultigraph", "build_aux", "node_degree", "aux_to_dot"]

_SIDES = {"left": 0, "right": 1, 1: 0, 2: 1}


class BipartiteMultigraph:
    """Bipartite multigraph with parallel edges kept as separate records.

    ``left[i]`` and ``right[i]`` are the endpoints of edge ``i``; node ids
    are local to their side.
    """

    __slots__ = ("left_count", "right_count", "left", "right", "_incidence")

    def __init__(self, left_count, right_count, left, right):
        left = np.asarray(left, dtype=np.int64).ravel()
        right = np.asarray(right, dtype=np.int64).ravel()
        if left.shape != right.shape:
            raise ValidationError("left and right endpoint arrays differ in length")
        if left.size and (left.min() < 0 or left.max() >= left_count):
            raise NodeOutOfRange(f"left endpoint outside [0, {left_count})")
        if right.size and (right.min() < 0 or right.max() >= right_count):
            raise NodeOutOfRange(f"right endpoint outside [0, {right_count})")
        self.left_count = int(left_count)
        self.right_count = int(right_count)
        self.left = _frozen(left)
        self.right = _frozen(right)
        self._incidence = {}

    @property
    def edge_count(self) -> int:
        return len(self.left)

    @property
    def labels(self) -> np.ndarray:
        return np.arange(self.edge_count)

    def degrees(self, side) -> np.ndarray:
        s = _side(side)
        ends, count = (self.left, self.left_count) if s == 0 else (self.right, self.right_count)
        return np.bincount(ends, minlength=count)

    def incidence(self, side, node) -> np.ndarray:
        """Ascending indices of the edges at ``node``."""
        s = _side(side)
        count = self.left_count if s == 0 else self.right_count
        if not 0 <= node < count:
            raise NodeOutOfRange(f"{('left', 'right')[s]} node {node} not in [0, {count})")
        if s not in self._incidence:
            ends = self.left if s == 0 else self.right
            order = np.argsort(ends, kind="stable")
            bounds = np.searchsorted(ends[order], np.arange(count + 1))
            self._incidence[s] = (order, bounds)
        order, bounds = self._incidence[s]
        return order[bounds[node] : bounds[node + 1]]

    def __repr__(self):
        return (
            f"BipartiteMultigraph(left={self.left_count}, right={self.right_count}, "
            f"edges={self.edge_count})"
        )


def _side(side):
    try:
        return _SIDES[side]
    except (KeyError, TypeError):
        raise ValidationError(f"side must be 'left' or 'right', got {side!r}") from None


def build_aux(d1: RootedDecomposition, d2: RootedDecomposition) -> BipartiteMultigraph:
    """One edge per vertex ``v``: (group of v in d1) -- (group of v in d2)."""
    if d1.vertex_count != d2.vertex_count:
        raise VertexCountMismatch(
            f"decompositions cover {d1.vertex_count} and {d2.vertex_count} vertices"
        )
    return BipartiteMultigraph(d1.group_count, d2.group_count, d1.group_of, d2.group_of)


def node_degree(h: BipartiteMultigraph, side, node: int) -> int:
    return len(h.incidence(side, node))


def aux_to_dot(h: BipartiteMultigraph, d1=None, d2=None) -> str:
    """DOT text for ``h``; with decompositions given, nodes show their members."""

    def name(prefix, d, g):
        if d is None:
            return f"{prefix}{g}"
        return "{" + ",".join(map(str, d.group_members(g))) + "}"

    lines = ["graph H {", "  rankdir=LR;"]
    for g in range(h.left_count):
        lines.append(f'  L{g} [label="{name("L", d1, g)}"];')
    for g in range(h.right_count):
        lines.append(f'  R{g} [label="{name("R", d2, g)}"];')
    for i, (a, b) in enumerate(zip(h.left.tolist(), h.right.tolist())):
        lines.append(f'  L{a} -- R{b} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
