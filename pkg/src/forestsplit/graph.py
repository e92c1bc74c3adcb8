"""Forests on dense vertex ids, vertex 2-partitions and the discrepancy b_f."""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .exceptions import (
    CycleDetected,
    DuplicateEdge,
    LengthMismatch,
    LoopEdge,
    ValidationError,
    VertexCountMismatch,
    VertexOutOfRange,
)

__all__ = [
    "Forest",
    "ForestPair",
    "VertexPartition",
    "UnionFind",
    "build_forest",
    "neighbors",
    "discrepancy",
    "neighborhood_discrepancies",
]


def _frozen(a):
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


class UnionFind:
    """Disjoint sets over 0..n-1 with union by size and path halving."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        """Merge the sets of ``a`` and ``b``; False if they were already one set."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


class Forest:
    """An immutable, validated forest.

    Use :func:`build_forest` to construct one. Edges are stored as ``(u, v)``
    with ``u < v`` in ascending order; adjacency is a CSR layout with each
    neighbor list ascending.
    """

    __slots__ = ("_n", "_edges", "_indptr", "_indices", "_component", "_ncomp")

    def __init__(self, vertex_count, edges, indptr, indices, component, ncomp):
        self._n = vertex_count
        self._edges = _frozen(edges)
        self._indptr = _frozen(indptr)
        self._indices = _frozen(indices)
        self._component = _frozen(component)
        self._ncomp = ncomp

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> np.ndarray:
        """``(m, 2)`` read-only array, rows ``(u, v)`` with ``u < v``, sorted."""
        return self._edges

    def edge_list(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self._edges]

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    @property
    def component(self) -> np.ndarray:
        """Per-vertex component index; components are numbered by their smallest vertex."""
        return self._component

    @property
    def component_count(self) -> int:
        return self._ncomp

    def neighbors_of(self, v) -> np.ndarray:
        """Ascending neighbor ids of ``v`` (read-only view)."""
        self._check_vertex(v)
        return self._indices[self._indptr[v] : self._indptr[v + 1]]

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        ptr, idx = self._indptr.tolist(), self._indices.tolist()
        return tuple(tuple(idx[ptr[v] : ptr[v + 1]]) for v in range(self._n))

    def _check_vertex(self, v):
        if not 0 <= v < self._n:
            raise VertexOutOfRange(f"vertex {v} not in [0, {self._n})")

    def __eq__(self, other):
        if not isinstance(other, Forest):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._edges, other._edges)

    def __hash__(self):
        return hash((self._n, self._edges.tobytes()))

    def __repr__(self):
        return (
            f"Forest(vertex_count={self._n}, edges={self.edge_count}, "
            f"components={self._ncomp})"
        )


def _as_edge_array(edges):
    if isinstance(edges, np.ndarray):
        arr = edges
    else:
        edges = list(edges)
        for e in edges:
            if len(e) != 2:
                raise ValidationError(f"edge {e!r} is not a pair")
        arr = np.array(edges, dtype=np.int64).reshape(-1, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValidationError(f"edges must have shape (m, 2), got {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        raise ValidationError("edge endpoints must be integers")
    return arr.astype(np.int64, copy=False)


# below this size a pure-Python union-find beats scipy's sparse setup cost
_SMALL = 4096


def _first_cycle_edge(n, edges):
    uf = UnionFind(n)
    for u, v in edges:
        if not uf.union(u, v):
            return u, v
    raise AssertionError("component count says cyclic but union-find found no cycle")


def build_forest(vertex_count: int, edges) -> Forest:
    """Validate an undirected edge list and return a :class:`Forest`.

    Raises
    ------
    LoopEdge, DuplicateEdge, VertexOutOfRange, CycleDetected
    """
    if isinstance(vertex_count, bool) or int(vertex_count) != vertex_count or vertex_count < 0:
        raise ValidationError(f"vertex_count must be a non-negative integer, got {vertex_count!r}")
    n = int(vertex_count)
    arr = _as_edge_array(edges)
    m = len(arr)

    if m:
        bad = (arr < 0) | (arr >= n)
        if bad.any():
            i = int(np.flatnonzero(bad.any(axis=1))[0])
            raise VertexOutOfRange(f"edge {tuple(arr[i].tolist())} has an endpoint outside [0, {n})")
        loops = arr[:, 0] == arr[:, 1]
        if loops.any():
            i = int(np.flatnonzero(loops)[0])
            raise LoopEdge(f"loop edge {tuple(arr[i].tolist())}")

    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    order = np.lexsort((hi, lo))
    lo, hi = lo[order], hi[order]
    if m > 1:
        dup = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
        if dup.any():
            i = int(np.flatnonzero(dup)[0])
            raise DuplicateEdge(f"edge ({lo[i]}, {hi[i]}) appears more than once")

    if n <= _SMALL:
        uf = UnionFind(n)
        for u, v in arr.tolist():
            if not uf.union(u, v):
                raise CycleDetected(f"edge ({u}, {v}) closes a cycle")
        roots = [uf.find(x) for x in range(n)]
        labels = np.unique(np.array(roots, dtype=np.int64), return_inverse=True)[1].reshape(-1)
        ncomp = n - m
    else:
        graph = coo_matrix((np.ones(m, dtype=np.int8), (lo, hi)), shape=(n, n))
        ncomp, labels = connected_components(graph, directed=False)
        if m != n - ncomp:
            u, v = _first_cycle_edge(n, arr.tolist())
            raise CycleDetected(f"edge ({u}, {v}) closes a cycle")

    # renumber components by smallest member
    first = np.full(ncomp, n, dtype=np.int64)
    np.minimum.at(first, labels, np.arange(n))
    rank = np.empty(ncomp, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(ncomp)
    component = rank[labels]

    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    adj_order = np.lexsort((dst, src))
    indices = dst[adj_order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])

    return Forest(n, np.stack([lo, hi], axis=1).reshape(-1, 2), indptr, indices, component, ncomp)


class ForestPair:
    """Two forests over one shared vertex set ``0..n-1``."""

    __slots__ = ("g1", "g2")

    def __init__(self, g1: Forest, g2: Forest):
        if g1.vertex_count != g2.vertex_count:
            raise VertexCountMismatch(
                f"forests disagree on vertex count: {g1.vertex_count} != {g2.vertex_count}"
            )
        self.g1 = g1
        self.g2 = g2

    @classmethod
    def from_edges(cls, vertex_count, g1_edges, g2_edges):
        return cls(build_forest(vertex_count, g1_edges), build_forest(vertex_count, g2_edges))

    @property
    def vertex_count(self) -> int:
        return self.g1.vertex_count

    def __getitem__(self, which):
        if which == 1:
            return self.g1
        if which == 2:
            return self.g2
        raise KeyError(f"forest index must be 1 or 2, got {which!r}")

    def __eq__(self, other):
        if not isinstance(other, ForestPair):
            return NotImplemented
        return self.g1 == other.g1 and self.g2 == other.g2

    def __hash__(self):
        return hash((self.g1, self.g2))

    def __repr__(self):
        return f"ForestPair(n={self.vertex_count}, g1={self.g1!r}, g2={self.g2!r})"


class VertexPartition:
    """A 2-partition of ``0..n-1``: one bit per vertex, stored read-only."""

    __slots__ = ("_bits",)

    def __init__(self, bits):
        arr = np.asarray(bits)
        if arr.ndim != 1:
            raise ValidationError("partition must be one-dimensional")
        if arr.size and not (np.issubdtype(arr.dtype, np.integer) or arr.dtype == bool):
            raise ValidationError("partition bits must be integers")
        if arr.size and ((arr != 0) & (arr != 1)).any():
            raise ValidationError("partition bits must be 0 or 1")
        self._bits = _frozen(arr.astype(np.uint8))

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    def tolist(self) -> list[int]:
        return self._bits.tolist()

    def flipped(self) -> VertexPartition:
        return VertexPartition(1 - self._bits)

    def __len__(self):
        return len(self._bits)

    def __getitem__(self, v):
        return int(self._bits[v])

    def __iter__(self):
        return iter(self._bits.tolist())

    def __eq__(self, other):
        if not isinstance(other, VertexPartition):
            return NotImplemented
        return np.array_equal(self._bits, other._bits)

    def __hash__(self):
        return hash(self._bits.tobytes())

    def __repr__(self):
        if len(self) <= 32:
            return f"VertexPartition({self.tolist()})"
        return f"VertexPartition(<{len(self)} bits>)"


def neighbors(forest: Forest, v: int) -> frozenset[int]:
    return frozenset(forest.neighbors_of(v).tolist())


def discrepancy(partition: VertexPartition, subset: Iterable[int]) -> int:
    """``|#ones - #zeros|`` of ``partition`` restricted to ``subset``."""
    ids = np.unique(np.fromiter(subset, dtype=np.int64))
    n = len(partition)
    if ids.size and (ids[0] < 0 or ids[-1] >= n):
        raise VertexOutOfRange(f"subset has ids outside [0, {n})")
    ones = int(partition.bits[ids].sum(dtype=np.int64))
    return abs(2 * ones - int(ids.size))


def neighborhood_discrepancies(forest: Forest, partition: VertexPartition) -> np.ndarray:
    """b_f(neighbors(v)) for every vertex ``v`` at once."""
    n = forest.vertex_count
    if len(partition) != n:
        raise LengthMismatch(f"partition has length {len(partition)}, forest has {n} vertices")
    deg = forest.degrees
    rows = np.repeat(np.arange(n), deg)
    ones = np.bincount(rows, weights=partition.bits[forest.indices], minlength=n)
    return np.abs(2 * ones.astype(np.int64) - deg)
