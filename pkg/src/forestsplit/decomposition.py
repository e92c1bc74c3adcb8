"""Rooted BFS decomposition of a forest into sibling groups.

Every tree gets a root. Vertices are grouped by their BFS parent: the
children of one vertex form a group, and each root forms a singleton group.
The resulting family partitions the vertex set, and every vertex ``v`` has
at most one neighbor outside the group of its children (namely its parent).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidRoots, ValidationError, VertexOutOfRange
from .graph import Forest, _frozen

__all__ = [
    "RootedDecomposition",
    "ROOT_STRATEGIES",
    "choose_roots",
    "decompose",
    "children_group",
]

ROOT_STRATEGIES = ("min-id", "seeded")


def choose_roots(forest: Forest, strategy: str = "min-id", seed: int | None = None) -> list[int]:
    """Pick one root per connected component, in component order.

    ``min-id`` takes the smallest vertex of each component. ``seeded`` draws
    one vertex uniformly per component from ``numpy.random.Generator(PCG64(seed))``.
    """
    comp = forest.component
    ncomp = forest.component_count
    if strategy == "min-id":
        first = np.full(ncomp, forest.vertex_count, dtype=np.int64)
        np.minimum.at(first, comp, np.arange(forest.vertex_count))
        return first.tolist()
    if strategy == "seeded":
        if seed is None:
            raise ValidationError("root strategy 'seeded' needs a seed")
        rng = np.random.Generator(np.random.PCG64(seed))
        members = np.argsort(comp, kind="stable")
        sizes = np.bincount(comp, minlength=ncomp)
        starts = np.concatenate([[0], np.cumsum(sizes)[:-1]]) if ncomp else sizes
        picks = rng.integers(0, sizes) if ncomp else sizes
        return members[starts + picks].tolist()
    raise ValidationError(f"unknown root strategy {strategy!r}; expected one of {ROOT_STRATEGIES}")


@dataclass(frozen=True, eq=False)
class RootedDecomposition:
    """BFS trees of a forest and the induced group family.

    All array fields are read-only and indexed by vertex id. ``parent`` is
    ``-1`` for roots and ``child_group`` is ``-1`` for vertices without
    children. ``bfs_order`` lists vertices component by component, each
    component in BFS order from its root.
    """

    vertex_count: int
    roots: tuple[int, ...]
    parent: np.ndarray
    level: np.ndarray
    max_level: tuple[int, ...]
    group_of: np.ndarray
    child_group: np.ndarray
    group_count: int
    bfs_order: np.ndarray

    @property
    def component_count(self) -> int:
        return len(self.roots)

    def group_members(self, g: int) -> tuple[int, ...]:
        if not 0 <= g < self.group_count:
            raise IndexError(f"group {g} not in [0, {self.group_count})")
        return tuple(np.flatnonzero(self.group_of == g).tolist())

    @property
    def groups(self) -> list[frozenset[int]]:
        order = np.argsort(self.group_of, kind="stable")
        bounds = np.searchsorted(self.group_of[order], np.arange(self.group_count + 1))
        flat = order.tolist()
        return [frozenset(flat[bounds[g] : bounds[g + 1]]) for g in range(self.group_count)]

    @property
    def group_sizes(self) -> np.ndarray:
        return np.bincount(self.group_of, minlength=self.group_count)


def decompose(forest: Forest, roots) -> RootedDecomposition:
    """Root each component at the given vertex and enumerate its sibling groups.

    Groups are numbered component by component in root order: the root
    singleton first, then the children of each vertex in BFS discovery
    order. BFS visits neighbors in ascending id.
    """
    n = forest.vertex_count
    roots = np.asarray(list(roots), dtype=np.int64)
    if len(roots) != forest.component_count:
        raise InvalidRoots(
            f"expected {forest.component_count} roots (one per component), got {len(roots)}"
        )
    if roots.size and (roots.min() < 0 or roots.max() >= n):
        raise InvalidRoots(f"root ids must lie in [0, {n})")
    root_comp = forest.component[roots]
    if len(np.unique(root_comp)) != len(roots):
        raise InvalidRoots("two roots lie in the same component")

    indptr, indices = forest.indptr, forest.indices
    deg = forest.degrees
    parent = np.full(n, -1, dtype=np.int64)
    level = np.zeros(n, dtype=np.int64)

    # level-synchronous multi-source BFS; in a forest every neighbor of a
    # frontier vertex except its parent is undiscovered
    frontier = roots
    chunks = [frontier]
    depth = 0
    while frontier.size:
        depth += 1
        counts = deg[frontier]
        total = int(counts.sum())
        if total == 0:
            break
        owner = np.repeat(frontier, counts)
        offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
        nbr = indices[np.repeat(indptr[frontier], counts) + offsets]
        keep = nbr != parent[owner]
        nbr, owner = nbr[keep], owner[keep]
        parent[nbr] = owner
        level[nbr] = depth
        frontier = nbr
        chunks.append(frontier)
    global_order = np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.int64)
    if len(global_order) != n:
        raise VertexOutOfRange("BFS did not reach every vertex; roots do not cover the forest")

    # per-component BFS order is the global order stably grouped by component
    comp_of_root_order = np.empty(max(len(roots), 1), dtype=np.int64)
    comp_of_root_order[root_comp] = np.arange(len(roots))
    comp_rank = comp_of_root_order[forest.component[global_order]] if n else global_order
    bfs_order = global_order[np.argsort(comp_rank, kind="stable")]

    is_root = parent[bfs_order] < 0
    has_child = np.zeros(n, dtype=bool)
    has_child[parent[parent >= 0]] = True
    has_child_o = has_child[bfs_order]
    slots = is_root.astype(np.int64) + has_child_o
    offset = np.cumsum(slots) - slots
    group_count = int(slots.sum())

    child_group = np.full(n, -1, dtype=np.int64)
    child_group[bfs_order[has_child_o]] = (offset + is_root)[has_child_o]
    group_of = np.empty(n, dtype=np.int64)
    group_of[bfs_order[is_root]] = offset[is_root]
    nonroot = parent >= 0
    group_of[nonroot] = child_group[parent[nonroot]]

    max_level = np.zeros(len(roots), dtype=np.int64)
    if n:
        np.maximum.at(max_level, comp_of_root_order[forest.component], level)

    return RootedDecomposition(
        vertex_count=n,
        roots=tuple(roots.tolist()),
        parent=_frozen(parent),
        level=_frozen(level),
        max_level=tuple(max_level.tolist()),
        group_of=_frozen(group_of),
        child_group=_frozen(child_group),
        group_count=group_count,
        bfs_order=_frozen(bfs_order),
    )


def children_group(decomp: RootedDecomposition, v: int) -> int | None:
    """Index of the group ``{w : parent(w) == v}``, or None for a leaf."""
    if not 0 <= v < decomp.vertex_count:
        raise VertexOutOfRange(f"vertex {v} not in [0, {decomp.vertex_count})")
    g = int(decomp.child_group[v])
    return None if g < 0 else g
