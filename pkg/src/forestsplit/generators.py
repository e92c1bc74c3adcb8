"""Random and fixed forest instances.

All randomness comes from ``numpy.random.Generator(PCG64(seed))`` with an
explicit unsigned 64-bit seed, so a seed pins an instance exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidConfig
from .graph import Forest, ForestPair, build_forest

__all__ = ["MODELS", "EDGE_DROP_P", "GenConfig", "gen_forest", "gen_pair", "prufer_decode", "tightness_example"]

MODELS = ("prufer-tree", "uniform-forest", "path", "star")
EDGE_DROP_P = 0.2


@dataclass(frozen=True)
class GenConfig:
    """``component_count`` is only honored by ``prufer-tree``: a uniform
    random tree with ``component_count - 1`` uniformly chosen edges removed.
    ``uniform-forest`` drops each tree edge with probability 0.2 instead.
    """

    n: int
    model: str = "prufer-tree"
    seed: int = 0
    component_count: int | None = None

    def validate(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InvalidConfig(f"n must be an integer >= 1, got {self.n!r}")
        if self.model not in MODELS:
            raise InvalidConfig(f"unknown model {self.model!r}; expected one of {MODELS}")
        if not 0 <= self.seed < 2**64:
            raise InvalidConfig(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        c = self.component_count
        if c is not None:
            if not 1 <= c <= self.n:
                raise InvalidConfig(f"component_count must lie in [1, n], got {c}")
            if self.model == "uniform-forest" or (self.model in ("path", "star") and c != 1):
                raise InvalidConfig(f"model {self.model!r} does not take a component count")
        return self


def prufer_decode(seq, n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``0..n-1`` with Prüfer sequence ``seq`` (linear time)."""
    if n < 2:
        return []
    if len(seq) != n - 2:
        raise InvalidConfig(f"Prüfer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def _draw_edges(n, model, component_count, rng):
    if model == "path":
        return [(i, i + 1) for i in range(n - 1)]
    if model == "star":
        return [(0, i) for i in range(1, n)]
    seq = rng.integers(0, n, size=max(n - 2, 0)).tolist()
    edges = np.array(prufer_decode(seq, n), dtype=np.int64).reshape(-1, 2)
    if model == "uniform-forest":
        edges = edges[rng.random(len(edges)) >= EDGE_DROP_P]
    elif component_count is not None and component_count > 1:
        drop = rng.choice(len(edges), size=component_count - 1, replace=False)
        edges = np.delete(edges, drop, axis=0)
    return edges


def gen_forest(config: GenConfig) -> Forest:
    config.validate()
    rng = np.random.Generator(np.random.PCG64(config.seed))
    return build_forest(config.n, _draw_edges(config.n, config.model, config.component_count, rng))


def gen_pair(config: GenConfig, model2: str | None = None) -> ForestPair:
    """Two forests drawn one after the other from the seed's stream.

    The first forest equals ``gen_forest(config)``. ``model2`` overrides the
    model of the second forest.
    """
    config.validate()
    c2 = config
    if model2 is not None:
        c2 = GenConfig(config.n, model2, config.seed, config.component_count).validate()
    rng = np.random.Generator(np.random.PCG64(config.seed))
    g1 = build_forest(config.n, _draw_edges(config.n, config.model, config.component_count, rng))
    g2 = build_forest(config.n, _draw_edges(c2.n, c2.model, c2.component_count, rng))
    return ForestPair(g1, g2)


def tightness_example() -> ForestPair:
    """The two 5-vertex paths that admit no 1-balanced simultaneous partition."""
    return ForestPair.from_edges(
        5,
        [(0, 1), (1, 2), (2, 3), (3, 4)],
        [(0, 4), (4, 3), (2, 1), (1, 0)],
    )
