"""Exhaustive minimum-imbalance search and the experiment runner."""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .exceptions import TooLarge, ValidationError
from .generators import GenConfig, gen_pair
from .graph import ForestPair, VertexPartition
from .solver import solve

__all__ = [
    "OracleResult",
    "oracle_min_k",
    "ExperimentRow",
    "ExperimentSummary",
    "experiment",
    "run_instances",
    "rows_to_csv",
]

DEFAULT_LIMIT = 24
_CHUNK = 1 << 15


@dataclass(frozen=True)
class OracleResult:
    k_min: int
    witness: VertexPartition
    enumerated: int


def _dense_adjacency(forest, n):
    a = np.zeros((n, n), dtype=np.float32)
    e = forest.edges
    a[e[:, 0], e[:, 1]] = 1
    a[e[:, 1], e[:, 0]] = 1
    return a


def oracle_min_k(pair: ForestPair, n_limit: int = DEFAULT_LIMIT) -> OracleResult:
    """Smallest achievable max neighborhood imbalance, by exhaustive search.

    Vertex 0 is pinned to part 0 (complementing a partition changes no
    imbalance), leaving ``2**(n-1)`` candidates. Candidates are scanned in
    lexicographic order of the bit vector ``(f(0), ..., f(n-1))`` and the
    first optimum is returned as the witness.
    """
    n = pair.vertex_count
    if n > n_limit:
        raise TooLarge(f"n={n} exceeds the exhaustive search limit {n_limit}")
    if n == 0:
        return OracleResult(0, VertexPartition([]), 1)
    a = np.concatenate([_dense_adjacency(pair.g1, n), _dense_adjacency(pair.g2, n)], axis=1)
    total = 1 << (n - 1)
    # column j holds vertex j; vertex 1 is the most significant free bit
    shifts = np.concatenate([[0], np.arange(n - 2, -1, -1)]).astype(np.int64)
    pinned = np.arange(n) == 0

    best_k, best_x = None, 0
    for start in range(0, total, _CHUNK):
        x = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        bits = (x[:, None] >> shifts) & 1
        bits[:, pinned] = 0
        signs = (2 * bits - 1).astype(np.float32)
        k = np.abs(signs @ a).max(axis=1)
        i = int(np.argmin(k))
        if best_k is None or k[i] < best_k:
            best_k, best_x = float(k[i]), int(x[i])
    bits = [0] + [(best_x >> s) & 1 for s in range(n - 2, -1, -1)]
    return OracleResult(int(best_k), VertexPartition(bits), total)


@dataclass(frozen=True)
class ExperimentRow:
    seed: int | None
    n: int
    achieved_k: int
    k_min: int | None = None


@dataclass
class ExperimentSummary:
    count: int = 0
    achieved_k: Counter = field(default_factory=Counter)
    k_min: Counter = field(default_factory=Counter)
    above_optimum: int = 0

    @classmethod
    def from_rows(cls, rows):
        s = cls()
        for r in rows:
            s.count += 1
            s.achieved_k[r.achieved_k] += 1
            if r.k_min is not None:
                s.k_min[r.k_min] += 1
                s.above_optimum += r.achieved_k > r.k_min
        return s

    def lines(self):
        def hist(c):
            return " ".join(f"{k}:{c[k]}" for k in sorted(c)) or "-"

        return [
            f"instances={self.count}",
            f"achieved_k {hist(self.achieved_k)}",
            f"k_min {hist(self.k_min)}",
            f"achieved_k>k_min {self.above_optimum}",
        ]


def run_instances(instances, with_oracle=False, n_limit=DEFAULT_LIMIT, root_strategy="min-id"):
    """Solve ``(seed, pair)`` instances in the given order, one row each."""
    rows = []
    for seed, pair in instances:
        if with_oracle and pair.vertex_count > n_limit:
            raise TooLarge(f"oracle needs n <= {n_limit}, got {pair.vertex_count}")
        _, report = solve(pair, root_strategy, seed if root_strategy == "seeded" else None)
        k_min = oracle_min_k(pair, n_limit).k_min if with_oracle else None
        rows.append(ExperimentRow(seed, pair.vertex_count, report.achieved_k, k_min))
    return rows


def experiment(count: int, config: GenConfig, with_oracle: bool = False, model2: str | None = None):
    """Generate ``count`` pairs with seeds ``config.seed, config.seed + 1, ...``.

    Returns ``(rows, summary)`` with rows in seed order.
    """
    if count < 0:
        raise ValidationError("count must be non-negative")
    if with_oracle and config.n > DEFAULT_LIMIT:
        raise TooLarge(f"oracle needs n <= {DEFAULT_LIMIT}, got {config.n}")
    config.validate()
    instances = (
        (
            (config.seed + i) % 2**64,
            gen_pair(GenConfig(config.n, config.model, (config.seed + i) % 2**64, config.component_count), model2),
        )
        for i in range(count)
    )
    rows = run_instances(instances, with_oracle)
    return rows, ExperimentSummary.from_rows(rows)


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["seed", "n", "achieved_k", "k_min"])
    for r in rows:
        w.writerow(["" if r.seed is None else r.seed, r.n, r.achieved_k, "" if r.k_min is None else r.k_min])
    return buf.getvalue()
