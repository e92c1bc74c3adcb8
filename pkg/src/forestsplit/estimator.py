"""scikit-learn style wrappers around the solver and the exhaustive oracle."""

from __future__ import annotations

from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from .oracle import DEFAULT_LIMIT, oracle_min_k
from .solver import certificate, run_pipeline, verify
from .validation import check_forest_pair, check_partition


class SimultaneousBalancedPartition(ClusterMixin, BaseEstimator):
    """Split the shared vertex set of two forests into two parts.

    Every vertex ends up with neighborhood imbalance at most 2 in both
    forests.

    Parameters
    ----------
    root_strategy : {"min-id", "seeded"}
        How each tree's root is picked before grouping vertices by parent.
    seed : int or None
        Seed for ``root_strategy="seeded"``.

    Attributes
    ----------
    labels_ : ndarray of shape (n_vertices,)
        Part (0 or 1) of every vertex.
    report_ : BalanceReport
    achieved_k_ : int
    context_ : SolveContext
        Decompositions, auxiliary multigraph and edge coloring of the last fit.
    """

    def __init__(self, root_strategy="min-id", seed=None):
        self.root_strategy = root_strategy
        self.seed = seed

    def fit(self, X, y=None):
        pair = check_forest_pair(X)
        ctx = run_pipeline(pair, self.root_strategy, self.seed)
        self.context_ = ctx
        self.labels_ = ctx.partition.bits.copy()
        self.report_ = ctx.report
        self.achieved_k_ = ctx.report.achieved_k
        self.n_vertices_ = pair.vertex_count
        return self

    def score(self, X, y=None):
        """Negated max neighborhood imbalance of ``labels_`` on ``X``."""
        check_is_fitted(self, "labels_")
        pair = check_forest_pair(X)
        return -verify(pair, check_partition(self.labels_, pair.vertex_count)).achieved_k

    def certificate(self, v, forest):
        check_is_fitted(self, "context_")
        return certificate(self.context_, v, forest)


class ExhaustiveOracle(ClusterMixin, BaseEstimator):
    """Exact minimum of the max neighborhood imbalance over all partitions.

    Exponential in the vertex count; refuses instances above ``n_limit``.
    """

    def __init__(self, n_limit=DEFAULT_LIMIT):
        self.n_limit = n_limit

    def fit(self, X, y=None):
        pair = check_forest_pair(X)
        res = oracle_min_k(pair, self.n_limit)
        self.k_min_ = res.k_min
        self.labels_ = res.witness.bits.copy()
        self.n_enumerated_ = res.enumerated
        return self
