"""Simultaneous locally-balanced 2-partitions of two forests on one vertex set."""

__version__ = "0.1.0"

from .auxgraph import BipartiteMultigraph, build_aux, node_degree
from .coloring import EdgeColoring, balanced_two_coloring
from .decomposition import RootedDecomposition, children_group, choose_roots, decompose
from .estimator import ExhaustiveOracle, SimultaneousBalancedPartition
from .exceptions import InvariantError, ValidationError
from .generators import GenConfig, gen_forest, gen_pair, tightness_example
from .graph import Forest, ForestPair, VertexPartition, build_forest, discrepancy, neighbors
from .oracle import OracleResult, experiment, oracle_min_k
from .solver import BalanceReport, Certificate, certificate, run_pipeline, solve, verify

__all__ = [
    "BalanceReport",
    "BipartiteMultigraph",
    "Certificate",
    "EdgeColoring",
    "ExhaustiveOracle",
    "Forest",
    "ForestPair",
    "GenConfig",
    "InvariantError",
    "OracleResult",
    "RootedDecomposition",
    "SimultaneousBalancedPartition",
    "ValidationError",
    "VertexPartition",
    "balanced_two_coloring",
    "build_aux",
    "build_forest",
    "certificate",
    "children_group",
    "choose_roots",
    "decompose",
    "discrepancy",
    "experiment",
    "gen_forest",
    "gen_pair",
    "neighbors",
    "node_degree",
    "oracle_min_k",
    "tightness_example",
    "run_pipeline",
    "solve",
    "verify",
]
