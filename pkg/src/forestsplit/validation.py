"""Input coercion for the estimator layer."""

from __future__ import annotations

from collections.abc import Mapping

from .exceptions import ValidationError
from .graph import ForestPair, VertexPartition


def check_forest_pair(X) -> ForestPair:
    """Accept a ForestPair, a ``{"n", "g1", "g2"}`` mapping or an ``(n, g1, g2)`` tuple."""
    if isinstance(X, ForestPair):
        return X
    if isinstance(X, Mapping):
        try:
            return ForestPair.from_edges(X["n"], X["g1"], X["g2"])
        except KeyError as exc:
            raise ValidationError(f"instance mapping lacks key {exc.args[0]!r}") from None
    if isinstance(X, (tuple, list)) and len(X) == 3:
        return ForestPair.from_edges(*X)
    raise ValidationError(
        f"expected a ForestPair, an instance mapping or (n, g1, g2); got {type(X).__name__}"
    )


def check_partition(bits, n: int) -> VertexPartition:
    p = bits if isinstance(bits, VertexPartition) else VertexPartition(bits)
    if len(p) != n:
        from .exceptions import LengthMismatch

        raise LengthMismatch(f"partition has length {len(p)}, expected {n}")
    return p
