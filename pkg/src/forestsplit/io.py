"""Instance/solution JSON documents and DOT rendering.

Instance grammar: a JSON object with exactly the keys ``n`` (integer >= 1),
``g1`` and ``g2`` (arrays of 2-integer arrays with ids in ``[0, n)``).
"""

from __future__ import annotations

import json

from . import __version__
from .exceptions import InstanceSyntaxError, InstanceValidationError, ValidationError
from .graph import ForestPair, VertexPartition, build_forest
from .solver import BalanceReport, verify

__all__ = [
    "parse_instance",
    "format_instance",
    "solution_document",
    "format_solution",
    "parse_assignment",
    "emit_dot",
]

_KEYS = ("n", "g1", "g2")


def _reject_constant(name):
    raise ValueError(f"non-standard JSON constant {name}")


def _no_duplicates(pairs):
    keys = [k for k, _ in pairs]
    dup = {k for k in keys if keys.count(k) > 1}
    if dup:
        raise ValueError(f"duplicate key {sorted(dup)[0]!r}")
    return dict(pairs)


def _load_json(text):
    try:
        return json.loads(text, object_pairs_hook=_no_duplicates, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InstanceSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    except ValueError as exc:
        raise InstanceSyntaxError(str(exc), 1, 1) from None


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def parse_instance(text: str) -> ForestPair:
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise InstanceValidationError("instance must be a JSON object", rule="shape")
    extra = sorted(set(doc) - set(_KEYS))
    missing = [k for k in _KEYS if k not in doc]
    if missing:
        raise InstanceValidationError(f"missing key {missing[0]!r}", rule="shape")
    if extra:
        raise InstanceValidationError(f"unknown key {extra[0]!r}", rule="shape")
    n = doc["n"]
    if not _is_int(n) or n < 1:
        raise InstanceValidationError(f"n must be an integer >= 1, got {n!r}", graph="n", rule="shape")
    forests = []
    for name in ("g1", "g2"):
        edges = doc[name]
        if not isinstance(edges, list):
            raise InstanceValidationError("edge list must be an array", graph=name, rule="shape")
        for i, e in enumerate(edges):
            if not (isinstance(e, list) and len(e) == 2 and all(map(_is_int, e))):
                raise InstanceValidationError(
                    f"edge #{i} must be an array of two integers, got {e!r}", graph=name, rule="shape"
                )
        try:
            forests.append(build_forest(n, edges))
        except ValidationError as exc:
            rule = type(exc).__name__
            raise InstanceValidationError(f"{rule}: {exc}", graph=name, rule=rule) from None
    return ForestPair(*forests)


def format_instance(pair: ForestPair) -> str:
    doc = {"n": pair.vertex_count, "g1": pair.g1.edges.tolist(), "g2": pair.g2.edges.tolist()}
    return json.dumps(doc, separators=(",", ":")) + "\n"


def solution_document(partition: VertexPartition, report: BalanceReport, root_strategy: str, seed) -> dict:
    return {
        "assignment": partition.tolist(),
        "report": report.to_dict(),
        "meta": {"root_strategy": root_strategy, "seed": seed, "tool_version": __version__},
    }


def format_solution(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"


def parse_assignment(text: str):
    """Read a solution document or a bare 0/1 array.

    Returns ``(partition, stated_report_or_None)``.
    """
    doc = _load_json(text)
    stated = None
    if isinstance(doc, dict):
        if "assignment" not in doc:
            raise InstanceValidationError("solution document has no 'assignment'", rule="shape")
        stated = doc.get("report")
        doc = doc["assignment"]
    if not isinstance(doc, list) or not all(_is_int(b) and b in (0, 1) for b in doc):
        raise InstanceValidationError("assignment must be an array of 0/1 integers", rule="shape")
    return VertexPartition(doc), stated


def check_solution(pair: ForestPair, text: str) -> tuple[BalanceReport, bool]:
    """Verify an assignment; the flag says whether a stated report matched."""
    partition, stated = parse_assignment(text)
    report = verify(pair, partition)
    return report, stated is None or stated == report.to_dict()


def emit_dot(pair: ForestPair, partition: VertexPartition) -> str:
    """Both forests as DOT clusters; part-1 vertices are filled."""
    if len(partition) != pair.vertex_count:
        raise ValidationError("partition length does not match the instance")
    lines = ["graph partition {", "  node [shape=circle];"]
    for idx, g in ((1, pair.g1), (2, pair.g2)):
        lines.append(f"  subgraph cluster_g{idx} {{")
        lines.append(f'    label="G{idx}";')
        for v, bit in enumerate(partition.tolist()):
            style = ' style=filled fillcolor="gray70"' if bit else ""
            lines.append(f'    g{idx}_{v} [label="{v}"{style}];')
        for u, v in g.edges.tolist():
            lines.append(f"    g{idx}_{u} -- g{idx}_{v};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
