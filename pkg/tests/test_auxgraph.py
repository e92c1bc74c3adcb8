import numpy as np
import pytest
from hypothesis import given, settings

from forestsplit import build_aux, build_forest, choose_roots, decompose, node_degree, tightness_example
from forestsplit.auxgraph import BipartiteMultigraph, aux_to_dot
from forestsplit.exceptions import NodeOutOfRange, VertexCountMismatch

from conftest import forest_pairs


def aux_of(pair):
    d1 = decompose(pair.g1, choose_roots(pair.g1))
    d2 = decompose(pair.g2, choose_roots(pair.g2))
    return d1, d2, build_aux(d1, d2)


def test_tight_pair_degrees():
    d1, d2, h = aux_of(tightness_example())
    assert h.edge_count == 5
    assert (h.left_count, h.right_count) == (5, 4)
    assert h.degrees("left").tolist() == [1, 1, 1, 1, 1]
    assert h.degrees("right").tolist() == [1, 2, 1, 1]
    assert d2.group_members(1) == (1, 4)
    assert node_degree(h, "right", 1) == 2
    assert node_degree(h, "left", 2) == 1
    assert h.incidence("right", 1).tolist() == [1, 4]


def test_identical_single_edge():
    pair = tightness_example().__class__.from_edges(2, [(0, 1)], [(0, 1)])
    _, _, h = aux_of(pair)
    assert h.left.tolist() == [0, 1] and h.right.tolist() == [0, 1]
    assert h.degrees("left").tolist() == [1, 1]


def test_single_vertex():
    pair = tightness_example().__class__.from_edges(1, [], [])
    _, _, h = aux_of(pair)
    assert h.edge_count == 1
    assert node_degree(h, "left", 0) == node_degree(h, "right", 0) == 1


def test_mismatched_decompositions():
    a = build_forest(2, [])
    b = build_forest(3, [])
    with pytest.raises(VertexCountMismatch):
        build_aux(decompose(a, [0, 1]), decompose(b, [0, 1, 2]))


def test_node_out_of_range():
    _, _, h = aux_of(tightness_example())
    with pytest.raises(NodeOutOfRange):
        node_degree(h, "right", 4)
    with pytest.raises(NodeOutOfRange):
        BipartiteMultigraph(1, 1, [0], [1])


def test_dot_names_groups_by_members():
    d1, d2, h = aux_of(tightness_example())
    text = aux_to_dot(h, d1, d2)
    assert 'R1 [label="{1,4}"]' in text
    assert text.count(" -- ") == 5


@settings(max_examples=200, deadline=None)
@given(forest_pairs(max_n=40))
def test_bijection_and_degrees(pair):
    d1, d2, h = aux_of(pair)
    n = pair.vertex_count
    assert h.labels.tolist() == list(range(n))
    for v in range(n):
        assert v in d1.group_members(h.left[v])
        assert v in d2.group_members(h.right[v])
    assert np.array_equal(h.degrees("left"), d1.group_sizes)
    assert np.array_equal(h.degrees("right"), d2.group_sizes)
    assert h.degrees("left").sum() == h.degrees("right").sum() == n
    assert h.degrees("left").min() >= 1 and h.degrees("right").min() >= 1
