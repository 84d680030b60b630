from __future__ import annotations

from builders import t3_graph, t3_with_long_face
from c7planar import corpus
from c7planar.blocks import analyze
from c7planar.dual import FACE, SMALL_SET, T3, DualGraph, DualNode, build_dual, reduce_dual
from c7planar.graph import GraphError
from conftest import constructed

import pytest


def test_single_t3_dual():
    d = build_dual(t3_graph())
    assert [n.kind for n in d.nodes] == [T3, FACE]
    assert d.edges == ((0, 1),) * 3


def test_construction_dual_is_bipartite(g2):
    d = build_dual(g2)
    kinds = [n.kind for n in d.nodes]
    assert kinds.count(T3) == 23
    assert all(n.length >= 8 for n in d.nodes if n.kind == FACE)
    assert d.is_bipartite()
    hat = reduce_dual(d)
    long_faces = sum(1 for f in g2.faces if f.length >= 8)
    assert len(hat.edges) >= 8 * long_faces - analyze(g2).summary.k1
    assert not hat.has_parallel_edges() and hat.is_bipartite()
    # One collapsed parallel edge per unit of excess face length.
    assert hat.removed_parallel == sum(f.length - 8 for f in g2.faces if f.length >= 8)


def test_reduce_collapses_one_parallel_pair():
    emb = t3_with_long_face(7)
    d = build_dual(emb)
    assert any(n.kind == SMALL_SET for n in d.nodes)
    t3 = next(i for i, n in enumerate(d.nodes) if n.kind == T3)
    nine = next(i for i, n in enumerate(d.nodes) if n.kind == FACE and n.length == 9)
    assert d.multiplicities()[(min(t3, nine), max(t3, nine))] == 2
    hat = reduce_dual(d)
    assert sorted(n.kind for n in hat.nodes) == [FACE, FACE, T3]
    assert all(c == 1 for c in hat.multiplicities().values())
    # The seven path edges between the two long faces collapse as well.
    assert hat.removed_parallel == 1 + 6
    assert not hat.is_bipartite()


def test_reduce_simple_dual_unchanged():
    nodes = (DualNode(T3, 0), DualNode(FACE, 1, 8), DualNode(FACE, 2, 9))
    d = DualGraph(nodes, ((0, 1), (0, 2)))
    hat = reduce_dual(d)
    assert hat.nodes == d.nodes and hat.edges == d.edges and hat.removed_parallel == 0


def test_reduce_drops_small_sets_and_short_faces():
    nodes = (DualNode(T3, 0), DualNode(SMALL_SET, 0), DualNode(FACE, 1, 4), DualNode(FACE, 2, 8))
    hat = reduce_dual(DualGraph(nodes, ((0, 1), (0, 2), (0, 3), (0, 3))))
    assert [n.kind for n in hat.nodes] == [T3, FACE] and hat.edges == ((0, 1),)


def test_no_long_faces_no_t3():
    emb = corpus.radial_corpus()[0].embedding
    d = build_dual(emb)
    assert all(n.kind in (SMALL_SET, FACE) for n in d.nodes)
    assert reduce_dual(d).nodes == ()


def test_build_dual_rejects_foreign_analysis(g2):
    with pytest.raises(GraphError):
        build_dual(constructed(3), analyze(g2))


def test_dot_export_labels_face_lengths():
    dot = build_dual(t3_graph()).to_dot()
    assert dot.startswith("graph dual {") and "t30" in dot and "face1" in dot
