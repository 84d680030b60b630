from __future__ import annotations

import pytest

from c7planar import corpus
from c7planar.blocks import analyze, hypothesis_violations
from c7planar.embedding import Embedding, euler_check, face_histogram
from c7planar.graph import find_cycle
from c7planar.transform import find_target
from conftest import hypothesis_corpus


def test_corpus_size():
    assert len(hypothesis_corpus()) >= 20


@pytest.mark.parametrize("inst", hypothesis_corpus(), ids=lambda i: i.name)
def test_corpus_meets_hypotheses(inst):
    emb = inst.embedding
    assert euler_check(emb)
    assert hypothesis_violations(emb) == []
    assert find_cycle(emb.graph, 7) is None


@pytest.mark.parametrize("inst", corpus.negative_controls(), ids=lambda i: i.name)
def test_negative_controls_violate_something(inst):
    assert hypothesis_violations(inst.embedding) != []


@pytest.mark.parametrize("name", sorted(corpus.GADGETS))
def test_gadget_is_a_plane_piece(name):
    gad = corpus.GADGETS[name]
    ids = {x: i for i, x in enumerate(gad.rotation)}
    emb = Embedding.__new__(Embedding)
    rot = [[ids[y] for y in gad.rotation[x]] for x in gad.rotation]
    from c7planar.graph import Graph, norm_edge

    g = Graph(len(ids), sorted({norm_edge(ids[x], ids[y]) for x in gad.rotation for y in gad.rotation[x]}))
    emb = Embedding(g, rot)
    assert euler_check(emb)
    # The boundary, walked backwards, is a face of the piece drawn alone.
    ring = [ids[x] for x in reversed(gad.boundary)]
    faces = [f.vertices for f in emb.faces]
    assert any(len(f) == len(ring) and set(f) == set(ring) for f in faces)
    assert set(gad.corners) <= set(gad.boundary)


def test_single_long_face_instance():
    emb = corpus.single_long_face_instance()
    assert (emb.graph.order, emb.graph.size) == (30, 54)
    assert face_histogram(emb) == {4: 25, 8: 1}
    assert hypothesis_violations(emb) == []
    assert find_target(emb) is None
    s = analyze(emb).summary
    assert (s.k1, s.k2, s.f_k) == (8, 46, 25)


def test_expansions_are_deterministic():
    a = corpus.expansion_corpus(count=3)
    b = corpus.expansion_corpus(count=3)
    assert [i.embedding for i in a] == [i.embedding for i in b]


def test_find_instance():
    assert corpus.find_instance("radial-cube").embedding.graph.order == 14
    with pytest.raises(KeyError):
        corpus.find_instance("missing", pool=[])
