from __future__ import annotations

import pytest

from c7planar.embedding import embed, euler_check, face_histogram
from c7planar.extremal import build_g0, expand_to_g, girth_at_least, verify_extremal
from c7planar.graph import Graph, GraphError, complete_graph, cycle_graph
from conftest import constructed, skeleton


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_skeleton_counts(k):
    emb = skeleton(k)
    g = emb.graph
    assert (g.order, g.size) == (9 * k + 5, 12 * k + 4)
    assert face_histogram(emb) == {8: 3 * k + 1}
    assert g.degree_histogram() == {2: 3 * k + 7, 3: 6 * k - 2}
    assert girth_at_least(g, 8)


def test_skeleton_requires_k_at_least_two():
    with pytest.raises(GraphError):
        build_g0(1)


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_expansion_counts_and_tightness(k):
    emb = constructed(k)
    n, e = emb.graph.order, emb.graph.size
    g0 = skeleton(k).graph
    assert n == g0.size + 3 * (6 * k - 2) + 4 * (3 * k + 7) == 42 * k + 26
    assert e == 12 * g0.order == 108 * k + 60
    assert 7 * e == 18 * n - 48
    assert n % 42 == 26
    assert euler_check(emb)


def test_expansion_gadget_roles():
    exp = expand_to_g(build_g0(2))
    g0 = skeleton(2).graph
    assert len(exp.midpoint) == g0.size
    assert len(exp.gadget) == g0.order
    mids = set(exp.midpoint.values())
    for v, verts in exp.gadget.items():
        new = [x for x in verts if x not in mids]
        assert len(new) == (3 if g0.degree(v) == 3 else 4)


def test_expansion_rejects_high_degree_skeleton():
    with pytest.raises(GraphError):
        expand_to_g(embed(Graph(6, [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)])))


def test_certificate_line(g2):
    cert = verify_extremal(g2)
    assert cert.all_ok and cert.residue == 26
    assert cert.to_line() == "n=110 e=276 tight=true planar=true c7_free=true k4_free=true"


def test_certificate_k4():
    cert = verify_extremal(complete_graph(4))
    assert (cert.c7_free, cert.k4_free, cert.tight) == (True, False, False)


def test_certificate_c7():
    assert not verify_extremal(cycle_graph(7)).c7_free


def test_certificate_nonplanar():
    assert not verify_extremal(complete_graph(5)).planar


def test_construction_outer_face_is_long(g2):
    assert g2.outer_face.length >= 8
