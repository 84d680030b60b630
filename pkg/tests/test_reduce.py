from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from c7planar import corpus
from c7planar.graph import Graph, GraphError, complete_graph, cycle_graph
from c7planar.reduce import (
    BLOCK_BOUND_TABLE,
    DELETE_LIGHT_PAIR,
    DELETE_LOW_DEGREE,
    PeelStep,
    block_lower_bound,
    block_size_counts,
    peel,
    theorem_bound_check,
)
from c7planar.search import exhaustive_ex_p
from conftest import constructed


@st.composite
def sparse_graphs(draw, max_n: int = 40):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    m = draw(st.integers(0, min(len(pairs), 3 * n)))
    idx = draw(st.lists(st.integers(0, max(len(pairs) - 1, 0)), min_size=m, max_size=m, unique=True)) if pairs else []
    return Graph(n, [pairs[i] for i in idx])


def test_k4_trace():
    trace = peel(complete_graph(4))
    assert trace.to_text() == "DELETE_LIGHT_PAIR 2 5\nDELETE_LOW_DEGREE 1 1\nDELETE_LOW_DEGREE 1 0\n# final graph\n0 0\n"
    assert trace.all_steps_ok and trace.aggregate_ok()


def test_construction_does_not_peel(g2):
    trace = peel(g2.graph)
    assert trace.steps == [] and trace.final_graph == g2.graph


def test_peel_tie_breaking_and_ids():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)])
    trace = peel(g)
    assert trace.steps[0] == PeelStep(DELETE_LOW_DEGREE, (1,), 1, 2)
    assert all(v in range(5) for s in trace.steps for v in s.vertices)


def test_step_accounting():
    assert PeelStep(DELETE_LOW_DEGREE, (0,), 1, 2).gain == 4
    assert PeelStep(DELETE_LIGHT_PAIR, (0, 1), 2, 5).gain == 1
    assert PeelStep(DELETE_LIGHT_PAIR, (0, 1), 2, 5).ok
    assert not PeelStep(DELETE_LIGHT_PAIR, (0, 1), 2, 6).ok


@settings(max_examples=150)
@given(sparse_graphs())
def test_peel_invariants(g):
    trace = peel(g)
    assert trace.all_steps_ok and trace.aggregate_ok()
    fin = trace.final_graph
    for v in range(fin.order):
        assert fin.degree(v) >= 3
    for u, v in fin.edges:
        assert fin.degree(u) + fin.degree(v) >= 7
    assert sorted(set(trace.survivors)) == list(trace.survivors)
    assert fin.order + sum(s.v_d for s in trace.steps) == g.order


def test_block_counts_and_bound():
    tri_pendant = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert block_size_counts(tri_pendant)[3] == 1 and block_size_counts(tri_pendant)[2] == 1
    assert block_lower_bound(tri_pendant) == 15 + 11 + 18
    assert block_lower_bound(complete_graph(4)) == 12 + 18
    with pytest.raises(GraphError):
        block_lower_bound(Graph(0))


def test_block_bound_on_construction(g2):
    assert block_lower_bound(g2.graph) == 48 == 18 * 110 - 7 * 276


def test_block_table_against_search_oracle():
    # 18 s - 7 e - 18 is smallest at the densest C7-free planar graph on s vertices.
    for s in range(3, 8):
        ex = exhaustive_ex_p(s, 7).max_edges
        assert BLOCK_BOUND_TABLE[s] <= 18 * s - 7 * ex - 18
        if s <= 6:
            assert BLOCK_BOUND_TABLE[s] == 18 * s - 7 * ex - 18
    assert BLOCK_BOUND_TABLE[2] == 18 * 2 - 7 - 18


@pytest.mark.parametrize("inst", corpus.radial_corpus()[:4] + corpus.uniform_expansions()[:3], ids=lambda i: i.name)
def test_block_bound_below_actual(inst):
    g = inst.embedding.graph
    assert block_lower_bound(g) <= 18 * g.order - 7 * g.size


def test_theorem_bound_construction(g2):
    rep = theorem_bound_check(g2.graph)
    assert rep.passed and rep.findings[0].to_line() == "18n-7e: 48 >= 48 pass"
    assert rep.artifacts == []


def test_theorem_bound_inapplicable_cases():
    k4 = theorem_bound_check(complete_graph(4))
    assert not k4.applicable and k4.reasons == ["order<60"] and k4.findings[0].quantity == 30
    c7 = theorem_bound_check(cycle_graph(7))
    assert "contains-C7" in c7.reasons


def test_theorem_bound_alarm_path():
    # A dense planar graph with a 7-cycle is excluded; the alarm only fires on
    # eligible graphs, and there the theorem predicts silence.
    for k in (2, 3):
        g = constructed(k).graph
        rep = theorem_bound_check(g)
        assert rep.applicable and rep.passed and not rep.artifacts
