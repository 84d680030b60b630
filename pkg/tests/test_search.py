from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from c7planar.embedding import test_planarity as planarity
from c7planar.graph import GraphError, find_cycle
from c7planar.search import (
    canonical_form,
    enumerate_classes,
    exhaustive_ex_p,
    triangulation_c7_scan,
)


@lru_cache(maxsize=None)
def atlas_by_order() -> dict[int, list[nx.Graph]]:
    out: dict[int, list[nx.Graph]] = {}
    for h in nx.graph_atlas_g():
        out.setdefault(h.number_of_nodes(), []).append(h)
    return out


def _atlas_planar(n: int) -> list[nx.Graph]:
    return [h for h in atlas_by_order()[n] if nx.check_planarity(h)[0]]


def _has_cycle(h: nx.Graph, k: int) -> bool:
    return any(len(c) == k for c in nx.simple_cycles(h, length_bound=k))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_class_counts_match_atlas(n):
    assert len(enumerate_classes(n)) == len(_atlas_planar(n))


def test_class_count_seven():
    assert len(enumerate_classes(7)) == len(_atlas_planar(7)) == 822


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_small_values_are_triangulation_counts(n):
    res = exhaustive_ex_p(n, 7)
    assert res.max_edges == 3 * n - 6


def test_seven_vertices_against_atlas():
    res = exhaustive_ex_p(7, 7)
    oracle = max(h.number_of_edges() for h in _atlas_planar(7) if not _has_cycle(h, 7))
    assert res.max_edges == oracle == 13
    w = res.witness
    assert planarity(w).planar and find_cycle(w, 7) is None and w.size == 13
    assert res.classes == sum(1 for h in _atlas_planar(7) if not _has_cycle(h, 7))


def test_other_cycle_lengths_against_atlas():
    for n, k in [(5, 4), (6, 5), (6, 4)]:
        oracle = max(h.number_of_edges() for h in _atlas_planar(n) if not _has_cycle(h, k))
        assert exhaustive_ex_p(n, k).max_edges == oracle


def test_monotone_in_n():
    vals = [exhaustive_ex_p(n, 7).max_edges for n in range(3, 8)]
    assert vals == sorted(vals)


def test_parallel_matches_serial():
    a, b = exhaustive_ex_p(6, 5, jobs=1), exhaustive_ex_p(6, 5, jobs=2)
    assert (a.max_edges, a.count_extremal, a.classes) == (b.max_edges, b.count_extremal, b.classes)
    assert a.witness == b.witness


def test_domain_errors():
    for n, k in [(2, 7), (9, 7), (5, 2)]:
        with pytest.raises(GraphError):
            exhaustive_ex_p(n, k)


def test_result_text():
    text = exhaustive_ex_p(6, 7).to_text()
    head = text.splitlines()[0]
    assert head.startswith("n=6 cycle=7 max_edges=12 ")
    assert text.splitlines()[1] == "6 12"


def test_triangulation_scan_seven():
    rep = triangulation_c7_scan(7)
    assert rep.passed
    assert [f.to_line() for f in rep.findings][-2:] == ["triangulations: 5 >= 1 pass", "containing: 5 == 5 pass"]


def test_triangulation_scan_octahedron_control():
    rep = triangulation_c7_scan(6)
    assert not rep.passed
    assert rep.findings[-1].to_line() == "containing: 0 == 2 FAIL"


@st.composite
def small_masks(draw):
    n = draw(st.integers(1, 7))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = set(draw(st.lists(st.sampled_from(pairs), unique=True))) if pairs else set()
    perm = draw(st.permutations(range(n)))
    def masks(relabel):
        m = [0] * n
        for u, v in chosen:
            a, b = relabel[u], relabel[v]
            m[a] |= 1 << b
            m[b] |= 1 << a
        return tuple(m)
    return masks(list(range(n))), masks(perm)


@given(small_masks())
def test_canonical_form_is_invariant(pair):
    a, b = pair
    assert canonical_form(a) == canonical_form(b)


def test_canonical_form_separates():
    path = (0b10, 0b101, 0b10)
    tri = (0b110, 0b101, 0b011)
    assert canonical_form(path) != canonical_form(tri)
