from __future__ import annotations

from fractions import Fraction

import pytest

from c7planar import corpus
from c7planar.audit import CASE1, CASE2, CASE3, dual_count_audit, final_inequality_check
from c7planar.embedding import face_histogram
from c7planar.transform import normalize
from conftest import constructed, normalize_runs


def _finding(rep, prefix):
    hits = [f for f in rep.findings if f.id.startswith(prefix)]
    assert hits, prefix
    return hits[0]


def test_construction_counts(g2):
    aud = dual_count_audit(g2)
    assert aud.passed and aud.case == CASE1
    hist = face_histogram(g2)
    assert aud.a == {i: c for i, c in hist.items() if i >= 8} == {9: 2, 10: 4, 11: 1}
    assert (aud.sum_a, aud.sum_ia) == (7, 69)
    assert aud.L == 23 == aud.t3_count
    assert (aud.v_hat, aud.e_hat) == (30, 56)
    assert (aud.k1, aud.k2) == (0, 0)


@pytest.mark.parametrize("k", [2, 3])
def test_construction_final_equality(k):
    emb = constructed(k)
    aud = dual_count_audit(emb)
    rep = final_inequality_check(emb, aud)
    assert rep.passed
    raw = _finding(rep, "raw 7e")
    assert raw.quantity == raw.bound
    audited = _finding(rep, "audited 7e")
    assert audited.quantity == audited.bound


def test_case2_instance():
    emb = corpus.single_long_face_instance()
    aud = dual_count_audit(emb)
    assert aud.passed and aud.case == CASE2
    assert (aud.k1, aud.k2, aud.f_k) == (8, 46, 25)
    assert aud.v_hat == 1 and aud.L == 0
    assert _finding(aud.report, "case2 f(G) bound as written").bound == Fraction(95, 3)
    rep = final_inequality_check(emb, aud)
    assert rep.passed
    chain = _finding(rep, "e(G) vs 18/7 lower - 48/7")
    # Informational in this case: the chain is open at k1 = 8.
    assert chain.passed is None and chain.quantity == 54 and chain.bound == Fraction(372, 7)


@pytest.mark.parametrize("inst", corpus.radial_corpus()[:4], ids=lambda i: i.name)
def test_case3_instances(inst):
    aud = dual_count_audit(inst.embedding)
    assert aud.passed and aud.case == CASE3 and aud.v_hat == 0
    assert any(f.id.startswith("case3 ") for f in aud.report.findings)


@pytest.mark.parametrize("inst", corpus.negative_controls(), ids=lambda i: i.name)
def test_negative_controls_inapplicable(inst):
    aud = dual_count_audit(inst.embedding, normalize_first=True)
    assert not aud.report.applicable and aud.report.reasons
    assert not final_inequality_check(inst.embedding, aud).applicable


def test_unnormalized_input_is_inapplicable():
    inst = corpus.uniform_expansions()[0]
    emb, records = normalize(inst.embedding)
    if records:
        assert not dual_count_audit(inst.embedding).report.applicable
    assert dual_count_audit(emb).report.applicable


def test_normalize_first_uses_implication():
    run = next(r for r in normalize_runs() if r.records)
    aud = dual_count_audit(run.initial, normalize_first=True)
    assert aud.normalized_copy and aud.passed
    rep = final_inequality_check(run.initial, aud)
    assert rep.passed and _finding(rep, "audited implies raw").passed


def test_identities_across_normalized_corpus():
    cases = set()
    for run in normalize_runs():
        aud = dual_count_audit(run.final)
        assert aud.report.applicable, run.name
        assert aud.passed, (run.name, aud.report.failures())
        assert aud.L.denominator == 1 and aud.L == aud.t3_count
        assert aud.e == 4 * aud.sum_ia - 3 * aud.k1 + aud.k2
        assert aud.f == Fraction(7, 3) * (aud.sum_ia - aud.k1) + aud.sum_a + aud.f_k
        assert final_inequality_check(run.final, aud).passed
        cases.add(aud.case)
    assert {CASE1, CASE3} <= cases
