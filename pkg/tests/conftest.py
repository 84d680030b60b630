from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from c7planar import corpus
from c7planar.embedding import Embedding
from c7planar.extremal import build_g0, construct
from c7planar.transform import LedgerRecord, apply_replacement, find_target

settings.register_profile(
    "repo", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")


@lru_cache(maxsize=None)
def constructed(k: int) -> Embedding:
    return construct(k)


@lru_cache(maxsize=None)
def skeleton(k: int) -> Embedding:
    return build_g0(k).embedding


@dataclass
class NormalizeRun:
    name: str
    initial: Embedding
    steps: list[tuple[LedgerRecord, Embedding]]

    @property
    def final(self) -> Embedding:
        return self.steps[-1][1] if self.steps else self.initial

    @property
    def records(self) -> list[LedgerRecord]:
        return [r for r, _ in self.steps]


def run_steps(name: str, emb: Embedding) -> NormalizeRun:
    """Normalization one replacement at a time, keeping every intermediate."""
    steps = []
    cur = emb
    while (tgt := find_target(cur)) is not None:
        assert len(steps) <= emb.graph.size, "normalization does not terminate"
        cur, rec = apply_replacement(cur, tgt)
        steps.append((rec, cur))
    return NormalizeRun(name, emb, steps)


@lru_cache(maxsize=None)
def hypothesis_corpus() -> tuple[corpus.Instance, ...]:
    """Embeddings meeting the standing hypotheses."""
    return tuple(corpus.expansion_corpus() + corpus.uniform_expansions() + corpus.radial_corpus())


@lru_cache(maxsize=None)
def normalize_runs() -> tuple[NormalizeRun, ...]:
    return tuple(run_steps(i.name, i.embedding) for i in hypothesis_corpus())


@pytest.fixture(scope="session")
def g2() -> Embedding:
    return constructed(2)


# Verdict lines from test_acceptance.py, shown after the run.
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
