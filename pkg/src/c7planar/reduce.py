"""Peeling reduction, per-block lower bounds and the global bound check.

Peeling deletes a vertex of degree at most 2, or an adjacent pair whose
degrees sum to at most 6, until neither applies.  Each step removes
``v_d`` vertices and ``e_d`` edges with ``18 v_d - 7 e_d >= v_d / 2``, so
the quantity ``18 n - 7 e`` can only drop by the accounted amount.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .embedding import test_planarity
from .graph import Graph, GraphError, biconnected_blocks, block_vertex_count, find_cycle
from .report import Finding, Report

DELETE_LOW_DEGREE = "DELETE_LOW_DEGREE"
DELETE_LIGHT_PAIR = "DELETE_LIGHT_PAIR"

# Minimum of 18 n - 7 e - 18 over blocks on a given number of vertices;
# key 8 stands for 8 or more.
BLOCK_BOUND_TABLE: dict[int, int] = {8: 30, 7: 10, 6: 6, 5: 9, 4: 12, 3: 15, 2: 11}
THEOREM_MIN_ORDER = 60
THEOREM_CONSTANT = 48


@dataclass(frozen=True)
class PeelStep:
    op: str
    vertices: tuple[int, ...]
    v_d: int
    e_d: int

    @property
    def gain(self) -> int:
        """18 v_d - 7 e_d."""
        return 18 * self.v_d - 7 * self.e_d

    @property
    def ok(self) -> bool:
        return Fraction(self.gain) >= Fraction(self.v_d, 2)

    def to_line(self) -> str:
        return f"{self.op} {self.v_d} {self.e_d}"


@dataclass
class PeelTrace:
    """Steps of one peeling run.  ``vertices`` in each step are ids of the
    input graph; ``survivors`` maps final ids back to input ids."""

    initial: Graph
    steps: list[PeelStep] = field(default_factory=list)
    final_graph: Graph = field(default_factory=lambda: Graph(0))
    survivors: tuple[int, ...] = ()

    @property
    def all_steps_ok(self) -> bool:
        return all(s.ok for s in self.steps)

    def aggregate_ok(self) -> bool:
        """18 n - 7 e >= 18 n' - 7 e' + (n - n') / 2."""
        n, e = self.initial.order, self.initial.size
        n2, e2 = self.final_graph.order, self.final_graph.size
        return Fraction(18 * n - 7 * e) >= Fraction(18 * n2 - 7 * e2) + Fraction(n - n2, 2)

    def to_text(self) -> str:
        lines = [s.to_line() for s in self.steps]
        return "\n".join(lines + ["# final graph", self.final_graph.to_edge_list().rstrip("\n")]) + "\n"


def _eligible(g: Graph) -> Optional[tuple[str, tuple[int, ...]]]:
    for v in range(g.order):
        if g.degree(v) <= 2:
            return DELETE_LOW_DEGREE, (v,)
    for u, v in g.edges:
        if g.degree(u) + g.degree(v) <= 6:
            return DELETE_LIGHT_PAIR, (u, v)
    return None


def peel(g: Graph) -> PeelTrace:
    """Delete light vertices and pairs, lowest ids first, until none is left."""
    trace = PeelTrace(initial=g)
    ids = list(range(g.order))
    cur = g
    while True:
        pick = _eligible(cur)
        if pick is None:
            break
        op, vs = pick
        before = cur.size
        nxt, idmap = cur.delete_vertices(vs)
        step = PeelStep(op, tuple(ids[v] for v in vs), len(vs), before - nxt.size)
        if not step.ok:
            raise AssertionError(f"peel step violates 18 v_d - 7 e_d >= v_d/2: {step}")
        trace.steps.append(step)
        ids = [ids[old] for old in sorted(idmap, key=idmap.get)]
        cur = nxt
    trace.final_graph = cur
    trace.survivors = tuple(ids)
    return trace


def block_size_counts(g: Graph) -> dict[int, int]:
    """``b_2 .. b_8`` (key 8 counts blocks on 8 or more vertices)."""
    counts = {s: 0 for s in BLOCK_BOUND_TABLE}
    for blk in biconnected_blocks(g):
        counts[min(block_vertex_count(blk), 8)] += 1
    return counts


def block_lower_bound(g: Graph) -> int:
    """Table-weighted lower bound for 18 n - 7 e.

    Uses ``18 n - 7 e = sum over blocks of (18 n_B - 7 e_B - 18) + 18 c``
    for a graph with ``c`` components.
    """
    if g.order == 0:
        raise GraphError("block_lower_bound needs a nonempty graph")
    counts = block_size_counts(g)
    return sum(BLOCK_BOUND_TABLE[s] * c for s, c in counts.items()) + 18 * len(g.components())


def theorem_bound_check(g: Graph, cycle: int = 7) -> Report:
    """18 n - 7 e against 48 for planar C7-free graphs on at least 60 vertices.

    A value below 48 on an eligible graph is a counterexample alarm; the
    report then carries the graph in edge-list form.
    """
    rep = Report("theorem-bound")
    value = 18 * g.order - 7 * g.size
    reasons = []
    if g.order < THEOREM_MIN_ORDER:
        reasons.append(f"order<{THEOREM_MIN_ORDER}")
    if not test_planarity(g).planar:
        reasons.append("nonplanar")
    if find_cycle(g, cycle) is not None:
        reasons.append(f"contains-C{cycle}")
    if reasons:
        rep.add(Finding("18n-7e", value, THEOREM_CONSTANT, None, cmp=">="))
        return rep.inapplicable(reasons)
    ok = value >= THEOREM_CONSTANT
    rep.add(Finding("18n-7e", value, THEOREM_CONSTANT, ok, cmp=">="))
    if not ok:
        rep.artifacts.append("# COUNTEREXAMPLE ALARM\n" + g.to_edge_list())
    return rep
