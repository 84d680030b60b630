"""Exhaustive small-graph search for planar Turan numbers.

Graphs are grown one vertex at a time: each isomorphism class on ``m``
vertices is extended by a new vertex joined to every possible neighbour
subset, and the results are deduplicated by canonical form.  Planarity
and C_k-freeness are both closed under vertex deletion, so every graph in
the family on ``m + 1`` vertices arises from one on ``m`` vertices.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .embedding import test_planarity
from .graph import Graph, GraphError, find_cycle
from .report import Finding, Report

MIN_N, MAX_N = 3, 8

# Graph on vertices 0..m-1 as a tuple of neighbour bitmasks.
Masks = tuple[int, ...]


def _to_graph(masks: Masks) -> Graph:
    n = len(masks)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1])


def _edge_count(masks: Masks) -> int:
    return sum(bin(m).count("1") for m in masks) // 2


def _refine(masks: Masks) -> list[int]:
    """Stable colouring by iterated neighbour-colour multisets."""
    n = len(masks)
    colors = [bin(m).count("1") for m in masks]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in range(n) if masks[v] >> w & 1)))
            for v in range(n)
        ]
        ranking = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [ranking[k] for k in keys]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(masks: Masks) -> tuple[int, int]:
    """Isomorphism invariant that separates non-isomorphic graphs.

    The best upper-triangle bit code over all orderings that respect the
    refined colour classes, paired with the vertex count.
    """
    n = len(masks)
    colors = _refine(masks)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    best = -1
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for p in parts for v in p]
        code = 0
        for i in range(n):
            mi = masks[order[i]]
            for j in range(i + 1, n):
                code = (code << 1) | (mi >> order[j] & 1)
        if code > best:
            best = code
    return n, best


def _admissible(masks: Masks, k: Optional[int]) -> bool:
    n = len(masks)
    e = _edge_count(masks)
    if n >= 3 and e > 3 * n - 6:
        return False
    g = _to_graph(masks)
    if k is not None and n >= k and find_cycle(g, k) is not None:
        return False
    return test_planarity(g).planar


def _extend(args: tuple[Masks, Optional[int]]) -> dict[tuple[int, int], Masks]:
    masks, k = args
    m = len(masks)
    out: dict[tuple[int, int], Masks] = {}
    for sub in range(1 << m):
        new = tuple(mk | ((sub >> v & 1) << m) for v, mk in enumerate(masks)) + (sub,)
        if not _admissible(new, k):
            continue
        key = canonical_form(new)
        if key not in out:
            out[key] = new
    return out


def enumerate_classes(n: int, k: Optional[int] = None, jobs: int = 1) -> list[Masks]:
    """One representative per isomorphism class of planar graphs on ``n``
    vertices, C_k-free when ``k`` is given, in canonical-key order."""
    level: dict[tuple[int, int], Masks] = {canonical_form((0,)): (0,)}
    for _ in range(1, n):
        parents = [(p, k) for p in level.values()]
        nxt: dict[tuple[int, int], Masks] = {}
        if jobs > 1 and len(parents) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_extend, parents, chunksize=max(1, len(parents) // (4 * jobs))))
        else:
            parts = [_extend(p) for p in parents]
        for part in parts:
            for key, g in part.items():
                nxt.setdefault(key, g)
        level = nxt
    return [level[key] for key in sorted(level)]


@dataclass(frozen=True)
class SearchResult:
    n: int
    k: int
    max_edges: int
    witness: Graph
    count_extremal: int
    classes: int

    def to_text(self) -> str:
        return (
            f"n={self.n} cycle={self.k} max_edges={self.max_edges} "
            f"count_extremal={self.count_extremal} classes={self.classes}\n" + self.witness.to_edge_list()
        )


def exhaustive_ex_p(n: int, k: int, jobs: int = 1) -> SearchResult:
    """Maximum edge count of a C_k-free planar graph on ``n`` vertices."""
    if not MIN_N <= n <= MAX_N:
        raise GraphError(f"exhaustive search supports {MIN_N} <= n <= {MAX_N}")
    if k < 3:
        raise GraphError("cycle length must be at least 3")
    reps = enumerate_classes(n, k, jobs)
    counts = [_edge_count(r) for r in reps]
    best = max(counts)
    extremal = [r for r, c in zip(reps, counts) if c == best]
    return SearchResult(n, k, best, _to_graph(extremal[0]), len(extremal), len(reps))


def triangulation_c7_scan(n: int = 7, k: int = 7) -> Report:
    """Check that every planar triangulation on ``n`` vertices has a C_k."""
    rep = Report(f"triangulation-C{k}-scan")
    if not MIN_N <= n <= MAX_N:
        raise GraphError(f"scan supports {MIN_N} <= n <= {MAX_N}")
    tris = [r for r in enumerate_classes(n) if _edge_count(r) == 3 * n - 6]
    hits = 0
    for i, r in enumerate(tris):
        cyc = find_cycle(_to_graph(r), k)
        hits += cyc is not None
        rep.add(Finding(f"triangulation {i} has C{k}", int(cyc is not None), 1, cyc is not None, cmp="=="))
    rep.add(Finding("triangulations", len(tris), 1, len(tris) >= 1, cmp=">="))
    rep.add(Finding("containing", hits, len(tris), hits == len(tris), cmp="=="))
    return rep
