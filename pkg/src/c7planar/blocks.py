"""Triangular blocks of an embedded graph and the counting audits over them.

A triangular block is grown from an edge by repeatedly absorbing every
bounded 3-face through one of its edges and every edge of an absorbed
face.  The designated outer face is never absorbed, even when it is a
triangle; it always counts as an exterior face.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .catalog import match_shape
from .embedding import Embedding, Face, SevenFaceError
from .graph import Edge, Graph, GraphError, find_cycle, norm_edge, validate_preconditions
from .report import Finding, Report

EIGHT = 8
ONE_EIGHTH = Fraction(1, 8)
SMALL_BD = Fraction(41, 72)
SMALL_INT = Fraction(11, 18)
NO8_RATIO = Fraction(9, 16)
MAX_LARGE_PATH = 5


class PreconditionViolation(GraphError):
    """An operation was applied outside its mathematical domain."""


# ---------------------------------------------------------------------------
# Blocks


@dataclass(frozen=True)
class TriangularBlock:
    id: int
    edges: tuple[Edge, ...]
    faces: tuple[int, ...]
    face_triangles: tuple[tuple[int, int, int], ...]
    boundary_edges: tuple[Edge, ...]
    boundary_cycle: Optional[tuple[int, ...]]
    vertices: tuple[int, ...]
    exterior_faces: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def boundary_cycle_length(self) -> Optional[int]:
        return len(self.boundary_cycle) if self.boundary_cycle is not None else None

    @property
    def interior_vertices(self) -> tuple[int, ...]:
        bd = {v for e in self.boundary_edges for v in e}
        return tuple(v for v in self.vertices if v not in bd)


def boundary_cycle_of(edges: Iterable[Edge], triangles: Iterable[Sequence[int]]) -> Optional[tuple[int, ...]]:
    """Boundary of an (edges, faces) structure when it is one simple cycle.

    An edge is on the boundary unless two member faces contain it.  The
    boundary is a single cycle when every boundary edge lies in exactly one
    member face and the boundary edges form a connected 2-regular graph.
    The cycle is returned from its smallest vertex, towards its smaller
    neighbour.
    """
    count: dict[Edge, int] = {norm_edge(*e): 0 for e in edges}
    for t in triangles:
        for i in range(3):
            count[norm_edge(t[i], t[(i + 1) % 3])] += 1
    bd = [e for e, c in count.items() if c < 2]
    if not bd or any(count[e] != 1 for e in bd):
        return None
    return _single_cycle(bd)


def _single_cycle(edges: Sequence[Edge]) -> Optional[tuple[int, ...]]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(len(a) != 2 for a in adj.values()):
        return None
    start = min(adj)
    cycle = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        cycle.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return tuple(cycle) if len(cycle) == len(adj) else None


def bounded_triangles(emb: Embedding) -> list[Face]:
    return [f for f in emb.faces if f.length == 3 and f.id != emb.outer_face_id]


def partition_blocks(emb: Embedding) -> list[TriangularBlock]:
    """Triangular blocks in order of their smallest edge."""
    edges = emb.graph.edges
    parent = {e: e for e in edges}

    def find(e: Edge) -> Edge:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    tri = bounded_triangles(emb)
    for f in tri:
        es = f.edges()
        for e in es[1:]:
            a, b = find(es[0]), find(e)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[Edge, list[Edge]] = {}
    for e in edges:
        groups.setdefault(find(e), []).append(e)
    faces_of: dict[Edge, list[Face]] = {}
    for f in tri:
        faces_of.setdefault(find(f.edges()[0]), []).append(f)
    out = []
    for root in sorted(groups, key=lambda r: groups[r][0]):
        out.append(_make_block(emb, len(out), groups[root], faces_of.get(root, [])))
    return out


def _make_block(emb: Embedding, bid: int, edges: list[Edge], faces: list[Face]) -> TriangularBlock:
    fids = {f.id for f in faces}
    bd = []
    ext = set()
    for u, v in edges:
        a, b = emb.edge_faces(u, v)
        outside = [x for x in (a, b) if x not in fids]
        if outside:
            bd.append((u, v))
            ext.update(outside)
    triangles = tuple(tuple(sorted(f.vertices)) for f in faces)
    return TriangularBlock(
        id=bid,
        edges=tuple(sorted(edges)),
        faces=tuple(sorted(fids)),
        face_triangles=tuple(sorted(triangles)),
        boundary_edges=tuple(sorted(bd)),
        boundary_cycle=boundary_cycle_of(edges, triangles),
        vertices=tuple(sorted({v for e in edges for v in e})),
        exterior_faces=tuple(sorted(ext)),
    )


def grow_block(emb: Embedding, seed: Edge) -> tuple[frozenset[Edge], frozenset[int]]:
    """Grow one block from ``seed`` by direct closure (independent of the partition)."""
    seed = norm_edge(*seed)
    tri_ids = {f.id for f in bounded_triangles(emb)}
    E = {seed}
    F: set[int] = set()
    frontier = [seed]
    while frontier:
        u, v = frontier.pop()
        for d in ((u, v), (v, u)):
            fid = emb.face_id_of(d)
            if fid in tri_ids and fid not in F:
                F.add(fid)
                for e in emb.faces[fid].edges():
                    if e not in E:
                        E.add(e)
                        frontier.append(e)
    return frozenset(E), frozenset(F)


# ---------------------------------------------------------------------------
# Large-block predicate and classification


def _path_lengths(adj: dict[int, set[int]], u: int, limit: int) -> dict[int, set[int]]:
    """Lengths of simple paths from ``u`` (at most ``limit`` edges) to each vertex."""
    found: dict[int, set[int]] = {}
    path = {u}

    def rec(x: int, depth: int) -> None:
        for w in adj[x]:
            if w in path:
                continue
            found.setdefault(w, set()).add(depth + 1)
            if depth + 1 < limit:
                path.add(w)
                rec(w, depth + 1)
                path.discard(w)

    rec(u, 0)
    return found


def is_large(b: TriangularBlock) -> bool:
    """Boundary is one cycle and any two boundary vertices are joined
    inside the block by paths of every length 1..5.

    Then an outside path of length 2..6 between them would close a
    7-cycle, so the block can only border faces of length at least 8.
    """
    if b.boundary_cycle is None:
        return False
    adj: dict[int, set[int]] = {v: set() for v in b.vertices}
    for u, v in b.edges:
        adj[u].add(v)
        adj[v].add(u)
    need = set(range(1, MAX_LARGE_PATH + 1))
    cyc = sorted(b.boundary_cycle)
    for i, u in enumerate(cyc):
        lengths = _path_lengths(adj, u, MAX_LARGE_PATH)
        for v in cyc[i + 1:]:
            if not need <= lengths.get(v, set()):
                return False
    return True


def classify(b: TriangularBlock, emb: Optional[Embedding] = None) -> str:
    """Catalog label, or LARGE / OTHER for unmatched blocks."""
    label = match_shape(b.vertices, b.edges, b.face_triangles)
    if label is not None:
        return label
    return "LARGE" if is_large(b) else "OTHER"


def is_t3(b: TriangularBlock) -> bool:
    return b.vertex_count == 6 and len(b.edges) == 12 and len(b.faces) == 7 and classify(b) == "T3"


# ---------------------------------------------------------------------------
# Weights


@dataclass(frozen=True)
class BlockMetrics:
    e_boundary_8plus: int
    e_internal: int
    f_b: Fraction


def f_star(emb: Embedding, edge: Edge) -> Fraction:
    """max(1/l1, 1/8) + max(1/l2, 1/8) over the two faces at ``edge``."""
    u, v = edge
    a, b = emb.edge_faces(u, v)
    if a == b:
        raise PreconditionViolation(f"edge {norm_edge(u, v)} borders the same face on both sides")
    return sum(
        (Fraction(1, min(emb.faces[x].length, EIGHT)) for x in (a, b)), Fraction(0)
    )


def touches_8plus(emb: Embedding, edge: Edge) -> bool:
    a, b = emb.edge_faces(*edge)
    return emb.faces[a].length >= EIGHT or emb.faces[b].length >= EIGHT


def block_metrics(b: TriangularBlock, emb: Embedding) -> BlockMetrics:
    bd = sum(1 for e in b.edges if touches_8plus(emb, e))
    return BlockMetrics(bd, len(b.edges) - bd, sum((f_star(emb, e) for e in b.edges), Fraction(0)))


# ---------------------------------------------------------------------------
# Small block sets


@dataclass(frozen=True)
class SmallBlockSet:
    blocks: tuple[int, ...]
    captured_faces: tuple[int, ...]
    interior_face_count: int
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    boundary_cycle: Optional[tuple[int, ...]]

    @property
    def region_faces(self) -> set[int]:
        return set(self.captured_faces)


@dataclass(frozen=True)
class SmallBlockSummary:
    k1: int
    k2: int
    f_k: int


@dataclass
class BlockAnalysis:
    """Partition, labels, large flags and small block sets of one embedding."""

    emb: Embedding
    blocks: list[TriangularBlock]
    labels: list[str]
    large: list[bool]
    sets: list[SmallBlockSet]
    summary: SmallBlockSummary
    block_of_edge: dict[Edge, int] = field(repr=False)
    set_of_block: dict[int, int] = field(repr=False)
    large_on_small_faces: list[tuple[int, int]] = field(default_factory=list)

    def small_blocks(self) -> list[TriangularBlock]:
        return [b for b, lg in zip(self.blocks, self.large) if not lg]

    def t3_blocks(self) -> list[TriangularBlock]:
        return [b for b, lab in zip(self.blocks, self.labels) if lab == "T3"]


def analyze(emb: Embedding, blocks: Optional[list[TriangularBlock]] = None) -> BlockAnalysis:
    blocks = partition_blocks(emb) if blocks is None else blocks
    labels = [classify(b) for b in blocks]
    large = [is_large(b) for b in blocks]
    sets, summary, set_of, bad = small_block_sets(emb, blocks, large)
    block_of_edge = {e: b.id for b in blocks for e in b.edges}
    return BlockAnalysis(emb, blocks, labels, large, sets, summary, block_of_edge, set_of, bad)


def small_block_sets(
    emb: Embedding,
    blocks: list[TriangularBlock],
    large: Optional[list[bool]] = None,
):
    """Close small blocks over their exterior faces of length below 7.

    Returns ``(sets, summary, set_of_block, large_on_small_faces)``.  The
    last item lists ``(block id, face id)`` pairs where a large block
    borders a face shorter than 7; such blocks are not pulled into sets.
    A 7-face bounded by a cycle raises :class:`SevenFaceError`.
    """
    if large is None:
        large = [is_large(b) for b in blocks]
    block_of_edge = {e: b.id for b in blocks for e in b.edges}
    face_blocks: dict[int, set[int]] = {}
    for b in blocks:
        for e in b.edges:
            for fid in emb.edge_faces(*e):
                face_blocks.setdefault(fid, set()).add(b.id)
    set_of: dict[int, int] = {}
    sets: list[SmallBlockSet] = []
    bad: set[tuple[int, int]] = set()
    for seed in blocks:
        if large[seed.id] or seed.id in set_of:
            continue
        members = {seed.id}
        captured: set[int] = set()
        frontier = [seed.id]
        while frontier:
            b = blocks[frontier.pop()]
            for fid in b.exterior_faces:
                face = emb.faces[fid]
                if face.length == 7 and face.is_cycle():
                    raise SevenFaceError(face)
                if face.length >= 7 or fid in captured:
                    continue
                captured.add(fid)
                for other in sorted(face_blocks[fid]):
                    if large[other]:
                        bad.add((other, fid))
                    elif other not in members:
                        members.add(other)
                        frontier.append(other)
        sid = len(sets)
        for m in members:
            set_of[m] = sid
        mem = sorted(members)
        edges = sorted(e for m in mem for e in blocks[m].edges)
        own_faces = sum(len(blocks[m].faces) for m in mem)
        tris = [t for m in mem for t in blocks[m].face_triangles]
        sets.append(
            SmallBlockSet(
                blocks=tuple(mem),
                captured_faces=tuple(sorted(captured)),
                interior_face_count=own_faces + len(captured),
                vertices=tuple(sorted({v for e in edges for v in e})),
                edges=tuple(edges),
                boundary_cycle=_region_cycle(emb, edges, {f for m in mem for f in blocks[m].faces} | captured),
            )
        )
    k1 = k2 = 0
    for b in blocks:
        if not large[b.id]:
            m = block_metrics_counts(b, emb)
            k1 += m[0]
            k2 += m[1]
    summary = SmallBlockSummary(k1, k2, sum(s.interior_face_count for s in sets))
    return sets, summary, set_of, sorted(bad)


def block_metrics_counts(b: TriangularBlock, emb: Embedding) -> tuple[int, int]:
    bd = sum(1 for e in b.edges if touches_8plus(emb, e))
    return bd, len(b.edges) - bd


def _region_cycle(emb: Embedding, edges: Sequence[Edge], region: set[int]) -> Optional[tuple[int, ...]]:
    """Boundary of a union of faces when it is one simple cycle."""
    bd = []
    for u, v in edges:
        a, b = emb.edge_faces(u, v)
        inside = (a in region) + (b in region)
        if inside == 1:
            bd.append((u, v))
        elif inside == 0:
            return None
    return _single_cycle(bd) if bd else None


def region_ccw_cycle(emb: Embedding, region: set[int], edges: Iterable[Edge]) -> Optional[list[int]]:
    """Boundary of a face region as a vertex cycle with the region on the left.

    Starts from the smallest vertex.  ``None`` when the boundary is not a
    single simple cycle.
    """
    succ: dict[int, int] = {}
    for u, v in edges:
        for d in ((u, v), (v, u)):
            if emb.face_id_of(d) in region and emb.face_id_of((d[1], d[0])) not in region:
                if d[0] in succ:
                    return None
                succ[d[0]] = d[1]
    if not succ:
        return None
    start = min(succ)
    cyc = [start]
    cur = succ[start]
    while cur != start:
        if cur not in succ or len(cyc) > len(succ):
            return None
        cyc.append(cur)
        cur = succ[cur]
    return cyc if len(cyc) == len(succ) else None


# ---------------------------------------------------------------------------
# Hypotheses shared by the audits


def hypothesis_violations(
    emb: Embedding,
    require_normalized: bool = False,
    min_order: int = 8,
    c7_free: bool = True,
) -> list[str]:
    """Names of the violated standing hypotheses (empty when all hold).

    ``c7_free=False`` skips the 7-cycle test; normalized graphs may contain
    7-cycles through the inserted gadgets.
    """
    g = emb.graph
    out = []
    if g.order < min_order:
        out.append(f"order<{min_order}")
    if g.order == 0:
        return out
    rep = validate_preconditions(g)
    if not rep.is_two_connected:
        out.append("not-2-connected")
    if rep.min_degree < 3:
        out.append("min-degree<3")
    if rep.min_adjacent_degree_sum is None or rep.min_adjacent_degree_sum < 7:
        out.append("adjacent-degree-sum<7")
    if c7_free and find_cycle(g, 7) is not None:
        out.append("contains-C7")
    if require_normalized and not out:
        from .transform import find_target

        if find_target(emb) is not None:
            out.append("not-normalized")
    return out


# ---------------------------------------------------------------------------
# Audits


def block_breakdown(emb: Embedding, analysis: Optional[BlockAnalysis] = None) -> Report:
    """Per small block: f_B against 41/72 e_B∂ + 11/18 e_B^int (no hypotheses)."""
    an = analysis or analyze(emb)
    rep = Report("small-block-breakdown")
    for b in an.small_blocks():
        m = block_metrics(b, emb)
        bound = SMALL_BD * m.e_boundary_8plus + SMALL_INT * m.e_internal
        rep.add(Finding(f"block {b.id} {an.labels[b.id]}", m.f_b, bound, m.f_b <= bound))
    return rep


def audit_small_block_inequality(emb: Embedding, normalize_first: bool = True) -> Report:
    """Sum of f_B over small blocks against 41/72 k1 + 11/18 k2.

    The hypotheses are checked first; when they fail the report is marked
    inapplicable.  With ``normalize_first`` the input is normalized and the
    inequality evaluated on the result.
    """
    rep = Report("small-block-inequality")
    bad = hypothesis_violations(emb)
    if bad:
        return rep.inapplicable(bad)
    if normalize_first:
        from .transform import normalize

        emb, _ = normalize(emb)
        bad = hypothesis_violations(emb, c7_free=False)
        if bad:
            return rep.inapplicable(["after-normalize:" + b for b in bad])
    an = analyze(emb)
    total = Fraction(0)
    bound = Fraction(0)
    for b in an.small_blocks():
        m = block_metrics(b, emb)
        bb = SMALL_BD * m.e_boundary_8plus + SMALL_INT * m.e_internal
        total += m.f_b
        bound += bb
        rep.add(Finding(f"block {b.id} {an.labels[b.id]}", m.f_b, bb, None))
    rep.add(Finding("sum f_B", total, bound, total <= bound))
    return rep


def audit_no_8face_inequality(emb: Embedding) -> Report:
    """f(G) against 9/16 e(G) for embeddings without faces of length 8 or more."""
    rep = Report("no-8face-inequality")
    bad = hypothesis_violations(emb, min_order=7)
    long_faces = [f.id for f in emb.faces if f.length >= EIGHT]
    if long_faces:
        bad.append("has-8+-face")
    if bad:
        return rep.inapplicable(bad)
    f = len(emb.faces)
    bound = NO8_RATIO * emb.graph.size
    rep.add(Finding("f(G)", Fraction(f), bound, f <= bound))
    return rep


def check_t3_face_sizes(emb: Embedding, analysis: Optional[BlockAnalysis] = None) -> Report:
    """Every exterior face of every T3 block has length at least 8."""
    rep = Report("t3-face-sizes")
    an = analysis or analyze(emb)
    t3 = an.t3_blocks()
    if len(t3) == 1 and len(t3[0].edges) == emb.graph.size:
        return rep.inapplicable(["graph-is-T3"])
    for b in t3:
        for fid in b.exterior_faces:
            length = emb.faces[fid].length
            rep.add(Finding(f"block {b.id} face {fid}", length, EIGHT, length >= EIGHT, cmp=">="))
    return rep


def check_8plus_t3_incidence(emb: Embedding, analysis: Optional[BlockAnalysis] = None) -> Report:
    """Each l-face (l >= 8) shares two edges with at most l - 8 T3 blocks.

    Shared edge pairs must be consecutive on the face; a non-consecutive
    pair is reported as a separate failure.
    """
    rep = Report("8plus-t3-incidence")
    an = analysis or analyze(emb)
    t3_ids = {b.id for b in an.t3_blocks()}
    for face in emb.faces:
        if face.length < EIGHT:
            continue
        edges = face.edges()
        hits: dict[int, list[int]] = {}
        for i, e in enumerate(edges):
            bid = an.block_of_edge[e]
            if bid in t3_ids:
                hits.setdefault(bid, []).append(i)
        count = 0
        for bid, idx in sorted(hits.items()):
            if len(idx) < 2:
                continue
            count += 1
            if len(idx) == 2:
                i, j = idx
                consecutive = (j - i) % face.length in (1, face.length - 1)
                if not consecutive:
                    rep.add(Finding(f"face {face.id} block {bid} non-consecutive", 2, 0, False))
        bound = face.length - EIGHT
        rep.add(Finding(f"face {face.id} length {face.length}", count, bound, count <= bound))
    return rep
