"""Normalization by T3 replacement.

Three kinds of structure are rewritten, in this priority order:

* ``TRIVIAL_EDGE``: an edge whose two faces both have length at least 8.
  A new vertex ``w`` is drawn in one of the faces, joined to both ends,
  and the triangle ``u v w`` is filled with a T3 gadget.
* ``SMALL_SET``: a small block set on fewer than 7 vertices whose boundary
  is one cycle of length ``c`` in 3..6.
* ``LARGE_BLOCK``: a large triangular block that is not itself a T3.

For the last two the region is emptied down to its boundary cycle and
refilled with one to four T3 gadgets that share new apex vertices; the
boundary edges not used by a gadget are deleted.  Every step records its
vertex and edge deltas so the density bookkeeping can be checked exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .blocks import EIGHT, BlockAnalysis, PreconditionViolation, analyze, hypothesis_violations, region_ccw_cycle
from .embedding import Dart, Embedding, RotationBuilder
from .extremal import t3_gadget
from .graph import Edge, GraphError, norm_edge

TRIVIAL_EDGE = "TRIVIAL_EDGE"
SMALL_SET = "SMALL_SET"
LARGE_BLOCK = "LARGE_BLOCK"
RATIO = Fraction(18, 7)


class ConflictError(GraphError):
    """The target was computed for a different embedding."""


# ---------------------------------------------------------------------------
# Targets


@dataclass(frozen=True)
class ReplacementTarget:
    kind: str
    rotation: tuple[tuple[int, ...], ...]
    edge: Optional[Edge] = None
    boundary_cycle: tuple[int, ...] = ()
    region_faces: frozenset[int] = frozenset()
    region_edges: tuple[Edge, ...] = ()
    vertices: tuple[int, ...] = ()
    source_id: int = -1

    @property
    def c(self) -> Optional[int]:
        return len(self.boundary_cycle) if self.boundary_cycle else None


def _region_target(kind: str, emb: Embedding, faces: set[int], edges, vertices, source_id: int):
    cyc = region_ccw_cycle(emb, faces, edges)
    if cyc is None or not 3 <= len(cyc) <= 6:
        return None
    return ReplacementTarget(
        kind=kind,
        rotation=emb.rotation,
        boundary_cycle=tuple(cyc),
        region_faces=frozenset(faces),
        region_edges=tuple(sorted(edges)),
        vertices=tuple(sorted(vertices)),
        source_id=source_id,
    )


def find_target(emb: Embedding, analysis: Optional[BlockAnalysis] = None) -> Optional[ReplacementTarget]:
    """First unwanted structure by priority, lowest ids first; ``None`` at a fixed point."""
    for u, v in emb.graph.edges:
        a, b = emb.edge_faces(u, v)
        if a != b and emb.faces[a].length >= EIGHT and emb.faces[b].length >= EIGHT:
            return ReplacementTarget(TRIVIAL_EDGE, emb.rotation, edge=(u, v))
    an = analysis or analyze(emb)
    for sid, s in enumerate(an.sets):
        if len(s.vertices) >= 7 or s.boundary_cycle is None:
            continue
        faces = {f for b in s.blocks for f in an.blocks[b].faces} | set(s.captured_faces)
        tgt = _region_target(SMALL_SET, emb, faces, s.edges, s.vertices, sid)
        if tgt is not None:
            return tgt
    for b in an.blocks:
        if an.large[b.id] and an.labels[b.id] != "T3":
            tgt = _region_target(LARGE_BLOCK, emb, set(b.faces), b.edges, b.vertices, b.id)
            if tgt is not None:
                return tgt
    return None


# ---------------------------------------------------------------------------
# Triangulated copy of a region


@dataclass(frozen=True)
class TriangulatedBlock:
    v_t: int
    e_t: int
    c: int
    edges: tuple[Edge, ...]

    def formula_holds(self) -> bool:
        return self.e_t == 3 * self.v_t - 3 - self.c


def triangulate_block(emb: Embedding, region_faces: frozenset[int] | set[int], edges) -> TriangulatedBlock:
    """Triangulate the non-triangular faces of a disk region.

    Each such face is fanned from its lowest vertex that creates no
    duplicate edge.  The boundary must be a single cycle.
    """
    cyc = region_ccw_cycle(emb, set(region_faces), edges)
    if cyc is None:
        raise GraphError("region boundary is not a single cycle")
    present = {norm_edge(*e) for e in edges}
    for fid in sorted(region_faces):
        face = emb.faces[fid]
        if face.length == 3:
            continue
        ring = list(face.vertices)
        if len(set(ring)) != len(ring):
            raise GraphError(f"face {fid} inside the region is not a cycle")
        for apex_pos in sorted(range(len(ring)), key=lambda i: ring[i]):
            apex = ring[apex_pos]
            rot = ring[apex_pos:] + ring[:apex_pos]
            chords = [norm_edge(apex, w) for w in rot[2:-1]]
            if not any(ch in present for ch in chords):
                present.update(chords)
                break
        else:
            raise GraphError(f"face {fid} has no fan triangulation without repeated edges")
    verts = {v for e in present for v in e}
    return TriangulatedBlock(len(verts), len(present), len(cyc), tuple(sorted(present)))


# ---------------------------------------------------------------------------
# Gadget templates

# Boundary v_i sits at angle ``start + (i-1) * 360/c`` on the unit circle
# (counterclockwise); apexes are given in polar form.  Each triangle gets a
# T3 gadget; boundary edges not covered by a triangle are deleted.
_TEMPLATES: dict[int, tuple[float, dict[str, tuple[float, float]], tuple[tuple[str, str, str], ...]]] = {
    3: (90.0, {}, (("v1", "v2", "v3"),)),
    4: (45.0, {"a1": (0.0, 0.0)}, (("v1", "v2", "a1"), ("v3", "v4", "a1"))),
    5: (
        90.0,
        {"a1": (234.0, 0.33), "a2": (18.0, 0.33)},
        (("v2", "a1", "v3"), ("v5", "v1", "a2"), ("a1", "a2", "v4")),
    ),
    6: (
        0.0,
        {"a3": (70.0, 0.57), "a1": (-130.0, 0.57), "a2": (-30.0, 0.29)},
        (("a3", "v2", "v3"), ("a3", "a2", "v1"), ("a1", "a2", "v6"), ("a1", "v4", "v5")),
    ),
}
_BASE_V = {3: 6, 4: 11, 5: 16, 6: 21}
_BASE_E = {3: 12, 4: 24, 5: 36, 6: 48}
CASE_ID = {3: "C3", 4: "C4", 5: "C5", 6: "C6"}


def _template_points(c: int) -> tuple[dict[str, tuple[float, float]], list[tuple[str, str, str]]]:
    start, apexes, tris = _TEMPLATES[c]
    pts = {}
    for i in range(c):
        ang = math.radians(start + i * 360.0 / c)
        pts[f"v{i + 1}"] = (math.cos(ang), math.sin(ang))
    for name, (deg, r) in apexes.items():
        ang = math.radians(deg)
        pts[name] = (r * math.cos(ang), r * math.sin(ang))
    oriented = []
    for a, b, c_ in tris:
        (ax, ay), (bx, by), (cx, cy) = pts[a], pts[b], pts[c_]
        cross = (bx - ax) * (cy - by) - (by - ay) * (cx - bx)
        oriented.append((a, b, c_) if cross > 0 else (a, c_, b))
    return pts, oriented


def fill_triangle(builder: RotationBuilder, a: int, b: int, c: int) -> tuple[int, int, int]:
    """Put an octahedral gadget inside the triangular face ``a -> b -> c``.

    The face must be on the left of its darts.  Returns the inner vertices.
    """
    pab, pbc, pca = builder.new_vertex(), builder.new_vertex(), builder.new_vertex()
    inner, wedges = t3_gadget(a, b, c, pab, pbc, pca)
    for v, r in inner.items():
        builder.rot[v] = list(r)
    for corner, wedge in wedges.items():
        nxt, x, y, prev = wedge
        r = builder.rot[corner]
        i = r.index(nxt)
        if r[(i + 1) % len(r)] != prev:
            raise GraphError(f"corner {corner} is not on the triangular face {a} {b} {c}")
        r.insert(i + 1, x)
        r.insert(i + 2, y)
    return pab, pbc, pca


# ---------------------------------------------------------------------------
# Ledger


@dataclass(frozen=True)
class LedgerRecord:
    """Vertex and edge deltas of one replacement.

    ``nominal_*`` are the bookkeeping values computed from the triangulated
    copy T'; ``delta_*`` are what the graph actually gained.  They coincide
    when the replaced region was already triangulated and otherwise the
    actual edge gain is larger.
    """

    case_id: str
    delta_v: int
    delta_e: int
    nominal_dv: int
    nominal_de: int
    v_t: Optional[int] = None
    e_t: Optional[int] = None
    c: Optional[int] = None

    @property
    def ratio(self) -> Optional[Fraction]:
        return Fraction(self.delta_e, self.delta_v) if self.delta_v > 0 else None

    @property
    def excess(self) -> int:
        """7 delta_e - 18 delta_v: positive, zero or negative against 18/7."""
        return 7 * self.delta_e - 18 * self.delta_v

    @property
    def strict_ok(self) -> bool:
        return self.excess > 0

    @property
    def nonstrict_ok(self) -> bool:
        return self.excess >= 0

    @property
    def ratio_ok(self) -> bool:
        """Ratio above 18/7 when vertices grow; no edge loss when they do not."""
        if self.delta_v > 0:
            return self.ratio > RATIO
        return self.delta_v == 0 and self.delta_e >= 0

    @property
    def nominal_ok(self) -> bool:
        return self.delta_v == self.nominal_dv and self.delta_e >= self.nominal_de

    def to_line(self) -> str:
        if self.delta_v > 0:
            r = self.ratio
            ratio = f"{r.numerator}/{r.denominator}"
            cmp = ">" if r > RATIO else ("=" if r == RATIO else "<")
        else:
            ratio = "-"
            cmp = "fixed" if self.delta_v == 0 and self.delta_e >= 0 else "<"
        return f"{self.case_id} {self.delta_v} {self.delta_e} {ratio} {cmp} 18/7"


# ---------------------------------------------------------------------------
# Applying replacements


def _surviving_outer(emb: Embedding, dead: set[Dart]) -> Optional[Dart]:
    face = emb.outer_face
    if face is None:
        return None
    for d in face.darts:
        if d not in dead:
            return d
    return None


def apply_replacement(emb: Embedding, tgt: ReplacementTarget) -> tuple[Embedding, LedgerRecord]:
    if tgt.rotation != emb.rotation:
        raise ConflictError("replacement target is stale for this embedding")
    if tgt.kind == TRIVIAL_EDGE:
        return _replace_edge(emb, tgt.edge)
    return _replace_region(emb, tgt)


def _replace_edge(emb: Embedding, edge: Edge) -> tuple[Embedding, LedgerRecord]:
    u, v = edge
    builder = RotationBuilder.from_embedding(emb)
    # The new corner w goes into the face on the left of v -> u.
    face = emb.face_of((v, u))
    darts = list(face.darts)
    i = darts.index((v, u))
    r = darts[i - 1][0]
    w = builder.new_vertex()
    builder.rot[w] = [u, v]
    builder.insert_before(u, w, v)
    builder.insert_before(v, w, r)
    fill_triangle(builder, v, u, w)
    outer = _surviving_outer(emb, {(v, u)})
    out, _ = builder.freeze(outer)
    rec = LedgerRecord("K2", out.graph.order - emb.graph.order, out.graph.size - emb.graph.size, 4, 11)
    return out, rec


def _replace_region(emb: Embedding, tgt: ReplacementTarget) -> tuple[Embedding, LedgerRecord]:
    cyc = list(tgt.boundary_cycle)
    c = len(cyc)
    tri = triangulate_block(emb, tgt.region_faces, tgt.region_edges)
    on_cycle = set(cyc)
    cycle_edges = {norm_edge(cyc[i], cyc[(i + 1) % c]) for i in range(c)}
    builder = RotationBuilder.from_embedding(emb)
    for x in tgt.vertices:
        if x not in on_cycle:
            builder.remove_vertex(x)
    for e in tgt.region_edges:
        if e not in cycle_edges and builder.has_edge(*e):
            builder.remove_edge(*e)
    hole = builder.face_darts((cyc[0], cyc[1]))
    if [d[0] for d in hole] != cyc:
        raise GraphError("emptied region is not bounded by its cycle")

    pts, triangles = _template_points(c)
    name = {f"v{i + 1}": cyc[i] for i in range(c)}
    for key in pts:
        if key not in name:
            name[key] = builder.new_vertex()
    new_edges: set[tuple[str, str]] = set()
    for t in triangles:
        for i in range(3):
            a, b = t[i], t[(i + 1) % 3]
            new_edges.add((min(a, b), max(a, b)))
    kept_boundary = set()
    nbrs: dict[str, list[str]] = {k: [] for k in pts}
    for a, b in new_edges:
        if a.startswith("v") and b.startswith("v") and norm_edge(name[a], name[b]) in cycle_edges:
            kept_boundary.add(norm_edge(name[a], name[b]))
            continue
        nbrs[a].append(b)
        nbrs[b].append(a)

    def angle(p: str, q: str) -> float:
        return math.atan2(pts[q][1] - pts[p][1], pts[q][0] - pts[p][0])

    for i in range(c):
        key = f"v{i + 1}"
        if not nbrs[key]:
            continue
        nxt = f"v{(i + 1) % c + 1}"
        base = angle(key, nxt)
        order = sorted(nbrs[key], key=lambda q: (angle(key, q) - base) % (2 * math.pi))
        anchor = name[nxt]
        for q in order:
            builder.insert_after(name[key], name[q], anchor)
            anchor = name[q]
    for key in pts:
        if not key.startswith("v"):
            builder.rot[name[key]] = [name[q] for q in sorted(nbrs[key], key=lambda q: angle(key, q))]
    dead = set()
    for e in sorted(cycle_edges - kept_boundary):
        builder.remove_edge(*e)
        dead.update({e, (e[1], e[0])})
    for a, b, c_ in triangles:
        fill_triangle(builder, name[a], name[b], name[c_])

    region_darts = {d for f in tgt.region_faces for d in emb.faces[f].darts}
    outer = None if emb.outer_face_id in tgt.region_faces else _surviving_outer(emb, dead | region_darts)
    out, _ = builder.freeze(outer)
    rec = LedgerRecord(
        CASE_ID[c],
        out.graph.order - emb.graph.order,
        out.graph.size - emb.graph.size,
        _BASE_V[c] - tri.v_t,
        _BASE_E[c] - tri.e_t,
        v_t=tri.v_t,
        e_t=tri.e_t,
        c=c,
    )
    return out, rec


# ---------------------------------------------------------------------------
# Normalization


def normalize(emb: Embedding, check: bool = True) -> tuple[Embedding, list[LedgerRecord]]:
    """Replace targets until none is left.

    With ``check`` the standing hypotheses are verified first and a
    :class:`PreconditionViolation` names the failures.  A step budget of
    the initial edge count guards against non-termination.
    """
    if check:
        bad = hypothesis_violations(emb)
        if bad:
            raise PreconditionViolation("cannot normalize: " + ", ".join(bad))
    records: list[LedgerRecord] = []
    budget = emb.graph.size
    while True:
        tgt = find_target(emb)
        if tgt is None:
            return emb, records
        if len(records) >= budget:
            trace = "; ".join(r.to_line() for r in records[-5:])
            raise RuntimeError(f"normalization did not terminate after {budget} steps ({trace})")
        emb, rec = apply_replacement(emb, tgt)
        records.append(rec)


def ledger_text(records: list[LedgerRecord]) -> str:
    return "".join(r.to_line() + "\n" for r in records)
