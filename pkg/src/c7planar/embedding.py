"""Combinatorial planar embeddings given by rotation systems.

A rotation lists the neighbours of each vertex in counterclockwise order.
Faces are traced with the face kept on the left of every dart, so bounded
faces come out counterclockwise and the outer face clockwise.  An embedding
also carries a designated outer face, identified by one of its darts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

import networkx as nx

from .graph import Edge, Graph, GraphError, ParseError, norm_edge

Dart = tuple[int, int]


class EmbeddingError(GraphError):
    """Rotation system does not describe a valid embedding."""


class SevenFaceError(GraphError):
    """A face of length 7 in a 2-connected graph, hence a 7-cycle."""

    def __init__(self, face: "Face"):
        self.face = face
        super().__init__(
            f"face {face.id} has length 7; its boundary {list(face.vertices)} is a C7"
        )


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[Dart, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d[0] for d in self.darts)

    def edges(self) -> list[Edge]:
        return [norm_edge(*d) for d in self.darts]

    def is_cycle(self) -> bool:
        return len(set(self.vertices)) == self.length


class Embedding:
    """Rotation system over a :class:`Graph` with traced faces.

    ``rotation[v]`` is the counterclockwise neighbour order at ``v``.
    ``outer`` is a dart on the designated outer face; when omitted the
    longest face (lowest face id on ties) is used.
    """

    def __init__(
        self,
        graph: Graph,
        rotation: Sequence[Sequence[int]],
        outer: Optional[Dart] = None,
    ):
        if len(rotation) != graph.order:
            raise EmbeddingError(
                f"rotation has {len(rotation)} entries for {graph.order} vertices"
            )
        rot = tuple(tuple(int(w) for w in r) for r in rotation)
        for v, r in enumerate(rot):
            if len(set(r)) != len(r) or set(r) != graph.neighbors(v):
                raise EmbeddingError(f"rotation at {v} is not a permutation of its neighbours")
        self.graph = graph
        self.rotation = rot
        self._pos = [{w: i for i, w in enumerate(r)} for r in rot]
        self.faces, self._face_of = self._trace()
        if outer is None:
            self.outer_face_id = self._default_outer()
        else:
            d = (int(outer[0]), int(outer[1]))
            if d not in self._face_of:
                raise EmbeddingError(f"outer dart {d} is not a dart of the graph")
            self.outer_face_id = self._face_of[d]

    # -- tracing -------------------------------------------------------

    def next_dart(self, d: Dart) -> Dart:
        """Successor of ``d`` along the face on its left."""
        u, v = d
        r = self.rotation[v]
        return (v, r[(self._pos[v][u] - 1) % len(r)])

    def _trace(self) -> tuple[tuple[Face, ...], dict[Dart, int]]:
        face_of: dict[Dart, int] = {}
        faces: list[Face] = []
        for u in range(self.graph.order):
            for w in sorted(self.rotation[u]):
                start = (u, w)
                if start in face_of:
                    continue
                fid = len(faces)
                darts = []
                d = start
                while d not in face_of:
                    face_of[d] = fid
                    darts.append(d)
                    d = self.next_dart(d)
                if d != start:
                    raise EmbeddingError("face tracing did not close up")
                faces.append(Face(fid, tuple(darts)))
        return tuple(faces), face_of

    def _default_outer(self) -> int:
        if not self.faces:
            return -1
        best = max(f.length for f in self.faces)
        return min(f.id for f in self.faces if f.length == best)

    # -- queries -------------------------------------------------------

    @property
    def outer_face(self) -> Optional[Face]:
        return self.faces[self.outer_face_id] if self.outer_face_id >= 0 else None

    @property
    def outer_dart(self) -> Optional[Dart]:
        f = self.outer_face
        return f.darts[0] if f is not None else None

    def face_of(self, d: Dart) -> Face:
        return self.faces[self._face_of[d]]

    def face_id_of(self, d: Dart) -> int:
        return self._face_of[d]

    def edge_faces(self, u: int, v: int) -> tuple[int, int]:
        """Face ids on the two sides of edge ``uv`` (equal for a bridge side pair)."""
        return self._face_of[(u, v)], self._face_of[(v, u)]

    def position(self, v: int, w: int) -> int:
        return self._pos[v][w]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Embedding)
            and self.graph == other.graph
            and all(_same_cycle(a, b) for a, b in zip(self.rotation, other.rotation))
            and self.outer_face_id == other.outer_face_id
        )

    def __hash__(self) -> int:
        return hash(self.graph)

    def __repr__(self) -> str:
        return f"Embedding(n={self.graph.order}, m={self.graph.size}, faces={len(self.faces)})"

    def with_outer(self, dart: Dart) -> "Embedding":
        return Embedding(self.graph, self.rotation, dart)

    # -- text format ---------------------------------------------------

    def to_text(self) -> str:
        lines = [str(self.graph.order)]
        for v, r in enumerate(self.rotation):
            lines.append(f"{v}: " + " ".join(map(str, r)) if r else f"{v}:")
        d = self.outer_dart
        if d is not None:
            lines.append(f"outer: {d[0]} {d[1]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Embedding":
        """Parse the rotation-system format.

        First line ``n``; then one line ``v: w1 w2 ...`` per vertex in
        counterclockwise order; an optional ``outer: u v`` line names a dart
        on the outer face.
        """
        rows = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if line:
                rows.append((lineno, line))
        if not rows:
            raise ParseError("missing vertex count line", 1)
        lineno, first = rows[0]
        try:
            n = int(first)
        except ValueError:
            raise ParseError("first line must be the vertex count", lineno) from None
        if n < 0:
            raise ParseError("negative vertex count", lineno)
        rot: list[Optional[list[int]]] = [None] * n
        outer = None
        for lineno, line in rows[1:]:
            head, sep, tail = line.partition(":")
            if not sep:
                raise ParseError("expected 'v: w1 w2 ...'", lineno)
            try:
                nums = [int(t) for t in tail.split()]
            except ValueError:
                raise ParseError("neighbour ids must be integers", lineno) from None
            if head.strip() == "outer":
                if len(nums) != 2:
                    raise ParseError("outer line must be 'outer: u v'", lineno)
                outer = (nums[0], nums[1])
                continue
            try:
                v = int(head)
            except ValueError:
                raise ParseError(f"bad vertex id {head.strip()!r}", lineno) from None
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range", lineno)
            if rot[v] is not None:
                raise ParseError(f"vertex {v} listed twice", lineno)
            if any(not 0 <= w < n or w == v for w in nums):
                raise ParseError(f"bad neighbour in rotation of {v}", lineno)
            rot[v] = nums
        missing = [v for v in range(n) if rot[v] is None]
        if missing:
            raise ParseError(f"no rotation line for vertex {missing[0]}", rows[-1][0])
        edges = set()
        for v, r in enumerate(rot):
            for w in r:
                if v not in rot[w]:
                    raise ParseError(f"rotation is not symmetric at edge {v} {w}")
                edges.add(norm_edge(v, w))
        try:
            return cls(Graph(n, sorted(edges)), rot, outer)
        except GraphError as exc:
            raise ParseError(str(exc)) from None


def _same_cycle(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = list(b).index(a[0])
    except ValueError:
        return False
    return tuple(a) == tuple(b[i:]) + tuple(b[:i])


# ---------------------------------------------------------------------------
# Mutable rotation editing


class RotationBuilder:
    """Mutable rotation system on arbitrary integer vertex ids.

    Used by constructions and local rewrites.  ``freeze`` relabels the
    vertices densely in increasing id order and returns an
    :class:`Embedding`.
    """

    def __init__(self, rot: Optional[Mapping[int, Sequence[int]]] = None):
        self.rot: dict[int, list[int]] = {v: list(r) for v, r in (rot or {}).items()}
        self._next_id = max(self.rot, default=-1) + 1

    @classmethod
    def from_embedding(cls, emb: Embedding) -> "RotationBuilder":
        return cls({v: r for v, r in enumerate(emb.rotation)})

    def new_vertex(self) -> int:
        v = self._next_id
        self._next_id += 1
        self.rot[v] = []
        return v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rot.get(u, ())

    def insert_before(self, v: int, new: int, anchor: int) -> None:
        """Put ``new`` immediately clockwise of ``anchor`` at ``v``."""
        r = self.rot[v]
        r.insert(r.index(anchor), new)

    def insert_after(self, v: int, new: int, anchor: int) -> None:
        """Put ``new`` immediately counterclockwise of ``anchor`` at ``v``."""
        r = self.rot[v]
        r.insert(r.index(anchor) + 1, new)

    def add_edge_in_face(self, u: int, pu: int, w: int, pw: int) -> None:
        """Join ``u`` and ``w`` through a face.

        ``pu`` is the predecessor of ``u`` and ``pw`` the predecessor of
        ``w`` along that face (as traced with the face on the left).
        """
        if self.has_edge(u, w):
            raise EmbeddingError(f"edge {u} {w} already present")
        self.insert_before(u, w, pu)
        self.insert_before(w, u, pw)

    def remove_edge(self, u: int, v: int) -> None:
        self.rot[u].remove(v)
        self.rot[v].remove(u)

    def remove_vertex(self, v: int) -> None:
        for w in self.rot.pop(v):
            self.rot[w].remove(v)

    def next_dart(self, d: Dart) -> Dart:
        u, v = d
        r = self.rot[v]
        return (v, r[(r.index(u) - 1) % len(r)])

    def face_darts(self, d: Dart) -> list[Dart]:
        out = [d]
        e = self.next_dart(d)
        while e != d:
            out.append(e)
            e = self.next_dart(e)
        return out

    def freeze(self, outer: Optional[Dart] = None) -> tuple[Embedding, dict[int, int]]:
        ids = sorted(self.rot)
        idmap = {v: i for i, v in enumerate(ids)}
        edges = {norm_edge(idmap[v], idmap[w]) for v in ids for w in self.rot[v]}
        rotation = [[idmap[w] for w in self.rot[v]] for v in ids]
        outer_new = (idmap[outer[0]], idmap[outer[1]]) if outer is not None else None
        return Embedding(Graph(len(ids), sorted(edges)), rotation, outer_new), idmap


# ---------------------------------------------------------------------------
# Whole-embedding checks


FaceHistogram = dict[int, int]


def trace_faces(emb: Embedding) -> list[Face]:
    return list(emb.faces)


def face_histogram(emb: Embedding) -> FaceHistogram:
    """Face count per length, sorted by length."""
    return dict(sorted(Counter(f.length for f in emb.faces).items()))


@dataclass(frozen=True)
class ComponentEuler:
    vertices: int
    edges: int
    faces: int

    @property
    def characteristic(self) -> int:
        return self.vertices - self.edges + self.faces


@dataclass(frozen=True)
class EulerReport:
    components: tuple[ComponentEuler, ...] = field(default_factory=tuple)

    @property
    def planar(self) -> bool:
        return all(c.characteristic == 2 for c in self.components)


def euler_report(emb: Embedding) -> EulerReport:
    """V - E + F per connected component.

    An isolated vertex is counted as one vertex with one face.
    """
    g = emb.graph
    comp_of = {}
    comps = g.components()
    for i, c in enumerate(comps):
        for v in c:
            comp_of[v] = i
    fcount = Counter(comp_of[f.darts[0][0]] for f in emb.faces)
    out = []
    for i, c in enumerate(comps):
        members = set(c)
        e = sum(1 for u, v in g.edges if u in members)
        faces = fcount.get(i, 0) if e else 1
        out.append(ComponentEuler(len(c), e, faces))
    return EulerReport(tuple(out))


def euler_check(emb: Embedding) -> bool:
    """True iff every connected component satisfies V - E + F = 2."""
    return euler_report(emb).planar


def check_no_seven_face(emb: Embedding) -> None:
    """Raise :class:`SevenFaceError` for a face of length 7 bounded by a cycle."""
    for f in emb.faces:
        if f.length == 7 and f.is_cycle():
            raise SevenFaceError(f)


# ---------------------------------------------------------------------------
# Planarity


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: Optional[Embedding] = None
    witness: Optional[tuple[Edge, ...]] = None

    def __bool__(self) -> bool:
        return self.planar


def _nx_graph(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return h


def test_planarity(g: Graph) -> PlanarityResult:
    """Planar embedding of ``g`` or the edges of a Kuratowski subgraph."""
    planar, cert = nx.check_planarity(_nx_graph(g), counterexample=True)
    if not planar:
        return PlanarityResult(False, witness=tuple(sorted(norm_edge(*e) for e in cert.edges)))
    rotation = [list(reversed(list(cert.neighbors_cw_order(v)))) for v in range(g.order)]
    return PlanarityResult(True, embedding=Embedding(g, rotation))


test_planarity.__test__ = False  # keep pytest from collecting it


def embed(g: Graph) -> Embedding:
    res = test_planarity(g)
    if not res.planar:
        raise EmbeddingError("graph is not planar")
    return res.embedding


# ---------------------------------------------------------------------------
# DOT export


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.order))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def embedding_to_dot(emb: Embedding, name: str = "G") -> str:
    """Graph DOT with the face list attached as comments."""
    body = graph_to_dot(emb.graph, name).rstrip("\n").split("\n")
    comments = [
        f"  // face {f.id} length {f.length}: {' '.join(map(str, f.vertices))}"
        + (" (outer)" if f.id == emb.outer_face_id else "")
        for f in emb.faces
    ]
    return "\n".join(body[:-1] + comments + body[-1:]) + "\n"


def rotation_from_positions(
    pos: Mapping[int, tuple[float, float]],
    edges: Iterable[Edge],
    tangents: Optional[Mapping[Dart, tuple[float, float]]] = None,
) -> dict[int, list[int]]:
    """Counterclockwise rotations from vertex coordinates.

    ``tangents[(u, v)]`` overrides the direction in which the edge towards
    ``v`` leaves ``u`` (for curved edges).
    """
    import math

    tangents = tangents or {}
    nbrs: dict[int, list[int]] = {v: [] for v in pos}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)

    def angle(u: int, w: int) -> float:
        dx, dy = tangents.get((u, w), (pos[w][0] - pos[u][0], pos[w][1] - pos[u][1]))
        return math.atan2(dy, dx)

    return {u: sorted(ws, key=lambda w: angle(u, w)) for u, ws in nbrs.items()}
