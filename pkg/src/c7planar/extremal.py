"""The two-row octagon skeleton G_0 and its gadget expansion.

G_0 starts from a straight-line grid of ``k`` columns, each contributing an
upper and a lower 8-face.  Column ``j`` has vertices ``T, TLm, L1, L0, M,
B1, Bot, Bm, Cm`` (suffixed with ``j``); a closing chain ``R1, R0, RM, RB``
sits on the right.  The grid's outer boundary is then closed up by ``k``
curves drawn in the outer face, one of them subdivided by the extra vertex
``X``.  Every curve cuts off an arc of the current outer boundary so that
the new face has length 8, and the curve endpoints are far enough apart in
the graph that no cycle shorter than 8 appears:

* ``T_0 - X - T_2``, ``L1_0 - T_3``, ``B1_0 - T_4``;
* ``Bot_j - TLm_{j+4}`` for ``j = 1 .. k-5``;
* ``Bm_{k-4} - R1`` and ``Bm_{k-3} - RB``.

This needs ``k >= 5``; ``k = 2, 3, 4`` use the short routings in
``SMALL_ROUTINGS``.  Girth at least 8 matters because inside a gadget the
corners are joined by paths of every length 1..5, so any skeleton cycle of
length at most 7 would turn into a 7-cycle after expansion.

The expansion puts a vertex on every skeleton edge and replaces every
skeleton vertex by an octahedral T3 gadget whose corners are the new edge
vertices (a degree-2 vertex gets one extra corner).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Union

from .embedding import Embedding, RotationBuilder, euler_check, face_histogram, rotation_from_positions, test_planarity
from .graph import Graph, GraphError, contains_clique4, find_cycle, norm_edge

Point = tuple[float, float]
Curve = tuple[str, str, bool]

# (start, end, through X): the curve cuts off the outer-boundary arc that
# runs forward from ``start`` to ``end``.
SMALL_ROUTINGS: dict[int, tuple[Curve, ...]] = {
    2: (("T0", "RM", True), ("L10", "Bot1", False)),
    3: (("T0", "T2", True), ("L10", "RM", False), ("B10", "Bot2", False)),
    4: (("T0", "T2", True), ("L10", "T3", False), ("B10", "RM", False), ("Bot1", "Bm3", False)),
}


def skeleton_routing(k: int) -> tuple[Curve, ...]:
    """Curves closing up the grid, innermost first."""
    if k in SMALL_ROUTINGS:
        return SMALL_ROUTINGS[k]
    curves: list[Curve] = [("T0", "T2", True), ("L10", "T3", False), ("B10", "T4", False)]
    curves += [(f"Bot{j}", f"TLm{j + 4}", False) for j in range(1, k - 4)]
    curves += [(f"Bm{k - 4}", "R1", False), (f"Bm{k - 3}", "RB", False)]
    return tuple(curves)


@dataclass
class Skeleton:
    """G_0 together with the role name of every vertex."""

    k: int
    embedding: Embedding
    roles: dict[str, int] = field(repr=False)

    def vertex(self, role: str, column: Optional[int] = None) -> int:
        return self.roles[role if column is None else f"{role}{column}"]


def _grid(k: int) -> tuple[dict[int, Point], list[tuple[int, int]], dict[str, int]]:
    pos: dict[int, Point] = {}
    roles: dict[str, int] = {}

    def add(role: str, p: Point) -> int:
        v = len(pos)
        pos[v] = p
        roles[role] = v
        return v

    col: dict[tuple[str, int], int] = {}
    for j in range(k):
        x = float(j)
        for name, p in (
            ("T", (x, 1.5)),
            ("TLm", (x - 0.25, 1.25)),
            ("L1", (x - 0.5, 1.0)),
            ("L0", (x - 0.5, 0.0)),
            ("M", (x, -0.5)),
            ("B1", (x, -1.5)),
            ("Bot", (x + 0.5, -2.0)),
            ("Bm", (x + 0.75, -1.75)),
            ("Cm", (x + 0.25, -0.25)),
        ):
            col[name, j] = add(f"{name}{j}", p)
    # The closing chain on the right plays the part of column k's left side.
    xr = float(k)
    col["L1", k] = add("R1", (xr - 0.5, 1.0))
    col["L0", k] = add("R0", (xr - 0.5, 0.0))
    col["M", k] = add("RM", (xr, -0.5))
    col["B1", k] = add("RB", (xr, -1.5))
    edges = []
    for j in range(k):
        c = lambda name, jj=j: col[name, jj]  # noqa: E731
        edges += [
            (c("T"), c("TLm")), (c("TLm"), c("L1")), (c("L1"), c("L0")),
            (c("L0"), c("M")), (c("M"), c("B1")), (c("B1"), c("Bot")),
            (c("Bot"), c("Bm")), (c("Bm"), col["B1", j + 1]),
            (c("T"), col["L1", j + 1]), (col["L0", j + 1], c("Cm")), (c("Cm"), c("M")),
        ]
    edges += [(col["L1", k], col["L0", k]), (col["L0", k], col["M", k]), (col["M", k], col["B1", k])]
    return pos, edges, roles


def girth_at_least(g: Graph, bound: int) -> bool:
    """True when ``g`` has no cycle shorter than ``bound`` (BFS from every vertex)."""
    adj = g.adjacency
    for s in range(g.order):
        dist = {s: 0}
        parent = {s: -1}
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    dq.append(w)
                elif parent[u] != w and dist[u] + dist[w] + 1 < bound:
                    return False
    return True


def build_g0(k: int) -> Skeleton:
    if k < 2:
        raise GraphError("skeleton needs k >= 2")
    pos, edges, roles = _grid(k)
    g = Graph(len(pos), [norm_edge(u, v) for u, v in edges])
    rot = rotation_from_positions(pos, g.edges)
    grid = Embedding(g, [rot[v] for v in range(g.order)])
    builder = RotationBuilder.from_embedding(grid)
    outer = grid.outer_face.darts[0]
    for start, end, through_x in skeleton_routing(k):
        walk = [d[0] for d in builder.face_darts(outer)]
        a, b = roles[start], roles[end]
        i, j = walk.index(a), walk.index(b)
        arc = (j - i) % len(walk)
        if arc != (6 if through_x else 7):
            raise AssertionError(f"curve {start}-{end} cuts off an arc of length {arc}")
        pa, pb = walk[i - 1], walk[j - 1]
        if through_x:
            x = builder.new_vertex()
            roles["X"] = x
            builder.rot[x] = [a, b]
            builder.insert_before(a, x, pa)
            builder.insert_before(b, x, pb)
        else:
            builder.add_edge_in_face(a, pa, b, pb)
        # The remaining boundary starts at b and leaves it along the old walk.
        outer = (b, walk[(j + 1) % len(walk)])
    emb, idmap = builder.freeze(outer)
    roles = {r: idmap[v] for r, v in roles.items()}
    lengths = {f.length for f in emb.faces}
    if lengths != {8} or len(emb.faces) != 3 * k + 1 or not euler_check(emb):
        raise AssertionError(f"skeleton drawing is wrong: face lengths {face_histogram(emb)}")
    if not girth_at_least(emb.graph, 8):
        raise AssertionError("skeleton has a cycle shorter than 8")
    return Skeleton(k, emb, roles)


# ---------------------------------------------------------------------------
# Gadget expansion


def t3_gadget(a: int, b: int, c: int, pab: int, pbc: int, pca: int) -> tuple[dict[int, list[int]], dict[int, list[int]]]:
    """Rotations of an octahedral gadget on the counterclockwise triangle abc.

    Returns ``(inner, corner_wedges)``: full rotations of the three inner
    vertices, and for each corner the counterclockwise run of neighbours
    inside the triangle (from the next corner round to the previous one).
    """
    inner = {
        pab: [pbc, pca, a, b],
        pbc: [c, pca, pab, b],
        pca: [pbc, c, a, pab],
    }
    wedges = {
        a: [b, pab, pca, c],
        b: [c, pbc, pab, a],
        c: [a, pca, pbc, b],
    }
    return inner, wedges


@dataclass
class Expansion:
    embedding: Embedding
    midpoint: dict[tuple[int, int], int] = field(repr=False)
    gadget: dict[int, tuple[int, ...]] = field(repr=False)


def expand_to_g(g0: Union[Skeleton, Embedding]) -> Expansion:
    """Replace every skeleton vertex by a T3 gadget on the new edge vertices.

    ``gadget[v]`` lists the gadget vertices created for skeleton vertex
    ``v`` as ``(corner, corner, corner, inner, inner, inner)``.
    """
    emb = g0.embedding if isinstance(g0, Skeleton) else g0
    g = emb.graph
    degs = set(g.degrees())
    if not degs <= {2, 3}:
        raise GraphError("skeleton vertices must have degree 2 or 3")
    counter = iter(range(10**9))
    mid = {e: next(counter) for e in g.edges}
    rot: dict[int, list[int]] = {m: [] for m in mid.values()}
    gadgets: dict[int, tuple[int, ...]] = {}
    for v in range(g.order):
        ring = emb.rotation[v]
        corners = [mid[norm_edge(v, w)] for w in ring]
        if len(corners) == 2:
            w_new = next(counter)
            rot[w_new] = []
            corners = [corners[0], w_new, corners[1]]
        a, b, c = corners
        pab, pbc, pca = next(counter), next(counter), next(counter)
        inner, wedges = t3_gadget(a, b, c, pab, pbc, pca)
        rot.update(inner)
        for corner, wedge in wedges.items():
            rot[corner] = rot[corner] + wedge
        gadgets[v] = (a, b, c, pab, pbc, pca)
    builder = RotationBuilder(rot)
    out, idmap = builder.freeze()
    mid = {e: idmap[m] for e, m in mid.items()}
    gadgets = {v: tuple(idmap[x] for x in t) for v, t in gadgets.items()}
    outer_mids = {mid[norm_edge(*d)] for d in emb.outer_face.darts} if emb.outer_face else set()
    for f in out.faces:
        if outer_mids <= set(f.vertices) and f.length >= 8:
            out = out.with_outer(f.darts[0])
            break
    return Expansion(out, mid, gadgets)


# ---------------------------------------------------------------------------
# Certification


@dataclass(frozen=True)
class ExtremalCertificate:
    n: int
    m: int
    c7_free: bool
    k4_free: bool
    planar: bool
    tight: bool

    @property
    def all_ok(self) -> bool:
        return self.c7_free and self.k4_free and self.planar and self.tight

    @property
    def residue(self) -> int:
        return self.n % 42

    def to_line(self) -> str:
        b = lambda x: str(x).lower()  # noqa: E731
        return (
            f"n={self.n} e={self.m} tight={b(self.tight)} planar={b(self.planar)} "
            f"c7_free={b(self.c7_free)} k4_free={b(self.k4_free)}"
        )


def verify_extremal(g: Union[Embedding, Graph], cycle: int = 7) -> ExtremalCertificate:
    """Recompute every certificate flag from the instance itself."""
    if isinstance(g, Embedding):
        graph = g.graph
        planar = euler_check(g)
    else:
        graph = g
        planar = test_planarity(graph).planar
    n, m = graph.order, graph.size
    return ExtremalCertificate(
        n=n,
        m=m,
        c7_free=find_cycle(graph, cycle) is None,
        k4_free=not contains_clique4(graph),
        planar=planar,
        tight=7 * m == 18 * n - 48,
    )


def construct(k: int) -> Embedding:
    return expand_to_g(build_g0(k)).embedding
