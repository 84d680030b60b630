"""Generated test instances for the audits.

Two families are produced here:

* gadget expansions: every vertex of a girth-8 skeleton is replaced by a
  small plane piece whose three corners sit on the skeleton edges.  Pieces
  either share a corner vertex across a skeleton edge or are joined by a
  real edge between two private corners.  A skeleton cycle passes through
  at least 8 pieces, so no 7-cycle uses more than one piece, and pieces on
  at most 6 vertices (or bipartite ones) contain none themselves.
* radial graphs (vertex-face incidence graphs) of polyhedra: bipartite
  quadrangulations, so they have no 7-cycle and no face of length 8 or more.

Negative controls violate at least one standing hypothesis.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import networkx as nx

from .embedding import Embedding, RotationBuilder, embed, rotation_from_positions
from .extremal import build_g0
from .graph import Graph, complete_graph, cycle_graph, norm_edge


@dataclass(frozen=True)
class Gadget:
    """A plane piece bounded by a cycle with three marked corners.

    ``rotation`` gives the counterclockwise order at every vertex of the
    piece drawn alone; ``boundary`` runs counterclockwise around the piece
    and ``corners`` are three of its vertices in that order.
    """

    name: str
    rotation: Mapping[str, tuple[str, ...]]
    boundary: tuple[str, ...]
    corners: tuple[str, str, str]

    @property
    def order(self) -> int:
        return len(self.rotation)

    def wedge(self, corner: str) -> list[str]:
        """Neighbours of ``corner`` inside the piece, counterclockwise from
        its boundary successor to its boundary predecessor."""
        i = self.boundary.index(corner)
        nxt = self.boundary[(i + 1) % len(self.boundary)]
        r = list(self.rotation[corner])
        j = r.index(nxt)
        return r[j:] + r[:j]


def _polar(deg: float, r: float = 1.0) -> tuple[float, float]:
    return (r * math.cos(math.radians(deg)), r * math.sin(math.radians(deg)))


def _from_points(name: str, pts: dict[str, tuple[float, float]], edges: str, boundary: str) -> Gadget:
    ids = {k: i for i, k in enumerate(pts)}
    back = {i: k for k, i in ids.items()}
    pairs = [(ids[e[0]], ids[e[1]]) for e in edges.split()]
    rot = rotation_from_positions({ids[k]: p for k, p in pts.items()}, pairs)
    rotation = {back[v]: tuple(back[w] for w in r) for v, r in rot.items()}
    bd = tuple(boundary)
    corners = tuple(x for x in bd if x in "abc")
    return Gadget(name, rotation, bd, corners)  # type: ignore[arg-type]


_A, _B, _C = _polar(90), _polar(210), _polar(330)


def _rhombic_dodecahedron() -> Gadget:
    """Radial graph of the cube with one quadrilateral as the piece boundary."""
    cube = nx.convert_node_labels_to_integers(nx.hypercube_graph(3), ordering="sorted")
    cube_emb = embed(Graph(8, [norm_edge(u, v) for u, v in cube.edges]))
    edges = []
    for f in cube_emb.faces:
        for v in f.vertices:
            edges.append(norm_edge(v, 8 + f.id))
    g = Graph(14, sorted(edges))
    emb = embed(g)
    # Face 0 becomes the outside of the piece.  It lies on the left of its
    # own walk, so the piece is on the left of the reversed walk.
    ring = list(reversed(emb.faces[0].vertices))
    names = {v: f"r{v}" for v in range(14)}
    for label, v in zip("abcd", ring):
        names[v] = label
    rotation = {names[v]: tuple(names[w] for w in emb.rotation[v]) for v in range(14)}
    return Gadget("RD", rotation, tuple(names[v] for v in ring), ("a", "b", "c"))


def _gadgets() -> dict[str, Gadget]:
    base = {"a": _A, "b": _B, "c": _C}
    g = {}
    g["T3"] = _from_points(
        "T3",
        {**base, "x": _polar(150, 0.4), "y": _polar(270, 0.4), "z": _polar(30, 0.4)},
        "ab bc ca xy yz zx ax xb by yc cz za",
        "abc",
    )
    g["B3"] = _from_points("B3", dict(base), "ab bc ca", "abc")
    g["K4"] = _from_points("K4", {**base, "h": (0.0, 0.0)}, "ab bc ca ha hb hc", "abc")
    g["W4"] = _from_points(
        "W4", {**base, "d": _polar(30), "h": (0.0, 0.0)}, "ab bc cd da ha hb hc hd", "abcd"
    )
    g["W5"] = _from_points(
        "W5",
        {**base, "x": _polar(270), "y": _polar(30), "h": (0.0, 0.0)},
        "ab bx xc cy ya ha hb hx hc hy",
        "abxcy",
    )
    g["H6"] = _from_points(
        "H6",
        {**base, "z": _polar(150), "x": _polar(270), "y": _polar(30)},
        "az zb bx xc cy ya xy yz zx",
        "azbxcy",
    )
    g["S6"] = _from_points(
        "S6",
        {**base, "h": (0.0, 0.0), "p": _polar(150, 0.35), "q": _polar(270, 0.35)},
        "ab bc ca ha hb hc pa pb ph qb qc qh",
        "abc",
    )
    g["RD"] = _rhombic_dodecahedron()
    return g


GADGETS: dict[str, Gadget] = _gadgets()


def expand_with_gadgets(
    skeleton: Embedding,
    choice: Mapping[int, str] | str,
    bridges: Sequence[tuple[int, int]] = (),
) -> Embedding:
    """Replace skeleton vertices by gadgets.

    ``choice`` maps skeleton vertices to gadget names (a single name applies
    to all).  Skeleton edges listed in ``bridges`` become an edge between two
    private corners; every other skeleton edge becomes one shared corner.
    """
    g = skeleton.graph
    bridged = {norm_edge(*e) for e in bridges}
    counter = iter(range(10**9))
    shared = {e: next(counter) for e in g.edges if e not in bridged}
    private: dict[tuple[int, int], int] = {}
    rot: dict[int, list[int]] = {m: [] for m in shared.values()}

    def corner_for(v: int, w: int) -> int:
        e = norm_edge(v, w)
        if e in shared:
            return shared[e]
        if (v, w) not in private:
            private[v, w] = next(counter)
            rot[private[v, w]] = []
        return private[v, w]

    for v in range(g.order):
        name = choice if isinstance(choice, str) else choice.get(v, "T3")
        gad = GADGETS[name]
        ring = skeleton.rotation[v]
        corners = [corner_for(v, w) for w in ring]
        if len(corners) == 2:
            extra = next(counter)
            rot[extra] = []
            corners = [corners[0], extra, corners[1]]
        if len(corners) != 3:
            raise ValueError("skeleton vertices must have degree 2 or 3")
        ids = dict(zip(gad.corners, corners))
        for x in gad.rotation:
            if x not in ids:
                ids[x] = next(counter)
        for x, r in gad.rotation.items():
            if x in gad.corners:
                rot[ids[x]] += [ids[y] for y in gad.wedge(x)]
            else:
                rot[ids[x]] = [ids[y] for y in r]
    for (v, w), c in private.items():
        rot[c].append(private[w, v])
    emb, _ = RotationBuilder(rot).freeze()
    return emb


# ---------------------------------------------------------------------------
# Radial graphs


def radial_graph(h: Graph) -> Embedding:
    """Vertex-face incidence graph of a plane embedding of ``h``."""
    emb = embed(h)
    n = h.order
    edges = sorted({norm_edge(v, n + f.id) for f in emb.faces for v in f.vertices})
    return embed(Graph(n + len(emb.faces), edges))


# A triangulation with adjacent vertices 7, 11 of degree 6 whose two faces
# on edge 7-11 have apexes of degree at least 5 and all degrees at least 4.
_FLIPPED_ICOSAHEDRON = (
    "0-1 0-5 0-7 0-8 1-2 1-5 1-8 2-3 2-5 2-6 2-8 2-11 3-4 3-6 3-8 3-9 3-10 4-6 4-10 4-11 "
    "5-7 5-11 6-11 7-8 7-9 7-10 7-11 8-9 9-10 10-11"
)


def single_long_face_instance() -> Embedding:
    """Radial graph of a triangulation with the two face vertices on one edge
    removed: one 8-face, every other face a quadrilateral, no triangles."""
    h = Graph(12, [tuple(map(int, e.split("-"))) for e in _FLIPPED_ICOSAHEDRON.split()])
    emb = embed(h)
    doomed = {h.order + f for f in emb.edge_faces(7, 11)}
    edges = sorted({norm_edge(v, h.order + f.id) for f in emb.faces for v in f.vertices})
    g = Graph(h.order + len(emb.faces), edges)
    rest, _ = g.delete_vertices(doomed)
    return embed(rest)


def antiprism(n: int) -> Graph:
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges += [(i, j), (n + i, n + j), (i, n + i), (j, n + i)]
    return Graph(2 * n, sorted({norm_edge(u, v) for u, v in edges}))


def prism(n: int) -> Graph:
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges += [(i, j), (n + i, n + j), (i, n + i)]
    return Graph(2 * n, sorted({norm_edge(u, v) for u, v in edges}))


def _nx_to_graph(x: nx.Graph) -> Graph:
    x = nx.convert_node_labels_to_integers(x, ordering="sorted")
    return Graph(x.number_of_nodes(), sorted(norm_edge(u, v) for u, v in x.edges))


# ---------------------------------------------------------------------------
# Named corpora


@dataclass(frozen=True)
class Instance:
    name: str
    embedding: Embedding


def _assignment(skel: Embedding, rng: random.Random, menu: Sequence[str], menu2: Sequence[str]) -> dict[int, str]:
    out = {}
    for v in range(skel.graph.order):
        pool = menu if skel.graph.degree(v) == 3 else menu2
        out[v] = rng.choice(pool)
    return out


def expansion_corpus(count: int = 24, seed: int = 7) -> list[Instance]:
    """Gadget expansions of small skeletons with varied gadget choices.

    Gadgets that would give a degree-2 private corner are only used at
    degree-3 skeleton vertices.
    """
    rng = random.Random(seed)
    menu3 = ["T3", "B3", "K4", "W4", "W5", "H6", "S6", "RD"]
    menu2 = ["T3", "W4", "S6", "RD"]
    out = []
    ks = [2, 3, 4]
    for i in range(count):
        k = ks[i % len(ks)]
        skel = build_g0(k).embedding
        choice = _assignment(skel, rng, menu3, menu2)
        bridges = []
        if i % 3 == 1:
            bridges = rng.sample(list(skel.graph.edges), 2)
        elif i % 3 == 2:
            bridges = rng.sample(list(skel.graph.edges), 1)
        out.append(Instance(f"expansion-{i}-k{k}", expand_with_gadgets(skel, choice, bridges)))
    return out


def uniform_expansions() -> list[Instance]:
    """One instance per gadget, used everywhere its corners allow."""
    out = []
    skel = build_g0(2).embedding
    for name in GADGETS:
        choice = {v: (name if skel.graph.degree(v) == 3 or name not in ("B3", "K4", "W5", "H6") else "T3")
                  for v in range(skel.graph.order)}
        out.append(Instance(f"uniform-{name}", expand_with_gadgets(skel, choice)))
    return out


def radial_corpus() -> list[Instance]:
    """Bipartite quadrangulations with minimum degree 3 and adjacent sums at least 7."""
    polys: list[tuple[str, Graph]] = [("cube", _nx_to_graph(nx.hypercube_graph(3)))]
    polys += [(f"prism{n}", prism(n)) for n in range(5, 10)]
    polys += [(f"antiprism{n}", antiprism(n)) for n in range(4, 9)]
    polys.append(("dodecahedron", _nx_to_graph(nx.dodecahedral_graph())))
    return [Instance(f"radial-{name}", radial_graph(h)) for name, h in polys]


def negative_controls() -> list[Instance]:
    """Embeddings violating at least one standing hypothesis."""
    ico = embed(_nx_to_graph(nx.icosahedral_graph()))
    octa = embed(_nx_to_graph(nx.octahedral_graph()))
    cube = embed(_nx_to_graph(nx.hypercube_graph(3)))
    return [
        Instance("icosahedron", ico),
        Instance("octahedron", octa),
        Instance("cube", cube),
        Instance("K4", embed(complete_graph(4))),
        Instance("C7", embed(cycle_graph(7))),
        Instance("single-edge", embed(Graph(2, [(0, 1)]))),
        Instance("prism8", embed(prism(8))),
        Instance("skeleton-k2", build_g0(2).embedding),
    ]


def find_instance(name: str, pool: Optional[Sequence[Instance]] = None) -> Instance:
    for inst in pool if pool is not None else expansion_corpus() + radial_corpus():
        if inst.name == name:
            return inst
    raise KeyError(name)
