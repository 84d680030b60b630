"""Hand-built embeddings shared by the tests."""

from __future__ import annotations

import math

from c7planar.embedding import Embedding, rotation_from_positions
from c7planar.graph import Graph, norm_edge


def polar(deg: float, r: float = 1.0) -> tuple[float, float]:
    return (r * math.cos(math.radians(deg)), r * math.sin(math.radians(deg)))


def straight_line(pos: dict[int, tuple[float, float]], edges, outer=None) -> Embedding:
    """Embedding of a straight-line drawing."""
    es = sorted({norm_edge(u, v) for u, v in edges})
    rot = rotation_from_positions(pos, es)
    return Embedding(Graph(len(pos), es), [rot[v] for v in range(len(pos))], outer)


def cycle_with_chord(half: int, ears: bool = False) -> Embedding:
    """Cycle on 2*half - 2 vertices with chord 0-(half-1): two half-faces.

    With ``ears`` every cycle edge also gets an outside triangle, so the
    chord is the only edge between two long faces.
    """
    n = 2 * half - 2
    pos = {i: polar(360 * i / n, 3) for i in range(n)}
    edges = [(i, (i + 1) % n) for i in range(n)] + [(0, half - 1)]
    if ears:
        for i in range(n):
            pos[n + i] = polar(360 * (i + 0.5) / n, 4)
            edges += [(i, n + i), ((i + 1) % n, n + i)]
    return straight_line(pos, edges)


# T3: outer triangle x=0, y=1, z=2; inner a=3 (side xy), b=4 (yz), c=5 (zx).
T3_POS = {0: (0.0, 2.0), 1: (-2.0, -1.0), 2: (2.0, -1.0), 3: (-0.7, 0.4), 4: (0.0, -0.6), 5: (0.7, 0.4)}
T3_EDGES = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]


def t3_graph() -> Embedding:
    return straight_line(T3_POS, T3_EDGES, outer=(0, 2))


def t3_with_quadrilateral() -> Embedding:
    """T3 with a 4-face glued on side xy."""
    pos = dict(T3_POS)
    pos[6], pos[7] = (-1.0, 3.5), (-3.5, 1.0)
    return straight_line(pos, T3_EDGES + [(0, 6), (6, 7), (7, 1)])


def t3_with_long_face(path_len: int, split_outer: bool = False) -> Embedding:
    """T3 plus a path of ``path_len`` edges from z around y to x.

    The face between the path and sides xy, yz has length path_len + 2.
    With ``split_outer`` a far vertex joined to the first and last path
    vertices splits the other face (side zx plus the path).
    """
    pos = dict(T3_POS)
    path = [2]
    for i in range(1, path_len):
        v = len(pos)
        pos[v] = polar(-30 - 240 * i / path_len, 4)
        path.append(v)
    path.append(0)
    edges = T3_EDGES + list(zip(path, path[1:]))
    if split_outer:
        w = len(pos)
        pos[w] = polar(-150, 60)
        edges += [(w, path[1]), (w, path[-2])]
    return straight_line(pos, edges)


def b3_with_interior_edge() -> Embedding:
    """Triangle abc; bc borders a 4-face; ab, ac border an 8-face."""
    pos = {
        0: (0.0, 2.0), 1: (-1.0, 0.0), 2: (1.0, 0.0), 3: (1.0, -1.0), 4: (-1.0, -1.0),
        5: (-1.5, -2.5), 6: (0.0, -3.0), 7: (1.5, -2.5),
    }
    edges = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6), (6, 7), (7, 3)]
    return straight_line(pos, edges)
