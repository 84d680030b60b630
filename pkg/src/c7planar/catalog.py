"""Named triangular-block shapes and isomorphism matching.

Each entry is an edge set together with the set of triangular faces that
belong to the block.  Two blocks match when a vertex bijection carries
edges to edges and faces to faces; the face set matters because some
shapes share an edge set and differ only in which triangles are faces.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Optional

from .graph import Edge, norm_edge

Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class Shape:
    label: str
    vertex_count: int
    edges: tuple[Edge, ...]
    faces: tuple[Triangle, ...]


def _shape(label: str, edges: str, faces: str = "") -> Shape:
    names = sorted({c for tok in (edges + " " + faces).split() for c in tok})
    idx = {c: i for i, c in enumerate(names)}
    es = tuple(sorted({norm_edge(idx[t[0]], idx[t[1]]) for t in edges.split()}))
    fs = tuple(sorted(tuple(sorted(idx[c] for c in t)) for t in faces.split()))
    for f in fs:
        for i in range(3):
            if norm_edge(f[i], f[(i + 1) % 3]) not in es:
                raise ValueError(f"{label}: face {f} uses a missing edge")
    return Shape(label, len(names), es, fs)


# Triangle xyz: three outer corners; the octahedral gadget adds a, b, c on
# the sides xy, yz, zx.
_T3_EDGES = "xy yz zx ab bc ca xa ay yb bz zc cx"
_T3_FACES = "xac yba zcb xya yzb zxc abc"
_B6N_EDGES = "xy yz zx xb xc xa yb zc zb ab bc ca"

SHAPES: tuple[Shape, ...] = (
    _shape("B2", "ab"),
    _shape("B3", "ab bc ca", "abc"),
    _shape("B4a", "ab bc ca bd dc", "abc bcd"),
    _shape("B4b", "ab bc ca oa ob oc", "oab obc oca"),
    _shape("B5a", "oa ab bc cd do ob oc", "oab obc ocd"),
    _shape("B5b", "ab bc ca oa ob oc bd dc", "oab obc oca bcd"),
    _shape("B5c", "ab bc cd da oa ob oc od", "oab obc ocd oda"),
    _shape("B5d", "ab bc ca bp pq pc cq qa ap", "bpc bpa pqc pqa qca"),
    _shape("B5e", "ab bc ca bp pq pc cq qa ap", "bpc bpa pqc qca"),
    _shape("B6a", "ab bc cd de ef fa ec cf fb", "abf bcf cfe cde"),
    _shape("B6b", "ab bc cd de ef fa bf fc fd", "abf bcf cdf def"),
    _shape("B6c", "ab bc cd de ea df fe be ec cf", "abe bce cfe cdf dfe"),
    _shape("B6d", "bc ca ad de eb fe ec cf fd dc", "bce cad cfe cdf fde"),
    _shape("B6e", "ab bc cd de ea oa ob oc od oe", "oab obc ocd ode oea"),
    _shape("B6f", "ab bc cd da oa ob oc od ap pb", "oab obc ocd oda abp"),
    _shape("B6g", "ab bc cd da cf fe ed db be bf fd", "abd bcf cdf bfe bed"),
    _shape("B6h", "ab bc cd da cf fe ed db be ec bf", "abd bcf cfe ced bed"),
    _shape("B6i", "ab bc cd da cf fe ed db be ec bf", "abd bcf bfe ced bed"),
    _shape("B6j", "ab bc cd da cf fe ed df ae ec be", "abe bce aed cdf efd"),
    _shape("B6k", "ab bc cd da fe ea cf fb be ed df", "abe aed bcf cdf edf"),
    _shape("B6l", _T3_EDGES, "xac yba zcb xya yzb zxc"),
    _shape("B6m", _T3_EDGES, "yba zcb xya yzb zxc abc"),
    _shape("B6n", _B6N_EDGES, "xyb xab xac xcz zcb zby"),
    _shape("B6o", _B6N_EDGES, "xyb xab xcz zcb zby abc"),
    _shape("B6p", _B6N_EDGES, "xyb xac xcz zcb zby abc"),
    _shape("B6q", _B6N_EDGES, "xyb xab xac xcz zby abc"),
    _shape("B6r", "xy yz zx xo xa xb oz zb bo oa ay yo", "xbz xbo boz ozy oay xay"),
    _shape("T3", _T3_EDGES, _T3_FACES),
)

SHAPE_BY_LABEL = {s.label: s for s in SHAPES}
MAX_CATALOG_VERTICES = max(s.vertex_count for s in SHAPES)

CanonicalForm = tuple[int, tuple[Edge, ...], tuple[Triangle, ...]]


def canonical_form(
    vertices: Iterable[int], edges: Iterable[Edge], faces: Iterable[Iterable[int]]
) -> CanonicalForm:
    """Lexicographically least relabelling of an (edges, faces) structure.

    Brute force over vertex permutations, restricted to ones that respect
    the (degree, face-degree) signature; intended for at most 6 vertices.
    """
    verts = sorted(set(vertices))
    edges = [tuple(e) for e in edges]
    faces = [tuple(f) for f in faces]
    return _canonical(tuple(verts), tuple(sorted(norm_edge(*e) for e in edges)),
                      tuple(sorted(tuple(sorted(f)) for f in faces)))


@lru_cache(maxsize=4096)
def _canonical(verts, edges, faces) -> CanonicalForm:
    n = len(verts)
    pos = {v: i for i, v in enumerate(verts)}
    es = [(pos[u], pos[v]) for u, v in edges]
    fs = [tuple(pos[v] for v in f) for f in faces]
    sig = [[0, 0] for _ in range(n)]
    for u, v in es:
        sig[u][0] += 1
        sig[v][0] += 1
    for f in fs:
        for v in f:
            sig[v][1] += 1
    # Canonical labels are handed out in decreasing signature order, so
    # only permutations consistent with that ordering need to be tried.
    order = sorted(range(n), key=lambda v: (-sig[v][0], -sig[v][1]))
    groups: list[list[int]] = []
    for v in order:
        if groups and sig[groups[-1][0]] == sig[v]:
            groups[-1].append(v)
        else:
            groups.append([v])
    best = None
    for perm in _group_perms(groups):
        label = {v: i for i, v in enumerate(perm)}
        ce = tuple(sorted(norm_edge(label[u], label[v]) for u, v in es))
        cf = tuple(sorted(tuple(sorted(label[v] for v in f)) for f in fs))
        key = (ce, cf)
        if best is None or key < best:
            best = key
    return (n, best[0], best[1]) if best is not None else (0, (), ())


def _group_perms(groups: list[list[int]]):
    if not groups:
        yield ()
        return
    head, rest = groups[0], groups[1:]
    for p in permutations(head):
        for q in _group_perms(rest):
            yield p + q


@lru_cache(maxsize=1)
def _catalog_index() -> dict[CanonicalForm, str]:
    index: dict[CanonicalForm, str] = {}
    for s in SHAPES:
        key = canonical_form(range(s.vertex_count), s.edges, s.faces)
        index.setdefault(key, s.label)
    return index


def duplicate_shapes() -> list[tuple[str, str]]:
    """Pairs of catalog labels whose structures are isomorphic."""
    seen: dict[CanonicalForm, str] = {}
    dups = []
    for s in SHAPES:
        key = canonical_form(range(s.vertex_count), s.edges, s.faces)
        if key in seen:
            dups.append((seen[key], s.label))
        else:
            seen[key] = s.label
    return dups


def match_shape(
    vertices: Iterable[int], edges: Iterable[Edge], faces: Iterable[Iterable[int]]
) -> Optional[str]:
    verts = set(vertices)
    if len(verts) > MAX_CATALOG_VERTICES:
        return None
    return _catalog_index().get(canonical_form(verts, edges, faces))
