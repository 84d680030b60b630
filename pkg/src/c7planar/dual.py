"""Dual graph in which T3 blocks and small block sets act as single faces."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .blocks import EIGHT, BlockAnalysis, analyze
from .embedding import Embedding
from .graph import GraphError

FACE = "face"
T3 = "t3"
LARGE = "large"
SMALL_SET = "sbs"
BLOCK_KINDS = (T3, LARGE)


@dataclass(frozen=True)
class DualNode:
    kind: str
    ref: int
    length: Optional[int] = None

    @property
    def name(self) -> str:
        return f"{self.kind}{self.ref}"


@dataclass(frozen=True)
class DualGraph:
    """Multigraph on dual nodes.  ``edges`` are index pairs, repeated for
    every primal edge shared between two nodes."""

    nodes: tuple[DualNode, ...]
    edges: tuple[tuple[int, int], ...]
    reduced: bool = False
    removed_parallel: int = 0

    def multiplicities(self) -> Counter:
        return Counter(self.edges)

    def has_parallel_edges(self) -> bool:
        return any(c > 1 for c in self.multiplicities().values())

    def degree(self, i: int) -> int:
        return sum((a == i) + (b == i) for a, b in self.edges)

    def is_bipartite(self) -> bool:
        """Every edge joins a block node to a face or small-set node."""
        for a, b in self.edges:
            ka, kb = self.nodes[a].kind, self.nodes[b].kind
            if (ka in BLOCK_KINDS) == (kb in BLOCK_KINDS):
                return False
        return True

    def components(self) -> list[list[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.nodes))}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen: set[int] = set()
        out = []
        for s in range(len(self.nodes)):
            if s in seen:
                continue
            seen.add(s)
            comp, stack = [s], [s]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def component_counts(self) -> list[tuple[int, int]]:
        """``(vertices, edges)`` per connected component."""
        comp_of = {}
        comps = self.components()
        for i, c in enumerate(comps):
            for v in c:
                comp_of[v] = i
        ecount = Counter(comp_of[a] for a, _ in self.edges)
        return [(len(c), ecount.get(i, 0)) for i, c in enumerate(comps)]

    def to_dot(self, name: str = "dual") -> str:
        lines = [f"graph {name} {{"]
        for n in self.nodes:
            label = f"{n.name} ({n.length})" if n.kind == FACE else n.name
            shape = "box" if n.kind in BLOCK_KINDS else "ellipse"
            lines.append(f'  {n.name} [label="{label}", shape={shape}];')
        for a, b in self.edges:
            lines.append(f"  {self.nodes[a].name} -- {self.nodes[b].name};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_dual(emb: Embedding, analysis: Optional[BlockAnalysis] = None) -> DualGraph:
    """Dual multigraph over faces, T3/large blocks and small block sets.

    Faces inside a T3 or large block collapse into that block's node;
    faces of a small block set (its blocks' triangles and captured faces)
    collapse into the set's node.  Every other face is its own node.
    """
    an = analysis or analyze(emb)
    if an.emb is not emb and an.emb != emb:
        raise GraphError("block analysis was computed for a different embedding")
    unit_of_face: dict[int, DualNode] = {}
    nodes: list[DualNode] = []
    for b in an.blocks:
        if an.large[b.id]:
            node = DualNode(T3 if an.labels[b.id] == "T3" else LARGE, b.id)
            nodes.append(node)
            for fid in b.faces:
                unit_of_face[fid] = node
    for sid, s in enumerate(an.sets):
        node = DualNode(SMALL_SET, sid)
        nodes.append(node)
        for bid in s.blocks:
            for fid in an.blocks[bid].faces:
                unit_of_face[fid] = node
        for fid in s.captured_faces:
            unit_of_face[fid] = node
    for f in emb.faces:
        if f.id not in unit_of_face:
            node = DualNode(FACE, f.id, f.length)
            nodes.append(node)
            unit_of_face[f.id] = node
    index = {n: i for i, n in enumerate(nodes)}
    edges = []
    for u, v in emb.graph.edges:
        a, b = emb.edge_faces(u, v)
        na, nb = index[unit_of_face[a]], index[unit_of_face[b]]
        if na != nb:
            edges.append((min(na, nb), max(na, nb)))
    return DualGraph(tuple(nodes), tuple(sorted(edges)))


def reduce_dual(d: DualGraph) -> DualGraph:
    """Drop small-set nodes and faces shorter than 8, then collapse parallel edges.

    Each group of parallel edges keeps one edge; ``removed_parallel``
    records how many were dropped.
    """
    keep = [
        i for i, n in enumerate(d.nodes)
        if n.kind in BLOCK_KINDS or (n.kind == FACE and n.length is not None and n.length >= EIGHT)
    ]
    new_index = {old: new for new, old in enumerate(keep)}
    kept = [(new_index[a], new_index[b]) for a, b in d.edges if a in new_index and b in new_index]
    simple = sorted(set(kept))
    return DualGraph(
        tuple(d.nodes[i] for i in keep),
        tuple(simple),
        reduced=True,
        removed_parallel=d.removed_parallel + len(kept) - len(simple),
    )
