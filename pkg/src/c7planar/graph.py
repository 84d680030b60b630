"""Simple undirected graphs on dense integer vertex ids.

Vertices are ``0..n-1``.  Edges are stored as sorted pairs ``(u, v)`` with
``u < v``.  Graphs are immutable values; "deletions" build a new graph and
return the id map that was used.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or operations outside their domain."""


class ParseError(GraphError):
    """Malformed text input; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with adjacency sets."""

    __slots__ = ("_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError("negative order")
        adj: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if v in adj[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self._edges = tuple(sorted((u, v) for u in range(n) for v in adj[u] if u < v))

    # -- basic queries -------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._adj)

    n = order

    @property
    def size(self) -> int:
        return len(self._edges)

    m = size

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def min_degree(self) -> int:
        if not self._adj:
            raise GraphError("empty graph has no minimum degree")
        return min(len(a) for a in self._adj)

    def degree_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = defaultdict(int)
        for a in self._adj:
            hist[len(a)] += 1
        return dict(sorted(hist.items()))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._edges) ^ len(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.order}, m={self.size})"

    # -- derived graphs ------------------------------------------------

    def delete_vertices(self, doomed: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Rebuild without ``doomed``; returns the new graph and old->new id map."""
        dead = set(doomed)
        keep = [v for v in range(self.order) if v not in dead]
        idmap = {v: i for i, v in enumerate(keep)}
        edges = [(idmap[u], idmap[v]) for u, v in self._edges if u in idmap and v in idmap]
        return Graph(len(keep), edges), idmap

    def edge_subgraph(self, edges: Iterable[Edge]) -> tuple["Graph", dict[int, int]]:
        """Graph spanned by ``edges`` with vertices relabelled densely in id order."""
        edges = sorted(norm_edge(*e) for e in edges)
        verts = sorted({v for e in edges for v in e})
        idmap = {v: i for i, v in enumerate(verts)}
        return Graph(len(verts), [(idmap[u], idmap[v]) for u, v in edges]), idmap

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for s in range(self.order):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    # -- text format ---------------------------------------------------

    def to_edge_list(self) -> str:
        lines = [f"{self.order} {self.size}"]
        lines.extend(f"{u} {v}" for u, v in self._edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> "Graph":
        """Parse the ``n m`` / ``u v`` edge-list format (``#`` comments allowed)."""
        rows: list[tuple[int, list[str]]] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if line:
                rows.append((lineno, line.split()))
        if not rows:
            raise ParseError("missing header 'n m'", 1)
        lineno, header = rows[0]
        if len(header) != 2:
            raise ParseError("header must be 'n m'", lineno)
        try:
            n, m = int(header[0]), int(header[1])
        except ValueError:
            raise ParseError("header must hold two integers", lineno) from None
        if n < 0 or m < 0:
            raise ParseError("negative counts in header", lineno)
        if len(rows) - 1 != m:
            raise ParseError(f"header promises {m} edges, found {len(rows) - 1}", lineno)
        edges = []
        seen = set()
        for lineno, parts in rows[1:]:
            if len(parts) != 2:
                raise ParseError("edge line must be 'u v'", lineno)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno) from None
            if not (0 <= u < v < n):
                raise ParseError(f"edge must satisfy 0 <= u < v < n, got {u} {v}", lineno)
            if (u, v) in seen:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            seen.add((u, v))
            edges.append((u, v))
        return cls(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


# ---------------------------------------------------------------------------
# Preconditions


@dataclass(frozen=True)
class PreconditionReport:
    min_degree: int
    min_adjacent_degree_sum: Optional[int]
    is_two_connected: bool

    def satisfies_main_hypotheses(self) -> bool:
        """Minimum degree 3, adjacent degree sums at least 7, 2-connected."""
        return (
            self.min_degree >= 3
            and self.min_adjacent_degree_sum is not None
            and self.min_adjacent_degree_sum >= 7
            and self.is_two_connected
        )


def is_two_connected(g: Graph) -> bool:
    """Connected, at least 3 vertices and no cut vertex."""
    if g.order < 3 or not g.is_connected():
        return False
    return not articulation_points(g)


def validate_preconditions(g: Graph) -> PreconditionReport:
    if g.order == 0:
        raise GraphError("empty graph")
    deg = g.degrees()
    sums = [deg[u] + deg[v] for u, v in g.edges]
    return PreconditionReport(
        min_degree=min(deg),
        min_adjacent_degree_sum=min(sums) if sums else None,
        is_two_connected=is_two_connected(g),
    )


# ---------------------------------------------------------------------------
# Cycles and cliques


def _paths_from(adj, s: int, length: int):
    """Simple paths of exactly ``length`` edges from ``s`` through vertices > s.

    Yields ``(path, interior_mask)`` in lowest-id-first order.
    """
    path = [s]

    def rec(u: int, used: int):
        if len(path) - 1 == length:
            yield path, used & ~(1 << s) & ~(1 << u)
            return
        for w in adj[u]:
            if w > s and not (used >> w) & 1:
                path.append(w)
                yield from rec(w, used | (1 << w))
                path.pop()

    yield from rec(s, 1 << s)


def find_cycle(g: Graph, k: int) -> Optional[list[int]]:
    """Return the vertices of some cycle of exactly ``k`` vertices, or ``None``.

    The cycle is reported starting from its smallest vertex.  Search runs
    from each start vertex ``s`` in increasing order over vertices larger
    than ``s``, splitting the cycle into two internally disjoint ``s``-``t``
    paths of lengths ``k // 2`` and ``k - k // 2``.  Neighbours are visited
    lowest id first, so witnesses are reproducible.
    """
    if k < 3:
        raise GraphError("cycle length must be at least 3")
    n = g.order
    if k > n or g.size < k:
        return None
    adj = [sorted(a) for a in g.adjacency]
    short, long_ = k // 2, k - k // 2
    for s in range(n):
        if len(adj[s]) < 2:
            continue
        by_end: dict[int, list[tuple[int, tuple[int, ...]]]] = defaultdict(list)
        for p, interior in _paths_from(adj, s, short):
            by_end[p[-1]].append((interior, tuple(p)))
        if not by_end:
            continue
        for p, interior in _paths_from(adj, s, long_):
            for other, q in by_end.get(p[-1], ()):
                if other & interior == 0:
                    return list(q) + list(reversed(p[1:-1]))
    return None


def is_cycle_in(g: Graph, cycle: Sequence[int]) -> bool:
    """True when ``cycle`` lists distinct vertices forming a closed walk in ``g``."""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def contains_clique4(g: Graph) -> bool:
    adj = g.adjacency
    for u, v in g.edges:
        common = sorted(w for w in adj[u] & adj[v] if w > v)
        for i, a in enumerate(common):
            for b in common[i + 1:]:
                if b in adj[a]:
                    return True
    return False


# ---------------------------------------------------------------------------
# Biconnected blocks


def _dfs_lowpoints(g: Graph):
    """Iterative Hopcroft-Tarjan pass.  Yields edge blocks and articulation points."""
    n = g.order
    adj = [sorted(a) for a in g.adjacency]
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[Edge]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            pushed = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append(norm_edge(u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(adj[w])))
                    pushed = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append(norm_edge(u, w))
                    low[u] = min(low[u], disc[w])
            if pushed:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
                top = norm_edge(parent, u)
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == top:
                        break
                blocks.append(sorted(block))
        if root_children > 1:
            cuts.add(root)
    return blocks, cuts


def articulation_points(g: Graph) -> set[int]:
    return _dfs_lowpoints(g)[1]


def biconnected_blocks(g: Graph) -> list[tuple[Edge, ...]]:
    """Edge sets of the maximal 2-connected subgraphs and bridges.

    Every edge lands in exactly one block; blocks are sorted by their
    smallest edge.  Isolated vertices belong to no block.
    """
    blocks, _ = _dfs_lowpoints(g)
    return sorted((tuple(b) for b in blocks), key=lambda b: b[0])


def block_vertex_count(block: Iterable[Edge]) -> int:
    return len({v for e in block for v in e})
