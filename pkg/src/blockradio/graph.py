"""Graph representation, distances, block decomposition and block-graph tests.

Vertices are the dense integers ``0..p-1``.  The text format shared with the
CLI is::

    # comment
    4
    0 1
    1 2
    2 3

i.e. the vertex count on the first non-comment line followed by one
whitespace-separated edge per line.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphFormatError, NotBlockGraphError, NotConnectedError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..p-1``.

    Construct with :meth:`from_edges`; the adjacency tuple is validated for
    symmetry and absence of loops.  Connectivity is checked lazily by
    :func:`all_pairs_distance`, which every downstream operation calls.
    """

    p: int
    adj: tuple[frozenset[int], ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.p < 1 or len(self.adj) != self.p:
            raise GraphFormatError(f"adjacency has {len(self.adj)} rows for p={self.p}")
        for u, nbrs in enumerate(self.adj):
            if u in nbrs:
                raise GraphFormatError(f"self-loop at vertex {u}")
            for v in nbrs:
                if not 0 <= v < self.p:
                    raise GraphFormatError(f"vertex {v} out of range 0..{self.p - 1}")
                if u not in self.adj[v]:
                    raise GraphFormatError(f"adjacency not symmetric for edge {u}-{v}")

    @classmethod
    def from_edges(cls, p: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(p)]
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < p and 0 <= v < p):
                raise GraphFormatError(f"edge {u}-{v} out of range for p={p}")
            if v in nbrs[u]:
                raise GraphFormatError(f"duplicate edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(p, tuple(frozenset(s) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.p) for v in sorted(self.adj[u]) if u < v]

    @property
    def n_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return all_pairs_distance(self)

    @cached_property
    def blocks(self) -> "BlockDecomposition":
        return block_decomposition(self)

    @cached_property
    def _geodesic_trees(self) -> dict[int, tuple[list[int], list[int]]]:
        return {}

    def _bfs_tree(self, s: int) -> tuple[list[int], list[int]]:
        """Predecessors and (capped) shortest-path counts from ``s``."""
        cache = self._geodesic_trees
        if s not in cache:
            pred = [-1] * self.p
            count = [0] * self.p
            dist = [-1] * self.p
            dist[s] = 0
            count[s] = 1
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in sorted(self.adj[x]):
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        pred[y] = x
                        count[y] = count[x]
                        queue.append(y)
                    elif dist[y] == dist[x] + 1:
                        count[y] = min(2, count[y] + count[x])
            cache[s] = (pred, count)
        return cache[s]


@dataclass(frozen=True)
class DistanceMatrix:
    dist: np.ndarray = field(repr=False)
    diameter: int

    def __getitem__(self, key: tuple[int, int]) -> int:
        return int(self.dist[key])


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks as vertex sets, sorted by their smallest vertex then lexicographically."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]

    @cached_property
    def _edge_index(self) -> dict[tuple[int, int], int]:
        index = {}
        for i, b in enumerate(self.blocks):
            for u in b:
                for v in b:
                    if u < v:
                        index[(u, v)] = i
        return index

    def block_of(self, u: int, v: int) -> int:
        """Index of the unique block containing edge ``uv`` (any vertex pair of a block)."""
        try:
            return self._edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise KeyError(f"no block contains {u}-{v}") from None

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


def all_pairs_distance(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; raises :class:`NotConnectedError` on disconnected input."""
    from . import kernels

    indptr = [0]
    indices: list[int] = []
    for nbrs in g.adj:
        indices.extend(sorted(nbrs))
        indptr.append(len(indices))
    dist = np.asarray(kernels.get_backend().bfs_all(indptr, indices, g.p), dtype=np.int64)
    if (dist < 0).any():
        raise NotConnectedError("not connected")
    dist.setflags(write=False)
    return DistanceMatrix(dist, int(dist.max()))


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components by the iterative Hopcroft-Tarjan edge-stack DFS."""
    p = g.p
    if p == 1:
        return BlockDecomposition((frozenset({0}),), frozenset())
    disc = [-1] * p
    low = [0] * p
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(p):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y == parent:
                    continue
                if disc[y] < 0:
                    disc[y] = low[y] = timer
                    timer += 1
                    edge_stack.append((x, y))
                    stack.append((y, x, iter(sorted(g.adj[y]))))
                    if x == root:
                        root_children += 1
                    advanced = True
                    break
                if disc[y] < disc[x]:
                    edge_stack.append((x, y))
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[x])
            if low[x] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, x):
                        break
                blocks.append(frozenset(comp))
        if root_children > 1:
            cuts.add(root)
    blocks.sort(key=lambda b: sorted(b))
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


def is_block_graph(g: Graph) -> bool:
    """True iff ``g`` is connected and every block induces a clique."""
    g.distances  # raises on disconnected input
    for b in g.blocks.blocks:
        for u in b:
            if len(g.adj[u] & b) != len(b) - 1:
                return False
    return True


def geodesic(g: Graph, u: int, v: int) -> list[int]:
    """The unique shortest ``(u, v)``-path; raises if it is not unique."""
    g.distances
    pred, count = g._bfs_tree(u)
    if count[v] != 1:
        raise NotBlockGraphError(f"shortest {u}-{v} path is not unique; not a block graph")
    path = [v]
    while path[-1] != u:
        path.append(pred[path[-1]])
    path.reverse()
    return path


def on_geodesic(g: Graph, u: int, v: int) -> frozenset[int]:
    return frozenset(geodesic(g, u, v))


# ---------------------------------------------------------------------------
# text format


def parse_graph(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty graph file")
    try:
        p = int(lines[0])
    except ValueError:
        raise GraphFormatError(f"first line must be the vertex count, got {lines[0]!r}") from None
    if p < 1:
        raise GraphFormatError("vertex count must be positive")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {ln!r}") from None
    return Graph.from_edges(p, edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(str(g.p))
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# small named graphs used throughout tests and examples


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the center at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph.from_edges(g.p, [(perm[u], perm[v]) for u, v in g.edges()])
