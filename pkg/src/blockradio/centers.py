"""Weight centers, levels, branches and the geodesic parameters of block graphs.

A block graph is viewed as rooted at its *central vertices*: the unique
weight center, or every vertex of the block containing all weight centers.
Each non-central vertex has a unique nearest central vertex (its *anchor*),
a unique parent, and belongs to exactly one branch, identified by the pair
(anchor, block through which the branch leaves the anchor).

Ancestors are endpoint-inclusive: a vertex is its own ancestor, and its
anchor is an ancestor of it.  A central vertex has only itself as ancestor.
Under this convention ``L(u) + L(v) + delta - 2*phi - rho`` reproduces the
BFS distance for every pair of every block graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import NotBlockGraphError, RadioError
from .graph import DistanceMatrix, Graph, geodesic, is_block_graph


@dataclass(frozen=True)
class CenterInfo:
    wt: tuple[int, ...]
    weight_centers: frozenset[int]
    central_block: int | None
    central_vertices: frozenset[int]
    epsilon: int


@dataclass(frozen=True)
class LevelStructure:
    level: tuple[int, ...]
    total_level: int
    branch_of: tuple[int | None, ...]
    branch_anchor: tuple[tuple[int, int], ...]
    parent: tuple[int | None, ...]
    central_vertices: frozenset[int]

    @property
    def max_level(self) -> int:
        return max(self.level)

    def is_central(self, v: int) -> bool:
        return v in self.central_vertices

    def anchor(self, v: int) -> int:
        """Nearest central vertex of ``v``."""
        while self.parent[v] is not None:
            v = self.parent[v]
        return v

    def ancestors(self, v: int) -> tuple[int, ...]:
        """Chain ``v, parent(v), ..., anchor(v)``."""
        chain = [v]
        while self.parent[chain[-1]] is not None:
            chain.append(self.parent[chain[-1]])
        return tuple(chain)

    @cached_property
    def _ancestor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.ancestors(v)) for v in range(len(self.level)))

    @property
    def epsilon(self) -> int:
        return 1 if len(self.central_vertices) == 1 else 0

    @cached_property
    def ancestor_table(self) -> np.ndarray:
        """``A[v, l]`` is the ancestor of ``v`` at level ``l`` (``-1`` beyond ``L(v)``)."""
        p = len(self.level)
        table = np.full((p, self.max_level + 1), -1, dtype=np.int64)
        for v in range(p):
            for x in self.ancestors(v):
                table[v, self.level[x]] = x
        table.setflags(write=False)
        return table

    @cached_property
    def branch_array(self) -> np.ndarray:
        """Branch id per vertex, ``-1`` for central vertices."""
        arr = np.array([-1 if b is None else b for b in self.branch_of], dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def is_descendant(self, v: int, u: int) -> bool:
        """True iff ``v != u`` and ``u`` is an ancestor of ``v``."""
        return v != u and u in self._ancestor_sets[v]

    def same_branch(self, u: int, v: int) -> bool:
        b = self.branch_of[u]
        return b is not None and b == self.branch_of[v]


@dataclass(frozen=True)
class GeoParams:
    phi: int
    delta: int
    rho: int


def compute_centers(g: Graph, d: DistanceMatrix) -> CenterInfo:
    if not is_block_graph(g):
        raise NotBlockGraphError("not a block graph")
    wt = tuple(int(x) for x in d.dist.sum(axis=1))
    best = min(wt)
    centers = frozenset(v for v in range(g.p) if wt[v] == best)
    if len(centers) == 1:
        return CenterInfo(wt, centers, None, centers, 1)
    containing = [i for i, b in enumerate(g.blocks.blocks) if centers <= b]
    if len(containing) != 1:
        # weight centers of a block graph always share a block
        raise NotBlockGraphError("not a block graph: weight centers not within one block")
    cb = containing[0]
    return CenterInfo(wt, centers, cb, g.blocks.blocks[cb], 0)


def closer_count(g: Graph, d: DistanceMatrix, v: int, u: int) -> int:
    """``n(v, u)``: number of vertices strictly closer to ``v`` than to ``u``."""
    if v == u:
        raise RadioError("closer_count needs two distinct vertices")
    return int((d.dist[v] < d.dist[u]).sum())


def levels_and_branches(g: Graph, ci: CenterInfo) -> LevelStructure:
    d = g.distances.dist
    central = ci.central_vertices
    cl = sorted(central)
    level = tuple(int(x) for x in d[:, cl].min(axis=1))

    parent: list[int | None] = [None] * g.p
    for v in range(g.p):
        if level[v] == 0:
            continue
        ups = [x for x in g.adj[v] if level[x] == level[v] - 1]
        if len(ups) != 1:
            raise NotBlockGraphError(f"vertex {v} has {len(ups)} parents; not a block graph")
        parent[v] = ups[0]

    blocks = g.blocks
    keys: dict[int, tuple[int, int]] = {}
    for v in range(g.p):
        if level[v] == 0:
            continue
        top = v
        while level[top] > 1:
            top = parent[top]
        w = parent[top]
        keys[v] = (w, blocks.block_of(w, top))
    anchors = tuple(sorted(set(keys.values())))
    index = {k: i for i, k in enumerate(anchors)}
    branch_of = tuple(index[keys[v]] if v in keys else None for v in range(g.p))
    return LevelStructure(level, sum(level), branch_of, anchors, tuple(parent), central)


def geo_params(g: Graph, ls: LevelStructure, u: int, v: int) -> GeoParams:
    """``phi``, ``delta`` and ``rho`` read off the actual ``(u, v)``-geodesic."""
    if u == v:
        raise RadioError("geo_params needs two distinct vertices")
    path = set(geodesic(g, u, v))
    common = ls._ancestor_sets[u] & ls._ancestor_sets[v]
    phi = max((ls.level[x] for x in common), default=0)
    n_central = len(path & ls.central_vertices)
    delta = 1 if n_central >= 2 else 0
    rho = 0 if n_central or (path & common) else 1
    return GeoParams(phi, delta, rho)


def phi_pairs(ls: LevelStructure, us, vs) -> np.ndarray:
    """Deepest common-ancestor level for each pair ``(us[i], vs[i])``; 0 if none."""
    A = ls.ancestor_table
    a, b = A[np.asarray(us)], A[np.asarray(vs)]
    shared = ((a == b) & (a >= 0)).sum(axis=1)
    return np.maximum(shared - 1, 0)


def geo_params_fast(ls: LevelStructure, d: DistanceMatrix, u: int, v: int) -> GeoParams:
    """Same values as :func:`geo_params`, from ancestor chains and distances.

    Geodesics in a block graph are unique, so ``x`` lies on ``P_uv`` exactly
    when ``d(u,x) + d(x,v) = d(u,v)``.  A path meeting any common ancestor
    meets the deepest one.
    """
    if u == v:
        raise RadioError("geo_params needs two distinct vertices")
    A = ls.ancestor_table
    au, av = A[u, 0], A[v, 0]
    if au != av:
        return GeoParams(0, 1, 0)
    shared = int(((A[u] == A[v]) & (A[u] >= 0)).sum())
    deepest = int(A[u, shared - 1])
    phi = ls.level[deepest]
    D = d.dist
    on_path = D[u, deepest] + D[deepest, v] == D[u, v]
    return GeoParams(phi, 0, 0 if on_path else 1)


def distance_by_formula(ls: LevelStructure, gp: GeoParams, u: int, v: int) -> int:
    return ls.level[u] + ls.level[v] + gp.delta - 2 * gp.phi - gp.rho


@dataclass(frozen=True)
class Analysis:
    """Everything the bound and certificate code needs about one block graph."""

    graph: Graph
    dist: DistanceMatrix
    centers: CenterInfo
    levels: LevelStructure

    @property
    def p(self) -> int:
        return self.graph.p

    @property
    def diameter(self) -> int:
        return self.dist.diameter

    @property
    def epsilon(self) -> int:
        return self.centers.epsilon

    @property
    def total_level(self) -> int:
        return self.levels.total_level

    def params(self, u: int, v: int) -> GeoParams:
        return geo_params(self.graph, self.levels, u, v)

    def summary(self) -> dict:
        ci, ls = self.centers, self.levels
        return {
            "p": self.p,
            "diameter": self.diameter,
            "epsilon": ci.epsilon,
            "weight": min(ci.wt),
            "weight_centers": sorted(ci.weight_centers),
            "central_block": None if ci.central_block is None else sorted(self.graph.blocks.blocks[ci.central_block]),
            "central_vertices": sorted(ci.central_vertices),
            "levels": list(ls.level),
            "total_level": ls.total_level,
            "branches": [
                {"anchor": w, "block": sorted(self.graph.blocks.blocks[b]),
                 "vertices": [v for v in range(self.p) if ls.branch_of[v] == i]}
                for i, (w, b) in enumerate(ls.branch_anchor)
            ],
        }


def analyze(g: Graph) -> Analysis:
    d = g.distances
    ci = compute_centers(g, d)
    return Analysis(g, d, ci, levels_and_branches(g, ci))
