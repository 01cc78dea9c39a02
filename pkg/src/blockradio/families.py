"""Generators for the named block-graph and tree families.

Every generator returns a :class:`NamedGraph` whose vertex names follow the
sub-index scheme of the corresponding construction, so orderings can be
written down in terms of names and then mapped to ids.

Two families carry explicit optimal orderings (level-wise regular block
graphs and extended stars of blocks).  The tree families exist as inputs
for the line-graph module and only have generators.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, fields
from functools import cached_property
from typing import ClassVar

from .errors import FamilyError, InternalConsistencyError
from .graph import Graph
from .radio import VertexOrdering


@dataclass(frozen=True)
class NamedGraph:
    graph: Graph
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.names) != self.graph.p or len(set(self.names)) != self.graph.p:
            raise InternalConsistencyError("vertex names are not a bijection")

    def id_of(self, name: str) -> int:
        return self._index[name]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {n: v for v, n in enumerate(self.names)}

    def name_map(self) -> dict[str, str]:
        return {str(v): n for v, n in enumerate(self.names)}


class _Builder:
    """Accumulates named vertices and cliques."""

    def __init__(self) -> None:
        self.names: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, name: str) -> int:
        self.names.append(name)
        return len(self.names) - 1

    def clique(self, vs: list[int]) -> None:
        self.edges.extend((a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def build(self) -> NamedGraph:
        return NamedGraph(Graph.from_edges(len(self.names), self.edges), tuple(self.names))


def _sub(base: str, idx) -> str:
    return f"{base}_{','.join(map(str, idx))}"


# ---------------------------------------------------------------------------
# family specs


@dataclass(frozen=True)
class FamilySpec:
    family: ClassVar[str] = ""

    def validate(self) -> None:
        pass

    def to_dict(self) -> dict:
        out = {"family": self.family}
        for k, v in asdict(self).items():
            out[k] = [list(x) for x in v] if k == "pairs" else (list(v) if isinstance(v, tuple) else v)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def label(self) -> str:
        return self.family + "(" + ", ".join(f"{k}={v}" for k, v in asdict(self).items()) + ")"


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


@dataclass(frozen=True)
class LevelWiseRegularBlock(FamilySpec):
    """``G^m_{(k_1,m_1)...(k_r,m_r)}``: clique ``K_m`` then ``r`` layers of
    ``k_i`` copies of ``K_{m_i+1}`` glued at every end vertex."""

    family: ClassVar[str] = "level_wise_block"
    m: int
    pairs: tuple[tuple[int, int], ...]

    def validate(self) -> None:
        _need(self.m >= 1 and self.m != 2, "level_wise_block needs m >= 1 and m != 2")
        _need(len(self.pairs) >= 1, "level_wise_block needs at least one (k, m) pair")
        for k, mi in self.pairs:
            _need(k >= 1 and mi >= 2, "level_wise_block pairs need k_i >= 1 and m_i >= 2")
        if self.m == 1:
            _need(self.pairs[0][0] >= 2, "level_wise_block with m = 1 needs k_1 >= 2")

    @property
    def r(self) -> int:
        return len(self.pairs)

    def _prefix(self) -> list[int]:
        """``P[l] = prod_{i<=l} k_i m_i`` with ``P[0] = 1``."""
        out = [1]
        for k, mi in self.pairs:
            out.append(out[-1] * k * mi)
        return out


@dataclass(frozen=True)
class PathOfCliques(FamilySpec):
    """``P_{h,n}``: each edge of ``P_{h+1}`` grown into a ``K_n``."""

    family: ClassVar[str] = "path_of_cliques"
    h: int
    n: int

    def validate(self) -> None:
        _need(self.h >= 1 and self.n >= 2, "path_of_cliques needs h >= 1 and n >= 2")


@dataclass(frozen=True)
class ExtendedStar(FamilySpec):
    """``S^m_{k,h,n}``: ``k`` copies of ``P_{h,n}`` glued by a tail at each vertex of ``K_m``."""

    family: ClassVar[str] = "extended_star"
    m: int
    k: int
    h: int
    n: int

    def validate(self) -> None:
        _need(self.m >= 1 and self.k >= 1 and self.h >= 1 and self.n >= 2,
              "extended_star needs m, k, h >= 1 and n >= 2")
        if self.m == 1:
            _need(self.k >= 3, "extended_star with m = 1 needs k >= 3")


@dataclass(frozen=True)
class TreePath(FamilySpec):
    family: ClassVar[str] = "tree_path"
    n: int

    def validate(self) -> None:
        _need(self.n >= 2, "tree_path needs n >= 2")


@dataclass(frozen=True)
class TreeStar(FamilySpec):
    """``K_{1,n}``."""

    family: ClassVar[str] = "tree_star"
    n: int

    def validate(self) -> None:
        _need(self.n >= 1, "tree_star needs n >= 1")


@dataclass(frozen=True)
class CompleteMAry(FamilySpec):
    """Root of degree ``m``; every other internal vertex has ``m`` children; height ``h``."""

    family: ClassVar[str] = "complete_mary"
    h: int
    m: int

    def validate(self) -> None:
        _need(self.h >= 1 and self.m >= 3, "complete_mary needs h >= 1 and m >= 3")


@dataclass(frozen=True)
class LevelWiseRegularTree(FamilySpec):
    """``T^1`` or ``T^2``: vertices at distance ``i`` from the root(s) have degree ``m_i``."""

    family: ClassVar[str] = "level_wise_tree"
    roots: int
    degrees: tuple[int, ...]

    def validate(self) -> None:
        _need(self.roots in (1, 2), "level_wise_tree needs roots in {1, 2}")
        _need(len(self.degrees) >= 1, "level_wise_tree needs at least one degree")
        _need(all(x >= 2 for x in self.degrees), "level_wise_tree needs every degree m_i >= 2")

    @property
    def h(self) -> int:
        return len(self.degrees)

    def children(self, level: int) -> int:
        if level == 0:
            return self.degrees[0] - (self.roots - 1)
        return self.degrees[level] - 1


@dataclass(frozen=True)
class Banana(FamilySpec):
    """``B(n,k) = T^1_{n,2,k-1}``."""

    family: ClassVar[str] = "banana"
    n: int
    k: int

    def validate(self) -> None:
        _need(self.n >= 2 and self.k >= 3, "banana needs n >= 2 and k >= 3")

    def as_level_wise(self) -> LevelWiseRegularTree:
        return LevelWiseRegularTree(1, (self.n, 2, self.k - 1))


@dataclass(frozen=True)
class Firecracker(FamilySpec):
    """``n`` copies of ``K_{1,k-1}``, one leaf of each glued to a vertex of ``P_n``."""

    family: ClassVar[str] = "firecracker"
    n: int
    k: int

    def validate(self) -> None:
        _need(self.n >= 2 and self.k >= 3, "firecracker needs n >= 2 and k >= 3")


@dataclass(frozen=True)
class Caterpillar(FamilySpec):
    """``C(n,k)``: spine of ``n-2`` vertices (length ``n-3``), all of degree ``k``.

    ``n = 3`` degenerates to the star ``K_{1,k}``.
    """

    family: ClassVar[str] = "caterpillar"
    n: int
    k: int

    def validate(self) -> None:
        _need(self.n >= 3 and self.k >= 3, "caterpillar needs n >= 3 and k >= 3")


FAMILIES: dict[str, type[FamilySpec]] = {
    cls.family: cls
    for cls in (LevelWiseRegularBlock, PathOfCliques, ExtendedStar, TreePath, TreeStar,
                CompleteMAry, LevelWiseRegularTree, Banana, Firecracker, Caterpillar)
}


def spec_from_dict(d: dict) -> FamilySpec:
    d = dict(d)
    name = d.pop("family", None)
    if name not in FAMILIES:
        raise FamilyError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}")
    cls = FAMILIES[name]
    allowed = {f.name for f in fields(cls)}
    if set(d) != allowed:
        raise FamilyError(f"{name} takes parameters {sorted(allowed)}, got {sorted(d)}")
    try:
        if "pairs" in d:
            d["pairs"] = tuple((int(k), int(m)) for k, m in d["pairs"])
        if "degrees" in d:
            d["degrees"] = tuple(int(x) for x in d["degrees"])
        kwargs = {k: (v if k in ("pairs", "degrees") else int(v)) for k, v in d.items()}
    except (TypeError, ValueError) as exc:
        raise FamilyError(f"bad parameter for {name}: {exc}") from None
    spec = cls(**kwargs)
    spec.validate()
    return spec


def parse_spec(text: str) -> FamilySpec:
    """JSON object, or shorthand ``extended_star m=3 k=2 h=2 n=4``.

    In shorthand, ``pairs=1:3,1:3`` and ``degrees=3,3,3`` give the list parameters.
    """
    text = text.strip()
    if text.startswith("{"):
        try:
            return spec_from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FamilyError(f"family spec is not valid JSON: {exc}") from None
    parts = text.split()
    if not parts:
        raise FamilyError("empty family spec")
    d: dict = {"family": parts[0]}
    for tok in parts[1:]:
        key, sep, val = tok.partition("=")
        if not sep:
            raise FamilyError(f"expected key=value, got {tok!r}")
        if key == "pairs":
            try:
                d[key] = [tuple(x.split(":")) for x in val.split(",")]
            except ValueError:
                raise FamilyError(f"bad pairs value {val!r}") from None
            if any(len(x) != 2 for x in d[key]):
                raise FamilyError("pairs are written k:m, comma separated")
        elif key == "degrees":
            d[key] = val.split(",")
        else:
            d[key] = val
    return spec_from_dict(d)


# ---------------------------------------------------------------------------
# generators


def _gen_level_wise_block(s: LevelWiseRegularBlock) -> NamedGraph:
    b = _Builder()
    roots = [b.add(f"w^{t}") for t in range(s.m)]
    b.clique(roots)
    frontier = [(v, t, ()) for t, v in enumerate(roots)]
    for k, mi in s.pairs:
        nxt = []
        for v, t, idx in frontier:
            kids = [b.add(_sub(f"w^{t}", idx + (a,))) for a in range(k * mi)]
            for blk in range(k):
                b.clique([v] + kids[blk::k])
            nxt.extend((c, t, idx + (a,)) for a, c in enumerate(kids))
        frontier = nxt
    return b.build()


def _attach_path_of_cliques(b: _Builder, tail: int, h: int, n: int, name) -> None:
    """Grow ``P_{h,n}`` from ``tail``; level ``i`` vertices are ``name(i, j)``,
    ``j = n-1`` being the path vertex."""
    prev = tail
    for i in range(1, h + 1):
        layer = [b.add(name(i, j)) for j in range(1, n)]
        b.clique([prev] + layer)
        prev = layer[-1]


def _gen_path_of_cliques(s: PathOfCliques) -> NamedGraph:
    b = _Builder()
    x0 = b.add("x_0")
    _attach_path_of_cliques(b, x0, s.h, s.n, lambda i, j: f"x_{i}" if j == s.n - 1 else f"w_{i},{j}")
    return b.build()


def _gen_extended_star(s: ExtendedStar) -> NamedGraph:
    b = _Builder()
    roots = [b.add(f"w^{i}") for i in range(1, s.m + 1)]
    b.clique(roots)
    for l in range(1, s.m * s.k + 1):
        anchor = roots[(l - 1) % s.m]
        _attach_path_of_cliques(b, anchor, s.h, s.n, lambda i, j, l=l: f"w^{l}_{i},{j}")
    return b.build()


def _gen_level_tree(roots: int, child_counts: list[int]) -> NamedGraph:
    b = _Builder()
    tops = [b.add("w"), b.add("w'")] if roots == 2 else [b.add("w")]
    if roots == 2:
        b.edges.append((0, 1))
    frontier = [(v, (), t) for t, v in enumerate(tops)]
    for c in child_counts:
        nxt = []
        for v, idx, t in frontier:
            for a in range(c):
                base = "w" if t == 0 else "w'"
                u = b.add(_sub(base, idx + (a,)))
                b.edges.append((v, u))
                nxt.append((u, idx + (a,), t))
        frontier = nxt
    return b.build()


def _gen_tree_path(s: TreePath) -> NamedGraph:
    b = _Builder()
    vs = [b.add(f"x_{i}") for i in range(s.n)]
    b.edges.extend(zip(vs, vs[1:]))
    return b.build()


def _gen_tree_star(s: TreeStar) -> NamedGraph:
    return _gen_level_tree(1, [s.n])


def _gen_complete_mary(s: CompleteMAry) -> NamedGraph:
    return _gen_level_tree(1, [s.m] * s.h)


def _gen_level_wise_tree(s: LevelWiseRegularTree) -> NamedGraph:
    return _gen_level_tree(s.roots, [s.children(i) for i in range(s.h)])


def _gen_banana(s: Banana) -> NamedGraph:
    return _gen_level_wise_tree(s.as_level_wise())


def _gen_firecracker(s: Firecracker) -> NamedGraph:
    b = _Builder()
    spine = [b.add(f"x_{i}") for i in range(s.n)]
    b.edges.extend(zip(spine, spine[1:]))
    for i, x in enumerate(spine):
        c = b.add(f"c_{i}")
        b.edges.append((x, c))
        for j in range(1, s.k - 1):
            b.edges.append((c, b.add(f"y_{i},{j}")))
    return b.build()


def _gen_caterpillar(s: Caterpillar) -> NamedGraph:
    b = _Builder()
    spine = [b.add(f"x_{i}") for i in range(s.n - 2)]
    b.edges.extend(zip(spine, spine[1:]))
    for i, x in enumerate(spine):
        on_spine = (i > 0) + (i < len(spine) - 1)
        for j in range(s.k - on_spine):
            b.edges.append((x, b.add(f"y_{i},{j}")))
    return b.build()


_GENERATORS = {
    LevelWiseRegularBlock: _gen_level_wise_block,
    PathOfCliques: _gen_path_of_cliques,
    ExtendedStar: _gen_extended_star,
    TreePath: _gen_tree_path,
    TreeStar: _gen_tree_star,
    CompleteMAry: _gen_complete_mary,
    LevelWiseRegularTree: _gen_level_wise_tree,
    Banana: _gen_banana,
    Firecracker: _gen_firecracker,
    Caterpillar: _gen_caterpillar,
}


def generate(spec: FamilySpec) -> NamedGraph:
    spec.validate()
    return _GENERATORS[type(spec)](spec)


# ---------------------------------------------------------------------------
# canonical orderings


def _level_wise_positions(s: LevelWiseRegularBlock) -> dict[str, int]:
    """Position in the ordering of every named vertex."""
    P = s._prefix()
    m, r = s.m, s.r
    total = m * (1 + sum(P[1:]))
    pos = {f"w^{m - 1}": 0}
    for t in range(m - 1):
        pos[f"w^{t}"] = total - m + 1 + t

    def walk(t: int, idx: tuple[int, ...]) -> None:
        l = len(idx)
        if l:
            inner = sum(i * P[s_] for s_, i in enumerate(idx))
            deeper = sum(P[l + 1:r + 1])
            pos[_sub(f"w^{t}", idx)] = m * (inner + deeper) + t + 1
        if l < r:
            k, mi = s.pairs[l]
            for a in range(k * mi):
                walk(t, idx + (a,))

    for t in range(m):
        walk(t, ())
    return pos


def _star_index(s: ExtendedStar, i: int, j: int, l: int) -> int:
    """Index ``t`` with ``w_t = w^l_{i,j}``."""
    m, k, h, n = s.m, s.k, s.h, s.n
    mk = m * k
    if mk % 2 == 0:
        if l % 2 == 0:
            return mk * (i - 1) * (n - 1) + mk * (j - 1) + l
        return mk * (h - i) * (n - 1) + mk * (j - 1) + l
    odd = l % 2 == 1
    if h % 2 == 1:
        c = (h + 1) // 2
        if i < c:
            return 2 * mk * (i - 1) * (n - 1) + 2 * mk * (j - 1) + l + (0 if odd else mk)
        if i == c:
            return 2 * mk * (i - 1) * (n - 1) + mk * (j - 1) + l
        return 2 * mk * (h - i) * (n - 1) + 2 * mk * (j - 1) + l + (mk if odd else 0)
    if i <= h // 2:
        return 2 * mk * (i - 1) * (n - 1) + 2 * mk * (j - 1) + l + (0 if odd else mk)
    return 2 * mk * (h - i) * (n - 1) + 2 * mk * (j - 1) + l + (mk if odd else 0)


def _star_positions(s: ExtendedStar) -> dict[str, int]:
    m, k, h, n = s.m, s.k, s.h, s.n
    p = m * (k * h * (n - 1) + 1)
    pos: dict[str, int] = {}
    for l in range(1, m * k + 1):
        for i in range(1, h + 1):
            for j in range(1, n):
                t = _star_index(s, i, j, l)
                pos[f"w^{l}_{i},{j}"] = t - 1 if m == 1 else t
    if m == 1:
        pos["w^1"] = p - 1
    else:
        pos[f"w^{m}"] = 0
        for c in range(1, m):
            pos[f"w^{c}"] = p - m + c
    return pos


def _to_ordering(ng: NamedGraph, pos: dict[str, int]) -> VertexOrdering:
    p = ng.graph.p
    if len(pos) != p or sorted(pos.values()) != list(range(p)):
        raise InternalConsistencyError("index map is not a bijection onto 0..p-1")
    seq = [0] * p
    for name, i in pos.items():
        seq[i] = ng.id_of(name)
    return VertexOrdering(tuple(seq))


def _check_star_pair_sums(s: ExtendedStar, ng: NamedGraph, order: VertexOrdering) -> None:
    """Consecutive level sums stay within ``(d+3+eps)/2``, with equality at
    most once among the pairs inside any ``mk`` consecutive terms."""
    from .centers import analyze

    an = analyze(ng.graph)
    if an.diameter < 4:
        return
    L = an.levels.level
    cap2 = an.diameter + 3 + an.epsilon
    sums2 = [2 * (L[order[i]] + L[order[i + 1]]) for i in range(len(order) - 1)]
    if any(x > cap2 for x in sums2):
        raise InternalConsistencyError("extended star ordering exceeds the consecutive level cap")
    hits = [1 if x == cap2 else 0 for x in sums2]
    win = s.m * s.k - 1
    if win >= 1:
        for a in range(len(hits) - win + 1):
            if sum(hits[a:a + win]) > 1:
                raise InternalConsistencyError("extended star ordering reaches the level cap twice in one window")


def canonical_ordering(spec: FamilySpec, ng: NamedGraph | None = None) -> VertexOrdering:
    ng = ng or generate(spec)
    if isinstance(spec, LevelWiseRegularBlock):
        return _to_ordering(ng, _level_wise_positions(spec))
    if isinstance(spec, ExtendedStar):
        order = _to_ordering(ng, _star_positions(spec))
        _check_star_pair_sums(spec, ng, order)
        return order
    raise FamilyError(f"no canonical ordering for family {spec.family}")


def closed_form_rn(spec: FamilySpec) -> int:
    spec.validate()
    if isinstance(spec, LevelWiseRegularBlock):
        P = spec._prefix()
        m, r = spec.m, spec.r
        eps = 1 if m == 1 else 0
        return ((m - 1) + m * sum(P[1:])) * (2 * r + 1) - 2 * m * sum(i * P[i] for i in range(1, r + 1)) + eps
    if isinstance(spec, ExtendedStar):
        m, k, h, n = spec.m, spec.k, spec.h, spec.n
        eps = 1 if m == 1 else 0
        return m * k * h * h * (n - 1) + (m - 1) * (2 * h + 1) + eps
    raise FamilyError(f"no closed form for family {spec.family}")


def family_order(spec: FamilySpec) -> int:
    """Vertex count without building the graph (used to cap sweeps)."""
    if isinstance(spec, LevelWiseRegularBlock):
        return spec.m * (1 + sum(spec._prefix()[1:]))
    if isinstance(spec, ExtendedStar):
        return spec.m * (spec.k * spec.h * (spec.n - 1) + 1)
    return generate(spec).graph.p


# ---------------------------------------------------------------------------
# random block graphs


def random_block_graph(seed: int, p: int, max_clique: int) -> Graph:
    """Glue cliques of size ``2..max_clique`` at random existing vertices until
    ``p`` vertices exist.  Deterministic per ``(seed, p, max_clique)``."""
    if p < 2 or max_clique < 2:
        raise FamilyError("random_block_graph needs p >= 2 and max_clique >= 2")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    n = 1
    while n < p:
        at = rng.randrange(n)
        size = min(rng.randint(2, max_clique), p - n + 1)
        members = [at] + list(range(n, n + size - 1))
        n += size - 1
        edges.extend((a, b) for i, a in enumerate(members) for b in members[i + 1:])
    return Graph.from_edges(p, edges)


def random_tree(seed: int, p: int) -> Graph:
    """Uniform random recursive tree: vertex ``v`` attaches to a random earlier vertex."""
    if p < 1:
        raise FamilyError("random_tree needs p >= 1")
    rng = random.Random(seed)
    return Graph.from_edges(p, [(rng.randrange(v), v) for v in range(1, p)])

