"""Line graphs of trees and labeling transfers between a tree and its line graph.

A line-graph vertex is an edge of the tree, named by its endpoint farther
from the root weight center ``w*`` (its edge descendant).  With two weight
centers the root is the smaller id, so the edge between the centers is named
by the larger one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .centers import Analysis, analyze
from .certificates import certify
from .errors import FamilyError, GraphFormatError, HypothesisError, InternalConsistencyError, RadioError
from .families import Banana, CompleteMAry, FamilySpec, Firecracker, LevelWiseRegularTree, generate
from .graph import Graph
from .radio import RadioLabeling, VertexOrdering, labeling_from_ordering, validate_radio


def _is_tree(t: Graph) -> bool:
    try:
        t.distances
    except RadioError:
        return False
    return t.n_edges == t.p - 1


def _rooted(t: Graph, root: int) -> tuple[list[int], list[int]]:
    """Parent (``-1`` at the root) and depth of every vertex."""
    parent = [-1] * t.p
    depth = [-1] * t.p
    depth[root] = 0
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(t.adj[x]):
            if depth[y] < 0:
                depth[y] = depth[x] + 1
                parent[y] = x
                queue.append(y)
    return parent, depth


@dataclass(frozen=True)
class LineGraphOfTree:
    tree: Graph = field(repr=False)
    graph: Graph = field(repr=False)
    name_of: tuple[int, ...]
    root: int
    tree_parent: tuple[int, ...] = field(repr=False)

    @cached_property
    def line_of(self) -> dict[int, int]:
        """Tree vertex (not the root) to line-graph vertex."""
        return {x: i for i, x in enumerate(self.name_of)}

    def is_tree_descendant(self, a: int, b: int) -> bool:
        """True iff ``a != b`` and ``b`` lies on the root path of ``a``."""
        if a == b:
            return False
        while a != self.root:
            a = self.tree_parent[a]
            if a == b:
                return True
        return False

    @cached_property
    def tree_analysis(self) -> Analysis:
        return analyze(self.tree)

    @cached_property
    def line_analysis(self) -> Analysis:
        return analyze(self.graph)

    def summary(self) -> dict:
        an = self.line_analysis
        return {
            "tree_p": self.tree.p,
            "line_p": self.graph.p,
            "root": self.root,
            "name_of": list(self.name_of),
            "edges": [list(e) for e in self.graph.edges()],
            "tree_weight_centers": sorted(self.tree_analysis.centers.weight_centers),
            "line_weight_centers": sorted(an.centers.weight_centers),
            "line_diameter": an.diameter,
        }


def line_graph_of_tree(t: Graph, root: int | None = None) -> LineGraphOfTree:
    """``root`` defaults to the smaller weight center of ``t``."""
    if t.p < 3:
        raise GraphFormatError("line graph needs a tree with at least 3 vertices")
    if not _is_tree(t):
        raise GraphFormatError("not a tree")
    tan = analyze(t)
    centers = sorted(tan.centers.weight_centers)
    if root is None:
        root = centers[0]
    elif root not in centers:
        raise RadioError(f"root {root} is not a weight center of the tree")
    parent, _ = _rooted(t, root)
    name_of = tuple(v for v in range(t.p) if v != root)
    line = {x: i for i, x in enumerate(name_of)}
    edges = set()
    for x in range(t.p):
        incident = [line[c] for c in t.adj[x] if parent[c] == x]
        if x != root:
            incident.append(line[x])
        edges.update((min(a, b), max(a, b)) for i, a in enumerate(incident) for b in incident[i + 1:])
    lg = Graph.from_edges(t.p - 1, sorted(edges))
    out = LineGraphOfTree(t, lg, name_of, root, tuple(parent))
    if len(centers) == 2 and len(out.line_analysis.centers.weight_centers) != 1:
        raise InternalConsistencyError("two-center tree whose line graph has several weight centers")
    return out


def _single_centers(lt: LineGraphOfTree) -> bool:
    return (len(lt.tree_analysis.centers.weight_centers) == 1
            and len(lt.line_analysis.centers.weight_centers) == 1)


def b_subgraph(t: Graph, lt: LineGraphOfTree) -> frozenset[int]:
    """Line vertices of ``B(T)``: the line center ``w`` and the tree descendants of its name."""
    if not _single_centers(lt):
        raise HypothesisError("B(T) undefined for this center configuration")
    (w,) = lt.line_analysis.centers.weight_centers
    x = lt.name_of[w]
    if lt.tree_parent[x] != lt.root:
        raise InternalConsistencyError("line weight center is not an edge at the tree center")
    members = frozenset({w} | {lt.line_of[v] for v in lt.name_of if lt.is_tree_descendant(v, x)})
    if len(members) > (t.p - 1) // 2:
        raise InternalConsistencyError(f"|B(T)| = {len(members)} exceeds (p-1)/2")
    ls = lt.line_analysis.levels
    branches = {frozenset(v for v in range(lt.graph.p) if ls.branch_of[v] == b) for b in range(len(ls.branch_anchor))}
    expected = {members - {w}, frozenset(range(lt.graph.p)) - members}
    if branches != expected:
        raise InternalConsistencyError("L(T) - w does not split into B(T) - w and L(T) - B(T)")
    return members


def _obs_items(t: Graph, lt: LineGraphOfTree) -> dict[str, bool]:
    tan, lan = lt.tree_analysis, lt.line_analysis
    p = t.p
    dT, dL = tan.dist, lan.dist
    i_ok = lt.graph.p == p - 1 and lan.diameter == tan.diameter - 1

    ii_ok = True
    for a in range(lt.graph.p):
        for b in range(a + 1, lt.graph.p):
            x, y = lt.name_of[a], lt.name_of[b]
            related = lt.is_tree_descendant(x, y) or lt.is_tree_descendant(y, x)
            want = dT[x, y] if related else dT[x, y] - 1
            if dL[a, b] != want:
                ii_ok = False
                break
        if not ii_ok:
            break

    nWT = len(tan.centers.weight_centers)
    nWL = len(lan.centers.weight_centers)
    B = b_subgraph(t, lt) if nWT == 1 and nWL == 1 else frozenset()
    iii_ok = True
    for a in range(lt.graph.p):
        x = lt.name_of[a]
        drop = (nWT == 1 and nWL == 1 and a in B) or nWL >= 2
        if lan.levels.level[a] != tan.levels.level[x] - (1 if drop else 0):
            iii_ok = False
            break

    LT, LL = tan.total_level, lan.total_level
    if nWT == 1 and nWL == 1:
        iv_ok = LL == LT - len(B)
    elif nWT == 1:
        iv_ok = LL == LT - p + 1
    else:
        iv_ok = LL == LT
    return {"i": i_ok, "ii": ii_ok, "iii": iii_ok, "iv": iv_ok}


def line_obs_check(t: Graph, lt: LineGraphOfTree | None = None) -> dict:
    """The four line-graph identities, recomputed from scratch for every choice
    of root (both weight centers when there are two)."""
    if t.p < 3:
        raise GraphFormatError("line graph needs a tree with at least 3 vertices")
    lt = lt or line_graph_of_tree(t)
    per_root = {}
    for r in sorted(lt.tree_analysis.centers.weight_centers):
        per_root[r] = _obs_items(t, lt if r == lt.root else line_graph_of_tree(t, r))
    items = {k: all(res[k] for res in per_root.values()) for k in ("i", "ii", "iii", "iv")}
    return {"items": items, "ok": all(items.values()), "per_root": {str(r): v for r, v in per_root.items()}}


# ---------------------------------------------------------------------------
# transfers


@dataclass(frozen=True)
class TransferReport:
    applicable_case: str
    hypothesis_details: dict
    ordering: VertexOrdering | None = None
    labeling: RadioLabeling | None = None
    span: int | None = None
    source_span: int | None = None

    def to_dict(self) -> dict:
        return {
            "applicable_case": self.applicable_case,
            "hypothesis_details": self.hypothesis_details,
            "ordering": None if self.ordering is None else list(self.ordering.order),
            "labeling": None if self.labeling is None else list(self.labeling.labels),
            "span": self.span,
            "source_span": self.source_span,
        }


def _none(details: dict, reason: str, source_span: int | None = None) -> TransferReport:
    return TransferReport("none", {**details, "reason": reason}, source_span=source_span)


def _certified_span(g: Graph, order: VertexOrdering, an: Analysis) -> int | None:
    rep = certify(g, order, an)
    return rep.span if rep.certified else None


def transfer_to_line(t: Graph, ord_t: VertexOrdering) -> TransferReport:
    """Certified tree ordering with ``L(u_{p-2}) = 1`` to a certified line-graph ordering.

    Cases (i) and (iii) put the tree center first and use
    ``(w, u_1, ..., u_{p-2})``.  Case (ii) puts the tree center last and
    uses ``(u_0, ..., u_{p-2})``.  Both orientations of the supplied ordering
    are tried.
    """
    lt = line_graph_of_tree(t)
    tan, lan = lt.tree_analysis, lt.line_analysis
    p = t.p
    WT, WL = tan.centers.weight_centers, lan.centers.weight_centers
    details: dict = {"p": p, "tree_weight_centers": sorted(WT), "line_weight_centers": sorted(lan.centers.weight_centers),
                     "tree_diameter": tan.diameter}
    if lan.diameter < 2:
        return _none(details, "d(L(T)) < 2: the lower bound is undefined on the line graph")

    if len(WT) == 1 and len(WL) == 1:
        B = b_subgraph(t, lt)
        details["b_size"] = len(B)
        if tan.diameter >= 3 and (p % 2 == 0 or len(B) < (p - 1) // 2):
            return _none(details, "single weight centers with p even or |B(T)| < (p-1)/2: L(T) is not a lower bound graph")
        case = "line4-i"
    elif len(WT) == 1:
        case = "line4-ii"
    else:
        case = "line4-iii"
    details["case_by_centers"] = case

    span_t = _certified_span(t, ord_t, tan)
    if span_t is None:
        return _none(details, "ordering does not certify the tree")

    eps_t = tan.epsilon
    L = tan.levels.level
    attempts = []
    for o in (ord_t, ord_t.reversed()):
        u = list(o.order)
        if case == "line4-ii":
            if u[-1] not in WT:
                attempts.append("tree center is not last")
                continue
            hyp = L[u[p - 2]]
            seq = u[:p - 1]
            mapped = [_parent_edge(lt, x) for x in seq]
        else:
            if u[0] not in WT:
                attempts.append("tree center is not first")
                continue
            hyp = L[u[p - 2]]
            (w,) = WL
            mapped = [w] + [_parent_edge(lt, x) for x in u[1:p - 1]]
        if hyp != 1:
            attempts.append(f"L(u_p-2) = {hyp} != 1")
            continue
        if sorted(mapped) != list(range(lt.graph.p)):
            attempts.append("construction does not give an ordering of V(L(T))")
            continue
        ord_l = VertexOrdering(tuple(mapped))
        span_l = _certified_span(lt.graph, ord_l, lan)
        if span_l is None:
            attempts.append("constructed ordering does not certify L(T)")
            continue
        f = labeling_from_ordering(lt.graph, lan.centers, lan.levels, ord_l)
        if validate_radio(lt.graph, lan.dist, f) is not None:
            raise InternalConsistencyError("certified line ordering induced an invalid labeling")
        want = span_t - tan.diameter + 1 - eps_t
        if f.span != want:
            raise InternalConsistencyError(f"line span {f.span} != {want}")
        details["orientation"] = "given" if o is ord_t else "reversed"
        details["L(u_p-2)"] = hyp
        return TransferReport(case, details, ord_l, f, f.span, span_t)
    return _none(details, "; ".join(attempts), span_t)


def _parent_edge(lt: LineGraphOfTree, x: int) -> int:
    """Line vertex of the edge from tree vertex ``x`` to its parent.

    For a two-center tree rooted at ``w``, ``w'`` maps to the central edge;
    callers never pass ``w`` itself.
    """
    if x == lt.root:
        # two-center tree oriented from the other center
        return lt.line_of[_other_center(lt)]
    return lt.line_of[x]


def _other_center(lt: LineGraphOfTree) -> int:
    (other,) = lt.tree_analysis.centers.weight_centers - {lt.root}
    return other


def _line_to_tree_vertex(lt: LineGraphOfTree, a: int) -> int:
    return lt.name_of[a]


def transfer_to_tree(t: Graph, ord_l: VertexOrdering) -> TransferReport:
    """Certified line-graph ordering to an optimal tree labeling (reverse constructions).

    Every constructed labeling is validated before it is returned.  The
    two-center and odd-order constructions only check consecutive pairs, and
    they fail for some certified orderings.  For two centers the conclusion
    itself can fail: the tree 2-0-1-3-5 with a pendant 4 on 0 has rn 11, but
    its line graph is a lower bound graph with rn 7.  Such inputs report
    ``none`` with the first violated pair.
    """
    lt = line_graph_of_tree(t)
    tan, lan = lt.tree_analysis, lt.line_analysis
    p = t.p
    WT, WL = tan.centers.weight_centers, lan.centers.weight_centers
    details: dict = {"p": p, "tree_weight_centers": sorted(WT), "line_weight_centers": sorted(WL),
                     "line_diameter": lan.diameter}
    if lan.diameter < 2:
        return _none(details, "d(L(T)) < 2: the lower bound is undefined on the line graph")
    span_l = _certified_span(lt.graph, ord_l, lan)
    if span_l is None:
        return _none(details, "ordering does not certify L(T)")
    f = labeling_from_ordering(lt.graph, lan.centers, lan.levels, ord_l)
    dL, dT = lan.diameter, tan.diameter

    if len(WT) == 2:
        case = "reverse-2centers"
        u = list(ord_l.order)
        if u[0] not in WL:
            u = u[::-1]
        w_star = next(iter(WL))
        if u[0] != w_star:
            return _none(details, "line center is not at either end of the ordering", span_l)
        lo = [f.labels[a] for a in u]
        lo = [x - lo[0] for x in lo] if lo[0] == 0 else [lo[0] - x for x in lo]
        # side of each tree center: the center not equal to the edge-name is the root
        ends = {lt.root, _other_center(lt)}
        d = tan.dist
        near_u1 = min(ends, key=lambda c: d[c, lt.name_of[u[1]]])
        first, last = (ends - {near_u1}).pop(), near_u1
        tree_order = [first] + [lt.name_of[a] for a in u[1:]] + [last]
        labels = [0] * p
        for x, lab in zip(tree_order[:-1], lo):
            labels[x] = lab
        labels[last] = lo[-1] + dT - 1
        want = span_l + dT - 1
    elif len(WL) >= 2 or p % 2 == 1:
        if len(WL) >= 2:
            case = "reverse-multi-center"
        else:
            case = "reverse-odd-p"
            B = b_subgraph(t, lt)
            details["b_size"] = len(B)
            if len(B) != (p - 1) // 2:
                return _none(details, "|B(T)| != (p-1)/2", span_l)
        ls = lan.levels
        tries = [list(ord_l.order), list(ord_l.order)[::-1]]
        chosen = None
        fail = []
        for u in tries:
            if case == "reverse-odd-p" and u[0] not in WL:
                fail.append("line center is not first")
                continue
            if case == "reverse-multi-center":
                bad = _close_descendant_pair(ls, u, dL)
                if bad is not None:
                    fail.append(f"descendant pair at positions {bad} closer than d(L)+1")
                    continue
            chosen = u
            break
        if chosen is None:
            return _none(details, "; ".join(fail), span_l)
        u = chosen
        base = [f.labels[a] for a in u]
        base = [x - base[0] for x in base] if base[0] == 0 else [base[0] - x for x in base]
        (w_star,) = WT
        tree_order = [w_star] + [lt.name_of[a] for a in u]
        labels = [0] * p
        for x, lab in zip(tree_order[1:], base):
            labels[x] = lab + dL + 1
        labels[w_star] = 0
        want = span_l + dL + 1
    else:
        return _none(details, "single weight centers with p even: no reverse construction applies", span_l)

    g_lab = RadioLabeling(tuple(labels))
    viol = validate_radio(t, tan.dist, g_lab)
    if viol is not None:
        return _none({**details, "case_tried": case},
                     f"constructed labeling is not radio: {viol.u},{viol.v} differ by {viol.actual} < {viol.required}",
                     span_l)
    if g_lab.span != want:
        raise InternalConsistencyError(f"tree span {g_lab.span} != {want}")
    return TransferReport(case, details, VertexOrdering(tuple(tree_order)), g_lab, g_lab.span, span_l)


def _close_descendant_pair(ls, u: list[int], dL: int) -> tuple[int, int] | None:
    pos = {v: i for i, v in enumerate(u)}
    for v in u:
        for a in ls.ancestors(v)[1:]:
            if abs(pos[v] - pos[a]) < dL + 1:
                return tuple(sorted((pos[v], pos[a])))
    return None


# ---------------------------------------------------------------------------
# corollary closed forms


def _level_tree_counts(spec: LevelWiseRegularTree) -> tuple[int, int, int]:
    """``(n, L(T), h)`` for a level-wise regular tree."""
    h = spec.h
    per_root, total_level, layer = 1, 0, 1
    for i in range(1, h + 1):
        layer *= spec.children(i - 1)
        per_root += layer
        total_level += i * layer
    return spec.roots * per_root, spec.roots * total_level, h


def corollary_rn(spec: FamilySpec) -> int:
    """Closed-form radio number of ``L(T)`` for the banana, firecracker and
    level-wise regular tree families."""
    spec.validate()
    if isinstance(spec, Banana):
        if spec.n < 5 or spec.k < 4:
            raise FamilyError("banana corollary needs n >= 5 and k >= 4")
        return spec.n * (spec.k + 6) - 5
    if isinstance(spec, Firecracker):
        n, k = spec.n, spec.k
        if n < 3 or k < 3:
            raise FamilyError("firecracker corollary needs n, k >= 3")
        if n % 2:
            return (n * n + 1) * k // 2 + 4 * n - 6
        return n * n * k // 2 + 4 * n - 5
    if isinstance(spec, CompleteMAry):
        spec = LevelWiseRegularTree(1, (spec.m,) + (spec.m + 1,) * (spec.h - 1))
    if isinstance(spec, LevelWiseRegularTree):
        if any(m < 3 for m in spec.degrees):
            raise FamilyError("level-wise corollary needs every m_i >= 3")
        n, _, h = _level_tree_counts(spec)
        ms = spec.degrees
        if spec.roots == 1:
            d = 2 * h
            s = 0
            for i in range(1, h + 1):
                term = ms[0] * i
                for j in range(1, i):
                    term *= ms[j] - 1
                s += term
            return (d + 1) * (n - 1) + 1 - 2 * s - 2 * h
        d = 2 * h + 1
        s = 0
        for i in range(1, h + 1):
            term = i
            for j in range(i):
                term *= ms[j] - 1
            s += term
        return d * (n - 1) - 4 * s - 2 * h
    raise FamilyError(f"no line-graph corollary for family {spec.family}")


def line_graph_lb(spec: FamilySpec) -> int:
    """Lower bound of the line graph of the generated tree."""
    from .radio import lower_bound

    lt = line_graph_of_tree(generate(spec).graph)
    an = lt.line_analysis
    return lower_bound(lt.graph, an.centers, an.levels)
