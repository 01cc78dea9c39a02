"""The acceptance suite as library code, shared by the tests and ``selftest``.

Each ``criterion_N`` returns a :class:`CriterionResult`; nothing here raises
on a failed check, so one broken criterion does not hide the others.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from .centers import analyze, distance_by_formula, geo_params, geo_params_fast
from .certificates import certify, check_thm_lb, routes
from .families import (
    Banana,
    ExtendedStar,
    Firecracker,
    LevelWiseRegularBlock,
    LevelWiseRegularTree,
    canonical_ordering,
    closed_form_rn,
    family_order,
    generate,
    random_block_graph,
    random_tree,
)
from .graph import Graph, path_graph
from .linegraph import corollary_rn, line_graph_lb, line_graph_of_tree, line_obs_check, transfer_to_line, transfer_to_tree
from .radio import VertexOrdering, exact_radio_number, lower_bound, validate_radio


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number} [{mark}] {self.title}: {self.detail} ({self.seconds:.1f}s)"

    def to_dict(self) -> dict:
        return {"number": self.number, "title": self.title, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3)}


def _timed(number: int, title: str, fn: Callable[[], tuple[bool, str]], limit: float | None = None) -> CriterionResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    secs = time.perf_counter() - t0
    if limit is not None and secs > limit:
        ok, detail = False, f"{detail}; runtime {secs:.1f}s exceeds {limit:.0f}s"
    return CriterionResult(number, title, ok, detail, secs)


def seeded_block_graphs(count: int, p_min: int, p_max: int, seed: int = 0, min_diameter: int = 2):
    """``count`` random block graphs with ``p_min <= p <= p_max`` and ``d >= min_diameter``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = rng.randint(p_min, p_max)
        g = random_block_graph(rng.randrange(2**31), p, rng.randint(2, 4))
        if g.distances.diameter >= min_diameter:
            out.append(g)
    return out


# 1 -------------------------------------------------------------------------


def criterion_1(count: int = 300, seed: int = 1) -> CriterionResult:
    def run():
        below = mismatch = certified = 0
        for g in seeded_block_graphs(count, 4, 9, seed):
            an = analyze(g)
            lb = lower_bound(g, an.centers, an.levels)
            ex = exact_radio_number(g, an.dist, max_p=9)
            if ex.rn < lb:
                below += 1
            cert = certify(g, ex.ordering, an).certified
            certified += cert
            # a certified witness forces equality, and equality forces the
            # optimal witness to be certified
            if cert != (ex.rn == lb):
                mismatch += 1
        ok = below == 0 and mismatch == 0
        return ok, (f"{count} graphs p<=9: rn<LB on {below}, certified-vs-equality mismatches {mismatch}, "
                    f"{certified} lower bound graphs")

    return _timed(1, "oracle vs bound", run, limit=300)


# 2 -------------------------------------------------------------------------


def criterion_2(count: int = 1000, seed: int = 2) -> CriterionResult:
    def run():
        rng = random.Random(seed)
        graphs = seeded_block_graphs(count, 3, 8, seed)
        disagree = []
        first_two = 0
        for g in graphs:
            an = analyze(g)
            perm = list(range(g.p))
            rng.shuffle(perm)
            r = routes(g, VertexOrdering(tuple(perm)), an)
            if r[0] != r[1]:
                first_two += 1
            if len(set(r)) > 1:
                disagree.append((g.edges(), perm, r))
        detail = f"{count} pairs p<=8: three-way disagreements {len(disagree)}, (a)(b)(c) vs (a)+pairs disagreements {first_two}"
        if disagree:
            detail += f"; first: edges={disagree[0][0]} order={disagree[0][1]} routes={disagree[0][2]}"
        return not disagree, detail

    return _timed(2, "characterization equivalence", run)


# 3 -------------------------------------------------------------------------


def criterion_3(count: int = 200, seed: int = 3) -> CriterionResult:
    def run():
        bad = pairs = 0
        for g in seeded_block_graphs(count, 2, 40, seed, min_diameter=1):
            an = analyze(g)
            for u in range(g.p):
                for v in range(u + 1, g.p):
                    gp = geo_params(g, an.levels, u, v)
                    pairs += 1
                    if distance_by_formula(an.levels, gp, u, v) != an.dist[u, v] or gp != geo_params_fast(an.levels, an.dist, u, v):
                        bad += 1
        return bad == 0, f"{count} graphs p<=40, {pairs} pairs, {bad} mismatches"

    return _timed(3, "distance formula", run)


# 4 -------------------------------------------------------------------------

NAMED_FAMILIES = [
    (LevelWiseRegularBlock(1, ((2, 3), (1, 3))), 37),
    (LevelWiseRegularBlock(4, ((1, 3), (1, 3))), 87),
    (ExtendedStar(1, 3, 3, 4), 82),
    (ExtendedStar(3, 2, 2, 4), 82),
]


def family_sweep(max_p: int = 2000):
    """Specs of the criterion-4 parameter sweep."""
    specs = []
    for m in (1, 3, 4):
        for r in (1, 2, 3):
            for pairs in itertools.product([(k, mi) for k in (1, 2, 3) for mi in (2, 3)], repeat=r):
                s = LevelWiseRegularBlock(m, pairs)
                if m == 1 and pairs[0][0] < 2:
                    continue
                if family_order(s) <= max_p:
                    specs.append(s)
    for m in (1, 2, 3):
        for k in (1, 2, 3):
            if m == 1 and k < 3:
                continue
            for h in (1, 2, 3):
                for n in (2, 3, 4):
                    s = ExtendedStar(m, k, h, n)
                    if family_order(s) <= max_p:
                        specs.append(s)
    return specs


def check_family(spec) -> tuple[bool, str]:
    ng = generate(spec)
    an = analyze(ng.graph)
    lb = lower_bound(ng.graph, an.centers, an.levels)
    closed = closed_form_rn(spec)
    rep = certify(ng.graph, canonical_ordering(spec, ng), an)
    ok = lb == closed and rep.certified and rep.span == lb
    return ok, f"{spec.label()}: LB={lb} closed={closed} {rep.verdict}"


def criterion_4() -> CriterionResult:
    def run():
        named_bad = []
        for spec, want in NAMED_FAMILIES:
            ok, msg = check_family(spec)
            if not ok or closed_form_rn(spec) != want:
                named_bad.append(msg)
        sweep = family_sweep()
        sweep_bad = [msg for ok, msg in map(check_family, sweep) if not ok]
        detail = f"named {len(NAMED_FAMILIES) - len(named_bad)}/{len(NAMED_FAMILIES)}, sweep {len(sweep) - len(sweep_bad)}/{len(sweep)}"
        if named_bad or sweep_bad:
            detail += "; failing: " + "; ".join(named_bad + sweep_bad)
        return not (named_bad or sweep_bad), detail

    return _timed(4, "family closed forms", run, limit=60)


# 5 -------------------------------------------------------------------------


def criterion_5() -> CriterionResult:
    def run():
        got = {}
        for n in (4, 5, 6):
            g = path_graph(n)
            an = analyze(g)
            got[n] = (exact_radio_number(g, an.dist).rn, lower_bound(g, an.centers, an.levels))
        ok = got[4] == (5, 5) and got[5] == (10, 9) and got[6] == (13, 13)
        return ok, ", ".join(f"P_{n}: rn={rn} LB={lb}" for n, (rn, lb) in got.items())

    return _timed(5, "path sanity", run)


# 6 -------------------------------------------------------------------------


def criterion_6(count: int = 500, seed: int = 6) -> CriterionResult:
    def run():
        rng = random.Random(seed)
        bad = []
        for _ in range(count):
            s, p = rng.randrange(2**31), rng.randint(5, 40)
            res = line_obs_check(random_tree(s, p))
            if not res["ok"]:
                bad.append((s, p, res["items"]))
        return not bad, f"{count} trees 5<=p<=40, {len(bad)} failing" + (f"; first {bad[0]}" if bad else "")

    return _timed(6, "line-graph observations", run)


# 7 -------------------------------------------------------------------------


def criterion_7() -> CriterionResult:
    def run():
        t = path_graph(4)
        fwd = transfer_to_line(t, VertexOrdering((1, 3, 0, 2)))
        lt = line_graph_of_tree(t)
        # certified P_3 ordering: the center, then the two ends
        back = transfer_to_tree(t, VertexOrdering((1, 0, 2)))
        fwd_ok = (fwd.applicable_case == "line4-iii" and fwd.span == 3 and fwd.source_span == 5
                  and validate_radio(lt.graph, lt.line_analysis.dist, fwd.labeling) is None
                  and fwd.span == fwd.source_span - 3 + 1 - 0)
        back_ok = (back.applicable_case == "reverse-2centers" and back.span == 5 and back.source_span == 3
                   and validate_radio(t, t.distances, back.labeling) is None
                   and back.span == back.source_span + 3 - 1)
        return fwd_ok and back_ok, (f"to-line {fwd.applicable_case} span {fwd.span}; "
                                    f"to-tree {back.applicable_case} span {back.span}")

    return _timed(7, "tree and line-graph transfers", run)


# 8 -------------------------------------------------------------------------


def corollary_cases():
    cases = [Banana(n, k) for n in (5, 6, 7) for k in (4, 5)]
    cases += [Firecracker(n, k) for n in (3, 4, 5) for k in (3, 4)]
    # T^1 with h = 1 is a star whose line graph is a clique (diameter 1, no bound)
    cases += [LevelWiseRegularTree(r, (3,) * h) for r in (1, 2) for h in (1, 2, 3) if not (r == 1 and h == 1)]
    return cases


def criterion_8() -> CriterionResult:
    def run():
        bad = []
        exact_checked = 0
        for spec in corollary_cases():
            want = corollary_rn(spec)
            lb = line_graph_lb(spec)
            if lb != want:
                bad.append(f"{spec.label()}: LB={lb} formula={want}")
            lt = line_graph_of_tree(generate(spec).graph)
            if lt.graph.p <= 9:
                exact_checked += 1
                rn = exact_radio_number(lt.graph, lt.line_analysis.dist, max_p=9).rn
                if rn != want:
                    bad.append(f"{spec.label()}: exact rn={rn} formula={want}")
        n = len(corollary_cases())
        return not bad, f"{n - len(bad)}/{n} formulas match LB, {exact_checked} also matched by the oracle" + (
            "; " + "; ".join(bad) if bad else "")

    return _timed(8, "corollary formulas", run)


# 9 -------------------------------------------------------------------------

NOLB_TREES = [
    Graph.from_edges(6, [(0, 1), (0, 2), (0, 4), (0, 5), (1, 3)]),
    Graph.from_edges(8, [(0, 1), (0, 2), (0, 4), (0, 7), (1, 5), (1, 6), (2, 3)]),
]


def any_certified_ordering(g: Graph) -> VertexOrdering | None:
    an = analyze(g)
    for perm in itertools.permutations(range(g.p)):
        o = VertexOrdering(perm)
        if all(check_thm_lb(g, an.centers, an.levels, o)):
            return o
    return None


def criterion_9() -> CriterionResult:
    def run():
        parts = []
        ok = True
        for t in NOLB_TREES:
            lt = line_graph_of_tree(t)
            tan = lt.tree_analysis
            pre = (t.p % 2 == 0 and tan.diameter >= 3 and len(tan.centers.weight_centers) == 1
                   and len(lt.line_analysis.centers.weight_centers) == 1)
            ex = exact_radio_number(t, tan.dist, max_p=9)
            rep = transfer_to_line(t, ex.ordering)
            found = any_certified_ordering(lt.graph)
            this = pre and rep.applicable_case == "none" and found is None
            ok &= this
            parts.append(f"p={t.p} rn(T)={ex.rn} LB(T)={lower_bound(t, tan.centers, tan.levels)} "
                         f"transfer={rep.applicable_case} certified L-orderings={'some' if found else 'none'}")
        return ok, "; ".join(parts)

    return _timed(9, "negative certification", run)


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 10)}


def run_all(selected: list[int] | None = None) -> list[CriterionResult]:
    return [CRITERIA[i]() for i in (selected or sorted(CRITERIA))]
