import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from blockradio.centers import analyze
from blockradio.certificates import (
    certify,
    check_eq_dij,
    check_main2,
    check_sufficient,
    check_thm_lb,
    induced_labeling,
    routes,
)
from blockradio.errors import DiameterError, HypothesisError
from blockradio.families import (
    ExtendedStar,
    LevelWiseRegularBlock,
    canonical_ordering,
    generate,
    random_block_graph,
    random_tree,
)
from blockradio.graph import Graph, complete_graph, path_graph
from blockradio.radio import VertexOrdering, exact_radio_number, greedy_min_labeling, is_radio_labeling

from conftest import k4_with_path

P4_CERT = VertexOrdering((1, 3, 0, 2))  # (w, y, x, w')


def _thm(g, order):
    an = analyze(g)
    return check_thm_lb(g, an.centers, an.levels, VertexOrdering(tuple(order)))


def test_p4_certified(p4):
    a, b, c = _thm(p4, P4_CERT.order)
    assert a and b and c
    rep = certify(p4, P4_CERT)
    assert rep.certified and rep.span == rep.lb == 5
    assert rep.eq_dij.ok and rep.a_star.ok and rep.b_star.ok and rep.suf_i


def test_p4_ends_first_fails_a(p4):
    # (y, w, w', x): central pair passes (b); the endpoint levels break (a)
    a, b, _ = _thm(p4, (3, 1, 2, 0))
    assert not a and b
    rep = certify(p4, VertexOrdering((3, 1, 2, 0)))
    assert not rep.certified and rep.reason.startswith("(a)")
    assert rep.suf_i is None


def test_star_leaves_then_center(k13):
    order = VertexOrdering((1, 2, 3, 0))
    a, _, _ = _thm(k13, order.order)
    assert a
    rep = certify(k13, order)
    assert rep.certified and rep.span == 4 and rep.suf_ii


def test_p5_no_ordering_certifies():
    g = path_graph(5)
    an = analyze(g)
    for perm in itertools.permutations(range(5)):
        o = VertexOrdering(perm)
        a, _, _ = check_thm_lb(g, an.centers, an.levels, o)
        assert not (a and check_eq_dij(g, an.dist, an.levels, o))
        assert not certify(g, o, an).certified


def test_p5_best_ordering_not_certified():
    g = path_graph(5)
    res = exact_radio_number(g, g.distances)
    rep = certify(g, res.ordering)
    assert res.rn == 10 and rep.lb == 9 and not rep.certified


def test_eq_dij_reports_pair():
    g = path_graph(5)
    an = analyze(g)
    pc = check_eq_dij(g, an.dist, an.levels, VertexOrdering((0, 1, 2, 3, 4)))
    assert not pc and pc.pair == (0, 1)


def test_level_wise_canonical():
    spec = LevelWiseRegularBlock(1, ((2, 3), (1, 3)))
    ng = generate(spec)
    order = canonical_ordering(spec, ng)
    a_star, b_star = check_main2(ng.graph, analyze(ng.graph).levels, order)
    assert a_star and b_star
    rep = certify(ng.graph, order)
    assert rep.certified and rep.span == 37


def _pull_adjacent(ls, order, min_level):
    """Move the first later same-branch partner of a deep vertex next to it."""
    order = list(order)
    i, j = next(
        (i, j) for i in range(len(order)) for j in range(i + 2, len(order))
        if ls.level[order[i]] >= min_level and ls.level[order[j]] >= min_level and ls.same_branch(order[i], order[j])
    )
    order.insert(i + 1, order.pop(j))
    return VertexOrdering(tuple(order))


def test_same_branch_adjacent_breaks_b_star():
    spec = ExtendedStar(1, 3, 2, 3)
    ng = generate(spec)
    ls = analyze(ng.graph).levels
    _, b_star = check_main2(ng.graph, ls, _pull_adjacent(ls, canonical_ordering(spec, ng).order, 2))
    assert not b_star and "same-branch" in b_star.detail


def test_b_star_vacuous_on_shallow_star():
    # with h = 1 every same-branch phi is 0 and the bound is nonnegative
    spec = ExtendedStar(1, 3, 1, 3)
    ng = generate(spec)
    ls = analyze(ng.graph).levels
    _, b_star = check_main2(ng.graph, ls, _pull_adjacent(ls, canonical_ordering(spec, ng).order, 1))
    assert b_star


def test_b_star_covers_anchor_pairs():
    # central triangle {0,1,2}; path 1-3-5; pendants 4 and 6 on vertex 2
    g = Graph.from_edges(7, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (2, 6), (3, 5)])
    order = VertexOrdering((0, 3, 4, 1, 6, 5, 2))
    an = analyze(g)
    a, b, c = check_thm_lb(g, an.centers, an.levels, order)
    assert a and b and not c
    _, b_star = check_main2(g, an.levels, order)
    assert not b_star and "(4, 6)" in b_star.detail
    assert not check_sufficient(g, an.dist, an.levels, order)[2]


def test_extended_star_canonical():
    spec = ExtendedStar(3, 2, 2, 4)
    ng = generate(spec)
    rep = certify(ng.graph, canonical_ordering(spec, ng))
    assert rep.certified and rep.span == 82
    # consecutive distances reach 4 > (d+1+eps)/2 = 3; anchors sit close to their branches
    assert (rep.suf_i, rep.suf_ii, rep.suf_iii) == (False, False, False)


def test_clique_has_no_bound():
    with pytest.raises(DiameterError):
        certify(complete_graph(4), VertexOrdering((0, 1, 2, 3)))


def test_sufficiency_needs_a_and_b(p4):
    an = analyze(p4)
    with pytest.raises(HypothesisError):
        check_sufficient(p4, an.dist, an.levels, VertexOrdering((3, 1, 2, 0)))


def test_main2_gap_pinned():
    # (a), (b), a*, b* hold but (c) fails: two same-branch vertices share a block below the anchor
    g = k4_with_path()
    order = VertexOrdering((0, 1, 4, 2, 5, 3))
    assert routes(g, order) == (False, False, True)
    rep = certify(g, order)
    assert not rep.certified and not rep.main2_agrees and rep.reason.startswith("(c)")
    assert exact_radio_number(g, g.distances).rn == 10 == rep.lb + 1


def test_report_to_dict(p4):
    d = certify(p4, VertexOrdering((0, 1, 2, 3))).to_dict()
    assert d["verdict"] == "NotCertified" and isinstance(d["eq_dij"]["pair"], list)


orderings = st.integers(0, 100_000).flatmap(
    lambda seed: st.tuples(st.just(seed), st.integers(3, 9), st.integers(2, 4), st.randoms(use_true_random=False))
)


def _case(args, tree=False):
    seed, p, k, rnd = args
    g = random_tree(seed, p) if tree else random_block_graph(seed, p, k)
    assume(g.distances.diameter >= 2)
    order = list(range(p))
    rnd.shuffle(order)
    return g, VertexOrdering(tuple(order))


@settings(max_examples=150, deadline=None)
@given(orderings)
def test_routes_one_and_two_agree(args):
    g, order = _case(args)
    r1, r2, r3 = routes(g, order)
    assert r1 == r2
    assert not r1 or r3


@settings(max_examples=100, deadline=None)
@given(orderings)
def test_routes_agree_on_trees(args):
    g, order = _case(args, tree=True)
    r1, r2, r3 = routes(g, order)
    assert r1 == r2 == r3


@settings(max_examples=100, deadline=None)
@given(orderings)
def test_certified_is_optimal_radio_labeling(args):
    g, order = _case(args)
    an = analyze(g)
    rep = certify(g, order, an)
    if rep.certified:
        f = induced_labeling(an, order)
        assert is_radio_labeling(g, an.dist, f) and f.span == rep.lb
        assert greedy_min_labeling(g, an.dist, order).span == rep.lb


def _certified_orderings(g, an, limit):
    found = []
    for perm in itertools.permutations(range(g.p)):
        o = VertexOrdering(perm)
        a, b, c = check_thm_lb(g, an.centers, an.levels, o)
        if a and b:
            found.append((o, bool(c)))
        if len(found) >= limit:
            break
    return found


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 100_000), st.integers(3, 7), st.integers(2, 4))
def test_sufficient_conditions_imply_certified(seed, p, k):
    g = random_block_graph(seed, p, k)
    assume(g.distances.diameter >= 2)
    an = analyze(g)
    for o, c in _certified_orderings(g, an, 200):
        if any(check_sufficient(g, an.dist, an.levels, o)):
            assert c
