import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockradio.centers import (
    analyze,
    closer_count,
    distance_by_formula,
    geo_params,
    geo_params_fast,
    phi_pairs,
)
from blockradio.errors import NotBlockGraphError, RadioError
from blockradio.families import LevelWiseRegularBlock, generate, random_block_graph, random_tree
from blockradio.graph import complete_graph, cycle_graph, path_graph

from conftest import A, B, C, X


def test_p4_centers(p4):
    ci = analyze(p4).centers
    assert ci.weight_centers == {1, 2} and ci.epsilon == 0 and ci.central_vertices == {1, 2}


def test_triangle_pendant_centers(tp):
    ci = analyze(tp).centers
    assert ci.weight_centers == {C} and ci.epsilon == 1
    assert ci.wt[C] == 3 and ci.wt[A] == ci.wt[B] == 4 and ci.wt[X] == 5


def test_k4_centers():
    an = analyze(complete_graph(4))
    assert an.centers.weight_centers == set(range(4)) and an.epsilon == 0
    assert an.graph.blocks.blocks[an.centers.central_block] == set(range(4))


def test_non_block_graph_rejected():
    with pytest.raises(NotBlockGraphError):
        analyze(cycle_graph(4))


def test_closer_count(tp):
    p3 = path_graph(3)
    assert closer_count(p3, p3.distances, 0, 1) == 1
    k3 = complete_graph(3)
    assert closer_count(k3, k3.distances, 0, 1) == 1
    assert closer_count(tp, tp.distances, C, A) == 2
    with pytest.raises(RadioError):
        closer_count(tp, tp.distances, A, A)


def test_p4_levels(p4):
    ls = analyze(p4).levels
    assert ls.level == (1, 0, 0, 1) and ls.total_level == 2 and len(ls.branch_anchor) == 2


def test_triangle_pendant_levels(tp):
    ls = analyze(tp).levels
    assert ls.level == (1, 1, 0, 1) and ls.total_level == 3
    assert ls.same_branch(A, B) and not ls.same_branch(A, X)
    assert len(ls.branch_anchor) == 2 and all(w == C for w, _ in ls.branch_anchor)


def test_level_wise_total_level():
    g = generate(LevelWiseRegularBlock(4, ((1, 3), (1, 3)))).graph
    assert analyze(g).total_level == 84


def test_ancestors_endpoint_inclusive(tp):
    ls = analyze(tp).levels
    assert ls.ancestors(A) == (A, C)
    assert ls.is_descendant(A, C) and not ls.is_descendant(A, A)


@pytest.mark.parametrize(
    "u, v, expect, dist",
    [((A, B), None, (0, 0, 1), 1), ((C, X), None, (0, 0, 0), 1)],
)
def test_geo_params_triangle_pendant(tp, u, v, expect, dist):
    an = analyze(tp)
    gp = geo_params(tp, an.levels, *u)
    assert (gp.phi, gp.delta, gp.rho) == expect
    assert distance_by_formula(an.levels, gp, *u) == dist


def test_geo_params_p4(p4):
    an = analyze(p4)
    gp = geo_params(p4, an.levels, 0, 3)
    assert (gp.phi, gp.delta, gp.rho) == (0, 1, 0)
    assert distance_by_formula(an.levels, gp, 0, 3) == 3


def test_geo_params_same_vertex(tp):
    with pytest.raises(RadioError):
        geo_params(tp, analyze(tp).levels, A, A)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000), st.integers(2, 40), st.integers(2, 5))
def test_distance_formula_matches_bfs(seed, p, k):
    g = random_block_graph(seed, p, k)
    an = analyze(g)
    for u in range(p):
        for v in range(u + 1, p):
            gp = geo_params(g, an.levels, u, v)
            assert gp == geo_params_fast(an.levels, an.dist, u, v)
            assert distance_by_formula(an.levels, gp, u, v) == an.dist[u, v]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000), st.integers(2, 30), st.integers(2, 5))
def test_phi_pairs_matches_scalar(seed, p, k):
    g = random_block_graph(seed, p, k)
    an = analyze(g)
    us = [u for u in range(p) for v in range(p) if u != v]
    vs = [v for u in range(p) for v in range(p) if u != v]
    got = phi_pairs(an.levels, us, vs)
    assert [geo_params(g, an.levels, u, v).phi for u, v in zip(us, vs)] == got.tolist()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000), st.integers(2, 40), st.integers(2, 5))
def test_center_invariants(seed, p, k):
    g = random_block_graph(seed, p, k)
    an = analyze(g)
    ci, ls = an.centers, an.levels
    W = ci.weight_centers
    # several weight centers lie in a single block
    assert len(W) == 1 or any(W <= b for b in g.blocks.blocks)
    # moving from a weight center to a neighbour never brings more vertices closer
    for w in W:
        for x in g.adj[w]:
            assert closer_count(g, an.dist, x, w) <= closer_count(g, an.dist, w, x)
    assert ls.total_level == sum(min(an.dist[v, w] for w in ci.central_vertices) for v in range(p))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 100_000), st.integers(2, 30))
def test_tree_centers_at_most_two(seed, p):
    ci = analyze(random_tree(seed, p)).centers
    assert 1 <= len(ci.weight_centers) <= 2
