import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockradio import kernels
from blockradio.errors import GraphFormatError, NotConnectedError
from blockradio.families import random_block_graph, random_tree
from blockradio.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    format_graph,
    geodesic,
    is_block_graph,
    on_geodesic,
    parse_graph,
    path_graph,
    relabel,
)

from conftest import A, B, C, X, triangle_pendant


def test_path_distances():
    d = path_graph(4).distances
    assert d[0, 3] == 3 and d.diameter == 3


def test_clique_distances():
    d = complete_graph(3).distances
    assert d.diameter == 1
    assert all(d[u, v] == 1 for u in range(3) for v in range(3) if u != v)


def test_triangle_pendant_distances(tp):
    d = tp.distances
    assert d[A, X] == 2 and d.diameter == 2


def test_blocks_of_path():
    bd = path_graph(4).blocks
    assert len(bd.blocks) == 3 and bd.cut_vertices == {1, 2}


def test_blocks_of_clique():
    bd = complete_graph(4).blocks
    assert bd.blocks == (frozenset(range(4)),) and not bd.cut_vertices


def test_blocks_of_triangle_pendant(tp):
    bd = tp.blocks
    assert set(bd.blocks) == {frozenset({A, B, C}), frozenset({C, X})}
    assert bd.cut_vertices == {C}
    assert bd.block_of(A, B) == bd.block_of(B, C)


def test_is_block_graph():
    assert is_block_graph(path_graph(6))
    assert not is_block_graph(cycle_graph(4))
    assert is_block_graph(triangle_pendant())


def test_geodesics(tp):
    assert geodesic(path_graph(4), 0, 3) == [0, 1, 2, 3]
    assert geodesic(complete_graph(3), 0, 1) == [0, 1]
    assert geodesic(tp, A, X) == [A, C, X]
    assert on_geodesic(tp, A, X) == {A, C, X}


def test_format_roundtrip(tp):
    text = format_graph(tp, "triangle with pendant")
    assert text.startswith("# triangle")
    g = parse_graph(text)
    assert g == tp


@pytest.mark.parametrize(
    "text, msg",
    [
        ("", "empty"),
        ("x\n0 1\n", "vertex count"),
        ("3\n0 1 2\n", "expected"),
        ("3\n0 a\n", "non-integer"),
        ("3\n0 0\n", "self-loop"),
        ("3\n0 5\n", "out of range"),
    ],
)
def test_parse_errors(text, msg):
    with pytest.raises(GraphFormatError, match=msg):
        parse_graph(text)


def test_disconnected():
    with pytest.raises(NotConnectedError):
        Graph.from_edges(4, [(0, 1), (2, 3)]).distances


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 30), st.integers(2, 5))
def test_random_block_graphs_are_block_graphs(seed, p, k):
    g = random_block_graph(seed, p, k)
    assert g.p == p and is_block_graph(g)
    d = g.distances.dist
    assert (d == d.T).all() and (np.diag(d) == 0).all()


def test_random_block_graph_deterministic():
    assert random_block_graph(5, 12, 4) == random_block_graph(5, 12, 4)
    assert random_block_graph(1, 2, 3).edges() == [(0, 1)]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 25))
def test_random_tree(seed, p):
    t = random_tree(seed, p)
    assert len(t.edges()) == p - 1 and all(len(b) == 2 for b in t.blocks.blocks)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 20), st.permutations(list(range(20))))
def test_distances_relabel_invariant(seed, p, perm):
    perm = [x for x in perm if x < p]
    g = random_block_graph(seed, p, 4)
    h = relabel(g, perm)
    dg, dh = g.distances.dist, h.distances.dist
    assert all(dg[u, v] == dh[perm[u], perm[v]] for u in range(p) for v in range(p))


@pytest.mark.parametrize("name", sorted(kernels.BACKENDS))
def test_bfs_backends_agree(name):
    g = random_block_graph(7, 30, 4)
    indptr, indices = [0], []
    for nbrs in g.adj:
        indices.extend(sorted(nbrs))
        indptr.append(len(indices))
    ref = kernels.get_backend("python").bfs_all(indptr, indices, g.p)
    got = kernels.get_backend(name).bfs_all(indptr, indices, g.p)
    assert np.array_equal(np.asarray(ref), np.asarray(got))
