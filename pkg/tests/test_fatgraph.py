import pytest
from hypothesis import given
from hypothesis import strategies as st

from mcg_forge.surface.fatgraph import (
    FatGraph,
    build_gamma,
    caterpillar,
    caterpillar_spine_edges,
    edge_removal_connected,
    fundamental_cycle,
    spanning_tree,
)


@pytest.mark.parametrize("g", range(2, 16))
def test_gamma_counts(g):
    G = build_gamma(g)
    assert (G.n_vertices, G.n_edges) == (2 * g - 2, 3 * g - 3)
    assert G.is_trivalent() and G.is_connected()
    assert G.euler_characteristic() == 1 - g


def test_small_cases():
    theta = build_gamma(2)
    assert [sorted(theta.endpoints(e)) for e in range(3)] == [[0, 1]] * 3
    k4 = build_gamma(3)
    assert sorted(tuple(sorted(k4.endpoints(e))) for e in range(6)) == \
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    with pytest.raises(ValueError):
        build_gamma(1)
    with pytest.raises(ValueError):
        build_gamma(4, "spiral")


@pytest.mark.parametrize("g", range(3, 12))
def test_every_edge_removal_connected(g):
    G = build_gamma(g)
    assert all(edge_removal_connected(G, e) for e in range(G.n_edges))


def test_theta_edge_removal_disconnects():
    assert not edge_removal_connected(build_gamma(2), 0)


@pytest.mark.parametrize("g", range(2, 8))
def test_caterpillar_shape(g):
    G = caterpillar(g)
    assert G.is_trivalent() and G.is_connected()
    assert G.n_edges == 3 * g - 3
    loops = [e for e in range(G.n_edges) if len(set(G.endpoints(e))) == 1]
    assert loops == list(range(g))
    for e in caterpillar_spine_edges(g):
        assert not edge_removal_connected(G, e) or g == 2


@given(st.integers(2, 9), st.sampled_from(["circle", "twisted"]))
def test_json_roundtrip(g, rot):
    G = build_gamma(g, rot)
    H = FatGraph.from_json(G.to_json())
    assert H.rotation == G.rotation and H.vertex_of == G.vertex_of


def test_rotation_must_cover_half_edges():
    with pytest.raises(ValueError):
        FatGraph((0, 0), ((0,),))
    with pytest.raises(ValueError):
        FatGraph.from_json({"rotation": "x"})


@given(st.integers(2, 9))
def test_fundamental_cycles_close(g):
    G = build_gamma(g)
    tree = spanning_tree(G)
    assert len(tree) == G.n_vertices - 1
    for e in set(range(G.n_edges)) - tree:
        cyc = fundamental_cycle(G, tree, e)
        v = G.vertex_of[cyc[0]]
        start = v
        for h in cyc:
            assert G.vertex_of[h] == v
            v = G.vertex_of[h ^ 1]
        assert v == start
