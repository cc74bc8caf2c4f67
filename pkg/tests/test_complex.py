import pytest

from mcg_forge.surface.complex import marked_sphere, thicken
from mcg_forge.surface.fatgraph import build_gamma, caterpillar


@pytest.mark.parametrize("g", range(2, 16))
def test_thicken_euler_characteristic(g):
    P = thicken(build_gamma(g))
    assert P.graph.n_vertices == 2 * g - 2
    assert P.euler_characteristic() == 2 - 2 * g
    assert P.genus() == g


@pytest.mark.parametrize("build", [build_gamma, caterpillar,
                                   lambda g: build_gamma(g, "twisted")])
@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_closed_oriented_surface(build, g):
    P = thicken(build(g))
    assert P.is_oriented_consistently()
    assert P.vertex_links_are_cycles()
    # every cell edge borders exactly two face sides
    assert all(len(P.edge_side[e]) == 2 for e in range(P.n_edges))


def test_pants_have_two_hexagons():
    P = thicken(build_gamma(3))
    for v in range(4):
        assert len(P.faces[P.front(v)]) == 6
        assert len(P.faces[P.back(v)]) == 6


@pytest.mark.parametrize("n", [3, 5, 7])
def test_marked_sphere(n):
    S = marked_sphere(n)
    assert S.euler_characteristic() == 2
    assert len(S.marked) == n + 1
    assert S.is_oriented_consistently()


def test_json_shape():
    d = thicken(build_gamma(3)).to_json()
    assert d["euler_characteristic"] == -4
    assert len(d["pants"]) == 4
    assert all(len(p["cuffs"]) == 3 for p in d["pants"])
