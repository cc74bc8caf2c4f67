from fractions import Fraction

import pytest

from mcg_forge.surface.complex import marked_sphere, thicken
from mcg_forge.surface.curves import (
    CombCurve,
    CurveError,
    b_curve,
    interval_curve,
    longitude,
    meridian,
    walk,
)
from mcg_forge.surface.fatgraph import build_gamma


@pytest.fixture(scope="module")
def P3():
    return thicken(build_gamma(3))


def test_meridian_crosses_two_seams(P3):
    m = meridian(P3, 0)
    assert len(m) == 2
    assert {P3.edge_names[e][0] for e, _, _ in m.crossings} == {"s"}


def test_b_curve_crosses_cuff_twice(P3):
    for e in range(P3.graph.n_edges):
        b = b_curve(P3, e)
        cuffs = [P3.edge_names[x] for x, _, _ in b.crossings if P3.edge_names[x][0] in ("f", "k")]
        assert len(cuffs) == 2
        assert {c[1] for c in cuffs} == {e}


def test_b_curve_rejects_theta():
    with pytest.raises(CurveError):
        b_curve(thicken(build_gamma(2)), 0)


def test_bad_crossings_rejected(P3):
    m = meridian(P3, 0)
    with pytest.raises(CurveError):
        CombCurve(P3, ())
    with pytest.raises(CurveError):
        CombCurve(P3, ((0, 2, Fraction(1, 2)),))
    with pytest.raises(CurveError):
        CombCurve(P3, ((m.crossings[0][0], 1, Fraction(3, 2)),))
    # two crossings that do not share a face
    far = meridian(P3, 5).crossings[0]
    if P3.edge_side[far[0]][-far[1]][0] != P3.edge_side[m.crossings[0][0]][m.crossings[0][1]][0]:
        with pytest.raises(CurveError):
            CombCurve(P3, (m.crossings[0], far))


def test_json_roundtrip(P3):
    b = b_curve(P3, 2, label="b")
    c = CombCurve.from_json(P3, b.to_json())
    assert c.crossings == b.crossings and c.label == "b"
    with pytest.raises(ValueError):
        CombCurve.from_json(P3, {"crossings": [{"edge": 0}]})


def test_reverse_and_canonical(P3):
    b = b_curve(P3, 1)
    assert b.reversed().reversed().crossings == b.crossings
    rot = CombCurve(P3, b.crossings[1:] + b.crossings[:1])
    assert rot.canonical() == b.canonical()


def test_longitude_requires_closed_walk(P3):
    with pytest.raises(CurveError):
        longitude(P3, [0])


def test_walk_must_close(P3):
    with pytest.raises(CurveError):
        walk(P3, (0, "F"), [("s", 0)])


def test_interval_curve_bounds():
    S = marked_sphere(5)
    assert len(interval_curve(S, 1, 2)) == 2
    with pytest.raises(CurveError):
        interval_curve(S, 3, 3)
    with pytest.raises(CurveError):
        interval_curve(S, 0, 2)
