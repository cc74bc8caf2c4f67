import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcg_forge.surface.arrangement import (
    Arrangement,
    NotMinimalPosition,
    algebraic_intersection,
    complement_components,
    geometric_intersection,
    push_off,
    reduce_all,
    twist_curve,
)
from mcg_forge.surface.complex import marked_sphere, thicken
from mcg_forge.surface.curves import b_curve, interval_curve, longitude, meridian
from mcg_forge.surface.fatgraph import build_gamma, fundamental_cycle, spanning_tree
from mcg_forge.surface.homology import homology_class
from mcg_forge.symplectic import pairing

P3 = thicken(build_gamma(3))
M = [meridian(P3, e) for e in range(6)]
B = [b_curve(P3, e) for e in range(6)]
_tree = spanning_tree(P3.graph)
L = [longitude(P3, fundamental_cycle(P3.graph, _tree, e)) for e in range(6) if e not in _tree]
BASE = M + B + L


def test_disjoint_meridians():
    for i in range(6):
        for j in range(6):
            assert geometric_intersection(M[i], M[j]) == 0


def test_meridian_and_its_b_curve():
    for e in range(6):
        assert geometric_intersection(M[e], B[e]) == 2
        assert algebraic_intersection(M[e], B[e]) == 0
        for f in range(6):
            if f != e:
                assert geometric_intersection(M[f], B[e]) == 0


def test_pants_decomposition_regions():
    # 3g - 3 meridians cut the genus-3 surface into 2g - 2 pairs of pants
    assert complement_components(M) == 4
    assert complement_components([M[0]]) == 1


def test_push_off_is_disjoint():
    for c in B + L:
        assert geometric_intersection(c, push_off(c)) == 0


def test_self_arrangement_is_simple():
    assert all(Arrangement([c]).is_simple() for c in BASE)


def test_non_minimal_position_detected():
    m = M[0]
    moved = twist_curve(twist_curve(m, B[0], 1), B[0], -1)
    arr = Arrangement([moved, M[1]])
    if arr.bigons():
        with pytest.raises(NotMinimalPosition):
            complement_components([moved, M[1]], reduce=False)
    assert geometric_intersection(moved, M[1]) == 0
    assert reduce_all([moved, B[0]]).crossing_count(0, 1) == 2


def test_different_complexes_rejected():
    other = thicken(build_gamma(3))
    with pytest.raises(ValueError):
        geometric_intersection(M[0], meridian(other, 0))


def test_braid_disk_intervals():
    S = marked_sphere(7)
    a = interval_curve(S, 2, 3)
    assert geometric_intersection(a, interval_curve(S, 3, 4)) == 2
    assert geometric_intersection(a, interval_curve(S, 4, 5)) == 0
    assert geometric_intersection(a, interval_curve(S, 1, 4)) == 0
    assert geometric_intersection(interval_curve(S, 1, 2), interval_curve(S, 1, 4)) == 0


@pytest.mark.parametrize("power", [1, -1, 2])
def test_twist_acts_by_transvection(power):
    for c in BASE[:8]:
        for about in (B[1], L[0], M[2]):
            t = twist_curve(c, about, power)
            x, a = homology_class(c), homology_class(about)
            assert homology_class(t) == x + (power * pairing(a, x)) * a


def test_twist_about_disjoint_curve_keeps_class_and_intersections():
    t = twist_curve(B[0], M[3], 1)
    assert homology_class(t) == homology_class(B[0])
    assert geometric_intersection(t, M[0]) == 2


def test_twist_intersection_grows():
    # i(T_b^k(m), m) = k * i(m, b)^2 for curves meeting twice with zero pairing
    assert geometric_intersection(twist_curve(M[0], B[0], 1), M[0]) == 4


words = st.lists(st.tuples(st.integers(0, len(BASE) - 1), st.sampled_from([1, -1])),
                 min_size=1, max_size=3)


def _apply(c, word):
    for k, p in word:
        c = twist_curve(c, BASE[k], p)
    return c


@settings(max_examples=25)
@given(st.integers(0, len(BASE) - 1), st.integers(0, len(BASE) - 1), words)
def test_intersection_properties_on_random_curves(i, j, word):
    x = _apply(BASE[i], word)
    y = BASE[j]
    geo = geometric_intersection(x, y)
    alg = algebraic_intersection(x, y)
    assert geo == geometric_intersection(y, x)
    assert abs(alg) <= geo and (geo - alg) % 2 == 0
    assert alg == pairing(homology_class(x), homology_class(y))


@settings(max_examples=15)
@given(st.integers(0, len(BASE) - 1), st.integers(0, len(BASE) - 1),
       st.integers(0, len(BASE) - 1), st.sampled_from([1, -1]))
def test_intersection_is_mapping_class_invariant(i, j, k, p):
    x, y, a = BASE[i], BASE[j], BASE[k]
    assert geometric_intersection(twist_curve(x, a, p), twist_curve(y, a, p)) == \
        geometric_intersection(x, y)


def test_rotation_system_does_not_change_main_counts():
    rng = random.Random(3)
    for rot in ("circle", "twisted"):
        P = thicken(build_gamma(4, rot))
        m = [meridian(P, e) for e in range(9)]
        b = [b_curve(P, e) for e in range(9)]
        for _ in range(12):
            e, f = rng.randrange(9), rng.randrange(9)
            assert geometric_intersection(m[e], b[f]) == (2 if e == f else 0)
        assert all(complement_components([m[e], b[e]]) == 1 for e in range(9))
