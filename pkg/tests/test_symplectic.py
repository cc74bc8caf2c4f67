import pytest
from hypothesis import given
from hypothesis import strategies as st

from mcg_forge.exact_linalg import ExactMatrix, jordan_flag, kernel_dim, rank
from mcg_forge.symplectic import (
    GenusMismatch,
    HomologyClass,
    NoRelationUpTo,
    RelationFound,
    TwistWord,
    check_braid,
    check_commute,
    eval_word,
    free_certify,
    pairing,
    standard_form,
    torelli_check,
    transvection_defect_rank,
    twist_matrix,
    word_matrix,
)


def classes(g):
    return st.lists(st.integers(-4, 4), min_size=2 * g, max_size=2 * g).map(
        lambda v: HomologyClass(g, tuple(v)))


genus = st.integers(1, 4)
pairs = genus.flatmap(lambda g: st.tuples(classes(g), classes(g)))


def oracle_pairing(x, y):
    return sum(x.coords[2 * i] * y.coords[2 * i + 1] - x.coords[2 * i + 1] * y.coords[2 * i]
               for i in range(x.g))


def test_genus_one_blocks():
    a, b = HomologyClass.a(1, 1), HomologyClass.b(1, 1)
    assert pairing(a, b) == 1
    assert twist_matrix(a).mat.tolist() == [[1, 1], [0, 1]]
    assert twist_matrix(b).mat.tolist() == [[1, 0], [-1, 1]]


def test_twist_fixes_itself_and_moves_dual():
    a, b = HomologyClass.a(2, 1), HomologyClass.b(2, 1)
    T = twist_matrix(a)
    assert T.apply(a) == a
    assert T.apply(b) == b + a


@given(pairs)
def test_pairing_oracle_and_antisymmetry(xy):
    x, y = xy
    assert pairing(x, y) == oracle_pairing(x, y) == -pairing(y, x)


@given(pairs)
def test_transvection_formula(xy):
    a, x = xy
    assert twist_matrix(a).apply(x) == x + pairing(a, x) * a


@given(genus.flatmap(classes))
def test_twist_is_symplectic(a):
    J = standard_form(a.g)
    M = twist_matrix(a).mat
    assert M.T @ J @ M == J
    assert twist_matrix(a).is_symplectic()


@given(pairs)
def test_commute_iff_pairing_zero(xy):
    a, b = xy
    assert check_commute(a, b) == (pairing(a, b) == 0)


@given(pairs)
def test_nil_product_when_disjoint(xy):
    a, b = xy
    I = ExactMatrix.identity(2 * a.g)
    prod = (twist_matrix(a).mat - I) @ (twist_matrix(b).mat - I)
    assert prod.is_zero() == (pairing(a, b) == 0 or a.is_zero() or b.is_zero())


def test_braid_relation_when_pairing_one():
    g = 3
    a, b = HomologyClass.a(g, 2), HomologyClass.b(g, 2) + HomologyClass.a(g, 1)
    assert pairing(a, b) == 1
    assert check_braid(a, b)
    assert not check_braid(a, 2 * b)


@given(genus.flatmap(classes))
def test_defect_rank_and_eigenspace(a):
    g = a.g
    I = ExactMatrix.identity(2 * g)
    if a.is_zero():
        assert transvection_defect_rank(a) == 0
        return
    assert transvection_defect_rank(a) == 1
    assert kernel_dim(twist_matrix(a).mat - I) == 2 * g - 1
    assert jordan_flag(twist_matrix(a).mat, 1) == [0, 2 * g - 1, 2 * g]


@given(genus.flatmap(classes), st.integers(-3, 3).filter(bool))
def test_powers(a, k):
    assert twist_matrix(a, k).mat == twist_matrix(a).mat ** k if k > 0 else True
    assert (twist_matrix(a, k) @ twist_matrix(a, -k)).is_identity()


def test_torelli_examples():
    g = 2
    a = HomologyClass.a(g, 1)
    b = HomologyClass.a(g, 2)
    assert torelli_check(TwistWord(((a, 1), (a, -1))))
    assert torelli_check(TwistWord.commutator(a, b))
    assert not torelli_check(TwistWord(((a, 1),)))
    assert not torelli_check(TwistWord.commutator(a, HomologyClass.b(g, 1)))


def test_zero_class_and_word_json():
    z = HomologyClass.zero(2)
    assert twist_matrix(z).is_identity()
    w = TwistWord(((HomologyClass.a(2, 1), 2), (HomologyClass.b(2, 2), -1)))
    assert TwistWord.from_json(w.to_json()) == w
    assert eval_word(TwistWord(), 2).is_identity()
    with pytest.raises(GenusMismatch):
        pairing(HomologyClass.a(1, 1), HomologyClass.a(2, 1))
    with pytest.raises(ValueError):
        TwistWord(((z, 0),))


def test_free_certify_identity_and_depth_guard():
    I = twist_matrix(HomologyClass.zero(1))
    res = free_certify(I, I, 1)
    assert isinstance(res, RelationFound) and res.length == 1
    with pytest.raises(ValueError):
        free_certify(I, I, 15)
    with pytest.raises(ValueError):
        free_certify(I, I, 0)


def test_free_certify_pairing_one_finds_braid_word():
    A = twist_matrix(HomologyClass.a(1, 1))
    B = twist_matrix(HomologyClass.b(1, 1))
    res = free_certify(A, B, 12)
    assert res.word == "ABAbab"
    assert word_matrix(res.word, A, B) == ExactMatrix.identity(2)
    assert word_matrix("ABA" * 4, A, B) == ExactMatrix.identity(2)
    pos = free_certify(A, B, 12, positive_only=True)
    assert pos.length == 12
    assert word_matrix(pos.word, A, B) == ExactMatrix.identity(2)


def test_free_certify_symmetries():
    a, b = HomologyClass.a(1, 1), HomologyClass.b(1, 1)
    A, B = twist_matrix(a), twist_matrix(b)
    Ai, Bi = twist_matrix(a, -1), twist_matrix(b, -1)
    n = free_certify(A, B, 8).length
    assert free_certify(B, A, 8).length == n
    assert free_certify(Ai, Bi, 8).length == n


def test_free_certify_pairing_two_has_no_short_relation():
    A = twist_matrix(HomologyClass.a(1, 1))
    B = twist_matrix(2 * HomologyClass.b(1, 1))
    res = free_certify(A, B, 8)
    assert isinstance(res, NoRelationUpTo)
    assert res.words_checked == sum(4 * 3 ** (k - 1) for k in range(1, 9))
