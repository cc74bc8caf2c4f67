import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcg_forge.exact_linalg import ExactMatrix, range_sum_dim
from mcg_forge.relations import (
    MatrixFamily,
    PreconditionError,
    block_witness,
    check_dim_inf_bound,
    check_naive_bound,
    check_nm_relations,
    random_valid_family,
    unimodular_pair,
    witness_family,
    witness_search,
)


def oracle_violations(f):
    # direct dense products, no sparse shortcuts
    out = set()
    for kind, L, R in (("NM", f.N, f.M), ("MN", f.M, f.N), ("MM", f.M, f.M)):
        for j in range(f.n):
            for i in range(f.n):
                zero = (L[j] @ R[i]).is_zero()
                want_zero = kind == "MM" or i != j
                if zero != want_zero:
                    out.add((kind, j, i))
    return out


def test_witness_passes():
    w = witness_family()
    assert w.d == 2
    assert check_nm_relations(w).holds
    assert check_naive_bound(w).holds
    b = check_dim_inf_bound(w)
    assert (b.lhs, b.rhs, b.and_2d_ge_3n) == (2, 1, True)


def test_zero_family_violates_diagonal():
    Z = ExactMatrix.zeros(2)
    f = MatrixFamily(2, 2, (Z, Z), (Z, Z))
    v = check_nm_relations(f)
    assert {(x.kind, x.j, x.i, x.reason) for x in v.violations} == {
        (k, i, i, "should_be_nonzero") for k in ("NM", "MN") for i in range(2)}
    with pytest.raises(PreconditionError) as exc:
        check_naive_bound(f)
    assert exc.value.to_json()["violations"]


def test_bound_refuses_zero_member():
    f = block_witness(1)
    bad = MatrixFamily(1, 2, f.M, (ExactMatrix.zeros(2),))
    with pytest.raises(PreconditionError):
        check_dim_inf_bound(bad)


def test_shape_validation():
    with pytest.raises(ValueError):
        MatrixFamily(0, 2, (), ())
    with pytest.raises(ValueError):
        MatrixFamily(1, 2, (ExactMatrix.identity(3),), (ExactMatrix.identity(2),))
    with pytest.raises(ValueError):
        random_valid_family(3, 5, 0)


def test_json_roundtrip():
    f = random_valid_family(2, 5, 11)
    assert MatrixFamily.from_json(f.to_json()) == f
    with pytest.raises(ValueError):
        MatrixFamily.from_json({"n": 1})


@settings(max_examples=40)
@given(st.integers(1, 3), st.integers(0, 3), st.integers(0, 10 ** 6))
def test_random_valid_families_satisfy_everything(n, extra, seed):
    f = random_valid_family(n, 2 * n + extra, seed)
    assert not oracle_violations(f)
    assert check_nm_relations(f).holds
    assert check_naive_bound(f).lhs >= n
    b = check_dim_inf_bound(f)
    assert b.lhs >= 3 * n - f.d and 2 * f.d >= 3 * n


@settings(max_examples=40)
@given(st.integers(1, 2), st.integers(1, 4), st.integers(0, 10 ** 6))
def test_checker_agrees_with_dense_oracle(n, d, seed):
    rng = random.Random(seed)
    mk = lambda: ExactMatrix.from_rows([[rng.choice([0, 0, 0, 1, -1]) for _ in range(d)]
                                        for _ in range(d)])
    f = MatrixFamily(n, d, tuple(mk() for _ in range(n)), tuple(mk() for _ in range(n)))
    got = {(v.kind, v.j, v.i) for v in check_nm_relations(f).violations}
    assert got == oracle_violations(f)


@given(st.integers(1, 6), st.integers(0, 10 ** 6))
def test_unimodular_pair_inverse(d, seed):
    P, Q = unimodular_pair(d, random.Random(seed))
    assert P @ Q == ExactMatrix.identity(d)


def test_conjugation_preserves_relations_and_ranks():
    f = block_witness(2)
    P, Q = unimodular_pair(4, random.Random(1))
    h = f.conjugate(P, Q)
    assert check_nm_relations(h).holds
    assert range_sum_dim(list(h.M)) == range_sum_dim(list(f.M))


def test_witness_search():
    r = witness_search(1, 2, seed=0)
    assert r.best_d == 2 and r.floor == 2 and r.meets_floor
    assert check_nm_relations(r.family).holds
    none = witness_search(1, 1, seed=0)
    assert none.family is None and none.candidates_checked > 0
    two = witness_search(2, 4, seed=0)
    assert two.best_d is not None and two.best_d <= 4 and two.floor == 3
    assert witness_search(2, 4, seed=5).to_json() == witness_search(2, 4, seed=5).to_json()
