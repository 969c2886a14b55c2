import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from weakyd.exactlin import (QQ, FieldError, Fp, PrimeField, Subspace, equal, field_from_name,
                             inverse, kron, rank, rref_and_kernel, solve_linear)

F5 = PrimeField(5)


def test_kernel_of_rank_one_matrix():
    _, ker = rref_and_kernel(QQ.array([[1, 2], [2, 4]]), QQ)
    assert ker.dim == 1
    assert equal(ker.basis, QQ.array([["1", "-1/2"]]))


def test_underdetermined_solve():
    sol = solve_linear(QQ.array([[1, 1]]), QQ.array([3]), QQ)
    assert sol.kind == "affine"
    assert equal(sol.particular, QQ.array([3, 0]))
    assert equal(sol.kernel.basis, QQ.array([[1, -1]]))


def test_inconsistent_solve_is_empty():
    sol = solve_linear(QQ.array([[1, 1], [1, 1]]), QQ.array([1, 2]), QQ)
    assert sol.empty and sol.kind == "empty"


def test_fp_arithmetic():
    assert int(Fp(2, 5).inverse()) == 3
    assert Fp(3, 5) * Fp(2, 5) == 1
    assert F5.parse("1/2") == 3
    with pytest.raises(ZeroDivisionError):
        Fp(0, 5).inverse()


def test_field_errors():
    with pytest.raises(FieldError):
        PrimeField(4)
    with pytest.raises(FieldError):
        field_from_name("prime:x")
    with pytest.raises(FieldError):
        QQ.parse("1/0")
    with pytest.raises(FieldError):
        QQ.scalar(0.5)
    with pytest.raises(FieldError):
        F5.parse("1/5")


def test_singular_inverse_raises():
    with pytest.raises(ValueError):
        inverse(QQ.array([[1, 2], [2, 4]]), QQ)


def test_kron_matches_index_formula():
    A, B = QQ.array([[1, 2], [3, 4]]), QQ.array([[0, 1], [1, 0]])
    K = kron(A, B)
    assert K[1 * 2 + 0, 0 * 2 + 1] == A[1, 0] * B[0, 1]


small = st.integers(-3, 3)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(st.integers(1, 4), st.integers(1, 4), st.data())
@settings(max_examples=60, deadline=None)
def test_rank_nullity(r, c, data):
    for F in (QQ, F5):
        M = F.array(data.draw(matrices(r, c)))
        _, ker = rref_and_kernel(M, F)
        assert rank(M, F) + ker.dim == c
        for v in ker.basis:
            assert not any(M @ v)


@given(st.integers(1, 4), st.data())
@settings(max_examples=60, deadline=None)
def test_inverse_round_trip(n, data):
    for F in (QQ, F5):
        A = F.array(data.draw(matrices(n, n)))
        if rank(A, F) < n:
            continue
        assert equal(inverse(A, F) @ A, F.eye(n))


@given(st.integers(1, 4), st.integers(1, 4), st.data())
@settings(max_examples=60, deadline=None)
def test_solve_recovers_consistent_systems(r, c, data):
    A = QQ.array(data.draw(matrices(r, c)))
    x0 = QQ.array(data.draw(st.lists(small, min_size=c, max_size=c)))
    sol = solve_linear(A, A @ x0, QQ)
    assert not sol.empty
    assert equal(A @ sol.particular, A @ x0)
    assert sol.kernel.contains(sol.particular - x0)


@given(st.integers(1, 3), st.integers(1, 4), st.data())
@settings(max_examples=60, deadline=None)
def test_subspace_independent_of_spanning_set(r, n, data):
    rows = QQ.array(data.draw(matrices(r, n)))
    mix = QQ.array(data.draw(matrices(r, r)))
    S = Subspace.from_rows(rows, QQ, n)
    T = Subspace.from_rows(np.concatenate([mix @ rows, rows[::-1]]), QQ, n)
    assert S == T
    Q, L = S.quotient_maps()
    assert equal(Q @ L, QQ.eye(n - S.dim))
    if S.dim:
        assert not any((Q @ S.incl).reshape(-1))
