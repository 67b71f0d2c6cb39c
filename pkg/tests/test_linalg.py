"""Exact sparse kernels and rank: the null-space contract M.v = 0."""

import random

from tqdha.linalg import ExactMatrix, RowReducer, kernel_basis, matrix_rank, rows_rank, same_span
from tqdha.scalars import MINUS_ONE, ONE, rational, root_of_unity


def dense(rows):
    return ExactMatrix.from_dense([[rational(x) if isinstance(x, int) else x for x in r] for r in rows])


def test_kernel_all_ones():
    m = dense([[1, 1], [1, 1]])
    basis = kernel_basis(m)
    assert len(basis) == 1
    v = basis[0]
    # proportional to (1, -1)
    assert v[0] * MINUS_ONE == v[1]
    assert all(x.is_zero() for x in m.apply(v))


def test_kernel_identity_empty():
    m = dense([[1, 0], [0, 1]])
    assert kernel_basis(m) == []


def test_kernel_with_cyclotomic_entry():
    i = root_of_unity(4, 1)
    m = ExactMatrix.from_dense([[i, ONE]])
    basis = kernel_basis(m)
    assert len(basis) == 1
    v = basis[0]
    assert all(x.is_zero() for x in m.apply(v))
    # proportional to (1, -zeta_4)
    assert (v[1] / v[0]) == MINUS_ONE * i


def test_kernel_vectors_annihilate_and_are_independent():
    rnd = random.Random(3)
    for trial in range(10):
        rows = [[rational(rnd.randint(-2, 2)) for _ in range(6)] for _ in range(4)]
        m = ExactMatrix.from_dense(rows)
        basis = kernel_basis(m)
        assert len(basis) == 6 - matrix_rank(m)
        for v in basis:
            assert all(x.is_zero() for x in m.apply(v))
        vecs = [{j: x for j, x in enumerate(v) if not x.is_zero()} for v in basis]
        assert rows_rank(vecs) == len(basis)


def test_same_span():
    a = [{0: ONE, 1: ONE}, {1: ONE}]
    b = [{0: ONE}, {0: ONE, 1: rational(2)}]
    c = [{0: ONE}]
    assert same_span(a, b)
    assert not same_span(a, c)


def test_rref_is_fully_reduced():
    red = RowReducer()
    red.insert({0: ONE, 1: ONE, 2: ONE})
    red.insert({1: ONE, 2: rational(2)})
    rref = red.rref()
    assert set(rref) == {0, 1}
    assert 1 not in rref[0]  # pivot columns eliminated everywhere else
