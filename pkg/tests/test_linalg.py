from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from sramorita.errors import DimensionError, PreconditionError
from sramorita.linalg import GF, QQ

FIELDS = [QQ, GF(7), GF(101)]


@st.composite
def matrices(draw, K, max_dim=5):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(1, max_dim))
    entries = st.integers(-3, 3) if K.characteristic else st.fractions(-3, 3, max_denominator=4)
    return K.mat([[draw(entries) for _ in range(c)] for _ in range(r)], ncols=c)


@pytest.mark.parametrize("K", FIELDS, ids=repr)
@given(data=st.data())
def test_nullspace_and_rank(K, data):
    A = data.draw(matrices(K))
    N, free = K.nullspace(A)
    assert N.nrows == A.ncols and N.ncols == len(free)
    assert K.is_zero(K.matmul(A, N))
    assert K.rank(A) + len(free) == A.ncols
    assert K.rank(N) == len(free)


@pytest.mark.parametrize("K", FIELDS, ids=repr)
@given(data=st.data())
def test_matmul_associative_and_identity(K, data):
    n = data.draw(st.integers(1, 4))
    entries = st.integers(-3, 3)
    mats = [K.mat([[data.draw(entries) for _ in range(n)] for _ in range(n)]) for _ in range(3)]
    A, B, C = mats
    assert K.matmul(K.matmul(A, B), C) == K.matmul(A, K.matmul(B, C))
    assert K.matmul(A, K.identity(n)) == A
    assert K.add(A, K.scale(-1, A)) == K.zeros(n, n)
    assert K.matmul(A, K.add(B, C)) == K.add(K.matmul(A, B), K.matmul(A, C))


@given(st.integers(1, 100))
def test_prime_field_inverse(x):
    K = GF(101)
    assert K.reduce(x * K.inv(x)) == 1
    assert K.convert(F(1, x)) == K.inv(x)


def test_conversions():
    assert GF(7).convert(F(1, 2)) == 4
    assert GF(7).convert(-1) == 6
    with pytest.raises(PreconditionError):
        GF(7).convert(F(1, 7))
    assert QQ.convert(3) == F(3)


def test_shape_errors():
    with pytest.raises(DimensionError):
        QQ.matmul(QQ.zeros(2, 3), QQ.zeros(2, 3))
    with pytest.raises(DimensionError):
        QQ.mat([[1, 2], [3]])


def test_blocks():
    A = QQ.mat([[1, 2, 3], [4, 5, 6]])
    assert A.col_block(1, 3) == QQ.mat([[2, 3], [5, 6]])
    assert A.row_block(1, 2) == QQ.mat([[4, 5, 6]])
    assert QQ.hstack([A.col_block(0, 1), A.col_block(1, 3)], 2) == A
    assert QQ.vstack([A.row_block(0, 1), A.row_block(1, 2)], 3) == A


@pytest.mark.parametrize("p", [2, 3, 9, 100])
def test_prime_field_rejects(p):
    with pytest.raises(PreconditionError):
        GF(p)
