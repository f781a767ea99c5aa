import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from oracles import brute_permanent

from permlab.permcore import (
    Matrix,
    MatrixFormatError,
    determinant,
    integer_permanent,
    permanent,
    perrank,
    rank,
    selectors,
    sub_permanents,
)
from permlab.polyring import generic_ring
from permlab.scalars import QQ, QQI, Scalar, field_parse

FAMILY3 = [[1, 1, 1, -7], [1, 1, -4, 2], [1, 1, 3, 5]]


def test_small_examples():
    A = Matrix([[1, 2], [3, 4]], field=QQ)
    assert permanent(A) == Scalar(QQ, 10)
    assert determinant(A) == Scalar(QQ, -2)


def test_family_columns_vanish():
    M = Matrix(FAMILY3, field=QQ)
    assert permanent(M.submatrix([0, 1, 2], [0, 1, 2])).is_zero()
    assert all(v.is_zero() for _, v in sub_permanents(M, 3))


def test_generic_2x2():
    G = Matrix.generic(2, 2)
    R = G.ring
    assert permanent(G) == R.parse("x_1_1*x_2_2 + x_1_2*x_2_1")
    assert determinant(G) == R.parse("x_1_1*x_2_2 - x_1_2*x_2_1")


def test_det_t23():
    G = Matrix.generic(2, 3)
    T = G.submatrix([0, 1], [1, 2])
    assert determinant(T) == G.ring.parse("x_1_2*x_2_3 - x_1_3*x_2_2")


def test_perrank_examples():
    assert perrank(Matrix([[1, 0], [0, 1]], field=QQ)) == 2
    assert perrank(Matrix([[1, 1], [1, -1]], field=QQ)) == 1
    assert perrank(Matrix([[0, 0], [0, 0]], field=QQ)) == 0


def test_sub_permanents_order():
    G = Matrix.generic(2, 3)
    sels = [s for s, _ in sub_permanents(G, 2)]
    assert sels == [((0, 1), (0, 1)), ((0, 1), (0, 2)), ((0, 1), (1, 2))]
    with pytest.raises(ValueError):
        list(selectors(2, 3, 3))


def test_non_square_rejected():
    with pytest.raises(ValueError):
        permanent(Matrix([[1, 2, 3]], field=QQ))
    with pytest.raises(ValueError):
        determinant(Matrix([[1, 2, 3]], field=QQ))


FIELDS = ["QQ", "QQi", "F2", "F3", "F7", "GF2^2", "GF3^2"]


@pytest.mark.parametrize("spec", FIELDS)
def test_ryser_equals_laplace(spec):
    F = field_parse(spec)
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(1, 9 if F.is_finite else 7)
        A = Matrix._raw([[F.random(rng) for _ in range(n)] for _ in range(n)], field=F)
        assert permanent(A, "ryser") == permanent(A, "laplace")


def test_integer_permanent_matches_brute():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 7)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert integer_permanent(rows) == brute_permanent(rows)


def test_fraction_permanent():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(2, 5), 1]]
    assert permanent(Matrix(rows, field=QQ)) == Scalar(QQ, brute_permanent(rows))


def test_large_integer_entries():
    rows = [[10 ** 30 + i * j for j in range(6)] for i in range(6)]
    assert integer_permanent(rows) == brute_permanent(rows)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2 ** 32), d=st.integers(1, 6))
def test_multilinearity_in_last_column(seed, d):
    rng = random.Random(seed)
    A = [[rng.randint(-5, 5) for _ in range(d - 1)] for _ in range(d)]
    v = [rng.randint(-5, 5) for _ in range(d)]
    full = Matrix([r + [x] for r, x in zip(A, v)], field=QQ)
    expected = Scalar(QQ, 0)
    for i in range(d):
        minor = [r for k, r in enumerate(A) if k != i]
        sub = Scalar(QQ, brute_permanent(minor) if minor and minor[0] else 1)
        expected = expected + sub * v[i]
    assert permanent(full) == expected


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2 ** 32))
def test_row_scaling(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    A = Matrix([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)], field=QQ)
    lam = rng.randint(-4, 4)
    i = rng.randrange(n)
    assert permanent(A.scale_row(i, lam)) == permanent(A) * lam


def test_cofactor_kernel_consequence():
    # d vectors killing perm(A|v) force det(v_1..v_d) * cofactors = 0
    rng = random.Random(5)
    d = 3
    for _ in range(50):
        A = [[rng.randint(-3, 3) for _ in range(d - 1)] for _ in range(d)]
        cof = [brute_permanent([r for k, r in enumerate(A) if k != i]) for i in range(d)]
        vs = []
        while len(vs) < d:
            v = [rng.randint(-3, 3) for _ in range(d)]
            if sum(c * x for c, x in zip(cof, v)) == 0:
                vs.append(v)
        V = Matrix([[vs[j][i] for j in range(d)] for i in range(d)], field=QQ)
        det = determinant(V)
        assert all((det * c).is_zero() for c in cof)


def test_perrank_zero_iff_zero_matrix():
    rng = random.Random(2)
    F = field_parse("F3")
    for _ in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        M = Matrix._raw([[F.random(rng) for _ in range(n)] for _ in range(m)], field=F)
        assert (perrank(M) == 0) == M.is_zero()


def test_rank_and_bareiss():
    M = Matrix([[2, 4, 1], [1, 2, 0], [3, 6, 1]], field=QQ)
    assert determinant(M).is_zero()
    assert rank(M) == 2


def test_gaussian_permanent():
    i = QQI.I
    M = Matrix([[1, i], [i, 1]], field=QQI)
    assert permanent(M) == Scalar(QQI, (0, 0))


def test_json_roundtrip(tmp_path):
    M = Matrix(FAMILY3, field=QQ)
    data = json.loads(json.dumps(M.to_json()))
    assert data == {"field": "QQ", "rows": [[str(x) for x in r] for r in FAMILY3]}
    assert Matrix.from_json(data).rows == M.rows


@pytest.mark.parametrize(
    "bad",
    [
        {"rows": [["1"]]},
        {"field": "QQ", "rows": [["1", "2"], ["3"]]},
        {"field": "F5", "rows": [["x"]]},
        {"field": "nope", "rows": [["1"]]},
        [1, 2],
    ],
)
def test_json_malformed(bad):
    with pytest.raises(MatrixFormatError):
        Matrix.from_json(bad)


def test_ryser_20x20_integer():
    rng = random.Random(20)
    rows = [[rng.randint(-9, 9) for _ in range(20)] for _ in range(20)]
    v = permanent(Matrix(rows, field=QQ))
    # reduce mod a small prime and compare with the finite-field route
    F = field_parse("F101")
    w = permanent(Matrix._raw([[x % 101 for x in r] for r in rows], field=F))
    assert int(v.value) % 101 == w.value


def test_symbolic_matches_generic_ring_expansion():
    G = Matrix.generic(3, 3)
    p = permanent(G)
    assert len(p) == 6
    assert p.ring == generic_ring(3, 3)
