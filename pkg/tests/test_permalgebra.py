import pytest

from permlab.permalgebra import abstract_h23_specialization, build_h, multisets, verify_column_span, verify_h_rank


def test_multiset_count():
    assert len(multisets(4, 2)) == 10
    assert multisets(3, 1) == [(1,), (2,), (3,)]


def test_h34_repeated_entry():
    built = build_h(3, 4)
    H, cols = built["matrix"], built["columns"]
    assert (H.m, H.n) == (4, 10)
    # (row 1, {1,2}) and (row 2, {1,1}) are both A_{1,1,2}
    assert H.rows[0][cols.index((1, 2))] == H.rows[1][cols.index((1, 1))]


def test_h23_symmetric_and_diagonal():
    built = build_h(2, 3)
    H = built["matrix"]
    R = H.ring
    assert (H.m, H.n) == (3, 3)
    for i in range(3):
        for j in range(3):
            assert H.rows[i][j] == H.rows[j][i]
    assert H.rows[0][0] == R.parse("2*x_1_1*x_2_1")


@pytest.mark.parametrize("d,n,minors", [(2, 3, 1), (2, 4, 16), (3, 4, 210)])
def test_h_rank(d, n, minors):
    r = verify_h_rank(d, n)
    assert r["pass"] and r["minors"] == minors


@pytest.mark.parametrize("d,n", [(2, 3), (2, 4), (3, 4)])
def test_column_span(d, n):
    assert verify_column_span(d, n)["pass"]


def test_h23_specialization():
    assert abstract_h23_specialization()["pass"]


def test_range():
    with pytest.raises(ValueError):
        build_h(1, 3)
