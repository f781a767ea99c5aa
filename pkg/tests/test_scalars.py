from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from permlab.scalars import QQ, FieldError, Scalar, field_parse, is_prime, scalar_arith

FINITE = ["F2", "F3", "F5", "F7", "GF2^2", "GF2^3", "GF3^2", "GF5^2"]


def test_parse_forms():
    assert field_parse("QQ").kind == "rationals"
    assert field_parse("QQi").kind == "gaussian-rationals"
    assert field_parse("F7").q == 7
    assert field_parse("GF2^4").q == 16


@pytest.mark.parametrize("bad", ["F4", "F1", "GF4^2", "GF2^17", "R", "", "F-3"])
def test_parse_rejects(bad):
    with pytest.raises(FieldError):
        field_parse(bad)


def test_inverse_of_zero_raises():
    with pytest.raises((FieldError, ZeroDivisionError)):
        field_parse("F5").inv(0)


def test_prime_field_examples():
    F = field_parse("F5")
    assert F.mul(3, 2) == 1
    assert F.inv(2) == 3
    assert F.neg(1) == 4


def test_rationals_exact():
    a = Scalar(QQ, Fraction(1, 3))
    assert a + a + a == Scalar(QQ, 1)
    assert scalar_arith("div", Scalar(QQ, 1), Scalar(QQ, 3)) == a


def test_gaussian_unit():
    F = field_parse("QQi")
    i = F.I
    assert F.mul(i, i) == F.from_int(-1)
    assert F.inv(i) == F.neg(i)


def test_field_mismatch():
    with pytest.raises(FieldError):
        scalar_arith("add", Scalar(field_parse("F3"), 1), Scalar(field_parse("F5"), 1))


@pytest.mark.parametrize("spec", FINITE)
def test_finite_axioms_exhaustive(spec):
    F = field_parse(spec)
    els = list(range(F.q))
    units = [a for a in els if not F.is_zero(a)]
    for a in units:
        assert F.mul(a, F.inv(a)) == F.one
    # multiplicative group has order q - 1: a^(q-1) = 1
    for a in units:
        assert F.pow(a, F.q - 1) == F.one
    for a in els:
        assert F.is_zero(F.add(a, F.neg(a)))
        assert F.mul(F.from_int(F.char), a) == F.zero


@pytest.mark.parametrize("spec", FINITE)
def test_tables_agree_with_ops(spec):
    F = field_parse(spec)
    add, mul = F.tables()
    q = F.q
    for a in range(q):
        for b in range(q):
            assert add[a * q + b] == F.add(a, b)
            assert mul[a * q + b] == F.mul(a, b)


@pytest.mark.parametrize("spec", FINITE)
@given(data=st.data())
def test_distributive(spec, data):
    F = field_parse(spec)
    a, b, c = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_field_laws(a, b, c):
    assert QQ.mul(a, QQ.add(b, c)) == QQ.add(QQ.mul(a, b), QQ.mul(a, c))
    if b != 0:
        assert QQ.mul(QQ.div(a, b), b) == a


@given(st.tuples(st.fractions(), st.fractions()), st.tuples(st.fractions(), st.fractions()))
def test_gaussian_inverse(a, b):
    F = field_parse("QQi")
    if not F.is_zero(b):
        assert F.mul(F.div(a, b), b) == F.reduce(a)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("spec", ["QQ", "QQi", "F7", "GF3^2"])
def test_format_parse_roundtrip(spec):
    F = field_parse(spec)
    import random

    rng = random.Random(1)
    for _ in range(50):
        a = F.random(rng)
        assert F.parse(F.format(a)) == F.reduce(a)
