import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coniccount.fields import (QQ, PrimeField, ExtensionField, field_pow,
                               field_to_json, field_from_json, is_prime)


def test_is_prime():
    assert is_prime(2) and is_prime(3) and is_prime(10007) and is_prime(65537)
    assert not is_prime(1) and not is_prime(10006) and not is_prime(31013 * 3)


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(10)


def test_prime_field_ops():
    F = PrimeField(10007)
    assert F.add(10006, 5) == 4
    assert F.mul(2, 3) == 6
    assert F.mul(F.inv(1234), 1234) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_rationals_exact():
    assert QQ.div(Fraction(1), Fraction(3)) == Fraction(1, 3)
    with pytest.raises(ZeroDivisionError):
        QQ.div(QQ.one, QQ.zero)


@settings(deadline=None, max_examples=50)
@given(st.integers(0, 10006), st.integers(0, 10006), st.integers(0, 10006))
def test_prime_field_ring_axioms(a, b, c):
    F = PrimeField(10007)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    if a:
        assert F.mul(a, F.inv(a)) == F.one


def test_extension_field_arithmetic():
    # GF(10007^2) as GF(10007)[t] / (t^2 + 5)
    E = ExtensionField(10007, [5, 0, 1])
    t = E.generator()
    assert E.mul(t, t) == E.from_base(10007 - 5)
    rng = random.Random(0)
    for _ in range(50):
        a = E.random_element(rng)
        if a == E.zero:
            continue
        assert E.mul(a, E.inv(a)) == E.one
    with pytest.raises(ZeroDivisionError):
        E.inv(E.zero)


def test_extension_field_frobenius_order():
    E = ExtensionField(10007, [3, 1, 1])
    t = E.generator()
    # t^(p^2) == t in GF(p^2)
    assert field_pow(E, t, 10007 ** 2) == t
    assert field_pow(E, t, 10007) != t


def test_field_json_round_trip():
    for F in (QQ, PrimeField(31013), ExtensionField(10007, [5, 0, 1])):
        assert field_from_json(field_to_json(F)) == F


def test_element_json_round_trip():
    F = PrimeField(10007)
    assert F.element_from_json(F.element_to_json(123)) == 123
    q = Fraction(-7, 3)
    assert QQ.element_from_json(QQ.element_to_json(q)) == q
