from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lowdeg.errors import MixedFieldError
from lowdeg.fields import (
    QQ,
    PrimeField,
    is_prime,
    scalar_from_json,
    scalar_to_json,
)


class TestRationalField:
    def test_coerce_canonical(self):
        assert QQ.coerce(Fraction(2, 4)) == Fraction(1, 2)
        assert QQ.coerce(5) == Fraction(5)
        # reduced with positive denominator: equal values are identical representations
        assert Fraction(-2, -4) == Fraction(1, 2)
        assert Fraction(2, -4).denominator > 0

    def test_arithmetic(self):
        a, b = Fraction(1, 2), Fraction(1, 3)
        assert QQ.add(a, b) == Fraction(5, 6)
        assert QQ.mul(a, b) == Fraction(1, 6)
        assert QQ.inv(a) == 2
        with pytest.raises(ZeroDivisionError):
            QQ.inv(QQ.zero)

    def test_rejects_foreign_values(self):
        with pytest.raises(MixedFieldError):
            QQ.coerce(0.5)
        with pytest.raises(MixedFieldError):
            QQ.coerce({"val": 1, "mod": 5})
        with pytest.raises(MixedFieldError):
            QQ.coerce(True)

    def test_singleton_equality(self):
        from lowdeg.fields import RationalField

        assert QQ == RationalField()
        assert QQ != PrimeField(5)


class TestPrimeField:
    def test_validation(self):
        PrimeField(2)
        PrimeField(3)
        PrimeField(2147483647)  # largest prime below 2**31
        with pytest.raises(MixedFieldError):
            PrimeField(4)
        with pytest.raises(MixedFieldError):
            PrimeField(1)
        with pytest.raises(MixedFieldError):
            PrimeField(2**31 + 11)

    def test_arithmetic_mod_7(self):
        gf = PrimeField(7)
        assert gf.add(5, 4) == 2
        assert gf.mul(3, 5) == 1
        assert gf.inv(3) == 5
        assert gf.neg(2) == 5
        with pytest.raises(ZeroDivisionError):
            gf.inv(0)

    def test_coerce(self):
        gf = PrimeField(5)
        assert gf.coerce(-1) == 4
        assert gf.coerce(Fraction(7)) == 2
        with pytest.raises(MixedFieldError):
            gf.coerce(Fraction(1, 2))

    @given(a=st.integers(), b=st.integers(), c=st.integers())
    def test_field_axioms_gf101(self, a, b, c):
        gf = PrimeField(101)
        a, b, c = gf.coerce(a), gf.coerce(b), gf.coerce(c)
        assert gf.add(a, b) == gf.add(b, a)
        assert gf.mul(a, b) == gf.mul(b, a)
        assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))
        if not gf.is_zero(a):
            assert gf.mul(a, gf.inv(a)) == gf.one


def test_is_prime_small_values():
    primes = [n for n in range(2, 60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


class TestScalarJson:
    def test_rational_strings(self):
        assert scalar_to_json(QQ, Fraction(5)) == "5"
        assert scalar_to_json(QQ, Fraction(-3, 2)) == "-3/2"
        field, value = scalar_from_json("-3/2")
        assert field == QQ and value == Fraction(-3, 2)
        field, value = scalar_from_json(7)
        assert field == QQ and value == Fraction(7)

    def test_prime_field_objects(self):
        gf = PrimeField(5)
        assert scalar_to_json(gf, 3) == {"val": 3, "mod": 5}
        field, value = scalar_from_json({"val": 8, "mod": 5})
        assert field == gf and value == 3

    def test_malformed(self):
        with pytest.raises(MixedFieldError):
            scalar_from_json("not-a-number")
        with pytest.raises(MixedFieldError):
            scalar_from_json({"val": 1})
        with pytest.raises(MixedFieldError):
            scalar_from_json(1.5)

    @given(num=st.integers(-10**6, 10**6), den=st.integers(1, 10**6))
    def test_round_trip(self, num, den):
        value = Fraction(num, den)
        field, parsed = scalar_from_json(scalar_to_json(QQ, value))
        assert field == QQ and parsed == value
