# -*- coding: utf-8 -*-
import unittest
from fractions import Fraction
from math import gcd

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from csalab.arith import (ZERO, ArithException, QmodZ, Valuation,
                          exact_valuation, is_prime, lcm, lcm_all,
                          positive_gcd, prime_divisors, qmz_add, qmz_order,
                          reduced_divides, reduced_quotient, vp)

HYP_SETTINGS = dict(max_examples=200, deadline=None)


@st.composite
def st_qmodz(draw, max_den=24):
    den = draw(st.integers(min_value=1, max_value=max_den))
    num = draw(st.integers(min_value=-3 * den, max_value=3 * den))
    return QmodZ(num, den)


def test_qmz_add_examples():
    assert qmz_add(QmodZ(1, 2), QmodZ(1, 2)) == ZERO
    assert qmz_add(QmodZ(1, 3), QmodZ(1, 3)) == QmodZ(2, 3)
    assert qmz_add(QmodZ(1, 4), QmodZ(5, 6)) == QmodZ(1, 12)


def test_qmz_order_examples():
    assert qmz_order(ZERO) == 1
    assert qmz_order(QmodZ(1, 2)) == 2
    assert qmz_order(QmodZ(3, 4)) == 4
    assert qmz_order(QmodZ(6, 8)) == 4


def test_exact_valuation_examples():
    assert exact_valuation(2, 12) == Valuation(2, 2)
    assert vp(3, 12) == 1
    assert vp(5, 12) == 0
    with pytest.raises(ArithException):
        exact_valuation(4, 12)
    with pytest.raises(ArithException):
        exact_valuation(2, 0)


def test_reduced_divides_examples():
    assert reduced_divides(2, 4, 2)
    assert reduced_divides(6, 12, 4)
    assert reduced_divides(3, 9, 3)
    with pytest.raises(ArithException):
        reduced_divides(3, 4, 2)


def test_reduced_divides_exhaustive():
    for a in range(1, 201):
        for b in range(a, 401, a):
            for d in range(1, 201):
                assert reduced_divides(a, b, d), (a, b, d)


def test_gcd_conventions():
    assert reduced_quotient(7, 0) == 1
    assert reduced_quotient(12, 8) == 3
    assert lcm(4, 6) == 12
    assert lcm_all([2, 3, 4]) == 12
    assert lcm_all([]) == 1
    with pytest.raises(ArithException):
        positive_gcd(0, 0)


def test_primes():
    assert [n for n in range(30) if is_prime(n)] == \
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_divisors(360) == [2, 3, 5]
    assert prime_divisors(1) == []


class TestQmodZ(unittest.TestCase):
    def test_reduced_form(self):
        x = QmodZ(-10, 4)
        self.assertEqual((x.num, x.den), (1, 2))
        self.assertEqual(str(QmodZ(7, 3)), '1/3')
        self.assertEqual(QmodZ.parse('-1/3'), QmodZ(2, 3))
        self.assertEqual(QmodZ.from_fraction(Fraction(5, 4)), QmodZ(1, 4))

    def test_parse_rejects(self):
        for bad in ('1/0', 'x', '1.5'):
            with self.assertRaises(ArithException):
                QmodZ.parse(bad)

    def test_immutable(self):
        with self.assertRaises(AttributeError):
            QmodZ(1, 2).num = 3

    def test_dense_grid_group_laws(self):
        values = set(QmodZ(n, d) for d in range(1, 25) for n in range(d))
        values = sorted(values, key=lambda x: (x.den, x.num))[::7]
        for x in values:
            self.assertEqual(qmz_add(x, ZERO), x)
            for y in values:
                self.assertEqual(qmz_add(x, y), qmz_add(y, x))
                for z in values[::5]:
                    self.assertEqual(qmz_add(qmz_add(x, y), z),
                                     qmz_add(x, qmz_add(y, z)))

    @settings(**HYP_SETTINGS)
    @given(st_qmodz())
    def test_order_is_minimal(self, x):
        k = qmz_order(x)
        self.assertTrue((x * k).is_zero())
        for j in range(1, k):
            self.assertFalse((x * j).is_zero())

    @settings(**HYP_SETTINGS)
    @given(st.integers(min_value=1, max_value=10 ** 12),
           st.sampled_from([2, 3, 5, 7, 11, 13]))
    def test_valuation_is_exact(self, n, p):
        e = vp(p, n)
        self.assertEqual(n % p ** e, 0)
        self.assertNotEqual(n % p ** (e + 1), 0)

    @settings(**HYP_SETTINGS)
    @given(st.integers(min_value=1, max_value=10 ** 6),
           st.integers(min_value=0, max_value=10 ** 6))
    def test_reduced_quotient(self, n, k):
        self.assertEqual(reduced_quotient(n, k), n // gcd(n, k))
        self.assertEqual(n % reduced_quotient(n, k), 0)
