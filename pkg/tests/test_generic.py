# -*- coding: utf-8 -*-
import random
import unittest
from math import gcd

import hypothesis.strategies as st
from hypothesis import given, settings

from csalab.arith import vp
from csalab.brauer import (QQ, AbelianField, DivisionAlgebra, index, make_class,
                           power)
from csalab.generic import (GenericAlgebra, GenericException, MixedClass,
                            mixed_index, n_ab, ud_power_index)

HYP_SETTINGS = dict(max_examples=200, deadline=None)

QUATERNION = make_class(QQ, {2: '1/2', 'inf': '1/2'})


class TestGenericAlgebra(unittest.TestCase):
    def test_power_index_examples(self):
        self.assertEqual(ud_power_index(6, 1), 6)
        self.assertEqual(ud_power_index(6, 4), 3)
        self.assertEqual(ud_power_index(6, 6), 1)
        self.assertEqual(ud_power_index(6, 0), 1)
        self.assertEqual(ud_power_index(8, -2), 4)

    def test_n_ab(self):
        self.assertEqual(n_ab(4, 1, 2), 1)
        self.assertEqual(n_ab(12, 2, 3), 2)
        self.assertEqual(n_ab(5, 0, 0), 5)

    def test_degree_checks(self):
        for bad in (0, -3, 2.0):
            with self.assertRaises(GenericException):
                GenericAlgebra(bad)
        self.assertEqual(GenericAlgebra(4), GenericAlgebra(4))
        self.assertNotEqual(GenericAlgebra(4), GenericAlgebra(6))


def test_power_index_identities():
    for N in range(1, 61):
        for b in range(-2 * N, 2 * N + 1):
            value = ud_power_index(N, b)
            assert value == N // gcd(N, b % N)
            assert value == ud_power_index(N, b + N)
            assert N % value == 0
            assert ud_power_index(N, gcd(N, b)) == value


class TestMixedClass(unittest.TestCase):
    def test_mixed_index_example(self):
        m = MixedClass(6, 4, QUATERNION)
        self.assertEqual(mixed_index(m, QQ), 6)
        self.assertEqual(mixed_index(MixedClass(6, 4), QQ), 3)
        self.assertEqual(mixed_index(MixedClass(6, 0, QUATERNION), QQ), 2)

    def test_restriction_of_arithmetic_part(self):
        m = MixedClass(4, 1, QUATERNION)
        # Q(i) splits the Hamilton quaternions
        self.assertEqual(mixed_index(m, AbelianField(4)), 4)
        self.assertEqual(mixed_index(m, AbelianField(9, [8])), 8)

    def test_operations(self):
        m = MixedClass(6, 5, QUATERNION)
        self.assertEqual(m.c, 5)
        self.assertEqual(m.power(2), MixedClass(6, 4))
        self.assertEqual(m.tensor(m.opposite()), MixedClass(6, 0))
        self.assertEqual(m.tensor(QUATERNION), MixedClass(6, 5))
        self.assertEqual(MixedClass(6, 13), MixedClass(6, 1))

    def test_distinct_generic_algebras(self):
        with self.assertRaises(GenericException):
            MixedClass(4, 1).tensor(MixedClass(6, 1))

    def test_declared_degree(self):
        declared = MixedClass(4, 1, DivisionAlgebra(QUATERNION, 2))
        self.assertEqual(mixed_index(declared, QQ), 8)
        with self.assertRaises(GenericException):
            mixed_index(declared, AbelianField(4))

    @settings(**HYP_SETTINGS)
    @given(st.integers(min_value=1, max_value=60),
           st.integers(min_value=-100, max_value=100),
           st.integers(min_value=-6, max_value=6))
    def test_power_tracks_exponent(self, N, c, k):
        m = MixedClass(N, c, QUATERNION)
        expected = index(power(QUATERNION, k)) * ud_power_index(N, c * k)
        self.assertEqual(mixed_index(m.power(k), QQ), expected)


def test_valuation_additivity_random():
    rng = random.Random(7)
    arith = [make_class(QQ, {}), QUATERNION,
             make_class(QQ, {2: '1/3', 5: '2/3'}),
             make_class(QQ, {3: '1/4', 7: '3/4'})]
    for _ in range(1000):
        N = rng.randint(1, 48)
        c = rng.randint(0, 3 * N)
        D = rng.choice(arith)
        m = MixedClass(N, c, D)
        value = mixed_index(m, QQ)
        for p in (2, 3, 5, 7):
            assert vp(p, value) == vp(p, index(D)) + vp(p, N // gcd(N, c % N))
