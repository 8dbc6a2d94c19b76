# -*- coding: utf-8 -*-
import random
import unittest

import pytest

from csalab.brauer import QQ, AbelianField, make_class, trivial_class
from csalab.configuration import AUTO, EXHAUSTIVE, SAMPLED, Configuration, Enumeration
from csalab.generic import MixedClass
from csalab.groupring import (FiniteGroup, GroupRingElement, Subgroup,
                              all_subgroups, translate)
from csalab.mthreading import ConcurrencyException, chunked
from csalab.reduction import (FieldBridge, ReductionException, SplitOracle,
                              TableOracle, TransferSetup, UnmovedOracle,
                              plan_indices, reduce_double, reduce_single,
                              term_value, unmoved_oracle)
from csalab.utils import CsalabException

QUATERNION = make_class(QQ, {2: '1/2', 'inf': '1/2'})
# Q(sqrt 5): 2 and 3 are inert, 5 ramifies, both real places stay real
ROOT_5 = AbelianField(5, [4])


def cyclic_setup(order, r, n):
    return TransferSetup(FiniteGroup.cyclic(order), r=r, n=n)


def alpha_of(setup, coeffs):
    return GroupRingElement(setup.space, setup.r, coeffs)


class TestTermValue(unittest.TestCase):
    def test_examples(self):
        setup = cyclic_setup(3, 2, 3)
        self.assertEqual(term_value(setup, alpha_of(setup, [0, 0, 0]),
                                    SplitOracle(5)), 5)
        self.assertEqual(term_value(setup, alpha_of(setup, [1, 0, 0]),
                                    SplitOracle(1)), 9)
        self.assertEqual(term_value(setup, alpha_of(setup, [1, 1, 1]),
                                    SplitOracle(2)), 54)

    def test_oracle_failure_propagates(self):
        setup = cyclic_setup(2, 2, 2)
        oracle = TableOracle({(0, 0): 3})
        self.assertEqual(term_value(setup, alpha_of(setup, [0, 0]), oracle), 3)
        with self.assertRaises(ReductionException):
            term_value(setup, alpha_of(setup, [1, 0]), oracle)
        with self.assertRaises(ReductionException):
            TableOracle({}, default=0)(alpha_of(setup, [1, 0]))


class TestSetups(unittest.TestCase):
    def test_from_field(self):
        setup = TransferSetup.from_field(AbelianField(7), 2, 2)
        self.assertEqual(setup.group.order, 6)
        self.assertEqual(setup.space.size, 6)
        self.assertEqual(setup.size, 64)
        self.assertEqual(setup.to_dict()['field']['conductor'], 7)

    def test_bad_setups(self):
        with self.assertRaises(ReductionException):
            cyclic_setup(2, 0, 1)
        bridge = FieldBridge(AbelianField(7))
        with self.assertRaises(ReductionException):
            TransferSetup(FiniteGroup.cyclic(2), bridge=bridge)

    def test_bridge(self):
        bridge = FieldBridge(AbelianField(7))
        self.assertEqual(bridge(Subgroup.trivial(bridge.group)), AbelianField(7))
        self.assertEqual(bridge(Subgroup.whole(bridge.group)), QQ)
        degrees = sorted(bridge(s).degree for s in all_subgroups(bridge.group))
        self.assertEqual(degrees, [1, 2, 3, 6])
        with self.assertRaises(ReductionException):
            bridge(Subgroup.trivial(FiniteGroup.cyclic(6)))


class TestEngines(unittest.TestCase):
    def test_split_oracle_gives_one(self):
        for setup in (cyclic_setup(1, 2, 1), cyclic_setup(3, 3, 3),
                      TransferSetup(FiniteGroup.dihedral(3), r=2, n=2)):
            report = reduce_single(setup, SplitOracle())
            self.assertEqual(report.gcd, 1)
            self.assertTrue(report.exact)
            self.assertEqual(report.witness[0].coeffs, (0,) * setup.space.size)

    def test_trivial_group_constant_terms(self):
        setup = cyclic_setup(1, 2, 1)
        report = reduce_single(setup, SplitOracle(6))
        self.assertEqual(report.gcd, 6)
        self.assertEqual(report.count, 2)

    def test_gcd_divides_every_term(self):
        setup = cyclic_setup(2, 3, 3)
        table = {(0, 0): 12, (1, 2): 5}
        seen = []
        report = reduce_single(setup, TableOracle(table, default=4),
                               observer=lambda a, b, v: seen.append(v))
        self.assertEqual(len(seen), 9)
        self.assertTrue(all(v % report.gcd == 0 for v in seen))
        # (1, 2) has trivial stabilizer and weight 3 * 3: 5 * 2 * 9 = 90
        self.assertIn(90, seen)
        self.assertEqual(report.gcd, 6)

    def test_budget(self):
        setup = cyclic_setup(3, 3, 3)
        with self.assertRaises(ReductionException):
            reduce_single(setup, SplitOracle(), Enumeration(EXHAUSTIVE, budget=10))
        report = reduce_single(setup, SplitOracle(),
                               Enumeration(AUTO, budget=10, samples=5, seed=3))
        self.assertEqual(report.mode, SAMPLED)
        self.assertFalse(report.exact)
        self.assertLessEqual(report.count, 6)
        self.assertTrue(report.to_dict()['enumeration']['seed'] == 3)

    def test_plan_indices(self):
        mode, picked = plan_indices(100, Enumeration(SAMPLED, samples=10, seed=1))
        self.assertEqual(mode, SAMPLED)
        self.assertEqual(picked[0], 0)
        self.assertEqual(picked, sorted(set(picked)))
        again = plan_indices(100, Enumeration(SAMPLED, samples=10, seed=1))[1]
        self.assertEqual(picked, again)
        mode, picked = plan_indices(4, Enumeration(SAMPLED, samples=10))
        self.assertEqual(list(picked), [0, 1, 2, 3])

    def test_sampling_past_machine_word(self):
        total = 2 ** 70
        mode, picked = plan_indices(total, Enumeration(SAMPLED, samples=10, seed=1))
        self.assertEqual(mode, SAMPLED)
        self.assertEqual(picked[0], 0)
        self.assertIn(len(picked), (10, 11))
        self.assertTrue(all(0 <= i < total for i in picked))
        self.assertEqual(picked, plan_indices(total, Enumeration(
            SAMPLED, samples=10, seed=1))[1])

        # 50^12 terms, more than 2^64
        setup = cyclic_setup(12, 50, 2)
        self.assertGreater(setup.size, 2 ** 64)
        enumeration = Enumeration(SAMPLED, samples=10, seed=1)
        report = reduce_single(setup, SplitOracle(), enumeration)
        self.assertEqual(report.gcd, 1)
        self.assertFalse(report.exact)
        self.assertIn(report.count, (10, 11))
        self.assertEqual(report.to_dict(),
                         reduce_single(setup, SplitOracle(), enumeration).to_dict())

    def test_double_split_and_table(self):
        s1 = cyclic_setup(2, 2, 2)
        s2 = cyclic_setup(1, 3, 3)
        self.assertEqual(reduce_double(s1, s2, SplitOracle()).gcd, 1)
        oracle = TableOracle({((0, 0), (0,)): 6}, default=6)
        report = reduce_double(s1, s2, oracle)
        self.assertEqual(report.gcd, 6)
        self.assertEqual(report.total, 12)
        alpha, beta = report.witness
        self.assertEqual((alpha.coeffs, beta.coeffs), ((0, 0), (0,)))

    def test_double_ordering(self):
        s1 = cyclic_setup(1, 2, 2)
        s2 = cyclic_setup(1, 3, 3)
        order = []
        reduce_double(s1, s2, SplitOracle(),
                      observer=lambda a, b, v: order.append(a.coeffs + b.coeffs))
        self.assertEqual(order, [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)])


def _random_table_instance(rng):
    group = rng.choice([FiniteGroup.cyclic(2), FiniteGroup.cyclic(3),
                        FiniteGroup.abelian([2, 2]), FiniteGroup.dihedral(3)])
    sub = rng.choice(all_subgroups(group))
    setup = TransferSetup(group, sub, r=rng.randint(2, 3), n=rng.choice([2, 3, 6]))
    table = {}
    for i in range(setup.size):
        if rng.random() < 0.3:
            table[setup.element_at(i).coeffs] = rng.choice([1, 2, 3, 4, 6, 12])
    return setup, TableOracle(table, default=rng.choice([2, 6, 12]))


def test_sampled_is_multiple_of_exhaustive():
    rng = random.Random(11)
    for k in range(25):
        setup, oracle = _random_table_instance(rng)
        exact = reduce_single(setup, oracle)
        sampled = reduce_single(setup, oracle,
                                Enumeration(SAMPLED, samples=3, seed=k))
        assert sampled.gcd % exact.gcd == 0
        assert not sampled.exact


@pytest.mark.parametrize('threads,chunk', [(1, 4096), (1, 1), (3, 2), (4, 7)])
def test_report_independent_of_partitioning(threads, chunk):
    rng = random.Random(5)
    setup, oracle = _random_table_instance(rng)
    baseline = reduce_single(setup, oracle).to_dict()
    config = Configuration()
    report = reduce_single(setup, oracle, config=config,
                           number_threads=threads, CHUNK_SIZE=chunk)
    assert report.to_dict() == baseline


class TestUnmovedOracle(unittest.TestCase):
    def test_desk_instance(self):
        # B = Hamilton quaternions, A0 = (3, 5) quaternions, K = Q(sqrt 5).
        # Over K the sum B (x) A0 keeps 1/2 at both real places, index 2.
        A0 = make_class(QQ, {3: '1/2', 5: '1/2'})
        setup = TransferSetup.from_field(ROOT_5, 2, 2)
        oracle = unmoved_oracle(QUATERNION, A0, setup)
        expected = {(0, 0): 2,    # index(B) over Q
                    (1, 1): 8,    # A0^2 trivial, weight 4
                    (1, 0): 8,    # K(alpha) = K, degree 2, weight 2
                    (0, 1): 8}
        terms = {}
        report = reduce_single(setup, oracle,
                               observer=lambda a, b, v: terms.update({a.coeffs: v}))
        self.assertEqual(terms, expected)
        self.assertEqual(report.gcd, 2)
        self.assertEqual(report.witness[0].coeffs, (0, 0))

    def test_split_by_quadratic_field(self):
        # Q(sqrt -3) splits the Hamilton quaternions: 2 is inert, inf complex
        setup = TransferSetup.from_field(AbelianField(3), 2, 2)
        oracle = unmoved_oracle(QUATERNION, trivial_class(), setup)
        self.assertEqual(oracle(alpha_of(setup, [1, 0])), 1)
        self.assertEqual(oracle(alpha_of(setup, [1, 1])), 2)
        self.assertEqual(reduce_single(setup, oracle).gcd, 2)

    def test_two_torsion(self):
        setup = TransferSetup.from_field(ROOT_5, 2, 2)
        oracle = unmoved_oracle(trivial_class(), QUATERNION, setup)
        self.assertEqual(oracle(alpha_of(setup, [1, 1])), 1)
        self.assertEqual(oracle(alpha_of(setup, [0, 1])), 2)

    def test_generic_part(self):
        setup = TransferSetup(FiniteGroup.cyclic(1), r=4, n=4,
                              bridge=FieldBridge(QQ))
        E = MixedClass(4, 1)
        oracle = unmoved_oracle(E, E, setup)
        # E^(1+3) = E^4 is split
        self.assertEqual(oracle(alpha_of(setup, [3])), 1)
        self.assertEqual(oracle(alpha_of(setup, [1])), 2)

    def test_translation_invariance(self):
        K = AbelianField(7)
        A0 = make_class(QQ, {2: '1/3', 7: '2/3'})
        setup = TransferSetup.from_field(K, 3, 3)
        oracle = unmoved_oracle(QUATERNION, A0, setup)
        rng = random.Random(3)
        for _ in range(40):
            alpha = setup.element_at(rng.randrange(setup.size))
            value = term_value(setup, alpha, oracle)
            for g in range(setup.group.order):
                self.assertEqual(term_value(setup, translate(g, alpha), oracle), value)

    def test_hypothesis_checks(self):
        setup = cyclic_setup(2, 2, 2)
        with self.assertRaises(ReductionException):
            unmoved_oracle(QUATERNION, trivial_class(), setup)
        bridged = TransferSetup.from_field(ROOT_5, 2, 2)
        with self.assertRaises(ReductionException):
            unmoved_oracle(QUATERNION, trivial_class(ROOT_5), bridged)
        with self.assertRaises(ReductionException):
            unmoved_oracle(QUATERNION, trivial_class(), bridged, A0_second=QUATERNION)
        with self.assertRaises(ReductionException):
            UnmovedOracle(QUATERNION, [])
        oracle = unmoved_oracle(QUATERNION, trivial_class(), bridged)
        with self.assertRaises(ReductionException):
            oracle(alpha_of(bridged, [0, 0]), alpha_of(bridged, [0, 0]))


def test_pool_misuse_is_a_library_error():
    with pytest.raises(CsalabException):
        chunked(range(3), 0)
    assert issubclass(ConcurrencyException, CsalabException)
    assert ConcurrencyException.kind == 'precondition'
