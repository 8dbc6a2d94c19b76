# -*- coding: utf-8 -*-
"""
Symbolic generic division algebras UD(F, N) and mixed classes
E^c (x) D, where D is an arithmetic Brauer class. Only index behavior
is modelled: UD(F, N) has index equal to exponent, so E^b has index
N/(N, b), and tensoring with a division algebra D over F multiplies the
index by deg D.
"""
__title__ = 'csalab'
__license__ = 'MIT'

import logging

from .arith import reduced_quotient
from .brauer import (QQ, BrauerClass, DivisionAlgebra, index, opposite,
                     power, restrict, tensor, trivial_class)
from .utils import CsalabException

log = logging.getLogger(__name__)


class GenericException(CsalabException):
    pass


class GenericAlgebra(object):
    """UD(F, N); its center Z(F, N) is never built."""
    __slots__ = ('degree',)

    def __init__(self, degree):
        if not isinstance(degree, int) or degree < 1:
            raise GenericException('generic algebra degree must be a positive integer')
        self.degree = degree

    def __eq__(self, other):
        if not isinstance(other, GenericAlgebra):
            return NotImplemented
        return self.degree == other.degree

    def __hash__(self):
        return hash((GenericAlgebra, self.degree))

    def __repr__(self):
        return 'UD(F,%d)' % self.degree


def ud_power_index(N, b):
    """index of UD(F, N)^b, N/(N, b mod N)."""
    return reduced_quotient(N, b % N)


def n_ab(N, a, b):
    """N_{a,b} = N/(N, 1 + a + b), the index of E^(1+a+b)."""
    return reduced_quotient(N, 1 + a + b)


class MixedClass(object):
    """E^c (x) arith with E = UD(F, N); c is kept mod N. `arith` is a
    BrauerClass or a DivisionAlgebra (a class with a declared degree).
    """

    def __init__(self, generic, c=1, arith=None):
        if not isinstance(generic, GenericAlgebra):
            generic = GenericAlgebra(generic)
        self.generic = generic
        self.c = c % generic.degree
        self.arith = arith if arith is not None else trivial_class(QQ)

    @property
    def N(self):
        return self.generic.degree

    @property
    def arith_class(self):
        if isinstance(self.arith, DivisionAlgebra):
            return self.arith.cls
        return self.arith

    @property
    def base(self):
        return self.arith_class.base

    def _check_generic(self, other):
        if self.generic != other.generic:
            raise GenericException('products of distinct generic algebras %r and '
                                   '%r are not modelled' % (self.generic, other.generic))

    def tensor(self, other):
        if isinstance(other, BrauerClass):
            return MixedClass(self.generic, self.c, tensor(self.arith_class, other))
        self._check_generic(other)
        return MixedClass(self.generic, self.c + other.c,
                          tensor(self.arith_class, other.arith_class))

    def power(self, k):
        return MixedClass(self.generic, self.c * k, power(self.arith_class, k))

    def opposite(self):
        return MixedClass(self.generic, -self.c, opposite(self.arith_class))

    def __eq__(self, other):
        if not isinstance(other, MixedClass):
            return NotImplemented
        return self.generic == other.generic and self.c == other.c and \
            self.arith_class == other.arith_class

    def __hash__(self):
        return hash((self.generic, self.c, self.arith_class))

    def __repr__(self):
        return '<MixedClass %r^%d (x) %r>' % (self.generic, self.c, self.arith)


def mixed_index(m, target):
    """index(arith restricted to target) * N/(N, c).

    The product formula needs the arithmetic factor to stay a division
    algebra of its declared degree over the target, when a degree is
    declared.
    """
    restricted = restrict(m.arith_class, target)
    arith_index = index(restricted)
    if isinstance(m.arith, DivisionAlgebra) and arith_index != m.arith.degree:
        raise GenericException('arithmetic part of degree %d has index %d over %s; '
                               'the product formula does not apply'
                               % (m.arith.degree, arith_index, target.label()))
    return arith_index * ud_power_index(m.N, m.c)
