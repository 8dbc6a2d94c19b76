# -*- coding: utf-8 -*-
"""
Exact integer and Q/Z arithmetic: gcd/lcm lattices, p-adic valuations
and Hasse-invariant values in lowest terms. Everything here is a pure
function on immutable values.
"""
__title__ = 'csalab'
__license__ = 'MIT'

import logging
from fractions import Fraction
from functools import reduce
from math import gcd

from sympy import factorint, isprime, multiplicity

from . import settings
from .utils import CsalabException, format_fraction, parse_fraction

log = logging.getLogger(__name__)


class ArithException(CsalabException):
    pass


def lcm(a, b):
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def lcm_all(values):
    return reduce(lcm, values, 1)


def positive_gcd(a, b):
    """gcd where a positive value is required downstream."""
    g = gcd(a, b)
    if g == 0:
        raise ArithException('gcd(0, 0) = 0 where a positive gcd is needed')
    return g


def is_prime(n):
    """Exact below settings.PRIMALITY_DETERMINISTIC_BOUND, strong BPSW
    (no known counterexample, fixed rounds) above it.
    """
    if n >= settings.PRIMALITY_DETERMINISTIC_BOUND:
        log.debug('probabilistic primality check for %d-bit input',
                  n.bit_length())
    return bool(isprime(n))


def require_prime(p):
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise ArithException('%r is not a prime' % (p,))
    return p


class QmodZ(object):
    """An element num/den of Q/Z with 0 <= num < den, gcd(num, den) = 1."""
    __slots__ = ('num', 'den')

    def __init__(self, num=0, den=1):
        if den == 0:
            raise ArithException('zero denominator')
        value = Fraction(num, den) % 1
        object.__setattr__(self, 'num', value.numerator)
        object.__setattr__(self, 'den', value.denominator)

    def __setattr__(self, name, value):
        raise AttributeError('QmodZ is immutable')

    @classmethod
    def from_fraction(cls, value):
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @classmethod
    def parse(cls, text):
        try:
            return cls.from_fraction(parse_fraction(text))
        except CsalabException as e:
            raise ArithException(str(e))

    @property
    def fraction(self):
        return Fraction(self.num, self.den)

    def is_zero(self):
        return self.num == 0

    def order(self):
        return self.den

    def __add__(self, other):
        return QmodZ.from_fraction(self.fraction + other.fraction)

    def __sub__(self, other):
        return QmodZ.from_fraction(self.fraction - other.fraction)

    def __neg__(self):
        return QmodZ.from_fraction(-self.fraction)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return QmodZ.from_fraction(self.fraction * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QmodZ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((QmodZ, self.num, self.den))

    def __str__(self):
        return format_fraction(self.fraction)

    def __repr__(self):
        return 'QmodZ(%d, %d)' % (self.num, self.den)


ZERO = QmodZ(0, 1)


def qmz_add(x, y):
    return x + y


def qmz_order(x):
    """Smallest k >= 1 with k*x = 0 mod 1."""
    return x.order()


class Valuation(object):
    """p^e divides the valued integer exactly."""
    __slots__ = ('p', 'e')

    def __init__(self, p, e):
        self.p = p
        self.e = e

    def __int__(self):
        return self.e

    def __eq__(self, other):
        if isinstance(other, Valuation):
            return (self.p, self.e) == (other.p, other.e)
        if isinstance(other, int):
            return self.e == other
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.e))

    def __repr__(self):
        return 'Valuation(p=%d, e=%d)' % (self.p, self.e)


def exact_valuation(p, n):
    require_prime(p)
    if not isinstance(n, int) or n < 1:
        raise ArithException('valuation needs a positive integer, got %r' % (n,))
    return Valuation(p, int(multiplicity(p, n)))


def vp(p, n):
    """Plain int v_p(n) for n >= 1."""
    return exact_valuation(p, n).e


def reduced_divides(a, b, d):
    """a/(a,d) divides b/(b,d) whenever a divides b."""
    if a < 1 or b < 1 or d < 1:
        raise ArithException('reduced_divides takes positive integers')
    if b % a:
        raise ArithException('%d does not divide %d' % (a, b))
    return (b // positive_gcd(b, d)) % (a // positive_gcd(a, d)) == 0


def reduced_quotient(n, k):
    """n/(n, k) with the convention gcd(n, 0) = n, so the value is 1 at k = 0."""
    if n < 1:
        raise ArithException('n must be positive, got %r' % (n,))
    return n // positive_gcd(n, k)


def prime_divisors(n):
    if n < 1:
        raise ArithException('prime divisors of non-positive %r' % (n,))
    return sorted(factorint(n))
