# -*- coding: utf-8 -*-
"""
Abelian number fields inside cyclotomic fields and Brauer classes over
them, described by Hasse invariants.

A field is a pair (m, S): the subfield of Q(zeta_m) fixed by the subgroup
S of (Z/mZ)^x. Fields are stored with their minimal conductor, so equal
fields compare equal whatever conductor they were given with.

A class lists one invariant per rational place q and means "every place
of the base field above q carries this invariant". This covers classes
extended from Q and everything built from them by the operations here.
"""
__title__ = 'csalab'
__license__ = 'MIT'

import logging
from functools import lru_cache
from math import gcd

from sympy import divisors, integer_nthroot, multiplicity, primitive_root, totient

from . import settings
from .arith import (ZERO, QmodZ, is_prime, lcm_all, prime_divisors,
                    require_prime, vp)
from .groupring import FiniteGroup
from .utils import CsalabException, ConsistencyException, parse_fraction

log = logging.getLogger(__name__)

INFINITY = 'inf'
HALF = QmodZ(1, 2)


class BrauerException(CsalabException):
    pass


def parse_place(value):
    if value in (INFINITY, 'infinity', '∞'):
        return INFINITY
    if isinstance(value, str) and value.strip().isdigit():
        value = int(value)
    if isinstance(value, int) and not isinstance(value, bool) and is_prime(value):
        return value
    raise BrauerException('%r is neither a rational prime nor "inf"' % (value,))


def place_key(v):
    return (1, 0) if v == INFINITY else (0, v)


@lru_cache(maxsize=None)
def unit_group(m):
    """(Z/mZ)^x as sorted residues; for m = 1 this is (0,)."""
    return tuple(u for u in range(m) if gcd(u, m) == 1)


def _generated(m, generators):
    group = {1 % m}
    frontier = list(group)
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x * g % m
                if y not in group:
                    group.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(group)


def _join(m, base, generators):
    """<base, generators> for a subgroup `base` of the abelian (Z/mZ)^x."""
    extra = _generated(m, [g for g in generators if g % m not in base])
    return frozenset(s * w % m for s in base for w in extra)


@lru_cache(maxsize=None)
def _preimage(m, members, M):
    return frozenset(u for u in unit_group(M) if u % m in members)


@lru_cache(maxsize=None)
def _minimize(m, members):
    units = unit_group(m)
    for d in divisors(m):
        kernel_inside = all(u in members for u in units if u % d == 1 % d)
        if kernel_inside:
            return d, frozenset(u % d for u in members)
    return m, members


def _decomposition(m, members, q):
    q_power, cofactor = _split(m, q)
    inertia = [u for u in unit_group(m) if u % cofactor == 1 % cofactor]
    return _join(m, members, inertia + [_crt_lift(q_power, cofactor, q)])


@lru_cache(maxsize=None)
def _local_degree(m, members, q):
    return len(_decomposition(m, members, q)) // len(members)


def _split(m, q):
    """m = q^a * m' with q not dividing m'."""
    q_power = q ** multiplicity(q, m)
    return q_power, m // q_power


def _crt_lift(q_power, cofactor, residue):
    """u = residue mod cofactor, u = 1 mod q_power."""
    if cofactor == 1:
        return 1 % (q_power * cofactor)
    m = q_power * cofactor
    for u in range(residue % cofactor, m, cofactor):
        if u % q_power == 1 % q_power:
            return u
    raise ConsistencyException('no CRT lift for %d mod %d' % (residue, cofactor))


class AbelianField(object):
    """Subfield of Q(zeta_m) fixed by <fixing> in (Z/mZ)^x."""

    def __init__(self, conductor=1, fixing=()):
        if not isinstance(conductor, int) or conductor < 1:
            raise BrauerException('conductor must be a positive integer')
        generators = []
        for g in fixing:
            if gcd(int(g), conductor) != 1:
                raise BrauerException('%r is not a unit mod %d' % (g, conductor))
            generators.append(int(g) % conductor)
        members = _generated(conductor, generators)
        self.conductor, self.members = _minimize(conductor, members)
        self._galois = None

    @classmethod
    def from_members(cls, conductor, members):
        """Build from a full fixing subgroup, skipping the closure."""
        field = cls.__new__(cls)
        members = frozenset(u % conductor for u in members)
        if settings.VALIDATE_STRUCTURES and \
                _generated(conductor, sorted(members)) != members:
            raise BrauerException('fixing set is not a subgroup mod %d' % conductor)
        field.conductor, field.members = _minimize(conductor, members)
        field._galois = None
        return field

    @classmethod
    def rational(cls):
        return cls(1)

    @classmethod
    def cyclotomic(cls, m):
        return cls(m)

    @property
    def fixing(self):
        """A short generator list for the fixing subgroup."""
        gens = []
        current = frozenset([1 % self.conductor])
        for u in sorted(self.members):
            if u not in current:
                gens.append(u)
                current = _join(self.conductor, current, [u])
        return gens

    @property
    def degree(self):
        return int(totient(self.conductor)) // len(self.members)

    def is_rational(self):
        return self.degree == 1

    def is_totally_real(self):
        m = self.conductor
        return m <= 2 or (m - 1) in self.members

    def lift(self, M):
        """Preimage of the fixing group in (Z/MZ)^x, for a multiple M of
        the conductor.
        """
        if M % self.conductor:
            raise BrauerException('%d is not a multiple of the conductor %d'
                                  % (M, self.conductor))
        return _preimage(self.conductor, self.members, M)

    def is_subfield_of(self, other):
        # conductors are minimal, so containment needs conductor divisibility
        if other.conductor % self.conductor:
            return False
        M = other.conductor
        return other.lift(M) <= self.lift(M)

    def compositum(self, other):
        M = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return AbelianField.from_members(M, self.lift(M) & other.lift(M))

    def _inertia(self, q):
        q_power, cofactor = _split(self.conductor, q)
        return [u for u in unit_group(self.conductor) if u % cofactor == 1 % cofactor]

    def frobenius_lift(self, q):
        """A unit u = q mod m', u = 1 mod q^a where m = q^a m'."""
        q_power, cofactor = _split(self.conductor, q)
        return _crt_lift(q_power, cofactor, q)

    def local_degree(self, v):
        """[K_w : Q_v] for any place w of K above v."""
        if v == INFINITY:
            return 1 if self.is_totally_real() else 2
        require_prime(v)
        return _local_degree(self.conductor, self.members, v)

    def ramification_index(self, q):
        require_prime(q)
        inertia = _join(self.conductor, self.members, self._inertia(q))
        return len(inertia) // len(self.members)

    def place_count(self, v):
        return self.degree // self.local_degree(v)

    def _galois_data(self):
        if self._galois is None:
            m = self.conductor
            cosets = []
            coset_of = {}
            for u in unit_group(m):
                if u in coset_of:
                    continue
                members = sorted(u * s % m for s in self.members)
                for x in members:
                    coset_of[x] = len(cosets)
                cosets.append(members)
            reps = [c[0] for c in cosets]
            table = [[coset_of[x * y % m] for y in reps] for x in reps]
            group = FiniteGroup(table, labels=reps, name='Gal(%s)' % self.label(),
                                validate=False)
            self._galois = (group, tuple(reps), coset_of)
        return self._galois

    def galois_group(self):
        """Gal(K/Q) = (Z/mZ)^x / S; element labels are least coset
        representatives, element 0 the class of 1.
        """
        return self._galois_data()[0]

    def galois_element(self, u):
        """Index in galois_group() of the class of the unit u."""
        u %= self.conductor
        coset_of = self._galois_data()[2]
        if u not in coset_of:
            raise BrauerException('%d is not a unit mod %d' % (u, self.conductor))
        return coset_of[u]

    def galois_representative(self, g):
        return self._galois_data()[1][g]

    def fixed_field(self, members):
        """Fixed field of the subgroup of Gal(K/Q) with element indices
        `members`.
        """
        _, reps, coset_of = self._galois_data()
        wanted = set(members)
        units = [u for u, c in coset_of.items() if c in wanted]
        return AbelianField.from_members(self.conductor, units)

    def label(self):
        if self.is_rational():
            return 'Q'
        if len(self.members) == 1:
            return 'Q(zeta_%d)' % self.conductor
        return 'Q(zeta_%d)^<%s>' % (self.conductor,
                                    ','.join(str(g) for g in self.fixing))

    def to_dict(self):
        return {'conductor': self.conductor, 'fixing': self.fixing,
                'degree': self.degree}

    def __eq__(self, other):
        if not isinstance(other, AbelianField):
            return NotImplemented
        return self.conductor == other.conductor and self.members == other.members

    def __hash__(self):
        return hash((self.conductor, self.members))

    def __repr__(self):
        return '<AbelianField %s, degree %d>' % (self.label(), self.degree)


QQ = AbelianField.rational()


def galois_group(K):
    return K.galois_group()


def local_degree(K, v):
    return K.local_degree(v)


def field_layer(p, level):
    """Degree p^level totally real layer of Q(zeta_{p^(level+1)}), p odd:
    the fixed field of the subgroup of order p - 1.
    """
    require_prime(p)
    if p == 2:
        raise BrauerException('the layer tower is only built for odd p')
    if level < 0:
        raise BrauerException('level must be non-negative')
    m = p ** (level + 1)
    g = int(primitive_root(m))
    return AbelianField(m, [pow(g, p ** level, m)])


class BrauerClass(object):
    """Class over `base` with invariant inv[q] at every place above q;
    omitted places carry 0.
    """

    def __init__(self, base, inv, validate=None):
        self.base = base
        cleaned = {}
        for v, x in dict(inv).items():
            v = parse_place(v)
            if not isinstance(x, QmodZ):
                x = QmodZ.from_fraction(parse_fraction(x))
            if not x.is_zero():
                cleaned[v] = x
        self.inv = cleaned
        self._key = tuple(sorted(cleaned.items(), key=lambda kv: place_key(kv[0])))
        if validate or (validate is None and settings.VALIDATE_STRUCTURES):
            self.check()

    def check(self):
        real = self.inv.get(INFINITY, ZERO)
        if real not in (ZERO, HALF):
            raise BrauerException('invariant at infinity must be 0 or 1/2, got %s'
                                  % real)
        if real == HALF and not self.base.is_totally_real():
            raise BrauerException('%s has complex places, invariant at infinity '
                                  'must be 0' % self.base.label())
        total = ZERO
        for v, x in self.inv.items():
            total = total + x * self.base.place_count(v)
        if not total.is_zero():
            raise BrauerException('invariants sum to %s, not 0' % total)
        return self

    def places(self):
        return [v for v, _ in self._key]

    def items(self):
        return list(self._key)

    def __getitem__(self, v):
        return self.inv.get(v, ZERO)

    def is_trivial(self):
        return not self.inv

    def to_pairs(self):
        return [[str(v), str(x)] for v, x in self._key]

    def to_dict(self):
        return {'field': self.base.to_dict(), 'invariants': self.to_pairs(),
                'index': index(self)}

    def __eq__(self, other):
        if not isinstance(other, BrauerClass):
            return NotImplemented
        return self.base == other.base and self._key == other._key

    def __hash__(self):
        return hash((self.base, self._key))

    def __repr__(self):
        body = ', '.join('%s: %s' % (v, x) for v, x in self._key)
        return '<BrauerClass over %s {%s}>' % (self.base.label(), body)


def make_class(K, inv):
    return BrauerClass(K, inv, validate=True)


def trivial_class(K=QQ):
    return BrauerClass(K, {})


def index(c):
    """Schur index: lcm of the orders of the local invariants."""
    return lcm_all(x.order() for x in c.inv.values())


def exponent(c):
    """Order of c in the Brauer group, by repeated multiplication."""
    k, acc = 1, c
    while not acc.is_trivial():
        acc = tensor(acc, c)
        k += 1
    return k


def _same_base(c1, c2):
    if c1.base != c2.base:
        raise BrauerException('base fields differ: %s vs %s'
                              % (c1.base.label(), c2.base.label()))


def tensor(c1, c2):
    _same_base(c1, c2)
    inv = dict(c1.inv)
    for v, x in c2.inv.items():
        inv[v] = inv.get(v, ZERO) + x
    return BrauerClass(c1.base, inv)


def opposite(c):
    return BrauerClass(c.base, dict((v, -x) for v, x in c.inv.items()))


def power(c, k):
    return BrauerClass(c.base, dict((v, x * k) for v, x in c.inv.items()))


@lru_cache(maxsize=4096)
def restrict(c, target):
    """c (x) target: each invariant scaled by the local degree of target
    over the base at that place.
    """
    if c.base == target:
        return c
    if not c.base.is_subfield_of(target):
        raise BrauerException('%s is not contained in %s'
                              % (c.base.label(), target.label()))
    inv = {}
    for v, x in c.inv.items():
        big, small = target.local_degree(v), c.base.local_degree(v)
        if big % small:
            raise ConsistencyException('local degree %d at %s does not divide %d'
                                       % (small, v, big))
        inv[v] = x * (big // small)
    return BrauerClass(target, inv)


def splits(c, K):
    return index(restrict(c, K)) == 1


class DivisionAlgebra(object):
    """A class together with its declared degree; over number fields the
    degree of the division algebra in a class is its index.
    """

    def __init__(self, cls, degree):
        if degree != index(cls):
            raise BrauerException('declared degree %d but index is %d'
                                  % (degree, index(cls)))
        self.cls = cls
        self.degree = degree

    @property
    def base(self):
        return self.cls.base

    def __eq__(self, other):
        if not isinstance(other, DivisionAlgebra):
            return NotImplemented
        return self.cls == other.cls

    def __hash__(self):
        return hash(self.cls)

    def __repr__(self):
        return '<DivisionAlgebra of degree %d, %r>' % (self.degree, self.cls)


class CyclicData(object):
    """Delta(L/Q, a) for L cyclic over Q, sigma the chosen generator of
    Gal(L/Q) (a unit mod the conductor) and a nonzero rational.
    """

    def __init__(self, field, a, generator=None):
        self.field = field
        self.a = parse_fraction(a)
        if self.a == 0:
            raise BrauerException('cyclic algebra needs a nonzero a')
        group = field.galois_group()
        n = group.order
        if generator is None:
            candidates = [g for g in range(n) if group.element_order(g) == n]
            if not candidates:
                raise BrauerException('%s is not cyclic over Q' % field.label())
            self.sigma = candidates[0]
        else:
            if gcd(int(generator), field.conductor) != 1:
                raise BrauerException('generator %r is not a unit mod %d'
                                      % (generator, field.conductor))
            self.sigma = field.galois_element(int(generator))
            if group.element_order(self.sigma) != n:
                raise BrauerException('%r does not generate Gal(%s/Q)'
                                      % (generator, field.label()))
        self.n = n

    @property
    def generator(self):
        return self.field.galois_representative(self.sigma)

    def discrete_log(self, g):
        """j with sigma^j = g in Gal(L/Q)."""
        group = self.field.galois_group()
        x = 0
        for j in range(self.n):
            if x == g:
                return j
            x = group.mul(x, self.sigma)
        raise ConsistencyException('element %d is not a power of sigma' % g)


def _is_nth_power(a, n):
    if a < 0 and n % 2 == 0:
        return False
    num_root, num_exact = integer_nthroot(abs(a.numerator), n)
    den_root, den_exact = integer_nthroot(a.denominator, n)
    return bool(num_exact and den_exact)


def cyclic_algebra(d):
    L, a, n = d.field, d.a, d.n
    if n == 1 or _is_nth_power(a, n):
        return trivial_class(QQ)
    primes = set(prime_divisors(abs(a.numerator) * a.denominator)) \
        if abs(a.numerator) * a.denominator > 1 else set()
    if L.conductor > 1:
        primes |= set(prime_divisors(L.conductor))
    inv = {}
    undetermined = []
    for q in sorted(primes):
        if L.ramification_index(q) > 1:
            undetermined.append(q)
            continue
        v = vp(q, abs(a.numerator)) - vp(q, a.denominator)
        if v == 0:
            continue
        frob = L.galois_element(L.frobenius_lift(q))
        j = d.discrete_log(frob)
        inv[q] = QmodZ(j * v, n)
    if not L.is_totally_real() and a < 0:
        inv[INFINITY] = HALF
    total = ZERO
    for x in inv.values():
        total = total + x
    if len(undetermined) > 1:
        raise BrauerException('invariants at ramified primes %s are not forced '
                              'by the sum rule' % undetermined)
    if len(undetermined) == 1:
        inv[undetermined[0]] = -total
    elif not total.is_zero():
        raise ConsistencyException('unramified invariants of Delta(%s, %s) sum '
                                   'to %s' % (L.label(), a, total))
    return make_class(QQ, inv)
