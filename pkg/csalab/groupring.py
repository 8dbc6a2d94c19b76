# -*- coding: utf-8 -*-
"""
Finite groups given by multiplication tables, their left actions on
coset spaces G/H, and group-ring elements alpha in (Z/rZ)[G/H] with
stabilizers H_alpha, orbits and the weight |alpha| = prod n/(n, n_gH).

Element 0 of every group is the identity and coset 0 of every coset
space is the trivial coset H.
"""
__title__ = 'csalab'
__license__ = 'MIT'

import itertools
import logging

from . import settings
from .arith import reduced_quotient
from .utils import CsalabException

log = logging.getLogger(__name__)


class GroupException(CsalabException):
    pass


def _closure(generators, mul, identity):
    """Breadth-first closure of a finite set of generators; the identity
    comes first, the rest in discovery order.
    """
    elements = [identity]
    seen = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = mul(x, g)
                if y not in seen:
                    seen[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    return elements, seen


def _quaternion_product(x, y):
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


class FiniteGroup(object):
    """A group law on {0, ..., order-1} with identity 0, checked when
    built: square table, identity row and column, two-sided inverses
    and associativity.
    """

    def __init__(self, table, labels=None, name=None, validate=True):
        table = tuple(tuple(int(x) for x in row) for row in table)
        order = len(table)
        if order < 1:
            raise GroupException('a group needs at least one element')
        if any(len(row) != order for row in table):
            raise GroupException('multiplication table must be square')
        if labels is not None and len(labels) != order:
            raise GroupException('need one label per element')
        self.table = table
        self.order = order
        self.name = name or 'G%d' % order
        self.labels = tuple(str(l) for l in labels) if labels is not None \
            else tuple(str(i) for i in range(order))
        self.inverses = self._find_inverses()
        if validate:
            self._check_law()

    def _find_inverses(self):
        for i, row in enumerate(self.table):
            if any(not 0 <= x < self.order for x in row):
                raise GroupException('table entry out of range in row %d' % i)
        if self.table[0] != tuple(range(self.order)) or \
                any(row[0] != i for i, row in enumerate(self.table)):
            raise GroupException('element 0 is not the identity')
        inverses = []
        for i, row in enumerate(self.table):
            try:
                j = row.index(0)
            except ValueError:
                raise GroupException('element %d has no right inverse' % i)
            if self.table[j][i] != 0:
                raise GroupException('element %d has no two-sided inverse' % i)
            inverses.append(j)
        return tuple(inverses)

    def _check_law(self):
        t = self.table
        n = self.order
        for row in t:
            if len(set(row)) != n:
                raise GroupException('table rows must be permutations')
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = t[ta[b]]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise GroupException(
                            'table is not associative at (%d, %d, %d)' % (a, b, c))

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverses[a]

    def check_element(self, g):
        if not isinstance(g, int) or not 0 <= g < self.order:
            raise GroupException('element index %r out of range for %s'
                                 % (g, self.name))
        return g

    def element_order(self, g):
        k, x = 1, g
        while x != 0:
            x = self.table[x][g]
            k += 1
        return k

    def is_abelian(self):
        t = self.table
        return all(t[a][b] == t[b][a]
                   for a in range(self.order) for b in range(a))

    def is_cyclic(self):
        return any(self.element_order(g) == self.order
                   for g in range(self.order))

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return '<FiniteGroup %s of order %d>' % (self.name, self.order)

    @classmethod
    def from_closure(cls, generators, mul, identity, name=None, label=str):
        elements, index = _closure(list(generators), mul, identity)
        table = [[index[mul(x, y)] for y in elements] for x in elements]
        return cls(table, labels=[label(x) for x in elements], name=name,
                   validate=False)

    @classmethod
    def trivial(cls):
        return cls([[0]], labels=['e'], name='1')

    @classmethod
    def cyclic(cls, n):
        if n < 1:
            raise GroupException('cyclic group order must be positive')
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        return cls(table, name='C%d' % n, validate=False)

    @classmethod
    def abelian(cls, orders):
        """Direct product of cyclic groups, elements in lexicographic order."""
        orders = list(orders)
        if any(o < 1 for o in orders):
            raise GroupException('cyclic factor orders must be positive')
        if not orders:
            return cls.trivial()
        elements = list(itertools.product(*[range(o) for o in orders]))
        index = dict((x, i) for i, x in enumerate(elements))
        table = [[index[tuple((a + b) % o for a, b, o in zip(x, y, orders))]
                  for y in elements] for x in elements]
        return cls(table, labels=elements,
                   name='x'.join('C%d' % o for o in orders), validate=False)

    @classmethod
    def from_permutations(cls, generators, name=None):
        """Group generated by permutations given as image tuples, composed
        right to left: (a*b)(x) = a(b(x)).
        """
        generators = [tuple(g) for g in generators]
        if not generators:
            return cls.trivial()
        degree = len(generators[0])
        if any(sorted(g) != list(range(degree)) for g in generators):
            raise GroupException('generators must be permutations of one degree')
        identity = tuple(range(degree))

        def compose(a, b):
            return tuple(a[b[x]] for x in range(degree))

        return cls.from_closure(generators, compose, identity, name=name)

    @classmethod
    def dihedral(cls, n):
        """Symmetries of the n-gon, order 2n."""
        if n < 3:
            raise GroupException('dihedral groups need n >= 3')
        rotation = tuple((x + 1) % n for x in range(n))
        reflection = tuple((-x) % n for x in range(n))
        return cls.from_permutations([rotation, reflection], name='D%d' % (2 * n))

    @classmethod
    def quaternion(cls):
        units = {(1, 0, 0, 0): '1', (0, 1, 0, 0): 'i', (0, 0, 1, 0): 'j',
                 (0, 0, 0, 1): 'k'}

        def label(x):
            for unit, name in units.items():
                if x == unit:
                    return name
                if x == tuple(-c for c in unit):
                    return '-' + name
            return str(x)

        return cls.from_closure([(0, 1, 0, 0), (0, 0, 1, 0)],
                                _quaternion_product, (1, 0, 0, 0),
                                name='Q8', label=label)


class Subgroup(object):
    """Sorted member set of a subgroup of `parent`."""

    def __init__(self, parent, members, validate=None):
        self.parent = parent
        self.members = tuple(sorted(set(parent.check_element(m) for m in members)))
        self._member_set = frozenset(self.members)
        if validate or (validate is None and settings.VALIDATE_STRUCTURES):
            self.check()

    def check(self):
        g = self.parent
        if 0 not in self._member_set:
            raise GroupException('subgroup must contain the identity')
        for a in self.members:
            if g.inv(a) not in self._member_set:
                raise GroupException('subgroup not closed under inverses at %d' % a)
            for b in self.members:
                if g.mul(a, b) not in self._member_set:
                    raise GroupException(
                        'subgroup not closed under the law at (%d, %d)' % (a, b))
        return self

    @classmethod
    def generated_by(cls, group, generators):
        generators = [group.check_element(x) for x in generators]
        elements, _ = _closure(generators, group.mul, 0)
        return cls(group, elements)

    @classmethod
    def whole(cls, group):
        return cls(group, range(group.order))

    @classmethod
    def trivial(cls, group):
        return cls(group, [0])

    @property
    def order(self):
        return len(self.members)

    def index(self):
        return self.parent.order // self.order

    def is_normal(self):
        return all(self.conjugate(g) == self for g in range(self.parent.order))

    def conjugate(self, g):
        """g * self * g^-1"""
        p = self.parent
        gi = p.inv(g)
        return Subgroup(p, [p.mul(p.mul(g, h), gi) for h in self.members])

    def __contains__(self, g):
        return g in self._member_set

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __le__(self, other):
        return self._member_set <= other._member_set

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent == other.parent and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return '<Subgroup of %s: %s>' % (self.parent.name, list(self.members))


def all_subgroups(group):
    """Every subgroup, as joins of cyclic subgroups; sorted by order,
    then members.
    """
    found = set(Subgroup.generated_by(group, [g]) for g in range(group.order))
    frontier = set(found)
    cyclic = list(found)
    while frontier:
        new = set()
        for sub in frontier:
            for c in cyclic:
                if c <= sub:
                    continue
                joined = Subgroup.generated_by(group, list(sub.members) + list(c.members))
                if joined not in found:
                    new.add(joined)
        found |= new
        frontier = new
    return sorted(found, key=lambda s: (s.order, s.members))


class CosetSpace(object):
    """Left cosets xH with G acting by g.(xH) = (gx)H. Cosets are ordered
    by their least element, so coset 0 is H itself.
    """

    def __init__(self, group, sub):
        if sub.parent != group:
            raise GroupException('subgroup does not belong to %s' % group.name)
        self.group = group
        self.sub = sub
        coset_of = [None] * group.order
        cosets = []
        for x in range(group.order):
            if coset_of[x] is not None:
                continue
            members = tuple(sorted(group.mul(x, h) for h in sub.members))
            for y in members:
                coset_of[y] = len(cosets)
            cosets.append(members)
        self.cosets = tuple(cosets)
        self.coset_of = tuple(coset_of)
        self.representatives = tuple(c[0] for c in cosets)
        self.action = tuple(
            tuple(coset_of[group.mul(g, rep)] for rep in self.representatives)
            for g in range(group.order))

    @classmethod
    def regular(cls, group):
        return cls(group, Subgroup.trivial(group))

    @property
    def size(self):
        return len(self.cosets)

    def act(self, g, c):
        return self.action[g][c]

    def representative(self, c):
        return self.representatives[c]

    def __eq__(self, other):
        if not isinstance(other, CosetSpace):
            return NotImplemented
        return self.group == other.group and self.sub == other.sub

    def __hash__(self):
        return hash((self.group, self.sub))

    def __repr__(self):
        return '<CosetSpace %s/%s, %d cosets>' % (
            self.group.name, list(self.sub.members), self.size)


class GroupRingElement(object):
    """alpha = sum n_gH gH in (Z/rZ)[G/H]; coefficients kept in {0, ..., r-1}."""
    __slots__ = ('space', 'modulus', 'coeffs')

    def __init__(self, space, modulus, coeffs):
        if modulus < 1:
            raise GroupException('modulus must be positive')
        coeffs = tuple(int(c) % modulus for c in coeffs)
        if len(coeffs) != space.size:
            raise GroupException('expected %d coefficients, got %d'
                                 % (space.size, len(coeffs)))
        self.space = space
        self.modulus = modulus
        self.coeffs = coeffs

    @classmethod
    def zero(cls, space, modulus):
        return cls(space, modulus, [0] * space.size)

    def __getitem__(self, c):
        return self.coeffs[c]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs \
            and self.space == other.space

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __repr__(self):
        return 'GroupRingElement(r=%d, %s)' % (self.modulus, list(self.coeffs))


def translate(g, alpha):
    """(g alpha) at coset c is alpha at g^-1 c."""
    space = alpha.space
    gi = space.group.inv(space.group.check_element(g))
    row = space.action[gi]
    return GroupRingElement(space, alpha.modulus,
                            [alpha.coeffs[row[c]] for c in range(space.size)])


def stabilizer(alpha):
    """H_alpha = {g in G | g alpha = alpha}."""
    space = alpha.space
    group = space.group
    coeffs = alpha.coeffs
    members = []
    for g in range(group.order):
        row = space.action[group.inv(g)]
        if all(coeffs[row[c]] == coeffs[c] for c in range(space.size)):
            members.append(g)
    return Subgroup(group, members)


def orbits(sub, space):
    """Orbits of `sub` on the coset indices, each sorted, listed by
    least element.
    """
    if sub.parent != space.group:
        raise GroupException('subgroup does not act on this coset space')
    seen = [False] * space.size
    out = []
    for c in range(space.size):
        if seen[c]:
            continue
        orbit = sorted(set(space.action[h][c] for h in sub.members))
        for d in orbit:
            seen[d] = True
        out.append(orbit)
    return out


def constant_on_orbits(alpha, sub):
    return all(len(set(alpha.coeffs[c] for c in orbit)) == 1
               for orbit in orbits(sub, alpha.space))


def weight(alpha, n):
    """|alpha| = prod over cosets of n/(n, n_gH)."""
    if n < 1:
        raise GroupException('weight needs n >= 1')
    out = 1
    for c in alpha.coeffs:
        out *= reduced_quotient(n, c)
    return out


def power_index_bound(alpha, d, skip=()):
    """prod d/(d, n_gH) over the cosets not in `skip`: the bound on the
    index of a twisted power of a degree-d class.
    """
    out = 1
    for c, coeff in enumerate(alpha.coeffs):
        if c not in skip:
            out *= reduced_quotient(d, coeff)
    return out


def fixed_degree(alpha):
    """[K(alpha):F] = [G : H_alpha]."""
    return stabilizer(alpha).index()


def coefficient_sum(alpha):
    """Integer sum of the representatives in {0, ..., r-1}."""
    return sum(alpha.coeffs)


def normalize_to_trivial(alpha, c):
    """g^-1 alpha for g the representative of coset c: the coefficient
    that sat at c moves to the trivial coset H.
    """
    g = alpha.space.representative(c)
    return translate(alpha.space.group.inv(g), alpha)


def element_count(space, modulus):
    return modulus ** space.size


def element_at(space, modulus, index):
    """The index-th element in lexicographic order, first coset most
    significant.
    """
    total = element_count(space, modulus)
    if not 0 <= index < total:
        raise GroupException('element index %d out of range %d' % (index, total))
    digits = [0] * space.size
    for pos in range(space.size - 1, -1, -1):
        index, digits[pos] = divmod(index, modulus)
    return GroupRingElement(space, modulus, digits)


def element_index(alpha):
    index = 0
    for c in alpha.coeffs:
        index = index * alpha.modulus + c
    return index


def enumerate_elements(space, modulus):
    for coeffs in itertools.product(range(modulus), repeat=space.size):
        yield GroupRingElement(space, modulus, coeffs)


def random_element(space, modulus, rng):
    return GroupRingElement(space, modulus,
                            [rng.randrange(modulus) for _ in range(space.size)])
