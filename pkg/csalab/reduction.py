# -*- coding: utf-8 -*-
"""
Index-reduction gcd engines for Weil transfers of Severi-Brauer type
varieties. For a transfer set-up (G, H, r, n) and an index oracle, the
single engine folds

    oracle(alpha) * [K(alpha):F] * |alpha|

over alpha in (Z/rZ)[G/H] with gcd, and the double engine folds

    oracle(alpha, beta) * [K(alpha):F] * [K'(beta):F] * |alpha| * |beta|

over pairs. The twisted algebras A^alpha live behind the oracle.
"""
__title__ = 'csalab'
__license__ = 'MIT'

import logging
import random

from .brauer import index, power, restrict, tensor
from .configuration import EXHAUSTIVE, Configuration
from .generic import MixedClass, mixed_index
from .groupring import (CosetSpace, Subgroup, coefficient_sum, element_at,
                        element_count, fixed_degree, stabilizer, weight)
from .mthreading import EnumerationPool, chunked
from .utils import CsalabException, extend_config

log = logging.getLogger(__name__)


class ReductionException(CsalabException):
    pass


class FieldBridge(object):
    """Fixed fields K^T of the subgroups T of G = Gal(K/Q), K abelian."""

    def __init__(self, top):
        self.top = top
        self.group = top.galois_group()
        self._fields = {}

    def __call__(self, sub):
        if sub.parent != self.group:
            raise ReductionException('subgroup is not a subgroup of Gal(%s/Q)'
                                     % self.top.label())
        field = self._fields.get(sub.members)
        if field is None:
            field = self.top.fixed_field(sub.members)
            self._fields[sub.members] = field
        return field


class TransferSetup(object):
    """G, H with G/H the coset space, r the degree of A/K (the modulus of
    the group ring) and n the index A is reduced to.
    """

    def __init__(self, group, sub=None, r=1, n=1, bridge=None):
        if r < 1 or n < 1:
            raise ReductionException('r and n must be positive')
        sub = sub if sub is not None else Subgroup.trivial(group)
        if bridge is not None and bridge.group != group:
            raise ReductionException('bridge group does not match the set-up group')
        self.group = group
        self.sub = sub
        self.r = r
        self.n = n
        self.bridge = bridge
        self.space = CosetSpace(group, sub)

    @classmethod
    def from_field(cls, K, r, n):
        """K abelian over Q is its own Galois closure, so H is trivial."""
        bridge = FieldBridge(K)
        return cls(bridge.group, None, r, n, bridge)

    @property
    def size(self):
        return element_count(self.space, self.r)

    def element_at(self, i):
        return element_at(self.space, self.r, i)

    def to_dict(self):
        out = {'group_order': self.group.order, 'subgroup': list(self.sub.members),
               'cosets': self.space.size, 'r': self.r, 'n': self.n}
        if self.bridge is not None:
            out['field'] = self.bridge.top.to_dict()
        return out


class IndexOracle(object):
    """Schur(B (x) A^alpha) (or its double version) as a callable."""
    kind = 'abstract'

    def __call__(self, alpha, beta=None):
        raise NotImplementedError

    def describe(self):
        return {'kind': self.kind}


class SplitOracle(IndexOracle):
    kind = 'split'

    def __init__(self, value=1):
        if value < 1:
            raise ReductionException('oracle values must be positive')
        self.value = value

    def __call__(self, alpha, beta=None):
        return self.value

    def describe(self):
        return {'kind': self.kind, 'value': self.value}


class TableOracle(IndexOracle):
    """Values looked up by coefficient tuple, or by a pair of tuples for
    the double engine.
    """
    kind = 'table'

    def __init__(self, table, default=None):
        self.table = dict(table)
        self.default = default

    def __call__(self, alpha, beta=None):
        key = alpha.coeffs if beta is None else (alpha.coeffs, beta.coeffs)
        value = self.table.get(key, self.default)
        if value is None:
            raise ReductionException('table oracle has no value for %r' % (key,))
        if value < 1:
            raise ReductionException('oracle values must be positive')
        return value

    def describe(self):
        return {'kind': self.kind, 'entries': len(self.table),
                'default': self.default}


def _combine(x, y):
    if isinstance(x, MixedClass):
        return x.tensor(y)
    if isinstance(y, MixedClass):
        return y.tensor(x)
    return tensor(x, y)


def _power(x, k):
    if isinstance(x, MixedClass):
        return x.power(k)
    return power(x, k)


def _index_over(x, field):
    if isinstance(x, MixedClass):
        return mixed_index(x, field)
    return index(restrict(x, field))


class UnmovedOracle(IndexOracle):
    """Every class is extended from Q, so Galois does not move it and
    A^alpha is A0^a over K(alpha) with a the coefficient sum of alpha.
    """
    kind = 'unmoved'

    def __init__(self, B, transfers):
        if not 1 <= len(transfers) <= 2:
            raise ReductionException('one or two transfers expected')
        for A0, setup in transfers:
            if setup.bridge is None:
                raise ReductionException('unmoved oracle needs a field bridge')
            if not A0.base.is_rational():
                raise ReductionException('unmoved hypothesis needs classes '
                                         'extended from Q')
        if not B.base.is_rational():
            raise ReductionException('unmoved hypothesis needs classes extended from Q')
        self.B = B
        self.transfers = list(transfers)
        self._cache = {}

    def value(self, sums, field):
        key = (tuple(sums), field)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        combined = self.B
        for (A0, _), a in zip(self.transfers, sums):
            combined = _combine(combined, _power(A0, a))
        out = _index_over(combined, field)
        self._cache[key] = out
        return out

    def field_of(self, alpha, beta=None):
        field = self.transfers[0][1].bridge(stabilizer(alpha))
        if beta is not None:
            field = field.compositum(self.transfers[1][1].bridge(stabilizer(beta)))
        return field

    def __call__(self, alpha, beta=None):
        if (beta is None) != (len(self.transfers) == 1):
            raise ReductionException('oracle built for %d transfer(s)'
                                     % len(self.transfers))
        sums = [coefficient_sum(alpha)]
        if beta is not None:
            sums.append(coefficient_sum(beta))
        return self.value(sums, self.field_of(alpha, beta))

    def describe(self):
        return {'kind': self.kind, 'transfers': len(self.transfers)}


def unmoved_oracle(B, A0, setup, A0_second=None, setup_second=None):
    transfers = [(A0, setup)]
    if A0_second is not None or setup_second is not None:
        if A0_second is None or setup_second is None:
            raise ReductionException('second transfer needs both a class and a set-up')
        transfers.append((A0_second, setup_second))
    return UnmovedOracle(B, transfers)


def term_value(setup, alpha, oracle):
    """Schur(B (x) A^alpha) [K(alpha):F] |alpha|"""
    return oracle(alpha) * fixed_degree(alpha) * weight(alpha, setup.n)


def double_term_value(setup1, setup2, alpha, beta, oracle):
    return oracle(alpha, beta) * fixed_degree(alpha) * fixed_degree(beta) * \
        weight(alpha, setup1.n) * weight(beta, setup2.n)


class ReductionReport(object):
    """gcd of the enumerated terms. In exhaustive mode this is the index
    of the reduced algebra; sampled, it is a multiple of it.
    """

    def __init__(self, gcd, witness, count, total, mode, enumeration):
        self.gcd = gcd
        self.witness = witness
        self.count = count
        self.total = total
        self.mode = mode
        self.enumeration = enumeration

    @property
    def exact(self):
        return self.mode == EXHAUSTIVE

    def to_dict(self):
        meta = self.enumeration.to_dict()
        meta['effective_mode'] = self.mode
        meta['count'] = self.count
        meta['total'] = self.total
        out = {'gcd': self.gcd, 'exact': self.exact, 'enumeration': meta,
               'witness': None}
        if self.witness is not None:
            out['witness'] = [list(w.coeffs) for w in self.witness]
        return out

    def __repr__(self):
        return '<ReductionReport gcd=%d %s %d/%d terms>' % (
            self.gcd, self.mode, self.count, self.total)


def plan_indices(total, enumeration):
    """(effective mode, indices) for an index space of `total` terms."""
    mode = enumeration.resolve(total)
    if mode == EXHAUSTIVE:
        if total > enumeration.budget:
            raise ReductionException('%d terms exceed the enumeration budget %d'
                                     % (total, enumeration.budget))
        return mode, range(total)
    rng = random.Random(enumeration.seed)
    wanted = min(enumeration.samples, total)
    picked = {0}
    drawn = set()
    # total may exceed sys.maxsize
    while len(drawn) < wanted:
        drawn.add(rng.randrange(total))
    picked.update(drawn)
    return mode, sorted(picked)


def _run(total, term, decode, enumeration, config):
    mode, indices = plan_indices(total, enumeration)
    log.debug('enumerating %d of %d terms (%s)', len(indices), total, mode)
    pool = EnumerationPool(config)
    result = pool.fold(chunked(indices, config.CHUNK_SIZE), term)
    witness = result.witness
    report = ReductionReport(result.gcd,
                             decode(witness) if witness is not None else None,
                             result.count, total, mode, enumeration)
    log.info('%r', report)
    return report


def reduce_single(setup, oracle, enumeration=None, config=None, observer=None,
                  **kwargs):
    """gcd over alpha in (Z/rZ)[G/H] of term_value. `observer(alpha, None,
    value)` sees every enumerated term and may raise.
    """
    config = extend_config(config or Configuration(), kwargs)
    enumeration = enumeration or config.enumeration

    def term(i):
        alpha = setup.element_at(i)
        value = term_value(setup, alpha, oracle)
        if observer is not None:
            observer(alpha, None, value)
        return value

    return _run(setup.size, term, lambda i: (setup.element_at(i),),
                enumeration, config)


def reduce_double(setup1, setup2, oracle, enumeration=None, config=None,
                  observer=None, **kwargs):
    """gcd over pairs (alpha, beta), ordered lexicographically with alpha
    most significant.
    """
    config = extend_config(config or Configuration(), kwargs)
    enumeration = enumeration or config.enumeration
    inner = setup2.size

    def decode(i):
        hi, lo = divmod(i, inner)
        return setup1.element_at(hi), setup2.element_at(lo)

    def term(i):
        alpha, beta = decode(i)
        value = double_term_value(setup1, setup2, alpha, beta, oracle)
        if observer is not None:
            observer(alpha, beta, value)
        return value

    return _run(setup1.size * inner, term, decode, enumeration, config)
