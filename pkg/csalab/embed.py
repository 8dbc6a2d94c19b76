# -*- coding: utf-8 -*-
"""
Embedding questions for division algebras over number fields.

`embed_check` decides whether a division algebra D over K embeds in a
division algebra E over F by the index of (E (x) K) (x) D^op.
`counterexample_run` verifies, layer by layer, the index facts behind a
pair of algebras over Q that no division algebra over the union of the
p2-tower can contain together. The `thm6_*` helpers evaluate, certify
and enumerate the terms of the two-transfer gcd showing that D1 and D2
embed in a common division algebra of degree N once the base is
enlarged, and `thm7_pipeline` strings it all together for a pair of
classes.
"""
__title__ = 'csalab'
__license__ = 'MIT'

import logging
import threading
from math import gcd

from sympy import nextprime

from .arith import lcm, prime_divisors, require_prime, vp
from .brauer import (QQ, field_layer, index, make_class, opposite, power,
                     restrict, tensor)
from .configuration import Configuration
from .generic import GenericAlgebra, MixedClass, mixed_index, n_ab
from .groupring import (coefficient_sum, fixed_degree, normalize_to_trivial,
                        power_index_bound, stabilizer, weight)
from .reduction import (TransferSetup, UnmovedOracle, reduce_double,
                        reduce_single)
from .utils import ConsistencyException, CsalabException, extend_config

log = logging.getLogger(__name__)

UNIT_SUM = 'UNIT_SUM'
TWO_COPRIME_SUMMANDS = 'TWO_COPRIME_SUMMANDS'
SINGLE_SUMMAND = 'SINGLE_SUMMAND'


class EmbedException(CsalabException):
    pass


def _degree_of(E):
    if isinstance(E, MixedClass):
        return mixed_index(E, E.base)
    return index(E)


class EmbedInstance(object):
    """D over K of degree a, K/F of degree b, E over F of degree N;
    D embeds in E only if N = n.a.b.
    """

    def __init__(self, D, a, K, E, N, F=QQ):
        if D.base != K:
            raise EmbedException('D is not a class over %s' % K.label())
        if E.base != F:
            raise EmbedException('E is not a class over %s' % F.label())
        if not F.is_subfield_of(K):
            raise EmbedException('%s is not an extension of %s'
                                 % (K.label(), F.label()))
        if index(D) != a:
            raise EmbedException('declared degree %d of D but index is %d'
                                 % (a, index(D)))
        if _degree_of(E) != N:
            raise EmbedException('declared degree %d of E but index is %d'
                                 % (N, _degree_of(E)))
        self.D, self.a, self.K, self.E, self.N, self.F = D, a, K, E, N, F
        self.b = K.degree // F.degree
        if N % (self.a * self.b):
            raise EmbedException('degree %d of E is not a multiple of a.b = %d'
                                 % (N, self.a * self.b))
        self.n = N // (self.a * self.b)

    def to_dict(self):
        return {'D': self.D.to_pairs(), 'a': self.a, 'K': self.K.to_dict(),
                'b': self.b, 'N': self.N, 'F': self.F.to_dict()}


class EmbedResult(object):
    def __init__(self, instance, achieved_index):
        self.instance = instance
        self.n = instance.n
        self.achieved_index = achieved_index
        self.embeddable = instance.n % achieved_index == 0

    def to_dict(self):
        return {'embeddable': self.embeddable, 'n': self.n,
                'achieved_index': self.achieved_index}

    def __repr__(self):
        return '<EmbedResult embeddable=%s n=%d achieved=%d>' % (
            self.embeddable, self.n, self.achieved_index)


def embed_check(inst):
    """D embeds in E iff index((E (x) K) (x) D^op) divides n; when it
    does, the index is exactly n.
    """
    D, E, K = inst.D, inst.E, inst.K
    if isinstance(E, MixedClass):
        moved = MixedClass(E.generic, E.c, restrict(E.arith_class, K))
        achieved = mixed_index(moved.tensor(opposite(D)), K)
    else:
        achieved = index(tensor(restrict(E, K), opposite(D)))
    result = EmbedResult(inst, achieved)
    if result.embeddable and achieved != inst.n:
        raise ConsistencyException('index %d divides n = %d without being equal to it'
                                   % (achieved, inst.n))
    log.debug('%r', result)
    return result


def _smallest_primes(count, avoid, accept=lambda q: True):
    out, q = [], 2
    while len(out) < count:
        if q not in avoid and accept(q):
            out.append(q)
        q = int(nextprime(q))
    return out


def counterexample_classes(p1, p2):
    """(D1, D2) over Q: D1 of degree p1 stays a division algebra over every
    layer of the p2-tower; D2 of degree p2 is split by its first layer.
    """
    if p1 == 2:
        D1 = make_class(QQ, {2: '1/2', 'inf': '1/2'})
    else:
        q1, q2 = _smallest_primes(2, (p2,))
        D1 = make_class(QQ, {q1: '1/%d' % p1, q2: '%d/%d' % (p1 - 1, p1)})
    # q inert in the first layer iff q^(p2-1) != 1 mod p2^2
    q1, q2 = _smallest_primes(2, (p2,),
                              lambda q: pow(q, p2 - 1, p2 * p2) != 1)
    D2 = make_class(QQ, {q1: '1/%d' % p2, q2: '%d/%d' % (p2 - 1, p2)})
    return D1, D2


class CounterexampleReport(object):
    def __init__(self, p1, p2, level, D1, D2, L, layers, split_by_L):
        self.p1 = p1
        self.p2 = p2
        self.level = level
        self.D1 = D1
        self.D2 = D2
        self.L = L
        self.layers = layers
        self.split_by_L = split_by_L

    @property
    def d1_stays_division(self):
        return all(row['index_D1'] == self.p1 for row in self.layers)

    @property
    def d2_split_on_tower(self):
        return all(row['index_D2'] == 1 for row in self.layers if row['n'] >= 1)

    @property
    def contradiction(self):
        return self.level >= 1 and self.split_by_L and \
            self.d1_stays_division and self.d2_split_on_tower

    def to_dict(self):
        return {
            'p1': self.p1, 'p2': self.p2, 'level': self.level,
            'D1': self.D1.to_pairs(), 'D2': self.D2.to_pairs(),
            'L': self.L.to_dict(),
            'layers': self.layers,
            'checks': {'a_D2_split_by_L': self.split_by_L,
                       'b_D1_index_constant': self.d1_stays_division,
                       'c_D2_split_on_layers': self.d2_split_on_tower},
            'contradiction': self.contradiction,
        }


def counterexample_run(p1, p2, level):
    """Layers F1^(n), n = 0..level, of the p2-tower and the indices of D1
    and D2 over each of them.
    """
    require_prime(p1)
    require_prime(p2)
    if p1 == p2:
        raise EmbedException('p1 and p2 must differ')
    if p2 == 2:
        raise EmbedException('the layer tower is only built for odd p2')
    if level < 0:
        raise EmbedException('level must be non-negative')

    D1, D2 = counterexample_classes(p1, p2)
    L = field_layer(p2, 1)
    layers = []
    for n in range(level + 1):
        layer = field_layer(p2, n)
        if layer.degree != p2 ** n or not layer.galois_group().is_cyclic():
            raise ConsistencyException('layer %d is not cyclic of degree %d'
                                       % (n, p2 ** n))
        row = {'n': n, 'field': layer.to_dict(),
               'index_D1': index(restrict(D1, layer)),
               'index_D2': index(restrict(D2, layer))}
        log.debug('layer %d: %s', n, row)
        layers.append(row)

    report = CounterexampleReport(p1, p2, level, D1, D2, L, layers,
                                  index(restrict(D2, L)) == 1)
    if not report.split_by_L:
        raise ConsistencyException('D2 is not split by the first layer')
    if not report.d1_stays_division:
        raise ConsistencyException('D1 loses index on the tower')
    if not report.d2_split_on_tower:
        raise ConsistencyException('D2 survives on a layer above the first')
    return report


class Thm6Scenario(object):
    """D_i = D_i' (x) K_i with D_i' over Q, d_i = ind D_i, e_i = [K_i:Q],
    m_i = d_i e_i and N a multiple of lcm(m_1^2, m_2^2). A_i has degree
    r_i = N d_i over K_i and is reduced to index n_i = N/m_i.
    """

    def __init__(self, K1, D1, K2, D2, N):
        for D in (D1, D2):
            if not D.base.is_rational():
                raise EmbedException('scenario classes must be extended from Q')
        if gcd(K1.conductor, K2.conductor) != 1:
            raise EmbedException('conductors %d and %d are not coprime; the Galois '
                                 'closures are not linearly disjoint'
                                 % (K1.conductor, K2.conductor))
        self.K = (K1, K2)
        self.D = (D1, D2)
        self.d = tuple(index(restrict(D, K)) for D, K in zip(self.D, self.K))
        self.e = (K1.degree, K2.degree)
        self.m = tuple(d * e for d, e in zip(self.d, self.e))
        self.minimal_N = lcm(self.m[0] ** 2, self.m[1] ** 2)
        if not isinstance(N, int) or N < 1 or N % self.minimal_N:
            raise EmbedException('N = %r is not a multiple of lcm(m1^2, m2^2) = %d'
                                 % (N, self.minimal_N))
        self.N = N
        self.n = tuple(N // m for m in self.m)
        self.r = tuple(N * d for d in self.d)
        self.setups = tuple(TransferSetup.from_field(K, r, n)
                            for K, r, n in zip(self.K, self.r, self.n))
        self.E = GenericAlgebra(N)

    @property
    def setup1(self):
        return self.setups[0]

    @property
    def setup2(self):
        return self.setups[1]

    def algebra(self, i):
        """A_i' = E (x) D_i'^op over Q; A_i is A_i' (x) K_i."""
        return MixedClass(self.E, 1, opposite(self.D[i]))

    def oracle(self):
        return UnmovedOracle(MixedClass(self.E, 1),
                             [(self.algebra(0), self.setup1),
                              (self.algebra(1), self.setup2)])

    def check_pair(self, alpha, beta):
        if alpha.space != self.setup1.space or alpha.modulus != self.r[0]:
            raise EmbedException('alpha is not an element of (Z/%dZ)[G1]' % self.r[0])
        if beta.space != self.setup2.space or beta.modulus != self.r[1]:
            raise EmbedException('beta is not an element of (Z/%dZ)[G2]' % self.r[1])

    def field_of(self, alpha, beta):
        """K(alpha, beta) = K1(alpha) K2(beta)."""
        K1a = self.setup1.bridge(stabilizer(alpha))
        K2b = self.setup2.bridge(stabilizer(beta))
        return K1a.compositum(K2b)

    def schur_class(self, a, b):
        return tensor(power(self.D[0], a), power(self.D[1], b))

    def to_dict(self):
        return {'N': self.N, 'minimal_N': self.minimal_N,
                'K1': self.K[0].to_dict(), 'K2': self.K[1].to_dict(),
                'D1': self.D[0].to_pairs(), 'D2': self.D[1].to_pairs(),
                'd': list(self.d), 'e': list(self.e), 'm': list(self.m),
                'n': list(self.n), 'r': list(self.r)}

    def __repr__(self):
        return '<Thm6Scenario N=%d d=%s e=%s>' % (self.N, self.d, self.e)


def thm6_expression(sc, alpha, beta):
    """Schur(D1^alpha (x) D2^beta (x) K(alpha,beta)) [K(alpha,beta):Q]
    |alpha| |beta| N_{a,b}.
    """
    sc.check_pair(alpha, beta)
    a, b = coefficient_sum(alpha), coefficient_sum(beta)
    field = sc.field_of(alpha, beta)
    schur = index(restrict(sc.schur_class(a, b), field))
    return schur * fixed_degree(alpha) * fixed_degree(beta) * \
        weight(alpha, sc.n[0]) * weight(beta, sc.n[1]) * n_ab(sc.N, a, b)


class Certificate(object):
    """Lower bound on v_p of one term, with the valuations it was read off."""

    def __init__(self, p, case, alpha, beta, ledger, bound, direct, side=None,
                 reduced_term=None, d_divides_reduced_term=None):
        self.p = p
        self.case = case
        self.alpha = alpha
        self.beta = beta
        self.ledger = ledger
        self.bound = bound
        self.direct = direct
        self.side = side
        self.reduced_term = reduced_term
        self.d_divides_reduced_term = d_divides_reduced_term

    def to_dict(self):
        out = {'p': self.p, 'case': self.case, 'alpha': list(self.alpha.coeffs),
               'beta': list(self.beta.coeffs), 'ledger': dict(self.ledger),
               'bound': self.bound, 'direct': self.direct}
        if self.case == SINGLE_SUMMAND:
            out['side'] = self.side
            out['reduced_term'] = self.reduced_term
            out['d_divides_reduced_term'] = self.d_divides_reduced_term
        return out

    def __repr__(self):
        return '<Certificate p=%d %s bound=%d direct=%d>' % (
            self.p, self.case, self.bound, self.direct)


def _require(condition, message, *args):
    if not condition:
        raise ConsistencyException(message % args)


def thm6_certificate(sc, alpha, beta, p, term=None):
    """Classify (alpha, beta) at p and bound v_p(term) from below.

    The coefficients of alpha and beta are the summands of 1 + a + b
    besides 1. If p divides 1 + a + b, one of them is prime to p.
    """
    require_prime(p)
    if sc.N % p:
        raise EmbedException('%d does not divide N = %d' % (p, sc.N))
    if term is None:
        term = thm6_expression(sc, alpha, beta)
    direct = vp(p, term)
    s = vp(p, sc.N)
    t = (vp(p, sc.n[0]), vp(p, sc.n[1]))
    a, b = coefficient_sum(alpha), coefficient_sum(beta)

    if (1 + a + b) % p:
        ledger = [('s', s), ('N_ab', vp(p, n_ab(sc.N, a, b)))]
        _require(ledger[1][1] == s, 'v_p(N_ab) = %d, expected s = %d', ledger[1][1], s)
        cert = Certificate(p, UNIT_SUM, alpha, beta, ledger, s, direct)
    else:
        coprime = [(0, c) for c, x in enumerate(alpha.coeffs) if x % p] + \
            [(1, c) for c, x in enumerate(beta.coeffs) if x % p]
        _require(coprime, 'p = %d divides 1 + a + b but no summand is prime to p', p)
        if len(coprime) >= 2:
            ts = sorted(t[side] for side, _ in coprime)
            bound = ts[0] + ts[1]
            ledger = [('s', s), ('t1', t[0]), ('t2', t[1])]
            cert = Certificate(p, TWO_COPRIME_SUMMANDS, alpha, beta, ledger,
                               bound, direct)
        else:
            cert = _single_summand(sc, alpha, beta, p, coprime[0], s, t, direct)

    _require(cert.bound >= s, 'ledger bound %d below s = %d (%s)', cert.bound, s,
             cert.case)
    _require(cert.bound <= direct, 'ledger bound %d exceeds v_p(term) = %d (%s)',
             cert.bound, direct, cert.case)
    return cert


def _single_summand(sc, alpha, beta, p, coprime, s, t, direct):
    side, c = coprime
    elems = [alpha, beta]
    elems[side] = normalize_to_trivial(elems[side], c)
    alpha, beta = elems
    field = sc.field_of(alpha, beta)
    own, other = elems[side], elems[1 - side]
    n, d, e = sc.n[side], sc.d[side], sc.e[side]
    D, D_other = sc.D[side], sc.D[1 - side]
    K = sc.K[side]
    n_H = own.coeffs[0]
    _require(stabilizer(own).order == 1, 'stabilizer of the normalized element '
             'is not trivial')

    s1, s2, s3 = vp(p, n), vp(p, d), vp(p, e)
    _require(s1 + s2 + s3 == s, 's1 + s2 + s3 = %d, expected %d', s1 + s2 + s3, s)
    own_sum, other_sum = coefficient_sum(own), coefficient_sum(other)
    D_sharp = tensor(power(D, own_sum - n_H), power(D_other, other_sum))
    u1 = vp(p, index(restrict(D, field)))
    u2 = vp(p, index(restrict(D_sharp, field)))
    u3 = vp(p, index(restrict(power(D, n_H), field)))
    relative = field.degree // K.degree
    u4 = vp(p, relative)
    _require(u3 == u1, 'u3 = %d differs from u1 = %d', u3, u1)
    _require(u1 + u4 >= s2, 'u1 + u4 = %d below s2 = %d', u1 + u4, s2)

    rest = weight(other, sc.n[1 - side]) * power_index_bound(own, n, skip=(0,))
    _require(u2 <= vp(p, rest), 'u2 = %d exceeds v_p(|alpha\'||beta|) = %d',
             u2, vp(p, rest))

    schur = index(restrict(tensor(power(D, own_sum), power(D_other, other_sum)),
                           field))
    reduced_term = schur * relative * rest
    ledger = [('s', s), ('t1', t[0]), ('t2', t[1]), ('s1', s1), ('s2', s2),
              ('s3', s3), ('u1', u1), ('u2', u2), ('u3', u3), ('u4', u4)]
    return Certificate(p, SINGLE_SUMMAND, alpha, beta, ledger,
                       s1 + s3 + u1 + u4, direct,
                       side='alpha' if side == 0 else 'beta',
                       reduced_term=reduced_term,
                       d_divides_reduced_term=reduced_term % d == 0)


class DivisibilityReport(object):
    def __init__(self, scenario, reduction, certificates, cases, d_failures):
        self.scenario = scenario
        self.reduction = reduction
        self.certificates = certificates
        self.cases = cases
        self.d_failures = d_failures

    @property
    def gcd(self):
        return self.reduction.gcd

    def to_dict(self):
        return {'scenario': self.scenario.to_dict(),
                'reduction': self.reduction.to_dict(),
                'certificates_checked': self.certificates,
                'cases': dict(self.cases),
                'single_summand_d_not_dividing_reduced_term': self.d_failures}

    def __repr__(self):
        return '<DivisibilityReport gcd=%d N=%d>' % (self.gcd, self.scenario.N)


def thm6_divisibility(sc, enumeration=None, config=None, **kwargs):
    """Enumerate (alpha, beta), check N | term for each, certify each term at
    every p | N when `config.certify`, and check that the gcd is N.
    """
    config = extend_config(config or Configuration(), kwargs)
    primes = prime_divisors(sc.N)
    lock = threading.Lock()
    tally = {'certificates': 0, 'd_failures': 0,
             'cases': dict((k, 0) for k in
                           (UNIT_SUM, TWO_COPRIME_SUMMANDS, SINGLE_SUMMAND))}

    def observe(alpha, beta, value):
        if value % sc.N:
            raise ConsistencyException('N = %d does not divide the term %d at '
                                       'alpha=%s beta=%s' % (sc.N, value,
                                                             list(alpha.coeffs),
                                                             list(beta.coeffs)))
        if not config.certify:
            return
        certs = [thm6_certificate(sc, alpha, beta, p, term=value) for p in primes]
        with lock:
            for cert in certs:
                tally['certificates'] += 1
                tally['cases'][cert.case] += 1
                if cert.case == SINGLE_SUMMAND and not cert.d_divides_reduced_term:
                    tally['d_failures'] += 1

    report = reduce_double(sc.setup1, sc.setup2, sc.oracle(), enumeration,
                           config, observer=observe)
    if report.gcd != sc.N:
        raise ConsistencyException('gcd %d of the enumerated terms is not N = %d'
                                   % (report.gcd, sc.N))
    return DivisibilityReport(sc, report, tally['certificates'], tally['cases'],
                              tally['d_failures'])


def single_transfer_check(sc, i, enumeration=None, config=None):
    """gcd over alpha for B = E and A = A_i alone; it must be N."""
    oracle = UnmovedOracle(MixedClass(sc.E, 1), [(sc.algebra(i), sc.setups[i])])
    report = reduce_single(sc.setups[i], oracle, enumeration, config)
    if report.gcd != sc.N:
        raise ConsistencyException('single transfer %d gives %d, not N = %d'
                                   % (i + 1, report.gcd, sc.N))
    return report


class Thm7Report(object):
    def __init__(self, scenario, divisibility, singles, embeds, sweep):
        self.scenario = scenario
        self.divisibility = divisibility
        self.singles = singles
        self.embeds = embeds
        self.sweep = sweep

    def to_dict(self):
        sc = self.scenario
        return {
            'scenario': sc.to_dict(),
            'hypothesis': {'N': sc.N, 'lcm_m_squared': sc.minimal_N,
                           'holds': sc.N % sc.minimal_N == 0},
            'degrees': [{'n': n, 'd': d, 'e': e, 'product': n * d * e}
                        for n, d, e in zip(sc.n, sc.d, sc.e)],
            'divisibility': self.divisibility.to_dict(),
            'single_transfers': [r.to_dict() for r in self.singles],
            'embed_before_reduction': [r.to_dict() for r in self.embeds],
            'sweep': self.sweep,
        }


def thm7_pipeline(K1, D1, K2, D2, N, sweep=0, enumeration=None, config=None,
                  **kwargs):
    """Scenario for the pair (D1 over K1, D2 over K2), its divisibility run,
    a single-transfer run per side, the embedding check of each D_i in E
    before the base change, and an optional table of gcds over the
    multiples k * lcm(m1^2, m2^2), k = 1..sweep.
    """
    config = extend_config(config or Configuration(), kwargs)
    enumeration = enumeration or config.enumeration
    sc = Thm6Scenario(K1, D1, K2, D2, N)
    for n, d, e in zip(sc.n, sc.d, sc.e):
        _require(n * d * e == sc.N, 'n.d.e = %d is not N = %d', n * d * e, sc.N)
    divisibility = thm6_divisibility(sc, enumeration, config)
    singles = [single_transfer_check(sc, i, enumeration, config) for i in (0, 1)]
    generic = MixedClass(sc.E, 1)
    embeds = []
    for i in (0, 1):
        D_i = restrict(sc.D[i], sc.K[i])
        embeds.append(embed_check(EmbedInstance(D_i, sc.d[i], sc.K[i], generic,
                                                sc.N)))

    table = []
    for k in range(1, sweep + 1):
        Nk = k * sc.minimal_N
        sweep_sc = Thm6Scenario(K1, D1, K2, D2, Nk)
        result = reduce_double(sweep_sc.setup1, sweep_sc.setup2,
                               sweep_sc.oracle(), enumeration, config)
        table.append({'N': Nk, 'gcd': result.gcd, 'exact': result.exact,
                      'count': result.count})
        log.info('sweep N=%d gcd=%d', Nk, result.gcd)
    return Thm7Report(sc, divisibility, singles, embeds, table)

