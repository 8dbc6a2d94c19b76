# -*- coding: utf-8 -*-
"""
This class holds configuration objects, which can be thought of
as settings.py but dynamic and changing for whatever parent object
holds them. For example, pass in a config object to a reduction
engine, a divisibility run, or even the CLI dispatcher, and it just works.
"""
__title__ = 'csalab'
__license__ = 'MIT'

import logging

from . import settings
from .utils import CsalabException

log = logging.getLogger(__name__)

EXHAUSTIVE = 'exhaustive'
SAMPLED = 'sampled'
# exhaustive within budget, sampled beyond it
AUTO = 'auto'
MODES = (EXHAUSTIVE, SAMPLED, AUTO)


class Enumeration(object):
    """How a gcd engine walks its index space: every term, or a seeded
    sample of terms. Sampling always includes index 0 (α = 0) so the
    reported gcd still divides the oracle value at zero.
    """
    __slots__ = ('mode', 'budget', 'seed', 'samples')

    def __init__(self, mode=EXHAUSTIVE, budget=settings.DEFAULT_BUDGET,
                 seed=settings.DEFAULT_SEED, samples=settings.DEFAULT_SAMPLES):
        if mode not in MODES:
            raise CsalabException('unknown enumeration mode %r' % (mode,))
        if budget < 1 or samples < 1:
            raise CsalabException('budget and samples must be positive')
        if settings.GLOBAL_BUDGET is not None and budget > settings.GLOBAL_BUDGET:
            log.debug('budget %d capped by CSALAB_BUDGET=%d',
                      budget, settings.GLOBAL_BUDGET)
            budget = settings.GLOBAL_BUDGET
        self.mode = mode
        self.budget = budget
        self.seed = seed
        self.samples = samples

    @property
    def exhaustive(self):
        return self.mode == EXHAUSTIVE

    def resolve(self, total):
        """The concrete mode used for an index space of `total` terms."""
        if self.mode == AUTO:
            return EXHAUSTIVE if total <= self.budget else SAMPLED
        return self.mode

    def to_dict(self):
        out = {'mode': self.mode, 'budget': self.budget}
        if self.mode != EXHAUSTIVE:
            out['seed'] = self.seed
            out['samples'] = self.samples
        return out

    def __repr__(self):
        return 'Enumeration(%r)' % (self.to_dict(),)


class Configuration(object):
    def __init__(self):
        """
        Modify any of these engine properties
        """
        self.ENUMERATION_BUDGET = settings.DEFAULT_BUDGET  # terms, exhaustive
        self.DEFAULT_SAMPLES = settings.DEFAULT_SAMPLES  # terms, sampled
        self.DEFAULT_SEED = settings.DEFAULT_SEED
        self.CHUNK_SIZE = 4096  # terms per worker task

        # Exhaustive group-table checks are cubic in the order
        self.MAX_GROUP_ORDER = 512
        self.MAX_CONDUCTOR = 10 ** 5

        self.enumeration_mode = EXHAUSTIVE

        # Ledger certificate at every p | N for each divisibility term
        self.certify = True

        self.number_threads = 1
        self.thread_timeout_seconds = 1

    @property
    def enumeration(self):
        return Enumeration(mode=self.enumeration_mode,
                           budget=self.ENUMERATION_BUDGET,
                           seed=self.DEFAULT_SEED,
                           samples=self.DEFAULT_SAMPLES)
