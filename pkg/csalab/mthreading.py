# -*- coding: utf-8 -*-
"""
Anything that has to do with threading in this library
must be abstracted in this file. Enumerations are cut into chunks of
indices, every chunk is folded to a `ChunkResult` by a worker, and the
chunk results are merged in index order.
"""
__title__ = 'csalab'
__license__ = 'MIT'

import logging
import queue
import threading
from math import gcd
from threading import Thread

from .configuration import Configuration
from .utils import ConsistencyException, CsalabException

log = logging.getLogger(__name__)


class ConcurrencyException(CsalabException):
    pass


class ChunkResult(object):
    """gcd fold of a run of terms, plus the smallest term and the first
    index attaining it. When the smallest term equals the gcd it is the
    witness; merging keeps that property, so the witness does not depend
    on how the index range was cut.
    """
    __slots__ = ('gcd', 'min_value', 'min_index', 'count')

    def __init__(self):
        self.gcd = 0
        self.min_value = None
        self.min_index = None
        self.count = 0

    def add(self, index, value):
        if value < 1:
            raise ConsistencyException(
                'term %d evaluated to non-positive value %r' % (index, value))
        self.gcd = gcd(self.gcd, value)
        if self.min_value is None or value < self.min_value or \
                (value == self.min_value and index < self.min_index):
            self.min_value = value
            self.min_index = index
        self.count += 1

    def merge(self, other):
        if other.count == 0:
            return self
        self.gcd = gcd(self.gcd, other.gcd)
        if self.min_value is None or other.min_value < self.min_value or \
                (other.min_value == self.min_value and
                 other.min_index < self.min_index):
            self.min_value = other.min_value
            self.min_index = other.min_index
        self.count += other.count
        return self

    @property
    def witness(self):
        if self.count and self.min_value == self.gcd:
            return self.min_index
        return None


def fold_terms(indices, term):
    result = ChunkResult()
    for index in indices:
        result.add(index, term(index))
    return result


class Worker(Thread):
    """
    Thread executing tasks from a given tasks queue.
    """
    def __init__(self, pool, timeout_seconds):
        Thread.__init__(self)
        self.pool = pool
        self.tasks = pool.tasks
        self.timeout = timeout_seconds
        self.daemon = True
        self.start()

    def run(self):
        while True:
            try:
                ordinal, func, args, kargs = self.tasks.get(timeout=self.timeout)
            except queue.Empty:
                # Extra thread allocated, no job, exit gracefully
                break
            try:
                func(*args, **kargs)
            except Exception as exc:
                self.pool.record_failure(ordinal, exc)

            self.tasks.task_done()


class ThreadPool:
    def __init__(self, num_threads, timeout_seconds):
        self.tasks = queue.Queue(num_threads)
        self.failures = {}
        self._lock = threading.Lock()
        self._ordinal = 0
        for _ in range(num_threads):
            Worker(self, timeout_seconds)

    def add_task(self, func, *args, **kargs):
        self.tasks.put((self._ordinal, func, args, kargs))
        self._ordinal += 1

    def record_failure(self, ordinal, exc):
        with self._lock:
            self.failures[ordinal] = exc

    def wait_completion(self):
        """Blocks until every task ran; re-raises the failure of the
        earliest failing task, if any.
        """
        self.tasks.join()
        if self.failures:
            first = min(self.failures)
            raise self.failures[first]


class EnumerationPool(object):

    def __init__(self, config=None):
        """
        Abstraction of a threadpool for gcd folds. Chunks of indices are
        handed to `number_threads` workers; with a single thread the
        chunks are folded in place, without any pool.

        >>> pool = EnumerationPool()
        >>> result = pool.fold([range(0, 3), range(3, 6)], lambda i: 2 * i + 2)
        >>> result.gcd, result.witness
        (2, 0)
        """
        self.config = config or Configuration()

    def fold(self, chunks, term):
        chunks = list(chunks)
        num_threads = max(1, int(self.config.number_threads))
        if num_threads == 1 or len(chunks) < 2:
            total = ChunkResult()
            for chunk in chunks:
                total.merge(fold_terms(chunk, term))
            return total

        log.debug('folding %d chunks on %d threads', len(chunks), num_threads)
        results = [None] * len(chunks)

        def run_chunk(slot, chunk):
            results[slot] = fold_terms(chunk, term)

        pool = ThreadPool(min(num_threads, len(chunks)),
                          self.config.thread_timeout_seconds)
        for slot, chunk in enumerate(chunks):
            pool.add_task(run_chunk, slot, chunk)
        pool.wait_completion()

        total = ChunkResult()
        for result in results:
            if result is None:
                raise ConcurrencyException('a chunk finished without a result')
            total.merge(result)
        return total


def chunked(indices, size):
    """Cuts a range or a list of indices into consecutive pieces."""
    if size < 1:
        raise ConcurrencyException('chunk size must be positive')
    if isinstance(indices, range):
        start, stop = indices.start, indices.stop
        return [range(lo, min(lo + size, stop)) for lo in range(start, stop, size)]
    indices = list(indices)
    return [indices[lo:lo + size] for lo in range(0, len(indices), size)]
