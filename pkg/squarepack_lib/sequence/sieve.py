# SPDX-License-Identifier: BSD-2-Clause

import math
import logging

import numpy as np

from .. import LimitTooLarge
from ..config import Settings


__all__ = ["enumerate_primes", "enumerate_twin_primes", "prime_limit_for_index",
           "twin_prime_constant", "twin_prime_product", "TWIN_PRIME_CONSTANT"]


logger = logging.getLogger(__name__)


TWIN_PRIME_CONSTANT = 0.66016181584686957


def _simple_sieve(limit):
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def enumerate_primes(limit, settings=None):
    """All primes ``<= limit`` in increasing order.

    Odd-only segmented sieve: base primes up to ``isqrt(limit)`` are sieved
    once, then each segment of ``settings.segment_size`` odd numbers is struck
    out with strided numpy assignments.
    """
    settings = settings or Settings()
    limit = int(limit)
    if limit > settings.sieve_limit:
        raise LimitTooLarge(limit, settings.sieve_limit)
    if limit < 2:
        return np.array([], dtype=np.int64)

    base = _simple_sieve(math.isqrt(limit))
    odd_base = base[1:]
    chunks = [np.array([2], dtype=np.int64)]

    span = 2 * settings.segment_size
    low = 3
    segment = 0
    while low <= limit:
        high = min(low + span, limit + 1)  # exclusive
        mask = np.ones((high - low + 1) // 2, dtype=bool)
        for p in odd_base:
            p = int(p)
            p2 = p * p
            if p2 >= high:
                break
            start = max(p2, ((low + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start >= high:
                continue
            mask[(start - low) // 2::p] = False
        chunks.append(low + 2 * np.flatnonzero(mask).astype(np.int64))
        low = high if high % 2 == 1 else high + 1
        segment += 1
        if segment % 64 == 0:
            logger.info("sieved %d segments, up to %d of %d", segment, high - 1, limit)

    primes = np.concatenate(chunks)
    logger.debug("enumerated %d primes up to %d", len(primes), limit)
    return primes


def enumerate_twin_primes(limit, settings=None):
    """Primes ``p <= limit`` such that ``p - 2`` or ``p + 2`` is also prime."""
    limit = int(limit)
    if limit < 3:
        return np.array([], dtype=np.int64)
    primes = enumerate_primes(limit + 2, settings)
    gaps = np.diff(primes)
    twin = np.zeros(len(primes), dtype=bool)
    twin[:-1] |= gaps == 2
    twin[1:] |= gaps == 2
    twins = primes[twin]
    return twins[twins <= limit]


def prime_limit_for_index(n):
    """A sieve limit guaranteed to contain ``p_n``.

    Uses ``p_n < n(log n + log log n)`` for ``n >= 6``.
    """
    n = int(n)
    if n < 6:
        return 13
    return int(math.ceil(n * (math.log(n) + math.log(math.log(n))))) + 1


def twin_prime_constant(limit, settings=None):
    """Partial product of ``1 - (p - 1)^-2`` over primes ``3 <= p <= limit``."""
    return twin_prime_product(enumerate_primes(limit, settings))


def twin_prime_product(primes):
    odd = primes[primes >= 3].astype(np.float64)
    return math.exp(math.fsum(np.log1p(-1.0 / (odd - 1.0) ** 2).tolist()))
