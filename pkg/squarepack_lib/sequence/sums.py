# SPDX-License-Identifier: BSD-2-Clause

import math
import logging
from dataclasses import dataclass

import mpmath

from .. import NonConvergent, EnclosureTooWide
from ..config import Settings
from .families import APFamily, PowerLogFamily, PrimeFamily, TwinPrimeFamily


__all__ = ["SumEnclosure", "tail_enclosure", "tail_sum", "partial_sum", "direct_sum",
           "powerlog_integral"]


logger = logging.getLogger(__name__)


CHUNK = 1 << 20
# partial sums up to this many terms are summed term by term
DIRECT_LIMIT = 10 ** 8
# terms summed one by one in extended precision before falling back to floats
EXTENDED_DIRECT_LIMIT = 1 << 16
EM_DIRECT_TERMS = 16
EM_ORDER = 6
POWERLOG_DIRECT_TERMS = 1 << 16
TABLE_DIRECT_TERMS = 1 << 24
# relative slack for the rounding of a compensated sum of positive terms
ROUNDING = 4 * 2.0 ** -52


@dataclass(frozen=True)
class SumEnclosure:
    lower: float
    upper: float

    @property
    def value(self):
        return 0.5 * (self.lower + self.upper)

    @property
    def width(self):
        return self.upper - self.lower

    @property
    def relative_width(self):
        return self.width / self.value

    def shifted(self, amount):
        return SumEnclosure(self.lower + amount, self.upper + amount)


def _workprec(settings):
    return mpmath.workprec(113 if settings.extended else 64)


def direct_sum(fam, start, stop, s, settings=None):
    """``sum f(n)^-s`` for ``start <= n < stop``, evaluated term by term."""
    settings = settings or Settings()
    if stop <= start:
        return 0.0
    if settings.extended and stop - start <= EXTENDED_DIRECT_LIMIT:
        values = fam.values(start, stop - start)
        with mpmath.workprec(113):
            exponent = -mpmath.mpf(s)
            return float(mpmath.fsum(mpmath.mpf(float(v)) ** exponent for v in values))
    partials = []
    for lo in range(start, stop, CHUNK):
        count = min(CHUNK, stop - lo)
        partials.append(math.fsum((fam.values(lo, count) ** -s).tolist()))
    return math.fsum(partials)


def _ap_euler_maclaurin(fam, start, stop, s, settings):
    """``sum (qn + r)^-s`` for ``start <= n < stop`` (``stop=None`` is infinity).

    Returns the value and a bound on the truncation error. ``g(x) = (qx+r)^-s``
    is completely monotone, so the remainder after the ``B_{2p}`` correction is
    at most ``2 zeta(2p) / (2 pi)^{2p} * |g^{(2p-1)}(K)|``.
    """
    with _workprec(settings):
        q, r, s = mpmath.mpf(fam.q), mpmath.mpf(fam.r), mpmath.mpf(s)

        def g(x):
            return (q * x + r) ** -s

        def odd_derivative(m, x):
            return -mpmath.rf(s, m) * q ** m * (q * x + r) ** (-s - m)

        def antiderivative(x):
            return (q * x + r) ** (1 - s) / (q * (1 - s))

        split = start + EM_DIRECT_TERMS
        if stop is not None and stop <= split:
            return float(mpmath.fsum(g(n) for n in range(start, stop))), 0.0
        total = [g(n) for n in range(start, split)]
        if stop is None:
            total.append(-antiderivative(split))
            total.append(g(split) / 2)
            for j in range(1, EM_ORDER + 1):
                total.append(-mpmath.bernoulli(2 * j) / mpmath.factorial(2 * j) *
                             odd_derivative(2 * j - 1, split))
        else:
            last = stop - 1
            total.append(antiderivative(last) - antiderivative(split))
            total.append((g(split) + g(last)) / 2)
            for j in range(1, EM_ORDER + 1):
                total.append(mpmath.bernoulli(2 * j) / mpmath.factorial(2 * j) *
                             (odd_derivative(2 * j - 1, last) - odd_derivative(2 * j - 1, split)))
        value = mpmath.fsum(total)
        remainder = (2 * mpmath.zeta(2 * EM_ORDER) / (2 * mpmath.pi) ** (2 * EM_ORDER) *
                     abs(odd_derivative(2 * EM_ORDER - 1, split)))
        return float(value), float(remainder)


def powerlog_integral(a, b, s, lower):
    """``integral from lower to infinity of (a x (log x)^b)^-s dx`` via the upper
    incomplete gamma function."""
    log_lower = math.log(lower)
    with mpmath.workprec(64):
        value = (mpmath.mpf(a) ** -s * mpmath.mpf(s - 1) ** (b * s - 1) *
                 mpmath.gammainc(1 - b * s, (s - 1) * log_lower))
    return float(value)


def _ap_tail(fam, n1, s, settings):
    value, remainder = _ap_euler_maclaurin(fam, n1, None, s, settings)
    slack = remainder + ROUNDING * value
    return SumEnclosure(value - slack, value + slack)


def _powerlog_tail(fam, n1, s, settings):
    cutoff = n1 + POWERLOG_DIRECT_TERMS
    if fam.b < 0:
        # f is increasing only where log x > -b
        cutoff = max(cutoff, math.ceil(math.exp(-fam.b)) + 1)
    direct = direct_sum(fam, n1, cutoff, s, settings)
    integral = powerlog_integral(fam.a, fam.b, s, cutoff)
    first = fam.eval_f(cutoff) ** -s
    return SumEnclosure(direct * (1 - ROUNDING) + integral * (1 - 1e-14),
                        direct * (1 + ROUNDING) + (first + integral) * (1 + 1e-14))


def _table_tail(fam, n1, s, settings, direct_terms):
    """Direct sum over the table, then the bracket ``n log n < p_n < n(log n + log log n)``.

    The lower end uses ``log log x / log x <= log log N / log N`` for
    ``x >= N >= 16``. Twin primes are at least the primes of the same index but
    have no usable upper envelope, so their tail is only bounded below by 0.
    """
    cutoff = max(n1, min(fam.index_limit + 1, n1 + direct_terms), 16)
    direct = direct_sum(fam, n1, cutoff, s, settings)
    log_n = math.log(cutoff)
    upper_tail = (cutoff * log_n) ** -s + powerlog_integral(1.0, 1.0, s, cutoff) * (1 + 1e-14)
    if isinstance(fam, TwinPrimeFamily):
        lower_tail = 0.0
    else:
        ratio = math.log(log_n) / log_n
        lower_tail = (1 + ratio) ** -s * powerlog_integral(1.0, 1.0, s, cutoff) * (1 - 1e-14)
    return SumEnclosure(direct * (1 - ROUNDING) + lower_tail,
                        direct * (1 + ROUNDING) + upper_tail)


def tail_enclosure(fam, n1, s, settings=None, direct_terms=TABLE_DIRECT_TERMS):
    """Enclose ``sum_{n >= n1} f(n)^-s``."""
    settings = settings or Settings()
    if s <= 1:
        raise NonConvergent(s)
    if n1 < 1:
        raise ValueError(f"Tail must start at a positive index, not {n1}")
    if isinstance(fam, APFamily):
        enclosure = _ap_tail(fam, n1, s, settings)
    elif isinstance(fam, PowerLogFamily):
        enclosure = _powerlog_tail(fam, n1, s, settings)
    elif isinstance(fam, (PrimeFamily, TwinPrimeFamily)):
        enclosure = _table_tail(fam, n1, s, settings, direct_terms)
    else:
        raise TypeError(f"No tail evaluation for family {fam!r}")
    logger.debug("tail of %s from %d with s=%r: [%r, %r]", fam.spec, n1, s,
                 enclosure.lower, enclosure.upper)
    return enclosure


def tail_sum(fam, n1, s, rtol=None, settings=None):
    enclosure = tail_enclosure(fam, n1, s, settings)
    if rtol is not None and enclosure.relative_width > rtol:
        raise EnclosureTooWide(enclosure.relative_width, rtol)
    return enclosure.value


def partial_sum(fam, n1, s, settings=None):
    """``sum_{n < n1} f(n)^-s`` for ``0 < s < 1``.

    Summed term by term below ``DIRECT_LIMIT`` terms; longer arithmetic
    progressions use Euler-Maclaurin.
    """
    settings = settings or Settings()
    if not 0 < s < 1:
        raise ValueError(f"Partial sums take an exponent in (0, 1), not {s!r}")
    if n1 - 1 > DIRECT_LIMIT and isinstance(fam, APFamily):
        value, _ = _ap_euler_maclaurin(fam, 1, n1, s, settings)
        return value
    return direct_sum(fam, 1, n1, s, settings)
