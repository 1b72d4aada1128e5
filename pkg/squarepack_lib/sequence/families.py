# SPDX-License-Identifier: BSD-2-Clause

import math
import logging

import numpy as np

from .. import UsageError, IndexBeyondSieve, ContractViolation
from .bump import bump, BUMP_DERIVATIVE_BOUND
from .sieve import (enumerate_primes, enumerate_twin_primes, prime_limit_for_index,
                    TWIN_PRIME_CONSTANT)


__all__ = ["SidelengthFamily", "APFamily", "PrimeFamily", "TwinPrimeFamily", "PowerLogFamily",
           "parse_family"]


logger = logging.getLogger(__name__)


class SidelengthFamily:
    """An increasing sequence ``f(n)``; the square with index ``n`` has side ``f(n)^-t``.

    Subclasses implement ``_values`` (vectorised integer evaluation),
    :meth:`eval_smooth` and :meth:`max_derivative`. Everything else is
    derived from those.
    """

    kind = None
    # smallest index at which a run may start
    min_index = 2
    # None when the family is unbounded, otherwise the largest evaluable index
    index_limit = None
    strictly_increasing = True

    def __init__(self, spec):
        self.spec = spec

    def __repr__(self):
        return f"<{type(self).__name__} {self.spec}>"

    def _values(self, start, count):
        raise NotImplementedError

    def values(self, start, count):
        start, count = int(start), int(count)
        if start < 1:
            raise ValueError(f"Family index must be positive, not {start}")
        values = self._values(start, count)
        if self.strictly_increasing and count > 1 and start >= 2:
            if not np.all(np.diff(values) > 0):
                raise ContractViolation(f"Family `{self.spec}` is not strictly increasing on "
                                        f"[{start}, {start + count})")
        return values

    def eval_f(self, n):
        return float(self.values(n, 1)[0])

    def sides(self, start, count, t):
        return self.values(start, count) ** -t

    def side(self, n, t):
        return float(self.sides(n, 1, t)[0])

    def eval_smooth(self, x):
        raise NotImplementedError

    def max_derivative(self, lo, hi):
        raise NotImplementedError


class APFamily(SidelengthFamily):
    kind = "ap"

    def __init__(self, q, r, spec=None):
        q, r = float(q), float(r)
        if not (q > 0 and r >= 0 and q > r):
            raise ValueError(f"Arithmetic progression needs q > r >= 0, got q={q!r}, r={r!r}")
        super().__init__(spec or f"ap:q={q!r},r={r!r}")
        self.q = q
        self.r = r

    def _values(self, start, count):
        return self.q * np.arange(start, start + count, dtype=np.float64) + self.r

    def eval_smooth(self, x):
        return self.q * x + self.r

    def max_derivative(self, lo, hi):
        return self.q


class PowerLogFamily(SidelengthFamily):
    """``f(x) = a x (log x)^b``."""

    kind = "powerlog"
    min_index = 3

    def __init__(self, a, b, spec=None):
        a, b = float(a), float(b)
        if not a > 0:
            raise ValueError(f"Power-log family needs a > 0, got a={a!r}")
        super().__init__(spec or f"powerlog:a={a!r},b={b!r}")
        self.a = a
        self.b = b

    def _values(self, start, count):
        n = np.arange(start, start + count, dtype=np.float64)
        return self.a * n * np.log(n) ** self.b

    def eval_smooth(self, x):
        return self.a * x * math.log(x) ** self.b

    def derivative(self, x):
        log_x = math.log(x)
        return self.a * log_x ** (self.b - 1) * (log_x + self.b)

    def max_derivative(self, lo, hi):
        if self.b == 0:
            return self.a
        candidates = [self.derivative(lo), self.derivative(hi)]
        # f'' vanishes where log x = 1 - b
        critical = math.exp(1.0 - self.b)
        if lo < critical < hi:
            candidates.append(self.derivative(critical))
        return max(candidates)


class _TabulatedFamily(SidelengthFamily):
    min_index = 2

    def __init__(self, table, spec):
        super().__init__(spec)
        table = np.asarray(table, dtype=np.int64)
        if len(table) > 1 and not np.all(np.diff(table) > 0):
            raise ContractViolation(f"Table for `{spec}` is not strictly increasing")
        self.table = table
        self.index_limit = len(table)

    def _check(self, last):
        if last > len(self.table):
            raise IndexBeyondSieve(last, len(self.table))

    def _values(self, start, count):
        self._check(start + count - 1)
        return self.table[start - 1:start - 1 + count].astype(np.float64)

    def eval_smooth(self, x):
        if x < 1:
            raise ValueError(f"Smooth extension is defined for x >= 1, not {x!r}")
        n = math.floor(x)
        if x == n:
            return self.eval_f(n)
        p_n, p_next = self.values(n, 2)
        return float(p_n + bump(x - (n + 0.5)) * (p_next - p_n))

    def gaps(self, lo_index, hi_index):
        """Gaps ``f(n+1) - f(n)`` for ``lo_index <= n <= hi_index``."""
        return np.diff(self.values(lo_index, hi_index - lo_index + 2))

    def max_derivative(self, lo, hi):
        first = max(1, math.floor(lo))
        last = max(first, math.ceil(hi) - 1)
        return float(BUMP_DERIVATIVE_BOUND * self.gaps(first, last).max())


class PrimeFamily(_TabulatedFamily):
    """``f(n) = p_n``, smoothly extended with the bump between consecutive primes."""

    kind = "prime"

    def __init__(self, table, spec="prime"):
        super().__init__(table, spec)

    @classmethod
    def build(cls, index_limit, settings=None, spec="prime"):
        limit = prime_limit_for_index(index_limit)
        logger.info("sieving primes up to %d for indices up to %d", limit, index_limit)
        return cls(enumerate_primes(limit, settings), spec)


class TwinPrimeFamily(_TabulatedFamily):
    """Twin primes ``3, 5, 7, 11, 13, ...`` as the side source.

    The target square is sized with :meth:`envelope`, the family
    ``x (log x)^2 / (C' Pi_2)`` which bounds the twin primes from below past
    :meth:`envelope_threshold`.
    """

    kind = "twinprime"
    min_index = 3
    # best known upper bound for the constant in the twin prime counting bound
    KNOWN_CONSTANT_BOUND = 6.8325

    def __init__(self, table, cprime, spec=None):
        cprime = float(cprime)
        if not cprime > 0:
            raise ValueError(f"Twin prime family needs C' > 0, got {cprime!r}")
        super().__init__(table, spec or f"twinprime:cprime={cprime!r}")
        self.cprime = cprime
        if cprime <= self.KNOWN_CONSTANT_BOUND:
            logger.warning("C' = %r does not exceed the known bound %r; the envelope is only "
                           "checked on the enumerated range", cprime, self.KNOWN_CONSTANT_BOUND)

    @classmethod
    def build(cls, index_limit, cprime, settings=None, spec=None):
        n = max(int(index_limit), 16)
        limit = int(1.5 * n * math.log(n) ** 2) + 100
        while True:
            twins = enumerate_twin_primes(limit, settings)
            if len(twins) >= index_limit:
                break
            logger.info("twin prime table holds %d of %d entries; doubling limit %d",
                        len(twins), index_limit, limit)
            limit *= 2
        return cls(twins, cprime, spec)

    def envelope(self):
        return PowerLogFamily(1.0 / (self.cprime * TWIN_PRIME_CONSTANT), 2.0)

    def envelope_threshold(self):
        """Smallest ``N >= 3`` with ``f(n) >= envelope(n)`` for every enumerated ``n >= N``."""
        count = len(self.table)
        if count < 3:
            raise IndexBeyondSieve(3, count)
        env = self.envelope().values(3, count - 2)
        below = np.flatnonzero(self.table[2:].astype(np.float64) < env)
        if len(below) == 0:
            return 3
        return int(below[-1]) + 4


def _parse_arguments(spec, text, names):
    values = {}
    for item in filter(None, text.split(",")):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in names:
            raise UsageError(f"Family specifier `{spec}`: unexpected argument `{item}`; "
                             f"expected {', '.join(names)}")
        try:
            values[key] = float(value)
        except ValueError:
            raise UsageError(f"Family specifier `{spec}`: `{key}` must be a number, "
                             f"not `{value}`")
    missing = [name for name in names if name not in values]
    if missing:
        raise UsageError(f"Family specifier `{spec}` is missing {', '.join(missing)}")
    return values


def parse_family(spec, index_limit=None, settings=None):
    """Build a family from ``ap:q=..,r=..``, ``prime``, ``twinprime:cprime=..`` or
    ``powerlog:a=..,b=..``.

    Tabulated families (``prime``, ``twinprime``) are enumerated up to
    ``index_limit``.
    """
    name, _, arguments = spec.partition(":")
    try:
        if name == "ap":
            values = _parse_arguments(spec, arguments, ("q", "r"))
            return APFamily(values["q"], values["r"], spec)
        if name == "powerlog":
            values = _parse_arguments(spec, arguments, ("a", "b"))
            return PowerLogFamily(values["a"], values["b"], spec)
        if name in ("prime", "twinprime"):
            if index_limit is None:
                raise UsageError(f"Family `{spec}` needs an index limit to enumerate")
            if name == "prime":
                if arguments:
                    raise UsageError(f"Family specifier `{spec}`: `prime` takes no arguments")
                return PrimeFamily.build(index_limit, settings, spec)
            values = _parse_arguments(spec, arguments, ("cprime",))
            return TwinPrimeFamily.build(index_limit, values["cprime"], settings, spec)
    except ValueError as e:
        raise UsageError(str(e))
    raise UsageError(f"Unknown family `{name}` in specifier `{spec}`; "
                     f"expected one of ap, prime, twinprime, powerlog")
