# SPDX-License-Identifier: BSD-2-Clause

import math
import logging
from dataclasses import dataclass, field

import numpy as np

from ..sequence import (PrimeFamily, tail_enclosure, bump_derivative, BUMP_DERIVATIVE_BOUND,
                        twin_prime_product, TWIN_PRIME_CONSTANT)
from ..tables import format_table


__all__ = ["LemmaCheck", "LemmaReport", "check_prime_sum_lemmas", "prime_bound_exceptions",
           "empirical_gap_threshold", "bump_derivative_maximum"]


logger = logging.getLogger(__name__)


@dataclass
class LemmaCheck:
    """One inequality chain at one sample point.

    ``values`` lists the links of the chain in the order they are compared;
    ``guaranteed`` says whether the sample lies in the range where the
    inequality is proven, so a failure outside it is expected.
    """
    name: str
    t: float
    x: int
    holds: bool
    guaranteed: bool
    values: dict

    def as_dict(self):
        return {"name": self.name, "t": self.t, "x": self.x, "holds": self.holds,
                "guaranteed": self.guaranteed, "values": self.values}


@dataclass
class LemmaReport:
    checks: list = field(default_factory=list)
    facts: dict = field(default_factory=dict)

    @property
    def unconditional_ok(self):
        """All checks that are proven at every sampled point hold."""
        return all(check.holds for check in self.checks if check.guaranteed)

    def find(self, name, t=None, x=None):
        return [check for check in self.checks
                if check.name == name and (t is None or check.t == t) and
                (x is None or check.x == x)]

    def as_dict(self):
        return {"unconditional_ok": self.unconditional_ok, "facts": self.facts,
                "checks": [check.as_dict() for check in self.checks]}

    def as_table(self):
        rows = [[check.name, "-" if check.t is None else f"{check.t:g}", check.x,
                 "yes" if check.holds else "NO", "yes" if check.guaranteed else "no",
                 ", ".join(f"{key}={value:.6g}" for key, value in check.values.items())]
                for check in self.checks]
        facts = "\n".join(f"{key}: {value}" for key, value in self.facts.items())
        return (facts + "\n" +
                format_table(["check", "t", "x", "holds", "proven here", "values"], rows))


def _fsum(array):
    return math.fsum(np.asarray(array, dtype=np.float64).tolist())


def _power_sum(lo, hi, t):
    """``sum n^-t`` for integers ``lo <= n <= hi``."""
    if hi < lo:
        return 0.0
    return _fsum(np.arange(lo, hi + 1, dtype=np.float64) ** -t)


def prime_bound_exceptions(primes):
    """Indices violating ``p_n > n log n`` (any n) or ``p_n < n(log n + log log n)`` (n >= 6)."""
    n = np.arange(1, len(primes) + 1, dtype=np.float64)
    p = primes.astype(np.float64)
    log_n = np.log(n)
    lower = np.flatnonzero(~(p > n * log_n)) + 1
    upper_mask = np.zeros(len(primes), dtype=bool)
    if len(primes) >= 6:
        tail = slice(5, None)
        upper_mask[tail] = ~(p[tail] < n[tail] * (log_n[tail] + np.log(log_n[tail])))
    upper = np.flatnonzero(upper_mask) + 1
    return lower.tolist(), upper.tolist()


def empirical_gap_threshold(primes, theta):
    """One past the last index ``n`` in the table with ``p_{n+1} - p_n > p_n^theta``."""
    p = primes.astype(np.float64)
    violating = np.flatnonzero(np.diff(p) > p[:-1] ** theta)
    return 1 if len(violating) == 0 else int(violating[-1]) + 2


def bump_derivative_maximum(points=100_001):
    grid = np.linspace(-1 / 6, 1 / 6, points)
    return float(np.max(bump_derivative(grid)))


def check_prime_sum_lemmas(t_values, x_values, fam=None, settings=None, theta=0.525):
    """Evaluate the prime power-sum inequalities at every ``(t, x)`` by direct summation.

    The decomposition chain for ``sum_{n <= x} p_n^-t`` from above and the
    chain from below (``x >= 6``) hold at every ``x``; the closed-form lemma
    conclusions are only proven for enormous ``x`` and are reported with
    ``guaranteed`` set accordingly.
    """
    x_max = max(x_values)
    if fam is None:
        fam = PrimeFamily.build(x_max + 1, settings)
    primes = fam.table
    report = LemmaReport()

    lower, upper = prime_bound_exceptions(primes[:x_max])
    report.facts["p_n > n log n exceptions"] = len(lower)
    report.facts["p_n < n(log n + log log n) exceptions (n >= 6)"] = len(upper)
    report.facts["1/(1 + log log 6/log 6)"] = 1 / (1 + math.log(math.log(6)) / math.log(6))
    report.facts["max bump derivative (grid)"] = bump_derivative_maximum()
    report.facts["bump derivative constant"] = BUMP_DERIVATIVE_BOUND
    report.facts[f"empirical N_theta (theta={theta})"] = empirical_gap_threshold(primes, theta)
    report.facts["twin prime constant (partial product)"] = twin_prime_product(primes[:x_max])
    report.facts["twin prime constant"] = TWIN_PRIME_CONSTANT

    sides = primes.astype(np.float64)
    for t in t_values:
        terms = sides[:x_max] ** -t
        # log of the point past which the closed-form bounds are proven
        log_threshold = 16 / (1 - t) ** 2
        for x in x_values:
            report.checks += _checks_at(fam, terms, t, x, log_threshold, settings)
    logger.info("evaluated %d lemma checks", len(report.checks))
    return report


def _checks_at(fam, terms, t, x, log_threshold, settings):
    checks = []
    log_x = math.log(x)
    total = _fsum(terms[:x])
    scale = x ** (1 - t) / ((1 - t) * log_x ** t)

    split = math.floor(x ** 0.75)
    first = (2 ** -t + math.log(2) ** -t * _power_sum(2, split, t) +
             (4 / 3) ** t * log_x ** -t * _power_sum(split + 1, x, t))
    closed = (2 ** -t + x ** (0.75 * (1 - t)) / ((1 - t) * math.log(2) ** t) +
              (4 / 3) ** t * scale)
    checks.append(LemmaCheck("upper chain", t, x, total <= first <= closed, True,
                             {"sum": total, "split bound": first, "closed form": closed}))

    if x >= 6:
        n = np.arange(6, x + 1, dtype=np.float64)
        weighted = 0.7 * _fsum((n * np.log(n)) ** -t)
        flat = 0.7 * log_x ** -t * _power_sum(6, x, t)
        closed = 7 * (x ** (1 - t) - 6 ** (1 - t)) / (10 * (1 - t) * log_x ** t)
        checks.append(LemmaCheck("lower chain", t, x, total > weighted >= flat >= closed, True,
                                 {"sum": total, "n log n bound": weighted, "log x bound": flat,
                                  "closed form": closed}))

    checks.append(LemmaCheck("sum bounds at x", t, x,
                             7 / 20 * scale < total < 10 / 3 * scale, log_x >= log_threshold,
                             {"lower": 7 / 20 * scale, "sum": total, "upper": 10 / 3 * scale}))

    shifted = _fsum(terms[:x - 1])
    checks.append(LemmaCheck("sum bounds below x", t, x,
                             7 / 40 * scale < shifted < 20 / 3 * scale,
                             log_x - math.log(2) >= log_threshold,
                             {"lower": 7 / 40 * scale, "sum": shifted, "upper": 20 / 3 * scale}))

    p_x = float(fam.eval_f(x))
    checks.append(LemmaCheck("index-form partial bounds", t, x,
                             7 / 40 * x / ((1 - t) * p_x ** t) < shifted <
                             20 / 3 * 2 ** t * x / ((1 - t) * p_x ** t),
                             log_x - math.log(2) >= log_threshold,
                             {"lower": 7 / 40 * x / ((1 - t) * p_x ** t), "sum": shifted,
                              "upper": 20 / 3 * 2 ** t * x / ((1 - t) * p_x ** t)}))

    s = 2 * t
    enclosure = tail_enclosure(fam, x, s, settings)
    tail_lower = (1 - 2 ** (1 - s)) * x ** (1 - s) / (2 ** (2 * s) * (s - 1) * log_x ** s)
    tail_upper = 2 * x ** (1 - s) / ((s - 1) * log_x ** s)
    in_range = x >= max(6, 1 / (1 - 2 ** (-1 / (s - 1))))
    checks.append(LemmaCheck("tail bounds", s, x,
                             tail_lower <= enclosure.lower and enclosure.upper <= tail_upper,
                             in_range,
                             {"lower": tail_lower, "tail lower": enclosure.lower,
                              "tail upper": enclosure.upper, "upper": tail_upper}))
    index_lower = (1 - 2 ** (1 - s)) * x / (2 ** (2 * s) * (s - 1) * p_x ** s)
    index_upper = 2 ** (1 + s) * x / ((s - 1) * p_x ** s)
    checks.append(LemmaCheck("index-form tail bounds", s, x,
                             index_lower < enclosure.lower and enclosure.upper < index_upper,
                             in_range,
                             {"lower": index_lower, "tail lower": enclosure.lower,
                              "tail upper": enclosure.upper, "upper": index_upper}))
    return checks
