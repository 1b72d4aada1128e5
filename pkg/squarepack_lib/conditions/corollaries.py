# SPDX-License-Identifier: BSD-2-Clause

import math
from dataclasses import dataclass, field

from ..tables import format_table
from .logspace import LogNumber, log_max
from .profiles import ap_profile, prime_profile, m_lower_bound


__all__ = ["BoundTerm", "CorollaryBounds", "corollary31_bounds", "corollary46_bounds",
           "asymptotic_ap_bound", "TABLE1", "DEFAULT_THETA"]


# log10 of the smallest admissible N0 for f(n) = n, as published
TABLE1 = {0.55: 35, 0.6: 38, 0.7: 50, 0.8: 114, 0.9: 563, 0.95: 2673, 0.99: 92863,
          0.999: 13216295}

DEFAULT_THETA = 0.525


@dataclass
class BoundTerm:
    label: str
    value: LogNumber

    def as_dict(self):
        return {"label": self.label, "log10": _log10(self.value), "value": str(self.value)}


@dataclass
class CorollaryBounds:
    """Lower bounds for ``M`` and ``N0``, with every term of both maxima."""
    name: str
    t: float
    M_terms: list
    M_min: LogNumber
    N0_terms: list
    N0_min: LogNumber = field(init=False)

    def __post_init__(self):
        self.N0_min = log_max(*(term.value for term in self.N0_terms))

    @property
    def dominant(self):
        return max(self.N0_terms, key=lambda term: term.value.ln).label

    @property
    def M_min_int(self):
        return self.M_min.ceil_int()

    @property
    def log10_N0(self):
        return self.N0_min.log10

    def as_dict(self):
        return {
            "corollary": self.name,
            "t": self.t,
            "M_min": str(self.M_min) if self.M_min_int is None else self.M_min_int,
            "log10_M_min": self.M_min.log10,
            "log10_N0_min": self.log10_N0,
            "ceil_log10_N0_min": self.N0_min.ceil_log10(),
            "dominant": self.dominant,
            "M_terms": [term.as_dict() for term in self.M_terms],
            "N0_terms": [term.as_dict() for term in self.N0_terms],
        }

    def as_table(self):
        rows = [["M", term.label, str(term.value), _format_log10(term.value)]
                for term in self.M_terms]
        rows += [["N0", term.label, str(term.value), _format_log10(term.value)]
                 for term in self.N0_terms]
        return (f"{self.name} at t={self.t!r}: M_min = {self.M_min}, "
                f"log10 N0_min = {self.log10_N0:.3f} (dominant: {self.dominant})\n" +
                format_table(["bound", "term", "value", "log10"], rows))


def _log10(value):
    return None if value.ln == -math.inf else value.log10


def _format_log10(value):
    log10 = _log10(value)
    return "-inf" if log10 is None else f"{log10:.3f}"


def _ceil_M(value):
    ceiled = value.ceil_int()
    return value if ceiled is None else LogNumber.of(ceiled)


def _log_minus(ln_a, b):
    """``log(e^{ln_a} - b)`` for ``e^{ln_a} > b > 0``."""
    return ln_a + math.log1p(-b * math.exp(-ln_a))


def corollary31_bounds(q, r, t):
    """Admissible ``M`` and ``N0`` for sides ``(qn + r)^-t``."""
    profile = ap_profile(q, r, t)
    delta = 1 - t
    u = (1 - t) ** 2
    ln_q, ln_qr = math.log(q), math.log(q + r)

    M_terms = [
        BoundTerm("4^(1/(1-t)) (2(2t-1)/(1-t)^2)^(2/(t(1-t)))",
                  LogNumber(math.log(4) / (1 - t) +
                            2 / (t * (1 - t)) * math.log(2 * (2 * t - 1) / u))),
        BoundTerm("(50 (11/10)^(t(2-t)))^(2/(1-t))",
                  LogNumber(2 / (1 - t) * (math.log(50) + t * (2 - t) * math.log(1.1)))),
    ]
    M_min = _ceil_M(log_max(*(term.value for term in M_terms)))
    assert abs(m_lower_bound(profile).ln - log_max(*(term.value for term in M_terms)).ln) < 1e-9
    ln_M = M_min.ln

    if r > 0:
        denominator = _log_minus(math.log(264) / t + 2 * ln_M / t, 2)
        second = LogNumber(math.log(2 * r) - ln_q - denominator)
    else:
        second = LogNumber(-math.inf)

    N0_terms = [
        BoundTerm("4752 M^4", LogNumber(math.log(4752) + 4 * ln_M)),
        BoundTerm("2r / (q((264 M^2)^(1/t) - 2))", second),
        BoundTerm("(10 q (2q)^t M)^(1/(1-t))",
                  LogNumber((math.log(10) + ln_q + t * math.log(2 * q) + ln_M) / (1 - t))),
        BoundTerm("2^(1/(1-t)^2) (q+r)/q",
                  LogNumber(math.log(2) / u + ln_qr - ln_q)),
        BoundTerm("q^-1 (q(1-t)^2 / (q+r)^(t+dt))^(1/(1-t)^2)",
                  LogNumber(-ln_q + (ln_q + math.log(u) - (t + delta * t) * ln_qr) / u)),
        BoundTerm("1 / (1 - 2^(-1/(2t-1)))",
                  LogNumber(-math.log1p(-2 ** (-1 / (2 * t - 1))))),
        BoundTerm("q^-1 (2q(1-t)^2)^(2/(1-d)) (2/(q(2t-1)))^((1+d)/(1-d)) M^((2-d)/(1-d))",
                  LogNumber(-ln_q + 2 / (1 - delta) * math.log(2 * q * u) +
                            (1 + delta) / (1 - delta) * math.log(2 / (q * (2 * t - 1))) +
                            (2 - delta) / (1 - delta) * ln_M)),
        BoundTerm("q^-1 (2/(q(2t-1)))^(1/(2t-1))",
                  LogNumber(-ln_q + math.log(2 / (q * (2 * t - 1))) / (2 * t - 1))),
    ]
    return CorollaryBounds("arithmetic progression", t, M_terms, M_min, N0_terms)


def corollary46_bounds(t, theta=DEFAULT_THETA, N_theta=None):
    """Admissible ``M`` and ``N0`` for sides ``p_n^-t``.

    ``N_theta`` is the index past which prime gaps stay below ``p_n^theta``;
    it is not known effectively, so the term is left out when not supplied.
    """
    if not 0 < theta < 1:
        raise ValueError(f"Gap exponent theta must lie in (0, 1), not {theta!r}")
    profile = prime_profile(t)
    u = (1 - t) ** 2
    ratio = (20 * 2 ** (6 * t - t * t) * (2 * t - 1) /
             (3 * u * (1 - 2 ** (1 - 2 * t))))
    M_terms = [
        BoundTerm("4^(1/(1-t)) (20 2^(6t-t^2)(2t-1) / (3(1-t)^2(1-2^(1-2t))))^(2/(t(1-t)))",
                  LogNumber(math.log(4) / (1 - t) + 2 / (t * (1 - t)) * math.log(ratio))),
        BoundTerm("(50 (6/5)^(t(2-t)))^(2/(1-t))",
                  LogNumber(2 / (1 - t) * (math.log(50) + t * (2 - t) * math.log(1.2)))),
    ]
    M_min = _ceil_M(log_max(*(term.value for term in M_terms)))
    assert abs(m_lower_bound(profile).ln - log_max(*(term.value for term in M_terms)).ln) < 1e-9
    ln_M = M_min.ln

    N0_terms = []
    if N_theta is not None:
        N0_terms.append(BoundTerm(f"N_theta (theta={theta!r})", LogNumber.of(N_theta)))
    N0_terms += [
        BoundTerm("85536 M^5", LogNumber(math.log(85536) + 5 * ln_M)),
        BoundTerm("3e18", LogNumber.of(3e18)),
        BoundTerm("2 e^(16/(1-t)^4)", LogNumber(math.log(2) + 16 / u ** 2)),
        BoundTerm("1 / (1 - 2^(-1/(2t-1)))",
                  LogNumber(-math.log1p(-2 ** (-1 / (2 * t - 1))))),
        BoundTerm("M^(1/(1-t)^2)", LogNumber(ln_M / u)),
        BoundTerm("(40/7 (1-t)^2)^(2/t) (2^(1+2t)/(2t-1))^((2-t)/t) M^((1+t)/t)",
                  LogNumber(2 / t * math.log(40 / 7 * u) +
                            (2 - t) / t * math.log(2 ** (1 + 2 * t) / (2 * t - 1)) +
                            (1 + t) / t * ln_M)),
        BoundTerm("e^(1/((2t-1)(1-t)))", LogNumber(1 / ((2 * t - 1) * (1 - t)))),
    ]
    return CorollaryBounds("primes", t, M_terms, M_min, N0_terms)


def asymptotic_ap_bound(t):
    """Sufficient ``N0`` for ``f(n) = n`` as ``t`` approaches 1, and its rough form.

    Returns ``(bound, rough)`` with ``bound = 4^{1/(1-t)^2} (2^t 10)^{1/(1-t)}
    (2(2t-1)/(1-t)^2)^{2/(t(1-t)^2)}`` and ``rough = (3/(1-t)^2)^{3/(1-t)^2}``.
    """
    u = (1 - t) ** 2
    bound = LogNumber(math.log(4) / u + (t * math.log(2) + math.log(10)) / (1 - t) +
                      2 / (t * u) * math.log(2 * (2 * t - 1) / u))
    rough = LogNumber(3 / u * math.log(3 / u))
    return bound, rough
