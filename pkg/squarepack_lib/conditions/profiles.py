# SPDX-License-Identifier: BSD-2-Clause

import math
from dataclasses import dataclass
from typing import Callable

from .logspace import LogNumber, log_max


__all__ = ["BoundProfile", "ap_profile", "prime_profile", "m_lower_bound"]


def _identity(n):
    return n


@dataclass(frozen=True)
class BoundProfile:
    """Constants instantiating the packing theorem for one family at one exponent ``t``.

    The partial sums of ``f^{-t-delta t}`` are bracketed by
    ``c_i xi_i nu_i(n) / f(n)^{t+delta t}`` and the tails of ``f^{-2t}`` by
    ``d_i eta_i lambda_i(n) / f(n)^{2t}``.
    """
    name: str
    t: float
    c1: float
    c2: float
    d1: float
    d2: float
    xi1: float
    xi2: float
    eta1: float
    eta2: float
    c_lambda_nu: float
    K: float
    l: float
    nu1: Callable = _identity
    nu2: Callable = _identity
    lambda1: Callable = _identity
    lambda2: Callable = _identity

    def __post_init__(self):
        if not 0.5 < self.t < 1:
            raise ValueError(f"Exponent t must lie in (1/2, 1), not {self.t!r}")
        if not (self.c1 <= self.c2 and self.d1 <= self.d2):
            raise ValueError(f"Profile `{self.name}` needs c1 <= c2 and d1 <= d2")
        if not (0 < self.K <= 1 and 0 < self.l < 1):
            raise ValueError(f"Profile `{self.name}` needs 0 < K <= 1 and 0 < l < 1")
        for field in ("c1", "d1", "xi1", "xi2", "eta1", "eta2", "c_lambda_nu"):
            if not getattr(self, field) > 0:
                raise ValueError(f"Profile `{self.name}` has non-positive {field}")

    @property
    def delta(self):
        return 1 - self.t


def _check_exponent(t):
    if not 0.5 < t < 1:
        raise ValueError(f"Exponent t must lie in (1/2, 1), not {t!r}")


def ap_profile(q, r, t):
    _check_exponent(t)
    if not (q > r >= 0):
        raise ValueError(f"Arithmetic progression needs q > r >= 0, got q={q!r}, r={r!r}")
    delta = 1 - t

    def linear(n):
        return q * n + r

    xi = 1 / (q * (1 - t - delta * t))
    eta = 1 / (q * (2 * t - 1))
    return BoundProfile(name=f"ap:q={q!r},r={r!r}", t=t, c1=1 / 2, c2=2, d1=1, d2=2,
                        xi1=xi, xi2=xi, eta1=eta, eta2=eta, c_lambda_nu=1, K=10 / 11, l=1 / 10,
                        nu1=linear, nu2=linear, lambda1=linear, lambda2=linear)


def prime_profile(t):
    _check_exponent(t)
    return BoundProfile(
        name="prime", t=t,
        c1=7 / 40, c2=20 / 3, d1=1, d2=1,
        xi1=1 / (1 - t) ** 2,
        xi2=2 ** (2 * t - t * t) / (1 - t) ** 2,
        eta1=(1 - 2 ** (1 - 2 * t)) / (2 ** (4 * t) * (2 * t - 1)),
        eta2=2 ** (1 + 2 * t) / (2 * t - 1),
        c_lambda_nu=1, K=5 / 6, l=1 / 10,
    )


def m_lower_bound(profile, t=None):
    """Smallest admissible ``M`` for ``profile``, as a :class:`LogNumber`.

    ``max{4^{1/(1-t)} (c2 xi2 / (c_lambda_nu d1 eta1))^{2/(t(1-t))},
    (50 / K^{t(2-t)})^{2/(1-t)}}``
    """
    t = profile.t if t is None else t
    ratio = profile.c2 * profile.xi2 / (profile.c_lambda_nu * profile.d1 * profile.eta1)
    first = LogNumber(math.log(4) / (1 - t) + 2 / (t * (1 - t)) * math.log(ratio))
    second = LogNumber(2 / (1 - t) * (math.log(50) - t * (2 - t) * math.log(profile.K)))
    return log_max(first, second)
