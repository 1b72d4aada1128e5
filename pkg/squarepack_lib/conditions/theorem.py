# SPDX-License-Identifier: BSD-2-Clause

import math
import logging
from dataclasses import dataclass, field

from .. import IndexBeyondSieve, LimitTooLarge
from ..packing.lattice import holds, derivative_condition, growth_condition, gap_condition
from ..sequence import partial_sum, tail_enclosure
from ..tables import format_table
from .profiles import m_lower_bound


__all__ = ["ConditionResult", "ConditionReport", "check_ten_conditions"]


logger = logging.getLogger(__name__)


@dataclass
class ConditionResult:
    """One inequality ``lhs <= rhs``; ``satisfied`` is ``None`` when it could not be evaluated."""
    id: str
    description: str
    satisfied: bool
    lhs: float = None
    rhs: float = None
    note: str = None

    def as_dict(self):
        return {
            "id": self.id,
            "description": self.description,
            "satisfied": self.satisfied,
            "lhs": _finite_or_text(self.lhs),
            "rhs": _finite_or_text(self.rhs),
            "note": self.note,
        }


@dataclass
class ConditionReport:
    family: str
    profile: str
    t: float
    M: int
    n0: int
    results: list = field(default_factory=list)
    informational: list = field(default_factory=list)

    @property
    def overall(self):
        return all(result.satisfied is True for result in self.results)

    def result(self, id):
        for result in self.results + self.informational:
            if result.id == id:
                return result
        raise KeyError(id)

    def as_dict(self):
        return {
            "family": self.family,
            "profile": self.profile,
            "t": self.t,
            "M": self.M,
            "n0": self.n0,
            "overall": self.overall,
            "conditions": [result.as_dict() for result in self.results],
            "informational": [result.as_dict() for result in self.informational],
        }

    def as_table(self):
        def status(result):
            return {True: "ok", False: "FAIL", None: "n/a"}[result.satisfied]

        rows = [[r.id, status(r), _format(r.lhs), _format(r.rhs), r.description]
                for r in self.results + self.informational]
        header = (f"Conditions for {self.family} (profile {self.profile}) at "
                  f"t={self.t!r}, M={self.M}, n0={self.n0}: "
                  f"{'all satisfied' if self.overall else 'not all satisfied'}")
        return header + "\n" + format_table(["id", "status", "lhs", "rhs", "inequality"], rows)


def _finite_or_text(value):
    if value is None or math.isfinite(value):
        return value
    return str(value)


def _format(value):
    return "-" if value is None else f"{value:.6g}"


def check_ten_conditions(fam, profile, params, n0=None, settings=None):
    """Evaluate both sides of each of the ten conditions of the packing theorem at ``n0``.

    Each condition is written as ``lhs <= rhs`` and accepted up to a relative
    slack of ``1e-12``. The two-sided sum brackets contribute a ``lower`` and
    an ``upper`` entry. Conditions whose evaluation needs indices beyond the
    enumerated table are reported with ``satisfied = None``.
    """
    n0 = params.n0 if n0 is None else n0
    t, M = params.t, params.M
    delta = 1 - t
    s_partial = t + delta * t
    s_tail = 2 * t
    report = ConditionReport(fam.spec, profile.name, t, M, n0)

    def add(id, description, evaluate, informational=False):
        target = report.informational if informational else report.results
        try:
            lhs, rhs = evaluate()
        except (IndexBeyondSieve, LimitTooLarge) as e:
            logger.info("condition (%s) not evaluable: %s", id, e)
            target.append(ConditionResult(id, description, None, note=str(e)))
            return
        target.append(ConditionResult(id, description, holds(lhs, rhs), lhs, rhs))

    def condition_1():
        lhs = profile.K * fam.eval_smooth((1 + profile.l) * n0)
        return lhs, fam.eval_f(n0)

    add("1", "K f((1+l)n0) <= f(n0)", condition_1)
    report.results.append(ConditionResult(
        "1K", "(2/3)^(1/2) <= K", holds(math.sqrt(2 / 3), profile.K),
        math.sqrt(2 / 3), profile.K))

    cache = {}

    def cached(key, compute):
        if key not in cache:
            cache[key] = compute()
        return cache[key]

    def partial():
        return cached("partial", lambda: partial_sum(fam, n0, s_partial, settings))

    def enclosure():
        return cached("tail", lambda: tail_enclosure(fam, n0, s_tail, settings))

    def condition_2_lower():
        bound = profile.c1 * profile.xi1 * profile.nu1(n0) / fam.eval_f(n0) ** s_partial
        return bound, partial()

    def condition_2_upper():
        bound = profile.c2 * profile.xi2 * profile.nu2(n0) / fam.eval_f(n0) ** s_partial
        return partial(), bound

    add("2.lower", "c1 xi1 nu1 / f^(t+dt) <= sum_{n<n0} f^-(t+dt)", condition_2_lower)
    add("2.upper", "sum_{n<n0} f^-(t+dt) <= c2 xi2 nu2 / f^(t+dt)", condition_2_upper)

    def condition_3_lower():
        bound = profile.d1 * profile.eta1 * profile.lambda1(n0) / fam.eval_f(n0) ** s_tail
        return bound, enclosure().lower

    def condition_3_upper():
        bound = profile.d2 * profile.eta2 * profile.lambda2(n0) / fam.eval_f(n0) ** s_tail
        return enclosure().upper, bound

    add("3.lower", "d1 eta1 lambda1 / f^2t <= sum_{n>=n0} f^-2t", condition_3_lower)
    add("3.upper", "sum_{n>=n0} f^-2t <= d2 eta2 lambda2 / f^2t", condition_3_upper)

    add("4", "c_lambda_nu nu2(n0) <= lambda1(n0)",
        lambda: (profile.c_lambda_nu * profile.nu2(n0), profile.lambda1(n0)))
    add("5", "lambda2(n0) <= f(n0)^2t / (d2 eta2)",
        lambda: (profile.lambda2(n0), fam.eval_f(n0) ** s_tail / (profile.d2 * profile.eta2)))
    add("6", "M_lower_bound <= M",
        lambda: (m_lower_bound(profile, t).to_float(), float(M)))
    add("7", "max f' on [n0, n0+9M^2] <= f(n0) / (4752 M^4)",
        lambda: derivative_condition(fam, params, n0))
    add("8", "f(n0+9M^2) <= (264 M^2)^(1/t) f(n0)",
        lambda: growth_condition(fam, params, n0))
    add("9", "9 M f(n0)^t <= l n0",
        lambda: (9 * M * fam.eval_f(n0) ** t, profile.l * n0))

    def condition_10():
        lhs = ((profile.d2 * profile.eta2) ** ((1 + delta) / 2) / (profile.c1 * profile.xi1) *
               M ** (1 - delta / 2))
        rhs = profile.nu1(n0) * profile.lambda2(n0) ** (-(1 + delta) / 2)
        return lhs, rhs

    add("10", "(d2 eta2)^((1+d)/2) M^(1-d/2) / (c1 xi1) <= nu1 lambda2^(-(1+d)/2)",
        condition_10)
    add("X", "9 M^2 max(f' f^(-t-1)) <= f(n0+9M^2)^-t",
        lambda: gap_condition(fam, params, n0), informational=True)
    return report
