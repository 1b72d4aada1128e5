# SPDX-License-Identifier: BSD-2-Clause

from .logspace import LogNumber, log_max
from .profiles import BoundProfile, ap_profile, prime_profile, m_lower_bound
from .theorem import ConditionResult, ConditionReport, check_ten_conditions
from .corollaries import (BoundTerm, CorollaryBounds, corollary31_bounds, corollary46_bounds,
                          asymptotic_ap_bound, TABLE1, DEFAULT_THETA)
from .lemmas import (LemmaCheck, LemmaReport, check_prime_sum_lemmas, prime_bound_exceptions,
                     empirical_gap_threshold, bump_derivative_maximum)


__all__ = ["LogNumber", "log_max",
           "BoundProfile", "ap_profile", "prime_profile", "m_lower_bound",
           "ConditionResult", "ConditionReport", "check_ten_conditions",
           "BoundTerm", "CorollaryBounds", "corollary31_bounds", "corollary46_bounds",
           "asymptotic_ap_bound", "TABLE1", "DEFAULT_THETA",
           "LemmaCheck", "LemmaReport", "check_prime_sum_lemmas", "prime_bound_exceptions",
           "empirical_gap_threshold", "bump_derivative_maximum"]
