# SPDX-License-Identifier: BSD-2-Clause

from .bump import bump, bump_derivative, BUMP_DERIVATIVE_BOUND
from .sieve import (enumerate_primes, enumerate_twin_primes, prime_limit_for_index,
                    twin_prime_constant, twin_prime_product, TWIN_PRIME_CONSTANT)
from .families import (SidelengthFamily, APFamily, PrimeFamily, TwinPrimeFamily, PowerLogFamily,
                       parse_family)
from .sums import SumEnclosure, tail_enclosure, tail_sum, partial_sum, direct_sum
from .params import PackParams


__all__ = ["bump", "bump_derivative", "BUMP_DERIVATIVE_BOUND",
           "enumerate_primes", "enumerate_twin_primes", "prime_limit_for_index",
           "twin_prime_constant", "twin_prime_product", "TWIN_PRIME_CONSTANT",
           "SidelengthFamily", "APFamily", "PrimeFamily", "TwinPrimeFamily", "PowerLogFamily",
           "parse_family",
           "SumEnclosure", "tail_enclosure", "tail_sum", "partial_sum", "direct_sum",
           "PackParams"]
