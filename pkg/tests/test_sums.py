# SPDX-License-Identifier: BSD-2-Clause

import math
import unittest

import mpmath

from squarepack_lib import NonConvergent, EnclosureTooWide
from squarepack_lib.config import Settings
from squarepack_lib.sequence import (APFamily, PowerLogFamily, PrimeFamily, TwinPrimeFamily,
                                     tail_enclosure, tail_sum, partial_sum, direct_sum)
from squarepack_lib.sequence.sums import powerlog_integral


def assert_encloses(test, enclosure, value, slack=1e-13):
    test.assertLessEqual(enclosure.lower, value * (1 + slack))
    test.assertGreaterEqual(enclosure.upper, value * (1 - slack))


class TailTestCase(unittest.TestCase):
    def test_basel(self):
        enclosure = tail_enclosure(APFamily(1, 0), 1, 2.0)
        assert_encloses(self, enclosure, math.pi ** 2 / 6)
        self.assertLess(enclosure.relative_width, 1e-14)

    def test_hurwitz_zeta(self):
        for n1, s in ((1_000_000, 1.2), (2_000_000, 4 / 3), (17, 1.9)):
            with self.subTest(n1=n1, s=s):
                expected = float(mpmath.zeta(s, n1))
                enclosure = tail_enclosure(APFamily(1, 0), n1, s)
                assert_encloses(self, enclosure, expected)
                self.assertLess(enclosure.relative_width, 1e-12)

    def test_odd_numbers(self):
        # sum over n >= 1 of (2n + 1)^-2 = pi^2/8 - 1
        enclosure = tail_enclosure(APFamily(2, 1), 1, 2.0)
        assert_encloses(self, enclosure, math.pi ** 2 / 8 - 1)

    def test_extended_precision(self):
        expected = float(mpmath.zeta(1.2, 10 ** 6))
        enclosure = tail_enclosure(APFamily(1, 0), 10 ** 6, 1.2, Settings(precision="extended"))
        assert_encloses(self, enclosure, expected)

    def test_powerlog_reduces_to_power(self):
        enclosure = tail_enclosure(PowerLogFamily(1, 0), 3, 2.0)
        assert_encloses(self, enclosure, math.pi ** 2 / 6 - 1.25)
        self.assertLess(enclosure.relative_width, 1e-8)

    def test_powerlog_integral(self):
        # after x = e^u the integrand decays exponentially
        with mpmath.workprec(64):
            expected = float(mpmath.quad(lambda u: 2 ** -1.5 * u ** -3 * mpmath.exp(-0.5 * u),
                                         [math.log(100), 50, mpmath.inf]))
        self.assertAlmostEqual(powerlog_integral(2.0, 2.0, 1.5, 100), expected,
                               delta=1e-10 * expected)

    def test_prime_enclosures_intersect(self):
        fam = PrimeFamily.build(50_000)
        tight = tail_enclosure(fam, 100, 1.2)
        loose = tail_enclosure(fam, 100, 1.2, direct_terms=1_000)
        self.assertLess(tight.lower, tight.upper)
        self.assertLessEqual(tight.width, loose.width)
        self.assertLessEqual(max(tight.lower, loose.lower), min(tight.upper, loose.upper))
        self.assertGreater(tight.lower, direct_sum(fam, 100, 50_000, 1.2))

    def test_twin_tail_is_wide(self):
        fam = TwinPrimeFamily.build(1_000, 7.0)
        enclosure = tail_enclosure(fam, 10, 1.5)
        self.assertGreater(enclosure.lower, 0)
        with self.assertRaises(EnclosureTooWide):
            tail_sum(fam, 10, 1.5, rtol=1e-6)

    def test_non_convergent(self):
        with self.assertRaises(NonConvergent):
            tail_enclosure(APFamily(1, 0), 10, 1.0)
        with self.assertRaises(NonConvergent):
            tail_sum(APFamily(1, 0), 10, 0.9)

    def test_tail_sum(self):
        self.assertAlmostEqual(tail_sum(APFamily(1, 0), 1, 2.0, rtol=1e-12), math.pi ** 2 / 6,
                               places=14)

    def test_zeta_values(self):
        fam = APFamily(1, 0)
        for s, expected in ((1.5, float(mpmath.zeta(1.5)) - 1), (4.0, math.pi ** 4 / 90 - 1)):
            with self.subTest(s=s):
                self.assertLessEqual(abs(tail_sum(fam, 2, s) - expected), 1e-10 * expected)

    def test_consecutive_tails(self):
        fam = APFamily(1, 0)
        for s in (1.5, 4.0):
            for n1 in (2, 3, 10, 100):
                with self.subTest(s=s, n1=n1):
                    here, after = tail_sum(fam, n1, s), tail_sum(fam, n1 + 1, s)
                    self.assertLess(after, here)
                    term = n1 ** -s
                    self.assertLessEqual(abs((here - after) - term), 1e-12 * term)


class PartialSumTestCase(unittest.TestCase):
    def test_direct(self):
        expected = math.fsum(n ** -0.5 for n in range(1, 11))
        self.assertAlmostEqual(partial_sum(APFamily(1, 0), 11, 0.5), expected, places=14)
        self.assertEqual(partial_sum(APFamily(1, 0), 1, 0.5), 0.0)

    def test_euler_maclaurin_matches_zeta(self):
        # sum_{n < N} n^-s = zeta(s) - zeta(s, N), here with N beyond the direct limit
        n1, s = 10 ** 9, 0.84
        with mpmath.workprec(80):
            expected = float(mpmath.zeta(s) - mpmath.zeta(s, n1))
        self.assertAlmostEqual(partial_sum(APFamily(1, 0), n1, s), expected,
                               delta=1e-12 * expected)

    def test_exponent_range(self):
        with self.assertRaises(ValueError):
            partial_sum(APFamily(1, 0), 10, 1.5)
