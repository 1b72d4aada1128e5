# SPDX-License-Identifier: BSD-2-Clause

import os
import math
import unittest

from squarepack_lib import PreconditionViolated
from squarepack_lib.geometry import Rect, area
from squarepack_lib.packing import pack_bounded_rect, derivative_condition, gap_condition, holds
from squarepack_lib.sequence import APFamily, PrimeFamily, PackParams
from squarepack_lib.verifier import verify, brute_force_overlap

from .stubs import ConstantFamily


class ConstantLatticeTestCase(unittest.TestCase):
    def test_exact_grid(self):
        packing = pack_bounded_rect(Rect(0.0, 0.0, 2.0, 2.0), ConstantFamily(),
                                    PackParams(0.6, 2, 10, 10), 10)
        self.assertEqual((packing.M1, packing.M2, packing.n0_prime), (2, 2, 14))
        self.assertEqual([(s.n, s.x, s.y, s.side) for s in packing.squares],
                         [(10, 0.0, 0.0, 1.0), (11, 1.0, 0.0, 1.0),
                          (12, 0.0, 1.0, 1.0), (13, 1.0, 1.0, 1.0)])
        self.assertEqual(packing.leftovers, [])

    def test_strips(self):
        rect = Rect(0.0, 0.0, 2.5, 5.5)
        packing = pack_bounded_rect(rect, ConstantFamily(), PackParams(0.6, 2, 10, 10), 10)
        self.assertEqual((packing.M1, packing.M2), (2, 5))
        tags = sorted(r.tag for r in packing.leftovers)
        self.assertEqual(tags, ["TypeIII"] * 5 + ["TypeIV"] * 2 + ["TypeV"])
        self.assertEqual(area(packing.squares) + area(packing.leftovers), rect.area)
        self.assertEqual(brute_force_overlap(packing.squares + packing.leftovers), [])
        # rows are flush with the right side
        self.assertTrue(all(math.isclose(s.x1, 2.5) for s in packing.squares if s.n % 2 == 1))

    def test_landscape(self):
        rect = Rect(1.0, 1.0, 6.5, 3.5)
        params = PackParams(0.6, 2, 10, 10)
        packing = pack_bounded_rect(rect, ConstantFamily(), params, 10)
        self.assertEqual(packing.count, 10)
        manifest = packing.to_manifest(rect, ConstantFamily(), params, 10)
        report = verify(manifest)
        self.assertTrue(report.ok, report.summary())

    def test_eccentricity(self):
        params = PackParams(0.6, 2, 10, 10)
        with self.assertRaises(PreconditionViolated):
            pack_bounded_rect(Rect(0.0, 0.0, 1.5, 3.0), ConstantFamily(), params, 10)
        with self.assertRaises(PreconditionViolated):
            pack_bounded_rect(Rect(0.0, 0.0, 2.0, 6.5), ConstantFamily(), params, 10)


class APLatticeTestCase(unittest.TestCase):
    def setUp(self):
        self.fam = APFamily(1, 0)
        self.params = PackParams(0.6, 4, 2_000_000, 2_000_000)
        self.unit = self.fam.side(2_000_000, 0.6)
        side = 2.5 * 4 * self.unit
        self.rect = Rect(0.0, 0.0, side, side)

    def test_desk_lattice(self):
        n0 = self.params.n0
        packing = pack_bounded_rect(self.rect, self.fam, self.params, n0)
        self.assertGreaterEqual(packing.count, 16)
        self.assertLessEqual(packing.count, 144)
        self.assertEqual([s.n for s in packing.squares], list(range(n0, packing.n0_prime)))
        self.assertLessEqual(packing.leftover_perimeter, 25 * 4 * self.unit)
        self.assertTrue(all(r.w <= 2 * self.unit for r in packing.leftovers))

        gap = self.rect.area - math.fsum([area(packing.squares), area(packing.leftovers)])
        self.assertLessEqual(abs(gap), 1e-11 * self.rect.area)

        report = verify(packing.to_manifest(self.rect, self.fam, self.params, n0), 1e-9)
        self.assertTrue(report.ok, report.summary())
        self.assertEqual(report.lattice_bounds, True)

    def test_rows_ordered(self):
        n0 = self.params.n0
        packing = pack_bounded_rect(self.rect, self.fam, self.params, n0)
        M1 = packing.M1
        for s in packing.squares:
            i = (s.n - n0) % M1
            if i + 1 < M1:
                right = packing.squares[s.n - n0 + 1]
                self.assertLessEqual(s.x1, right.x + 1e-12 * self.unit)
            if s.n - n0 + M1 < len(packing.squares):
                above = packing.squares[s.n - n0 + M1]
                self.assertLessEqual(s.y1, above.y + 1e-12 * self.unit)

    def test_brute_force_agrees(self):
        packing = pack_bounded_rect(self.rect, self.fam, self.params, self.params.n0)
        tolerance = 1e-9 * self.unit
        self.assertEqual(brute_force_overlap(packing.squares + packing.leftovers, tolerance), [])

    def test_derivative_condition_boundary(self):
        # max f' = 1 against n0 / (4752 M^4), with 4752 * 4^4 = 1216512
        lhs, rhs = derivative_condition(self.fam, PackParams(0.6, 4, 1_216_512, 1_216_512),
                                        1_216_512)
        self.assertTrue(holds(lhs, rhs))
        lhs, rhs = derivative_condition(self.fam, PackParams(0.6, 4, 1_216_511, 1_216_511),
                                        1_216_511)
        self.assertFalse(holds(lhs, rhs))

    def test_condition_7_rejects(self):
        params = PackParams(2 / 3, 4, 1_200_000, 1_200_000)
        side = 4 * self.fam.side(1_200_000, 2 / 3)
        with self.assertRaises(PreconditionViolated) as cm:
            pack_bounded_rect(Rect(0.0, 0.0, side, side), self.fam, params, 1_200_000)
        self.assertEqual(cm.exception.which, "condition (7)")

    def test_gap_condition(self):
        lhs, rhs = gap_condition(self.fam, self.params, self.params.n0)
        self.assertTrue(holds(lhs, rhs))


@unittest.skipUnless(os.environ.get("SQUAREPACK_SLOW"), "set SQUAREPACK_SLOW=1 to sieve to 2e8")
class PrimeLatticeTestCase(unittest.TestCase):
    def test_prime_lattice(self):
        n0, M, t = 10 ** 7, 2, 0.6
        params = PackParams(t, M, n0, n0)
        fam = PrimeFamily.build(n0 + params.window + 2)
        lhs, rhs = derivative_condition(fam, params, n0)
        self.assertTrue(holds(lhs, rhs))
        self.assertLessEqual(7 * fam.gaps(n0, n0 + params.window).max(),
                             fam.eval_f(n0) / (4752 * 16))

        side = 2.2 * M * fam.side(n0, t)
        rect = Rect(0.0, 0.0, side, side)
        packing = pack_bounded_rect(rect, fam, params, n0)
        report = verify(packing.to_manifest(rect, fam, params, n0))
        self.assertTrue(report.ok, report.summary())
