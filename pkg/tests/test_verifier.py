# SPDX-License-Identifier: BSD-2-Clause

import os
import random
import unittest

from squarepack_lib import TooLarge
from squarepack_lib.geometry import Rect, PlacedSquare
from squarepack_lib.manifest import PlacementManifest
from squarepack_lib.verifier import verify, sweep_overlaps, brute_force_overlap, MAX_REPORTED


def _grid(*squares, leftovers=(), kind="recursive", strict_budget=False, budget_bound=None):
    if not squares:
        squares = [PlacedSquare(n, float(n % 2), float(n // 2), 1.0) for n in range(4)]
    return PlacementManifest(kind=kind, family="constant:c=1.0", t=0.6, M=1, n0=1,
                             n_reached=len(squares) + 1, unit=1.0,
                             target=Rect(0.0, 0.0, 2.0, 2.0), squares=list(squares),
                             leftovers=list(leftovers), strict_budget=strict_budget,
                             stats={"budget_bound": budget_bound})


class OverlapTestCase(unittest.TestCase):
    def test_touching(self):
        items = [PlacedSquare(1, 0.0, 0.0, 1.0), PlacedSquare(2, 1.0, 0.0, 1.0),
                 Rect(0.0, 1.0, 2.0, 3.0)]
        self.assertEqual(sweep_overlaps(items), [])
        self.assertEqual(brute_force_overlap(items), [])

    def test_depth(self):
        items = [PlacedSquare(1, 0.0, 0.0, 1.0), PlacedSquare(2, 0.5, 0.0, 1.0)]
        self.assertEqual(sweep_overlaps(items), [(0, 1, 0.5)])

    def test_nested(self):
        items = [Rect(0.0, 0.0, 10.0, 10.0), PlacedSquare(1, 5.0, 2.0, 3.0)]
        self.assertEqual(sweep_overlaps(items), [(0, 1, 3.0)])

    def test_empty(self):
        self.assertEqual(sweep_overlaps([]), [])
        self.assertEqual(brute_force_overlap([]), [])

    def test_tolerance(self):
        items = [PlacedSquare(1, 0.0, 0.0, 1.0), PlacedSquare(2, 1.0 - 1e-12, 0.0, 1.0)]
        self.assertEqual(sweep_overlaps(items, tolerance=1e-9), [])
        self.assertEqual(len(sweep_overlaps(items)), 1)

    def test_sweep_matches_brute_force(self):
        for seed in range(5):
            rng = random.Random(seed)
            items = []
            for _ in range(300):
                x, y = rng.uniform(0, 100), rng.uniform(0, 100)
                items.append(Rect(x, y, x + rng.uniform(0.1, 8), y + rng.uniform(0.1, 8)))
            with self.subTest(seed=seed):
                self.assertEqual(sweep_overlaps(items), brute_force_overlap(items))

    def test_brute_force_limit(self):
        items = [PlacedSquare(1, 0.0, 0.0, 1.0)] * 10_001
        with self.assertRaises(TooLarge):
            brute_force_overlap(items)


class VerifyTestCase(unittest.TestCase):
    def test_exact_grid(self):
        report = verify(_grid())
        self.assertTrue(report.ok)
        self.assertEqual(report.area_gap, 0.0)
        self.assertIsNone(report.budget["within"])
        self.assertIsNone(report.lattice_bounds)
        self.assertEqual(report.violations, [])

    def test_overlap(self):
        squares = [PlacedSquare(0, 0.0, 0.0, 1.0), PlacedSquare(1, 0.5, 0.0, 1.0),
                   PlacedSquare(2, 0.0, 1.0, 1.0), PlacedSquare(3, 1.0, 1.0, 1.0)]
        report = verify(_grid(*squares))
        self.assertFalse(report.disjoint)
        self.assertFalse(report.ok)
        self.assertEqual(report.max_overlap_depth, 0.5)
        self.assertEqual(report.violations,
                         [{"kind": "overlap", "ids": ["square 0", "square 1"], "magnitude": 0.5}])

    def test_containment(self):
        squares = [PlacedSquare(0, 0.0, 0.0, 1.0), PlacedSquare(1, 1.5, 0.0, 1.0)]
        report = verify(_grid(*squares, leftovers=[Rect(0.0, 1.0, 2.0, 2.0)]))
        self.assertFalse(report.contained)
        self.assertTrue(report.covered)
        self.assertEqual(report.violations,
                         [{"kind": "containment", "ids": ["square 1"], "magnitude": 0.5}])

    def test_uncovered(self):
        squares = [PlacedSquare(n, float(n % 2), float(n // 2), 1.0) for n in range(3)]
        report = verify(_grid(*squares))
        self.assertFalse(report.covered)
        self.assertEqual(report.area_gap, 1.0)
        self.assertEqual([v["kind"] for v in report.violations], ["area"])

    def test_truncation(self):
        squares = [PlacedSquare(n, 0.0, 0.0, 1.0) for n in range(120)]
        report = verify(_grid(*squares))
        pairs = 120 * 119 // 2
        overlaps = [v for v in report.violations if v["kind"] == "overlap"]
        self.assertEqual(len(overlaps), MAX_REPORTED)
        self.assertEqual(report.truncated, pairs - MAX_REPORTED)

    def test_budget(self):
        leftovers = [Rect(0.0, 1.0, 2.0, 2.0)]
        squares = [PlacedSquare(0, 0.0, 0.0, 1.0), PlacedSquare(1, 1.0, 0.0, 1.0)]
        within = verify(_grid(*squares, leftovers=leftovers, strict_budget=True,
                              budget_bound=100.0))
        self.assertIs(within.budget["within"], True)
        self.assertTrue(within.ok)
        exceeded = verify(_grid(*squares, leftovers=leftovers, strict_budget=True,
                                budget_bound=0.1))
        self.assertIs(exceeded.budget["within"], False)
        self.assertFalse(exceeded.ok)
        missing = verify(_grid(*squares, leftovers=leftovers, strict_budget=True))
        self.assertIs(missing.budget["within"], False)

    def test_lattice_bounds(self):
        squares = [PlacedSquare(0, 0.0, 0.0, 1.0)]
        leftovers = [Rect(1.0, 0.0, 2.0, 1.0), Rect(0.0, 1.0, 2.0, 2.0)]
        self.assertIs(verify(_grid(*squares, leftovers=leftovers, kind="lattice")).lattice_bounds,
                      True)
        wide = _grid(*squares, leftovers=leftovers, kind="lattice")
        wide.target = Rect(0.0, 0.0, 4.0, 4.0)
        wide.leftovers = [Rect(1.0, 0.0, 4.0, 1.0), Rect(0.0, 1.0, 4.0, 4.0)]
        report = verify(wide)
        self.assertIs(report.lattice_bounds, False)
        self.assertEqual([v["kind"] for v in report.violations], ["width"])

    def test_deterministic(self):
        squares = [PlacedSquare(n, 0.1 * n, 0.0, 1.0) for n in range(20)]
        manifest = _grid(*squares)
        self.assertEqual(verify(manifest).as_dict(), verify(manifest).as_dict())
        self.assertIn("disjoint:", verify(manifest).summary())

    def test_cover_tolerance_by_kind(self):
        # a leftover short of the target by 5e-11 of its area
        leftover = Rect(0.0, 0.0, 2.0, 2.0 - 1e-10)
        recursive = _grid(leftovers=[leftover])
        recursive.squares = []
        self.assertTrue(verify(recursive).covered)
        lattice = _grid(leftovers=[leftover], kind="lattice")
        lattice.squares = []
        report = verify(lattice)
        self.assertFalse(report.covered)
        self.assertEqual([v["kind"] for v in report.violations], ["area"])


@unittest.skipUnless(os.environ.get("SQUAREPACK_SLOW"), "set SQUAREPACK_SLOW=1 for the full fuzz")
class OverlapFuzzTestCase(unittest.TestCase):
    def test_sweep_matches_brute_force(self):
        for seed in range(1000):
            rng = random.Random(seed)
            items = []
            for _ in range(rng.randint(1, 2000)):
                x, y = rng.uniform(0, 1000), rng.uniform(0, 1000)
                if rng.random() < 0.5:
                    side = rng.uniform(0.1, 30)
                    items.append(PlacedSquare(len(items), x, y, side))
                else:
                    items.append(Rect(x, y, x + rng.uniform(0.1, 30), y + rng.uniform(0.1, 30)))
            with self.subTest(seed=seed):
                self.assertEqual(sweep_overlaps(items), brute_force_overlap(items))
