# SPDX-License-Identifier: BSD-2-Clause

import unittest

from squarepack_lib.geometry import Rect, PlacedSquare, LocalFrame, perim, perim_delta, area


class RectTestCase(unittest.TestCase):
    def test_width_is_shorter_side(self):
        r = Rect(0.0, 0.0, 5.0, 2.0)
        self.assertEqual(r.w, 2.0)
        self.assertEqual(r.h, 5.0)
        self.assertTrue(r.landscape)
        self.assertFalse(Rect(0.0, 0.0, 2.0, 5.0).landscape)

    def test_degenerate(self):
        with self.assertRaises(ValueError):
            Rect(0.0, 0.0, 0.0, 1.0)
        with self.assertRaises(ValueError):
            Rect(0.0, 1.0, 1.0, 0.5)

    def test_tag_ignored_in_comparison(self):
        self.assertEqual(Rect(0.0, 0.0, 1.0, 1.0, "R0"), Rect(0.0, 0.0, 1.0, 1.0, "slice"))
        self.assertEqual(Rect.square(1.0, 2.0, 0.5).with_tag("x").tag, "x")

    def test_placed_square(self):
        s = PlacedSquare(7, 1.0, 2.0, 0.5)
        self.assertEqual((s.x1, s.y1, s.area), (1.5, 2.5, 0.25))
        self.assertEqual(s.as_rect(), Rect(1.0, 2.0, 1.5, 2.5))
        with self.assertRaises(ValueError):
            PlacedSquare(1, 0.0, 0.0, 0.0)


class MeasureTestCase(unittest.TestCase):
    def test_perim(self):
        self.assertEqual(perim([Rect(0.0, 0.0, 1.0, 3.0), Rect(0.0, 0.0, 2.0, 2.0)]), 16.0)
        self.assertEqual(perim([]), 0.0)

    def test_perim_delta(self):
        # w^delta h with w = 4, h = 9
        self.assertAlmostEqual(perim_delta([Rect(0.0, 0.0, 9.0, 4.0)], 0.5), 18.0)
        self.assertAlmostEqual(perim_delta([Rect(0.0, 0.0, 9.0, 4.0)], 1.0), 36.0)

    def test_area(self):
        items = [Rect(0.0, 0.0, 2.0, 3.0), PlacedSquare(1, 0.0, 0.0, 0.5)]
        self.assertEqual(area(items), 6.25)


class LocalFrameTestCase(unittest.TestCase):
    def test_portrait(self):
        frame = LocalFrame(Rect(1.0, 2.0, 3.0, 7.0))
        self.assertEqual(frame.square(5, 0.5, 1.0, 0.25), PlacedSquare(5, 1.5, 3.0, 0.25))
        self.assertEqual(frame.rect(0.0, 1.0, 2.0, 5.0), Rect(1.0, 3.0, 3.0, 7.0))

    def test_landscape_transposes(self):
        frame = LocalFrame(Rect(1.0, 2.0, 6.0, 4.0))
        # u runs along the short side (y), v along the long one (x)
        self.assertEqual(frame.square(5, 0.5, 1.0, 0.25), PlacedSquare(5, 2.0, 2.5, 0.25))
        self.assertEqual(frame.rect(0.0, 0.0, 2.0, 5.0), Rect(1.0, 2.0, 6.0, 4.0))
