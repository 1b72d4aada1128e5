# SPDX-License-Identifier: BSD-2-Clause

import unittest
import xml.etree.ElementTree as ET

from squarepack_lib.geometry import Rect
from squarepack_lib.packing import pack_bounded_rect
from squarepack_lib.render import render_manifest
from squarepack_lib.sequence import PackParams

from .stubs import ConstantFamily


SVG = "{http://www.w3.org/2000/svg}"


def _rects(svg, cls):
    root = ET.fromstring(svg)
    return [element for element in root.iter(f"{SVG}rect") if element.get("class") == cls]


class RenderTestCase(unittest.TestCase):
    def _manifest(self, rect):
        params = PackParams(0.6, 2, 1, 1)
        packing = pack_bounded_rect(rect, ConstantFamily(), params, 1)
        return packing.to_manifest(rect, ConstantFamily(), params, 1)

    def test_grid(self):
        svg = render_manifest(self._manifest(Rect(0.0, 0.0, 2.0, 2.0)))
        squares = _rects(svg, "square")
        self.assertEqual(len(squares), 4)
        self.assertEqual(_rects(svg, "leftover"), [])
        self.assertEqual(len(_rects(svg, "target")), 1)
        self.assertEqual({float(square.get("width")) for square in squares}, {500.0})

    def test_y_axis_up(self):
        svg = render_manifest(self._manifest(Rect(0.0, 0.0, 2.0, 2.0)))
        first = _rects(svg, "square")[0]
        # square 1 sits bottom left, so its top edge is half way down the canvas
        self.assertEqual((float(first.get("x")), float(first.get("y"))), (10.0, 510.0))

    def test_leftovers(self):
        svg = render_manifest(self._manifest(Rect(0.0, 0.0, 2.5, 5.5)))
        self.assertEqual(len(_rects(svg, "square")), 10)
        self.assertEqual(len(_rects(svg, "leftover")), 8)

    def test_target_only(self):
        manifest = self._manifest(Rect(0.0, 0.0, 2.0, 2.0))
        manifest.squares = []
        manifest.leftovers = []
        svg = render_manifest(manifest)
        self.assertEqual(_rects(svg, "square"), [])
        self.assertEqual(len(_rects(svg, "target")), 1)

    def test_deterministic(self):
        manifest = self._manifest(Rect(0.0, 0.0, 2.5, 5.5))
        self.assertEqual(render_manifest(manifest), render_manifest(manifest))
