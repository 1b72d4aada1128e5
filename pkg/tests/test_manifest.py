# SPDX-License-Identifier: BSD-2-Clause

import os
import json
import tempfile
import unittest

from squarepack_lib import MalformedManifest
from squarepack_lib.geometry import Rect, PlacedSquare
from squarepack_lib.manifest import PlacementManifest


def _manifest():
    return PlacementManifest(
        kind="recursive", family="ap:q=1,r=0", t=0.6, M=4, n0=7, n_reached=9,
        unit=7 ** -0.6, target=Rect(0.0, 0.0, 1.0, 1.0, "target"),
        squares=[PlacedSquare(7, 0.0, 0.0, 7 ** -0.6), PlacedSquare(8, 0.5, 0.0, 8 ** -0.6)],
        leftovers=[Rect(0.0, 0.4, 1.0, 1.0 / 3.0 + 0.5, "R0")],
        stats={"perim_delta": 0.1 + 0.2, "budget_bound": None, "area_packed": 0.5,
               "area_free": 0.5})


class ManifestTestCase(unittest.TestCase):
    def setUp(self):
        self.tempdir = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tempdir.name, "manifest.json")

    def tearDown(self):
        self.tempdir.cleanup()

    def test_stable_bytes(self):
        manifest = _manifest()
        manifest.write(self.path)
        with open(self.path) as f:
            first = f.read()
        reread = PlacementManifest.read(self.path)
        self.assertEqual(reread.to_json(), first)
        self.assertEqual(reread.squares, manifest.squares)
        self.assertEqual(reread.leftovers[0].tag, "R0")
        self.assertEqual(reread.stats["perim_delta"], 0.1 + 0.2)

    def test_empty_lists(self):
        manifest = _manifest()
        manifest.squares = []
        manifest.leftovers = [manifest.target]
        text = manifest.to_json()
        self.assertIn('"squares": [],', text)
        self.assertEqual(PlacementManifest.from_json(text).to_json(), text)

    def _rejects(self, text):
        with self.assertRaises(MalformedManifest):
            PlacementManifest.from_json(text)

    def test_invalid_json(self):
        self._rejects("{")

    def test_schema(self):
        data = json.loads(_manifest().to_json())
        data["t"] = 1.5
        self._rejects(json.dumps(data))
        data = json.loads(_manifest().to_json())
        del data["unit"]
        self._rejects(json.dumps(data))

    def test_non_contiguous(self):
        data = json.loads(_manifest().to_json())
        data["squares"][1][0] = 10
        self._rejects(json.dumps(data))

    def test_degenerate_rectangle(self):
        data = json.loads(_manifest().to_json())
        data["leftovers"][0] = [0.0, 0.0, 0.0, 1.0, None]
        self._rejects(json.dumps(data))

    def test_missing_file(self):
        with self.assertRaises(MalformedManifest):
            PlacementManifest.read(os.path.join(self.tempdir.name, "absent.json"))

    def test_non_finite(self):
        manifest = _manifest()
        manifest.stats["budget_bound"] = float("inf")
        with self.assertRaises(ValueError):
            manifest.to_json()
