# SPDX-License-Identifier: BSD-2-Clause

import json
from dataclasses import dataclass, field

import jsonschema

from . import MalformedManifest
from .geometry import Rect, PlacedSquare


__all__ = ["PlacementManifest", "manifest_schema", "MANIFEST_VERSION"]


MANIFEST_VERSION = 1

STATS_KEYS = ("perim_delta", "budget_bound", "area_packed", "area_free")

_number = {"type": "number"}
_rect = {
    "type": "array",
    "prefixItems": [_number, _number, _number, _number, {"type": ["string", "null"]}],
    "minItems": 4,
    "maxItems": 5,
}

manifest_schema = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "https://squarepack.invalid/meta/manifest.schema.json",
    "title": "placement manifest",
    "type": "object",
    "required": ["version", "kind", "family", "t", "M", "n0", "n_reached", "unit",
                 "target", "squares", "leftovers", "stats"],
    "properties": {
        "version": {"const": MANIFEST_VERSION},
        "kind": {"enum": ["lattice", "recursive"]},
        "family": {"type": "string"},
        "t": {"type": "number", "exclusiveMinimum": 0.5, "exclusiveMaximum": 1},
        "M": {"type": "integer", "minimum": 1},
        "n0": {"type": "integer", "minimum": 1},
        "n_reached": {"type": "integer", "minimum": 1},
        "unit": {"type": "number", "exclusiveMinimum": 0},
        "strict_budget": {"type": "boolean"},
        "target": _rect,
        "squares": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [{"type": "integer", "minimum": 1}, _number, _number,
                                {"type": "number", "exclusiveMinimum": 0}],
                "minItems": 4,
                "maxItems": 4,
            },
        },
        "leftovers": {"type": "array", "items": _rect},
        "stats": {
            "type": "object",
            "properties": {key: {"type": ["number", "null"]} for key in STATS_KEYS},
        },
    },
}


@dataclass
class PlacementManifest:
    """Result of a packing run: parameters, placed squares, leftover rectangles.

    ``unit`` is ``f(n0)^-t``, the scale the verifier measures tolerances in.
    Serialisation writes keys in a fixed order and floats in their shortest
    round-trip form, so writing a manifest that was read back reproduces the
    original bytes.
    """
    kind: str
    family: str
    t: float
    M: int
    n0: int
    n_reached: int
    unit: float
    target: Rect
    squares: list = field(default_factory=list)
    leftovers: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    strict_budget: bool = False
    version: int = MANIFEST_VERSION

    def to_json(self):
        def dump(value):
            return json.dumps(value, allow_nan=False)

        def rect(r):
            return dump([r.x0, r.y0, r.x1, r.y1, r.tag])

        header = [
            ("version", self.version),
            ("kind", self.kind),
            ("family", self.family),
            ("t", self.t),
            ("M", self.M),
            ("n0", self.n0),
            ("n_reached", self.n_reached),
            ("unit", self.unit),
            ("strict_budget", self.strict_budget),
        ]
        lines = ["{"]
        lines += [f"  {dump(key)}: {dump(value)}," for key, value in header]
        lines.append(f'  "target": {rect(self.target)},')
        stats = {key: self.stats.get(key) for key in STATS_KEYS}
        lines.append(f'  "stats": {dump(stats)},')
        squares = [dump([s.n, s.x, s.y, s.side]) for s in self.squares]
        lines.append('  "squares": [' + ",".join(f"\n    {s}" for s in squares) +
                     ("\n  ]," if squares else "],"))
        leftovers = [rect(r) for r in self.leftovers]
        lines.append('  "leftovers": [' + ",".join(f"\n    {r}" for r in leftovers) +
                     ("\n  ]" if leftovers else "]"))
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, text, path="<manifest>"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise MalformedManifest(path, f"invalid JSON: {e}")
        try:
            jsonschema.validate(data, manifest_schema)
        except jsonschema.ValidationError as e:
            raise MalformedManifest(path, f"at `{'.'.join(str(p) for p in e.path)}`: "
                                          f"{e.message}")

        try:
            target = Rect(*data["target"])
            squares = [PlacedSquare(*entry) for entry in data["squares"]]
            leftovers = [Rect(*entry) for entry in data["leftovers"]]
        except ValueError as e:
            raise MalformedManifest(path, str(e))
        for expected, square in enumerate(squares, data["n0"]):
            if square.n != expected:
                raise MalformedManifest(path, f"square indices must run contiguously from "
                                              f"n0={data['n0']}; found {square.n} where "
                                              f"{expected} was expected")

        return cls(kind=data["kind"], family=data["family"], t=data["t"], M=data["M"],
                   n0=data["n0"], n_reached=data["n_reached"], unit=data["unit"],
                   target=target, squares=squares, leftovers=leftovers,
                   stats=dict(data["stats"]), strict_budget=data.get("strict_budget", False),
                   version=data["version"])

    def write(self, path):
        with open(path, "w") as f:
            f.write(self.to_json())

    @classmethod
    def read(cls, path):
        try:
            with open(path) as f:
                text = f.read()
        except OSError as e:
            raise MalformedManifest(path, e.strerror)
        return cls.from_json(text, path)
