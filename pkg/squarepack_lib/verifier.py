# SPDX-License-Identifier: BSD-2-Clause

import heapq
import math
import logging
from dataclasses import dataclass, field

import numpy as np
from intervaltree import IntervalTree, Interval

from . import TooLarge
from .geometry import perim, perim_delta
from .packing.lattice import holds


__all__ = ["VerificationReport", "verify", "sweep_overlaps", "brute_force_overlap",
           "DEFAULT_TOLERANCE_SCALE", "MAX_REPORTED", "BRUTE_FORCE_LIMIT"]


logger = logging.getLogger(__name__)


DEFAULT_TOLERANCE_SCALE = 1e-9
MAX_REPORTED = 100
BRUTE_FORCE_LIMIT = 10_000
# relative slack of the exact-cover check, by manifest kind
AREA_TOLERANCE = {"lattice": 1e-11, "recursive": 1e-10}


@dataclass
class VerificationReport:
    """Outcome of checking one manifest.

    ``budget["within"]`` and ``lattice_bounds`` are ``None`` when the manifest
    does not ask for the corresponding check. ``violations`` holds at most
    ``MAX_REPORTED`` overlapping pairs; ``truncated`` counts the rest.
    """
    disjoint: bool
    contained: bool
    covered: bool
    area_gap: float
    max_overlap_depth: float
    tolerance: float
    budget: dict
    max_leftover_width: float
    lattice_bounds: bool = None
    violations: list = field(default_factory=list)
    truncated: int = 0

    @property
    def ok(self):
        return (self.disjoint and self.contained and self.covered and
                self.budget["within"] is not False and self.lattice_bounds is not False)

    def as_dict(self):
        return {
            "ok": self.ok,
            "disjoint": self.disjoint,
            "contained": self.contained,
            "covered": self.covered,
            "area_gap": self.area_gap,
            "max_overlap_depth": self.max_overlap_depth,
            "tolerance": self.tolerance,
            "budget": dict(self.budget),
            "max_leftover_width": self.max_leftover_width,
            "lattice_bounds": self.lattice_bounds,
            "violations": [dict(v) for v in self.violations],
            "truncated": self.truncated,
        }

    def summary(self):
        lines = [
            f"disjoint:           {_yes(self.disjoint)} (max overlap depth "
            f"{self.max_overlap_depth:.3g}, tolerance {self.tolerance:.3g})",
            f"contained:          {_yes(self.contained)}",
            f"covered:            {_yes(self.covered)} (area gap {self.area_gap:.3g})",
            f"perimeter budget:   {_yes(self.budget['within'])} "
            f"({self.budget['perim_delta_free']:.6g} against {self.budget['bound_value']})",
            f"lattice bounds:     {_yes(self.lattice_bounds)}",
            f"max leftover width: {self.max_leftover_width:.6g}",
        ]
        for violation in self.violations:
            lines.append(f"  {violation['kind']}: {', '.join(violation['ids'])} "
                         f"({violation['magnitude']:.3g})")
        if self.truncated:
            lines.append(f"  ... and {self.truncated} more overlapping pairs")
        return "\n".join(lines)


def _yes(value):
    return {True: "yes", False: "NO", None: "not checked"}[value]


def _boxes(items):
    return [(item.x0, item.y0, item.x1, item.y1) if hasattr(item, "x0") else
            (item.x, item.y, item.x1, item.y1) for item in items]


def _depth(a, b):
    return min(min(a[2], b[2]) - max(a[0], b[0]), min(a[3], b[3]) - max(a[1], b[1]))


def sweep_overlaps(items, tolerance=0.0):
    """Pairs ``(i, j, depth)``, ``i < j``, of items whose interiors overlap by more than ``tolerance``.

    Items are swept left to right; the active set holds the y-extents of
    items still reaching past the sweep line, so each item is only compared
    with the ones it meets on the y axis.
    """
    boxes = _boxes(items)
    order = sorted(range(len(boxes)), key=lambda k: (boxes[k][0], k))
    active = IntervalTree()
    expiry = []
    pairs = []
    for k in order:
        box = boxes[k]
        while expiry and expiry[0][0] <= box[0] + tolerance:
            _, index = heapq.heappop(expiry)
            active.remove(Interval(boxes[index][1], boxes[index][3], index))
        for interval in active.overlap(box[1], box[3]):
            depth = _depth(box, boxes[interval.data])
            if depth > tolerance:
                i, j = sorted((k, interval.data))
                pairs.append((i, j, depth))
        active.add(Interval(box[1], box[3], k))
        heapq.heappush(expiry, (box[2], k))
    pairs.sort()
    return pairs


def brute_force_overlap(items, tolerance=0.0):
    """Every pair compared directly; the reference the sweep is tested against."""
    if len(items) > BRUTE_FORCE_LIMIT:
        raise TooLarge(len(items), BRUTE_FORCE_LIMIT)
    boxes = np.array(_boxes(items), dtype=np.float64).reshape(-1, 4)
    pairs = []
    for i in range(len(boxes) - 1):
        box, rest = boxes[i], boxes[i + 1:]
        depth = np.minimum(np.minimum(rest[:, 2], box[2]) - np.maximum(rest[:, 0], box[0]),
                           np.minimum(rest[:, 3], box[3]) - np.maximum(rest[:, 1], box[1]))
        for j in np.flatnonzero(depth > tolerance):
            pairs.append((i, i + 1 + int(j), float(depth[j])))
    return pairs


def verify(manifest, tolerance_scale=DEFAULT_TOLERANCE_SCALE):
    tolerance = tolerance_scale * manifest.unit
    target = manifest.target
    items = list(manifest.squares) + list(manifest.leftovers)
    squares = len(manifest.squares)

    def label(index):
        if index < squares:
            return f"square {manifest.squares[index].n}"
        return f"leftover {index - squares}"

    violations = []

    pairs = sweep_overlaps(items, tolerance)
    max_depth = max((depth for _, _, depth in pairs), default=0.0)
    overlaps = [{"kind": "overlap", "ids": [label(i), label(j)], "magnitude": depth}
                for i, j, depth in pairs[:MAX_REPORTED]]
    truncated = max(0, len(pairs) - MAX_REPORTED)

    contained = True
    for index, box in enumerate(_boxes(items)):
        protrusion = max(target.x0 - box[0], target.y0 - box[1],
                         box[2] - target.x1, box[3] - target.y1)
        if protrusion > tolerance:
            contained = False
            violations.append({"kind": "containment", "ids": [label(index)],
                               "magnitude": protrusion})

    target_area = target.area
    area_gap = target_area - math.fsum(item.area for item in items)
    covered = abs(area_gap) <= AREA_TOLERANCE[manifest.kind] * target_area
    if not covered:
        violations.append({"kind": "area", "ids": ["target"], "magnitude": area_gap})

    delta = 1 - manifest.t
    budget_value = perim_delta(manifest.leftovers, delta)
    bound = manifest.stats.get("budget_bound")
    within = None
    if manifest.strict_budget:
        within = bound is not None and holds(budget_value, bound)
        if not within:
            violations.append({"kind": "budget", "ids": ["leftovers"],
                               "magnitude": budget_value})
    budget = {"perim_delta_free": budget_value, "bound_value": bound, "within": within}

    max_width = max((r.w for r in manifest.leftovers), default=0.0)
    lattice_bounds = None
    if manifest.kind == "lattice":
        lattice_bounds = True
        if not holds(max_width, 2 * manifest.unit):
            lattice_bounds = False
            violations.append({"kind": "width", "ids": ["leftovers"], "magnitude": max_width})
        leftover_perimeter = perim(manifest.leftovers)
        if not holds(leftover_perimeter, 25 * manifest.M * manifest.unit):
            lattice_bounds = False
            violations.append({"kind": "perimeter", "ids": ["leftovers"],
                               "magnitude": leftover_perimeter})

    violations += overlaps
    violations.sort(key=lambda v: (v["kind"], v["ids"]))
    logger.info("verified %d squares and %d leftovers: %d overlapping pairs, %d other violations",
                squares, len(manifest.leftovers), len(pairs), len(violations) - len(overlaps))

    return VerificationReport(
        disjoint=not pairs,
        contained=contained,
        covered=covered,
        area_gap=area_gap,
        max_overlap_depth=max_depth,
        tolerance=tolerance,
        budget=budget,
        max_leftover_width=max_width,
        lattice_bounds=lattice_bounds,
        violations=violations,
        truncated=truncated,
    )
