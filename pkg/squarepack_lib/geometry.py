# SPDX-License-Identifier: BSD-2-Clause

import math
from dataclasses import dataclass, field


__all__ = ["Rect", "PlacedSquare", "LocalFrame", "perim", "perim_delta", "area"]


@dataclass(frozen=True)
class Rect:
    """An axis-aligned rectangle in absolute coordinates.

    Width is always the shorter side and height the longer one, whatever the
    orientation; ``tag`` labels leftover kinds and does not take part in
    comparison.
    """
    x0: float
    y0: float
    x1: float
    y1: float
    tag: str = field(default=None, compare=False)

    def __post_init__(self):
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ValueError(f"Rectangle [{self.x0!r}, {self.x1!r}] x [{self.y0!r}, {self.y1!r}] "
                             f"has no positive extent")

    @classmethod
    def square(cls, x, y, side, tag=None):
        return cls(x, y, x + side, y + side, tag)

    @property
    def dx(self):
        return self.x1 - self.x0

    @property
    def dy(self):
        return self.y1 - self.y0

    @property
    def w(self):
        return min(self.dx, self.dy)

    @property
    def h(self):
        return max(self.dx, self.dy)

    @property
    def area(self):
        return self.dx * self.dy

    @property
    def landscape(self):
        """True when the longer side runs along x."""
        return self.dx > self.dy

    def with_tag(self, tag):
        return Rect(self.x0, self.y0, self.x1, self.y1, tag)


@dataclass(frozen=True)
class PlacedSquare:
    n: int
    x: float
    y: float
    side: float

    def __post_init__(self):
        if not self.side > 0:
            raise ValueError(f"Square {self.n} has non-positive side {self.side!r}")

    @property
    def x1(self):
        return self.x + self.side

    @property
    def y1(self):
        return self.y + self.side

    @property
    def area(self):
        return self.side * self.side

    def as_rect(self):
        return Rect(self.x, self.y, self.x + self.side, self.y + self.side, "square")


def perim(rects):
    return 2.0 * math.fsum(r.w + r.h for r in rects)


def perim_delta(rects, delta):
    return math.fsum(r.w ** delta * r.h for r in rects)


def area(items):
    """Total area of rectangles or placed squares, accumulated with ``math.fsum``."""
    return math.fsum(item.area for item in items)


class LocalFrame:
    """Maps local ``(u, v)`` coordinates of a rectangle, ``u`` along its width and
    ``v`` along its height, to absolute ones."""

    def __init__(self, rect):
        self.x0 = rect.x0
        self.y0 = rect.y0
        self.transposed = rect.landscape

    def square(self, n, u, v, side):
        if self.transposed:
            return PlacedSquare(n, self.x0 + v, self.y0 + u, side)
        return PlacedSquare(n, self.x0 + u, self.y0 + v, side)

    def rect(self, u0, v0, u1, v1, tag=None):
        if self.transposed:
            return Rect(self.x0 + v0, self.y0 + u0, self.x0 + v1, self.y0 + u1, tag)
        return Rect(self.x0 + u0, self.y0 + v0, self.x0 + u1, self.y0 + v1, tag)
