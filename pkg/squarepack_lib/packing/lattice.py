# SPDX-License-Identifier: BSD-2-Clause

import logging
from dataclasses import dataclass

import numpy as np

from .. import PreconditionViolated
from ..geometry import LocalFrame, perim, perim_delta, area
from ..manifest import PlacementManifest


__all__ = ["LatticePacking", "pack_bounded_rect", "holds", "derivative_condition",
           "growth_condition", "gap_condition", "RELATIVE_SLACK"]


logger = logging.getLogger(__name__)


RELATIVE_SLACK = 1e-12
# leftover extents at or below this multiple of the unit are rounding dust
DUST = 1e-15


def holds(lhs, rhs):
    """``lhs <= rhs`` up to ``RELATIVE_SLACK``."""
    return lhs <= rhs + RELATIVE_SLACK * abs(rhs)


def derivative_condition(fam, params, n0):
    """``max f'`` on ``[n0, n0 + 9M^2]`` against ``f(n0) / (4752 M^4)``."""
    M = params.M
    lhs = fam.max_derivative(n0, n0 + params.window)
    rhs = fam.eval_f(n0) / (4752 * M ** 4)
    return lhs, rhs


def growth_condition(fam, params, n0):
    """``f(n0 + 9M^2)`` against ``(264 M^2)^{1/t} f(n0)``."""
    lhs = fam.eval_smooth(n0 + params.window)
    rhs = (264 * params.M ** 2) ** (1 / params.t) * fam.eval_f(n0)
    return lhs, rhs


def gap_condition(fam, params, n0):
    """Hypothesis under which every inter-square gap has nonnegative extent:
    ``9M^2 max(f' f^{-t-1}) <= f(n0 + 9M^2)^{-t}``."""
    t = params.t
    lhs = params.window * fam.max_derivative(n0, n0 + params.window) * fam.eval_f(n0) ** (-t - 1)
    rhs = fam.eval_smooth(n0 + params.window) ** -t
    return lhs, rhs


@dataclass
class LatticePacking:
    squares: list
    leftovers: list
    n0_prime: int
    M1: int
    M2: int
    unit: float

    @property
    def count(self):
        return self.M1 * self.M2

    @property
    def leftover_perimeter(self):
        return perim(self.leftovers)

    def to_manifest(self, rect, fam, params, n0):
        """Wrap the packing of ``rect`` as a manifest the verifier and renderer accept."""
        return PlacementManifest(
            kind="lattice", family=fam.spec, t=params.t, M=params.M, n0=n0,
            n_reached=self.n0_prime, unit=self.unit, target=rect,
            squares=list(self.squares), leftovers=list(self.leftovers),
            stats={"perim_delta": perim_delta(self.leftovers, params.delta),
                   "budget_bound": None,
                   "area_packed": area(self.squares),
                   "area_free": area(self.leftovers)})


def _grid_size(extent, unit, M):
    k = int(extent // unit)
    if k * unit > extent:
        k -= 1
    return min(max(k, M), 3 * M)


def pack_bounded_rect(rect, fam, params, n0):
    """Fill ``rect`` with an ``M1 x M2`` near-lattice of the squares ``n0, n0+1, ...``.

    Square ``(i, j)`` carries index ``n0 + j M1 + i``. Each row is pushed
    flush against the right side of ``rect`` and each column is stacked from
    the bottom, so rows of shrinking squares leave staircase gaps between
    them; those gaps, the strips left of each row and above each column, and
    the top left corner are returned as tagged leftover rectangles.
    """
    t, M = params.t, params.M
    unit = fam.side(n0, t)
    w, h = rect.w, rect.h

    if not holds(M * unit, w):
        raise PreconditionViolated("eccentricity", M * unit, w)
    if not holds(h, 3 * M * unit):
        raise PreconditionViolated("eccentricity", h, 3 * M * unit)
    lhs, rhs = derivative_condition(fam, params, n0)
    if not holds(lhs, rhs):
        raise PreconditionViolated("condition (7)", lhs, rhs)
    lhs, rhs = growth_condition(fam, params, n0)
    if not holds(lhs, rhs):
        raise PreconditionViolated("condition (8)", lhs, rhs)

    M1 = _grid_size(w, unit, M)
    M2 = _grid_size(h, unit, M)
    sides = fam.sides(n0, M1 * M2, t).reshape(M2, M1)

    # x[j, i]: left edge of square (i, j); x[j, M1] = w
    x = np.empty((M2, M1 + 1))
    x[:, M1] = w
    x[:, :M1] = w - np.cumsum(sides[:, ::-1], axis=1)[:, ::-1]
    # y[j, i]: bottom edge of square (i, j); y[M2, i] is the top of column i
    y = np.zeros((M2 + 1, M1))
    y[1:, :] = np.cumsum(sides, axis=0)

    frame = LocalFrame(rect)
    squares = []
    for j in range(M2):
        for i in range(M1):
            squares.append(frame.square(n0 + j * M1 + i, float(x[j, i]), float(y[j, i]),
                                        float(sides[j, i])))

    leftovers = []
    dust = DUST * unit
    tolerance = RELATIVE_SLACK * unit

    def leftover(u0, v0, u1, v1, tag):
        du, dv = u1 - u0, v1 - v0
        if du < -tolerance or dv < -tolerance:
            raise PreconditionViolated(f"{tag} extent", min(du, dv), 0.0)
        if du <= dust or dv <= dust:
            return
        try:
            leftovers.append(frame.rect(float(u0), float(v0), float(u1), float(v1), tag))
        except ValueError:
            # collapsed when shifted to absolute coordinates
            pass

    for j in range(M2 - 1):
        for i in range(M1 - 1):
            leftover(x[j, i + 1], y[j + 1, i + 1], x[j + 1, i + 1], y[j + 1, i], "TypeII")
    for j in range(M2):
        leftover(0.0, y[j, 0], x[j, 0], y[j + 1, 0], "TypeIII")
    for i in range(M1):
        leftover(x[M2 - 1, i], y[M2, i], x[M2 - 1, i + 1], h, "TypeIV")
    leftover(0.0, y[M2, 0], x[M2 - 1, 0], h, "TypeV")

    packing = LatticePacking(squares, leftovers, n0 + M1 * M2, M1, M2, unit)
    if packing.leftover_perimeter > 25 * M * unit:
        logger.warning("leftover perimeter %r exceeds 25 M f(n0)^-t = %r at n0=%d",
                       packing.leftover_perimeter, 25 * M * unit, n0)
    logger.debug("packed %dx%d lattice from n0=%d into %r", M1, M2, n0, rect)
    return packing
