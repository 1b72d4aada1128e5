# SPDX-License-Identifier: BSD-2-Clause

import math
import time
import logging
from dataclasses import dataclass, field

from .. import (PreconditionViolated, NoWideRectangle, EccentricityGateFailed, ContractViolation,
                 _GateError)
from ..geometry import Rect, LocalFrame, area, perim_delta
from ..manifest import PlacementManifest
from ..sequence import TwinPrimeFamily, APFamily, tail_enclosure, partial_sum, direct_sum
from .lattice import pack_bounded_rect, holds, DUST


__all__ = ["PackingState", "StepRecord", "PackReport", "init_target", "select_rect",
           "cut_and_slice", "step", "run", "build_manifest"]


logger = logging.getLogger(__name__)


# slack when deciding whether the remaining height still holds two slices
SLICE_SLACK = 1e-12
CONSERVATION_TOLERANCE = 1e-10
CONSERVATION_INTERVAL = 100


@dataclass
class StepRecord:
    selected: Rect
    slices: int
    n_start: int
    n_end: int
    budget_before: float
    budget_after: float
    increment_bound: float = None

    @property
    def budget_increment(self):
        return self.budget_after - self.budget_before


@dataclass
class PackingState:
    """The free rectangle family, the squares placed so far and the next index."""
    target: Rect
    free: list
    n_cur: int
    placed: list = field(default_factory=list)
    budget_delta: float = 0.0
    steps: int = 0
    last_step: StepRecord = None


@dataclass
class PackReport:
    outcome: str
    n_reached: int
    steps: int
    squares: int
    free: int
    perim_delta: float
    budget_bound: float
    area_packed: float
    area_free: float
    wall_time: float
    reason: str = None
    gate: str = None

    @property
    def completed(self):
        return self.outcome == "Completed"

    def summary(self):
        lines = [f"Outcome:       {self.outcome}"]
        if self.reason:
            lines.append(f"Reason:        {self.reason}")
        lines += [
            f"n reached:     {self.n_reached}",
            f"Steps:         {self.steps}",
            f"Squares:       {self.squares}",
            f"Free rects:    {self.free}",
            f"perim_delta:   {self.perim_delta:.6e}",
        ]
        if self.budget_bound is not None:
            lines.append(f"Budget bound:  {self.budget_bound:.6e}")
        lines += [
            f"Area packed:   {self.area_packed:.12e}",
            f"Area free:     {self.area_free:.12e}",
            f"Wall time:     {self.wall_time:.2f}s",
        ]
        return "\n".join(lines)


def _sizing_family(fam, n0):
    if isinstance(fam, TwinPrimeFamily):
        threshold = fam.envelope_threshold()
        if n0 < threshold:
            raise PreconditionViolated("twin envelope", n0, threshold, n_reached=n0)
        return fam.envelope()
    return fam


def init_target(fam, params, settings=None):
    """Start state: a single free square whose area is the tail ``sum_{n >= n0} f(n)^{-2t}``.

    Families whose tails are only enclosed use the upper end of the enclosure.
    """
    n0 = params.n0
    if n0 < fam.min_index:
        raise PreconditionViolated("starting index", fam.min_index, n0, n_reached=n0)
    enclosure = tail_enclosure(_sizing_family(fam, n0), n0, 2 * params.t, settings)
    total = enclosure.value if isinstance(fam, APFamily) else enclosure.upper
    side = math.sqrt(total)
    target = Rect(0.0, 0.0, side, side, "target")
    logger.info("target square of side %r for %s from n0=%d", side, fam.spec, n0)
    return PackingState(target=target, free=[target], n_cur=n0,
                        budget_delta=perim_delta([target], params.delta))


def select_rect(state, params, fam):
    """Index of the widest free rectangle, provided it is at least ``2M f(n_cur)^-t`` wide.

    Equal widths resolve to the earliest rectangle in the free list.
    """
    if not state.free:
        raise NoWideRectangle(2 * params.M * fam.side(state.n_cur, params.t), 0.0,
                              n_reached=state.n_cur)
    best = 0
    for index, rect in enumerate(state.free):
        if rect.w > state.free[best].w:
            best = index
    needed = 2 * params.M * fam.side(state.n_cur, params.t)
    widest = state.free[best].w
    if not holds(needed, widest):
        raise NoWideRectangle(needed, widest, n_reached=state.n_cur)
    return best


def cut_and_slice(rect, params, fam, n_cur):
    """Cut a strip of width ``M f(n_cur)^-t`` off ``rect`` and slice it.

    Returns the remainder ``R0`` (``None`` when nothing is left) and the
    slices, bottom to top along the height of ``rect``: squares of side
    ``M f(n_cur)^-t`` while at least two of them fit, then one last slice
    of height in ``[M f^-t, 2M f^-t)``.
    """
    strip = params.M * fam.side(n_cur, params.t)
    w, h = rect.w, rect.h
    if not holds(2 * strip, w):
        raise PreconditionViolated("wide rectangle", 2 * strip, w, n_reached=n_cur)

    frame = LocalFrame(rect)
    remainder = None
    if w - strip > DUST * strip:
        remainder = frame.rect(strip, 0.0, w, h, "R0")

    slices = []
    k = 0
    while h - k * strip >= 2 * strip * (1 - SLICE_SLACK):
        slices.append(frame.rect(0.0, k * strip, strip, (k + 1) * strip, "slice"))
        k += 1
    slices.append(frame.rect(0.0, k * strip, strip, h, "slice"))
    return remainder, slices


def step(state, params, fam):
    """Select a wide rectangle, cut it, and lattice-pack every slice in turn.

    The state is only updated once every slice has been packed.
    """
    if state.n_cur >= params.n_max:
        raise ContractViolation(f"step called with n_cur={state.n_cur} at or past "
                                f"n_max={params.n_max}", n_reached=state.n_cur)
    t, M = params.t, params.M
    n_start = state.n_cur
    index = select_rect(state, params, fam)
    selected = state.free[index]
    remainder, slices = cut_and_slice(selected, params, fam, n_start)

    selected_side = fam.side(n_start, t)
    n = n_start
    placed = []
    added = [] if remainder is None else [remainder]
    for slice_index, rect in enumerate(slices):
        current_side = fam.side(n, t)
        if not holds(2 * selected_side, 3 * current_side):
            raise EccentricityGateFailed(slice_index, 2 * selected_side, 3 * current_side,
                                         n_reached=n)
        try:
            packing = pack_bounded_rect(rect, fam, params, n)
        except PreconditionViolated as e:
            e.n_reached = n
            raise
        if not M * M <= packing.count <= params.window:
            raise ContractViolation(f"lattice at n={n} consumed {packing.count} indices, "
                                    f"outside [{M * M}, {params.window}]", n_reached=n)
        placed.extend(packing.squares)
        added.extend(packing.leftovers)
        n = packing.n0_prime

    budget_before = state.budget_delta
    budget_after = (budget_before - perim_delta([selected], params.delta) +
                    perim_delta(added, params.delta))
    increment_bound = None
    if params.K is not None:
        increment_bound = (50 / (params.K ** (t * (2 - t)) * M) *
                           direct_sum(fam, n_start, n, t + params.delta * t))

    state.free = state.free[:index] + state.free[index + 1:] + added
    state.placed.extend(placed)
    state.n_cur = n
    state.budget_delta = budget_after
    state.steps += 1
    state.last_step = StepRecord(selected, len(slices), n_start, n, budget_before,
                                 budget_after, increment_bound)
    logger.debug("step %d: %d slices, indices [%d, %d)", state.steps, len(slices), n_start, n)
    return state


def _check_conservation(state):
    target_area = state.target.area
    covered = math.fsum([area(state.free), area(state.placed)])
    if abs(covered - target_area) > CONSERVATION_TOLERANCE * target_area:
        raise ContractViolation(f"area not conserved after step {state.steps}: free plus "
                                f"placed is {covered!r}, target is {target_area!r}",
                                n_reached=state.n_cur)


def build_manifest(state, fam, params, kind="recursive", strict_budget=False, budget_bound=None):
    return PlacementManifest(
        kind=kind,
        family=fam.spec,
        t=params.t,
        M=params.M,
        n0=params.n0,
        n_reached=state.n_cur,
        unit=fam.side(params.n0, params.t),
        strict_budget=strict_budget,
        target=state.target,
        squares=list(state.placed),
        leftovers=list(state.free),
        stats={
            "perim_delta": state.budget_delta,
            "budget_bound": budget_bound,
            "area_packed": area(state.placed),
            "area_free": area(state.free),
        },
    )


def run(fam, params, strict_budget=False, settings=None):
    """Pack the squares ``n0 <= n < n_max`` into the target square.

    Steps until ``n_max`` is reached or a gate fails; a failed gate ends the
    run with a ``Failed`` report rather than an exception. With
    ``strict_budget`` the weighted perimeter of the free family is held to
    ``M^{-1+delta/2} sum_{n < n_cur} f(n)^{-t-delta t}`` after every step.
    """
    started = time.perf_counter()
    t, M = params.t, params.M
    exponent = t + params.delta * t
    scale = M ** (-1 + params.delta / 2)

    state = init_target(fam, params, settings)
    budget_sum = partial_sum(fam, params.n0, exponent, settings) if strict_budget else None
    reason = gate = n_failed = None
    try:
        while state.n_cur < params.n_max:
            n_before = state.n_cur
            step(state, params, fam)
            if strict_budget:
                budget_sum += direct_sum(fam, n_before, state.n_cur, exponent, settings)
                if state.budget_delta > scale * budget_sum:
                    raise ContractViolation(f"weighted perimeter {state.budget_delta!r} exceeds "
                                            f"the budget {scale * budget_sum!r}",
                                            n_reached=state.n_cur)
            if state.steps % CONSERVATION_INTERVAL == 0:
                _check_conservation(state)
                logger.info("step %d: n_cur=%d, %d free rectangles", state.steps, state.n_cur,
                            len(state.free))
        _check_conservation(state)
    except _GateError as e:
        reason, gate = e.reason, type(e).__name__
        n_failed = state.n_cur if e.n_reached is None else e.n_reached
        logger.warning("packing stopped at n=%d: %s", n_failed, reason)

    if budget_sum is None:
        budget_sum = partial_sum(fam, state.n_cur, exponent, settings)
    budget_bound = scale * budget_sum
    manifest = build_manifest(state, fam, params, strict_budget=strict_budget,
                              budget_bound=budget_bound)
    report = PackReport(
        outcome="Failed" if reason else "Completed",
        n_reached=state.n_cur if reason is None else n_failed,
        steps=state.steps,
        squares=len(state.placed),
        free=len(state.free),
        perim_delta=state.budget_delta,
        budget_bound=budget_bound,
        area_packed=manifest.stats["area_packed"],
        area_free=manifest.stats["area_free"],
        wall_time=time.perf_counter() - started,
        reason=reason,
        gate=gate,
    )
    return manifest, report
