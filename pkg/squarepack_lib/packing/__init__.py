# SPDX-License-Identifier: BSD-2-Clause

from .lattice import (LatticePacking, pack_bounded_rect, holds, derivative_condition,
                      growth_condition, gap_condition)
from .recursive import (PackingState, StepRecord, PackReport, init_target, select_rect,
                        cut_and_slice, step, run, build_manifest)


__all__ = ["LatticePacking", "pack_bounded_rect", "holds", "derivative_condition",
           "growth_condition", "gap_condition",
           "PackingState", "StepRecord", "PackReport", "init_target", "select_rect",
           "cut_and_slice", "step", "run", "build_manifest"]
