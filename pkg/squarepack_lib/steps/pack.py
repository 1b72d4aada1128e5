# SPDX-License-Identifier: BSD-2-Clause

import logging

from .. import UsageError, IndexBeyondSieve
from ..packing import run
from ..render import write_svg
from . import StepBase, add_family_argument, add_parameter_arguments


__all__ = ["PackStep"]


logger = logging.getLogger(__name__)


class PackStep(StepBase):
    """Pack squares f(n)^-t, n0 <= n < nmax, into a square and write the manifest."""

    def build_cli_parser(self, parser):
        add_family_argument(parser, self.defaults)
        add_parameter_arguments(parser, self.defaults, nmax=True)
        parser.add_argument("--K", type=float, default=None,
                            help="record the per-step budget increment bound for this K")
        parser.add_argument("--strict-budget", action="store_true", default=False,
                            help="fail as soon as the weighted perimeter leaves its budget")
        parser.add_argument("--out", default=None, help="write the manifest here")
        parser.add_argument("--svg", default=None, help="also render the manifest here")

    def run_cli(self, args):
        nmax = args.n0 if args.nmax is None else args.nmax
        params = self.params(args, nmax)
        # a single step may run past nmax; the table grows until the run fits in it
        index_limit = params.n_max + 2 * params.window + 2
        while True:
            fam = self.family(args, index_limit=index_limit)
            if params.n0 < fam.min_index:
                raise UsageError(f"Family `{fam.spec}` starts at index {fam.min_index}, "
                                 f"not {params.n0}")
            try:
                manifest, report = run(fam, params, args.strict_budget, self.settings_for(args))
                break
            except IndexBeyondSieve as e:
                index_limit = max(2 * index_limit, e.index + 1)
                logger.info("index %d lies past the table, rebuilding it for %d indices",
                            e.index, index_limit)
        print(report.summary())
        if args.out:
            manifest.write(args.out)
            logger.info("wrote manifest with %d squares to %s", len(manifest.squares), args.out)
        if args.svg:
            write_svg(manifest, args.svg)
        return 0 if report.completed else 2
