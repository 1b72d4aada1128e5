# SPDX-License-Identifier: BSD-2-Clause

from .. import UsageError
from ..manifest import PlacementManifest
from ..verifier import verify
from . import StepBase, print_json


__all__ = ["VerifyStep"]


class VerifyStep(StepBase):
    """Check a placement manifest for overlaps, containment, exact cover and budgets."""

    def build_cli_parser(self, parser):
        parser.add_argument("manifest", help="manifest written by `pack`")
        parser.add_argument("--tolerance-scale", type=float, default=None,
                            help="overlap tolerance in units of f(n0)^-t")
        parser.add_argument("--json", action="store_true", default=False,
                            help="print the report as JSON")

    def run_cli(self, args):
        tolerance_scale = args.tolerance_scale
        if tolerance_scale is None:
            tolerance_scale = self.settings.tolerance_scale
        elif not tolerance_scale > 0:
            raise UsageError(f"--tolerance-scale must be positive, not {tolerance_scale!r}")

        report = verify(PlacementManifest.read(args.manifest), tolerance_scale)
        if args.json:
            print_json(report.as_dict())
        else:
            print(report.summary())
        return 0 if report.ok else 1
