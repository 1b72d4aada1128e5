# SPDX-License-Identifier: BSD-2-Clause

from ..manifest import PlacementManifest
from ..render import write_svg
from . import StepBase


__all__ = ["RenderStep"]


class RenderStep(StepBase):
    """Draw a placement manifest as SVG."""

    def build_cli_parser(self, parser):
        parser.add_argument("manifest", help="manifest written by `pack`")
        parser.add_argument("--svg", required=True, help="output file")

    def run_cli(self, args):
        write_svg(PlacementManifest.read(args.manifest), args.svg)
        return 0
