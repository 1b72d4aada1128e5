# SPDX-License-Identifier: BSD-2-Clause

import math

from .. import UsageError
from ..conditions import ap_profile, prime_profile, check_ten_conditions
from . import StepBase, add_family_argument, add_parameter_arguments, print_json


__all__ = ["CheckConditionsStep"]


class CheckConditionsStep(StepBase):
    """Evaluate both sides of the ten packing conditions at a concrete n0."""

    def build_cli_parser(self, parser):
        add_family_argument(parser, self.defaults)
        add_parameter_arguments(parser, self.defaults)
        parser.add_argument("--json", action="store_true", default=False,
                            help="print JSON instead of a table")

    def run_cli(self, args):
        params = self.params(args)
        name = args.family.partition(":")[0]
        if name not in ("ap", "prime"):
            raise UsageError(f"No bound profile is known for `{args.family}`; "
                             f"use an `ap` or `prime` family")
        # condition (1) looks at (1 + l) n0 and conditions (7), (8) at n0 + 9M^2
        index_limit = math.ceil(1.1 * params.n0) + params.window + 2
        fam = self.family(args, index_limit)
        profile = prime_profile(params.t) if name == "prime" else ap_profile(fam.q, fam.r, params.t)

        report = check_ten_conditions(fam, profile, params, settings=self.settings_for(args))
        if args.json:
            print_json(report.as_dict())
        else:
            print(report.as_table())
        return 0 if report.overall else 1
