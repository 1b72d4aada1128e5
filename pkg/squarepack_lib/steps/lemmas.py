# SPDX-License-Identifier: BSD-2-Clause

from .. import UsageError
from ..conditions import check_prime_sum_lemmas, DEFAULT_THETA
from . import StepBase, print_json


__all__ = ["LemmasStep"]


class LemmasStep(StepBase):
    """Check the prime power-sum inequalities by direct summation over the sieve."""

    def build_cli_parser(self, parser):
        parser.add_argument("--t", type=float, nargs="+", default=[0.55, 0.6, 0.75, 0.9],
                            help="exponents, each in (1/2, 1)")
        parser.add_argument("--x", type=int, nargs="+", default=[10 ** 3, 10 ** 4, 10 ** 5,
                                                                 10 ** 6],
                            help="sample points (indices), each at least 2")
        parser.add_argument("--theta", type=float, default=DEFAULT_THETA,
                            help="gap exponent for the empirical N_theta")
        parser.add_argument("--json", action="store_true", default=False,
                            help="print JSON instead of a table")

    def run_cli(self, args):
        for t in args.t:
            if not 0.5 < t < 1:
                raise UsageError(f"Exponent t must lie in (1/2, 1), not {t!r}")
        if min(args.x) < 2:
            raise UsageError("Sample points must be at least 2")

        report = check_prime_sum_lemmas(args.t, args.x, settings=self.settings, theta=args.theta)
        if args.json:
            print_json(report.as_dict())
        else:
            print(report.as_table())
        return 0 if report.unconditional_ok else 1
