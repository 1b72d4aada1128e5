# SPDX-License-Identifier: BSD-2-Clause

from .. import UsageError
from ..conditions import (corollary31_bounds, corollary46_bounds, asymptotic_ap_bound,
                          TABLE1, DEFAULT_THETA)
from ..sequence import parse_family
from ..tables import format_table
from . import StepBase, add_family_argument, print_json


__all__ = ["BoundsStep", "table1_rows"]


def table1_rows():
    rows = []
    for t, published in TABLE1.items():
        bounds = corollary31_bounds(1, 0, t)
        computed = bounds.N0_min.ceil_log10()
        rows.append({"t": t, "published": published, "computed": computed,
                     "log10_N0_min": bounds.log10_N0, "M_min": str(bounds.M_min),
                     "dominant": bounds.dominant, "match": abs(computed - published) <= 1})
    return rows


class BoundsStep(StepBase):
    """Compute the smallest admissible M and N0 for arithmetic progressions or primes."""

    def build_cli_parser(self, parser):
        add_family_argument(parser, self.defaults)
        default_t = self.defaults.get("t")
        parser.add_argument("--t", type=float, nargs="+",
                            default=None if default_t is None else [default_t],
                            help="exponents, each in (1/2, 1)")
        parser.add_argument("--theta", type=float, default=DEFAULT_THETA,
                            help="prime gap exponent")
        parser.add_argument("--n-theta", type=int, default=None,
                            help="index past which prime gaps stay below p^theta")
        parser.add_argument("--table1", action="store_true", default=False,
                            help="reproduce the published table of N0 for f(n) = n")
        parser.add_argument("--asymptotic", action="store_true", default=False,
                            help="also print the sufficient N0 for t close to 1")
        parser.add_argument("--json", action="store_true", default=False,
                            help="print JSON instead of tables")

    def _bounds(self, args, t):
        if not 0.5 < t < 1:
            raise UsageError(f"Exponent t must lie in (1/2, 1), not {t!r}")
        name = args.family.partition(":")[0]
        if name == "ap":
            fam = parse_family(args.family)
            return corollary31_bounds(fam.q, fam.r, t)
        if name == "prime":
            try:
                return corollary46_bounds(t, args.theta, args.n_theta)
            except ValueError as e:
                raise UsageError(str(e))
        raise UsageError(f"Bounds are only known for `ap` and `prime` families, "
                         f"not `{args.family}`")

    def run_cli(self, args):
        if args.table1:
            rows = table1_rows()
            if args.json:
                print_json(rows)
            else:
                print(format_table(
                    ["t", "published", "computed", "log10 N0", "M_min", "dominant", "match"],
                    [[row["t"], row["published"], row["computed"], f"{row['log10_N0_min']:.3f}",
                      row["M_min"], row["dominant"], "yes" if row["match"] else "NO"]
                     for row in rows]))
            return 0 if all(row["match"] for row in rows) else 1

        if not args.t:
            raise UsageError("--t is required unless --table1 is given")
        results = [self._bounds(args, t) for t in args.t]
        asymptotic = {}
        if args.asymptotic:
            for t in args.t:
                bound, rough = asymptotic_ap_bound(t)
                asymptotic[t] = {"log10_bound": bound.log10, "log10_rough": rough.log10}

        if args.json:
            data = [bounds.as_dict() for bounds in results]
            for entry in data:
                if entry["t"] in asymptotic:
                    entry["asymptotic"] = asymptotic[entry["t"]]
            print_json(data)
        else:
            for bounds in results:
                print(bounds.as_table())
                if bounds.t in asymptotic:
                    values = asymptotic[bounds.t]
                    print(f"t -> 1 sufficient N0: log10 {values['log10_bound']:.3f} "
                          f"(rough form: log10 {values['log10_rough']:.3f})")
                print()
        return 0
