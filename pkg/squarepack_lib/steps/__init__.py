# SPDX-License-Identifier: BSD-2-Clause

import json
import math

from .. import UsageError
from ..config import settings_from_config
from ..sequence import PackParams, parse_family


__all__ = ["StepBase", "add_family_argument", "add_parameter_arguments", "print_json"]


class StepBase:
    """Shared plumbing: settings from the project file, and flag defaults from
    ``[squarepack.defaults]``."""

    def __init__(self, config):
        self.defaults = config["squarepack"].get("defaults", {})
        self.settings = settings_from_config(config)

    def settings_for(self, args):
        return self.settings.with_precision(getattr(args, "precision", None))

    def family(self, args, index_limit=None):
        return parse_family(args.family, index_limit, self.settings_for(args))

    def params(self, args, n_max=None):
        if args.t is None or args.M is None or args.n0 is None:
            raise UsageError("--t, --M and --n0 are required (or set them in "
                             "`[squarepack.defaults]`)")
        n_max = args.n0 if n_max is None else n_max
        try:
            return PackParams(args.t, args.M, args.n0, n_max, getattr(args, "K", None))
        except ValueError as e:
            raise UsageError(str(e))


def add_family_argument(parser, defaults, default="ap:q=1,r=0"):
    parser.add_argument(
        "--family", default=defaults.get("family", default),
        help="side family: `ap:q=..,r=..`, `prime`, `twinprime:cprime=..` or `powerlog:a=..,b=..`")


def add_parameter_arguments(parser, defaults, *, nmax=False):
    parser.add_argument("--t", type=float, default=defaults.get("t"),
                        help="exponent, in (1/2, 1)")
    parser.add_argument("--M", type=int, default=defaults.get("M"),
                        help="lattice scale")
    parser.add_argument("--n0", type=int, default=defaults.get("n0"),
                        help="first index")
    if nmax:
        parser.add_argument("--nmax", type=int, default=defaults.get("nmax"),
                            help="pack indices below this one (default: n0)")
    parser.add_argument("--precision", choices=["double", "extended"], default=None,
                        help="precision of tail and partial sums")


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


def print_json(data):
    print(json.dumps(_jsonable(data), indent=2))
