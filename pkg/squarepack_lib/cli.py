# SPDX-License-Identifier: BSD-2-Clause

import sys
import inspect
import logging
import argparse
import importlib

from . import SquarePackError, UsageError
from .config import parse_config


__all__ = ["run", "DEFAULT_STEPS", "EXIT_OK", "EXIT_VIOLATIONS", "EXIT_FAILED", "EXIT_USAGE"]


logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_FAILED = 2
EXIT_USAGE = 64

DEFAULT_STEPS = {
    "pack": "squarepack_lib.steps.pack:PackStep",
    "bounds": "squarepack_lib.steps.bounds:BoundsStep",
    "check-conditions": "squarepack_lib.steps.conditions:CheckConditionsStep",
    "verify": "squarepack_lib.steps.verify:VerifyStep",
    "render": "squarepack_lib.steps.render:RenderStep",
    "lemmas": "squarepack_lib.steps.lemmas:LemmasStep",
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _get_cls_by_reference(reference, context):
    module_ref, _, class_ref = reference.partition(":")
    try:
        module_obj = importlib.import_module(module_ref)
    except ModuleNotFoundError:
        raise SquarePackError(f"Module `{module_ref}` referenced by {context} is not found")
    try:
        return getattr(module_obj, class_ref)
    except AttributeError:
        raise SquarePackError(f"Module `{module_ref}` referenced by {context} does not define "
                              f"`{class_ref}`") from None


def _build(config):
    references = dict(DEFAULT_STEPS)
    references.update(config["squarepack"].get("steps", {}))

    steps = {}
    for step_name, step_reference in references.items():
        step_cls = _get_cls_by_reference(step_reference, context=f"step `{step_name}`")
        try:
            steps[step_name] = step_cls(config)
        except SquarePackError:
            raise
        except Exception:
            raise SquarePackError(f"Encountered error while initializing step `{step_name}` "
                                  f"using `{step_reference}`")

    parser = _ArgumentParser(prog="squarepack")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress (-v) or debugging detail (-vv) to stderr")
    step_argument = parser.add_subparsers(dest="step", required=True)
    for step_name, step in steps.items():
        step_subparser = step_argument.add_parser(step_name, help=inspect.getdoc(step))
        try:
            step.build_cli_parser(step_subparser)
        except Exception:
            raise SquarePackError(f"Encountered error while building CLI argument parser for "
                                  f"step `{step_name}`")
    return steps, parser


def run(argv=None):
    """Entry point; returns the exit code: 0 success, 1 violations found, 2 failed run or
    runtime error, 64 usage error."""
    argv = sys.argv[1:] if argv is None else argv
    try:
        steps, parser = _build(parse_config())
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SquarePackError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s:%(name)s: %(message)s")

    try:
        return steps[args.step].run_cli(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SquarePackError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except Exception:
        logger.exception("Encountered error while running CLI for step `%s`", args.step)
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(run())
