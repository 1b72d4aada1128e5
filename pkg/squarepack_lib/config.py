# SPDX-License-Identifier: BSD-2-Clause

import os
from dataclasses import dataclass, replace

import tomli
import jsonschema

from . import SquarePackError


__all__ = ["Settings", "config_schema", "parse_config", "parse_config_file", "settings_from_config"]


DEFAULT_SIEVE_LIMIT = 4_000_000_000
DEFAULT_SEGMENT_SIZE = 1 << 20
DEFAULT_TOLERANCE_SCALE = 1e-9


@dataclass(frozen=True)
class Settings:
    precision: str = "double"
    sieve_limit: int = DEFAULT_SIEVE_LIMIT
    segment_size: int = DEFAULT_SEGMENT_SIZE
    tolerance_scale: float = DEFAULT_TOLERANCE_SCALE

    @property
    def extended(self):
        return self.precision == "extended"

    def with_precision(self, precision):
        if precision is None:
            return self
        return replace(self, precision=precision)


config_schema = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "https://squarepack.invalid/meta/squarepack.toml.schema.json",
    "title": "squarepack.toml",
    "type": "object",
    "properties": {
        "squarepack": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "precision": {
                    "enum": ["double", "extended"]
                },
                "sieve_limit": {
                    "type": "integer",
                    "minimum": 2,
                },
                "segment_size": {
                    "type": "integer",
                    "minimum": 1024,
                },
                "tolerance_scale": {
                    "type": "number",
                    "exclusiveMinimum": 0,
                },
                "steps": {
                    "type": "object",
                    "patternProperties": {
                        ".+": {
                            "type": "string",
                            "pattern": "^[A-Za-z_][A-Za-z0-9_.]*:[A-Za-z_][A-Za-z0-9_]*$"
                        }
                    }
                },
                "defaults": {
                    "type": "object",
                    "additionalProperties": False,
                    "properties": {
                        "family": {
                            "type": "string",
                            "pattern": "^(ap|prime|twinprime|powerlog)(:.*)?$"
                        },
                        "t": {
                            "type": "number",
                            "exclusiveMinimum": 0.5,
                            "exclusiveMaximum": 1,
                        },
                        "M": {
                            "type": "integer",
                            "minimum": 1,
                        },
                        "n0": {
                            "type": "integer",
                            "minimum": 1,
                        },
                        "nmax": {
                            "type": "integer",
                            "minimum": 1,
                        },
                    }
                },
            }
        }
    }
}


def _ensure_squarepack_root():
    if "SQUAREPACK_ROOT" not in os.environ:
        os.environ["SQUAREPACK_ROOT"] = os.getcwd()
    return os.environ["SQUAREPACK_ROOT"]


def parse_config():
    """Read ``squarepack.toml`` from the project root; a missing file means defaults."""
    squarepack_root = _ensure_squarepack_root()
    config_file = os.path.join(squarepack_root, "squarepack.toml")
    if not os.path.exists(config_file):
        return {"squarepack": {}}
    return parse_config_file(config_file)


def parse_config_file(config_file):
    with open(config_file, "rb") as f:
        config_dict = tomli.load(f)

    try:
        jsonschema.validate(config_dict, config_schema)
    except jsonschema.ValidationError as e:
        raise SquarePackError(f"Syntax error in `squarepack.toml` at "
                              f"`{'.'.join(str(p) for p in e.path)}`: {e.message}")
    config_dict.setdefault("squarepack", {})
    return config_dict


def settings_from_config(config, environ=None):
    environ = os.environ if environ is None else environ
    section = config.get("squarepack", {})
    sieve_limit = section.get("sieve_limit", DEFAULT_SIEVE_LIMIT)
    if "PACKER_SIEVE_LIMIT" in environ:
        try:
            sieve_limit = int(float(environ["PACKER_SIEVE_LIMIT"]))
        except ValueError:
            raise SquarePackError(f"Environment variable `PACKER_SIEVE_LIMIT` must be an "
                                  f"integer, not {environ['PACKER_SIEVE_LIMIT']!r}")
    segment_size = section.get("segment_size", DEFAULT_SEGMENT_SIZE)
    if segment_size & (segment_size - 1):
        raise SquarePackError(f"Key `squarepack.segment_size` must be a power of two, "
                              f"not {segment_size}")
    return Settings(
        precision=section.get("precision", "double"),
        sieve_limit=sieve_limit,
        segment_size=segment_size,
        tolerance_scale=section.get("tolerance_scale", DEFAULT_TOLERANCE_SCALE),
    )
