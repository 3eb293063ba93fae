"""Bipartite belt periodicity engine."""

import json

from ._core import (
    LaurentPoly,
    ZamobeltError,
    catalog_names,
    catalog_version,
    colored_census,
    frozen_isomorphism,
    half_period,
    is_recurrent,
    mutate,
    run_belt,
    tropical_period,
)
from . import _core


def bigraph(target):
    """Bigraph description for a catalog name or inline JSON document."""
    return json.loads(_core.bigraph_json(target))


def green_certificates(target):
    return json.loads(_core.green_certificates(target))


def run_experiment(command, target="", **options):
    """Runs one CLI experiment; returns (exit_code, report dict or CSV text)."""
    config = {"command": command, "target": target}
    for key, value in options.items():
        parts = key.split("_")
        config[parts[0] + "".join(p.title() for p in parts[1:])] = value
    code, document = _core.run_experiment(json.dumps(config))
    if config.get("format") == "csv":
        return code, document
    return code, json.loads(document)


__all__ = [
    "LaurentPoly",
    "ZamobeltError",
    "bigraph",
    "catalog_names",
    "catalog_version",
    "colored_census",
    "frozen_isomorphism",
    "green_certificates",
    "half_period",
    "is_recurrent",
    "mutate",
    "run_belt",
    "run_experiment",
    "tropical_period",
]
