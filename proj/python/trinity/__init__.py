"""Smith normal forms, sandpile groups and spherical latin bitrades."""

import json

from ._trinity import (
    canonical_group,
    cokernel,
    enumerate_bitrades,
    group_text,
    parse_group_spec,
    smith_diagonal,
    snf,
)
from . import _trinity


def build_family(family, *params):
    """Family digraph document as a dict."""
    return json.loads(_trinity.build_family(family, list(params)))


def sandpile_group(document):
    """(free_rank, invariant_factors) of a digraph document (dict or JSON text)."""
    if not isinstance(document, str):
        document = json.dumps(document)
    return _trinity.sandpile_group(document)


def plan_group(spec):
    plan = _trinity.plan_group(spec)
    if plan["document"] is not None:
        plan["document"] = json.loads(plan["document"])
    return plan


def run_suite(suite, max=0):
    return json.loads(_trinity.run_suite(suite, max))


__all__ = [
    "build_family",
    "canonical_group",
    "cokernel",
    "enumerate_bitrades",
    "group_text",
    "parse_group_spec",
    "plan_group",
    "run_suite",
    "sandpile_group",
    "smith_diagonal",
    "snf",
]
