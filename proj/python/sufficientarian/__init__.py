"""Python front end for the sufficientarian axiom checker.

Every command returns ``(exit_code, report)`` where ``report`` is the decoded
JSON report: exit code 0 means every checked property holds, 1 means one
fails and 2 means the input was rejected (see ``report["error"]``).
"""

import json

from . import _core
from ._core import fixture_names, leximin_compare, ordered_bell, reproduce_targets

__all__ = [
    "check",
    "derive",
    "enumerate",
    "fixture_names",
    "leximin_compare",
    "ordered_bell",
    "reproduce",
    "reproduce_targets",
    "search",
]


def _rule_text(rule):
    return rule if isinstance(rule, str) else json.dumps(rule)


def _names(axioms):
    if axioms is None:
        return ""
    return axioms if isinstance(axioms, str) else ",".join(axioms)


def _decode(result):
    code, text = result
    return code, json.loads(text)


def check(space, rule, agents=2, axioms="all"):
    return _decode(_core.check(space, agents, _rule_text(rule), _names(axioms)))


def derive(space, rule, agents=2):
    return _decode(_core.derive(space, agents, _rule_text(rule)))


def enumerate(space, agents=2, mode="quotient", workers=1):
    return _decode(_core.enumerate(space, agents, mode, workers))


def search(space, satisfy, violate=None, agents=2, mode="quotient", workers=1):
    return _decode(_core.search(space, agents, _names(satisfy), _names(violate), mode, workers))


def reproduce(target, workers=1):
    return _decode(_core.reproduce(target, workers))
