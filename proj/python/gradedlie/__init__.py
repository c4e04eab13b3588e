"""Exact Z2xZ2-graded Lie algebras and Lie superalgebras as matrix algebras.

The heavy lifting happens in the compiled ``_core`` module. These wrappers decode its
JSON documents into plain Python structures.
"""

import json

from . import _core
from ._core import GradedLieError

__all__ = [
    "GradedLieError",
    "build",
    "verify",
    "roots",
    "structure_constants",
    "relations",
    "generate",
]


def build(family, params, partition=None):
    return json.loads(_core.build(family, list(params), partition))


def verify(family, params, partition=None):
    return json.loads(_core.verify(family, list(params), partition))


def roots(family, params):
    return json.loads(_core.roots(family, list(params)))


def structure_constants(family, params, partition=None):
    return json.loads(_core.structure_constants(family, list(params), partition))


def relations(kind, first, second, relation_set):
    return json.loads(_core.relations(kind, first, second, relation_set))


def generate(kind, first, second):
    return json.loads(_core.generate(kind, first, second))
