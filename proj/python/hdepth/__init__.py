"""Hilbert depth and Stanley depth of multigraded modules.

Module specs are JSON documents (or dicts of the same shape) listing shifted
monomial subquotients x^c(I/J).
"""

import json as _json

from . import _core
from ._core import (
    DimensionError,
    DomainError,
    InconsistencyError,
    ParseError,
    PreconditionError,
    UnsupportedError,
)

__all__ = [
    "hdepth", "stdepth", "hilbert_table", "count_partitions", "partitions", "decompose",
    "check_candidate", "table_hdepth", "extend_scalars", "specialize",
    "ParseError", "PreconditionError", "UnsupportedError", "InconsistencyError", "DimensionError", "DomainError",
]


def _text(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def hdepth(spec):
    return _json.loads(_core.hdepth(_text(spec)))


def stdepth(spec):
    return _json.loads(_core.stdepth(_text(spec)))


def hilbert_table(spec):
    return _json.loads(_core.hilbert_table(_text(spec)))


def count_partitions(spec, min_depth):
    return _core.count_partitions(_text(spec), min_depth)


def partitions(spec, min_depth, limit=1000):
    return _json.loads(_core.partitions(_text(spec), min_depth, limit))


def decompose(spec, partition):
    return _json.loads(_core.decompose(_text(spec), _text(partition)))


def check_candidate(spec, candidate):
    """Returns (passed, failure message)."""
    return _core.check_candidate(_text(spec), _text(candidate))


def table_hdepth(g, values):
    return _core.table_hdepth(list(g), list(values))


def extend_scalars(spec, m):
    return _json.loads(_core.extend_scalars(_text(spec), m))


def specialize(spec, keep):
    return _json.loads(_core.specialize(_text(spec), keep))
