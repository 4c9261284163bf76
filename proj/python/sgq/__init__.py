"""Python access to the sgq library: orders, censuses, invariants, sampling."""

import os as _os

_here = _os.path.dirname(__file__)
if "SGQ_DATA_DIR" not in _os.environ and _os.path.isdir(_os.path.join(_here, "data")):
    _os.environ["SGQ_DATA_DIR"] = _os.path.join(_here, "data")

from ._sgq import (  # noqa: E402
    CapExceededError,
    ConsistencyError,
    DomainError,
    Error,
    ParseError,
    canonical,
    catalog,
    census,
    equal_order_pairs,
    invariants,
    order,
    prime_graph,
    run,
    sample,
)

__all__ = [
    "CapExceededError",
    "ConsistencyError",
    "DomainError",
    "Error",
    "ParseError",
    "canonical",
    "catalog",
    "census",
    "equal_order_pairs",
    "invariants",
    "order",
    "prime_graph",
    "run",
    "sample",
]
