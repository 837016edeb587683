"""Exact circle-group characters, convergence certificates, and finite
abelian group computations.

The heavy lifting lives in the C++ extension ``tbtop._core``. Operations
take and return JSON strings; all unbounded integers and rationals travel
as decimal strings, never floats. ``run(command, params)`` mirrors the
``tbtop`` CLI subcommands one-to-one.
"""

import json as _json

from tbtop._core import (  # noqa: F401
    InputError,
    OpError,
    __version__,
    circle_add,
    circle_dist_to_zero,
    circle_normalize,
    circle_scale,
    run,
    run_report,
)


def run_dict(command, params):
    """Run one operation with dict params, returning the outputs as a dict."""
    return _json.loads(run(command, _json.dumps(params)))


__all__ = [
    "InputError",
    "OpError",
    "__version__",
    "circle_add",
    "circle_dist_to_zero",
    "circle_normalize",
    "circle_scale",
    "run",
    "run_report",
    "run_dict",
]
