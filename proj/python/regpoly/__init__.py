"""Regular polyhedra of index two.

Thin wrappers over the C++ library; reports come back as plain dicts in
the same layout as the JSON report written by the command line tool.
"""

import json

from . import _regpoly
from ._regpoly import UsageError, __version__, REPORT_SCHEMA_VERSION, seed_self_check, seeds, trace

__all__ = [
    "REPORT_SCHEMA_VERSION",
    "UsageError",
    "__version__",
    "enumerate",
    "export_off",
    "seed_self_check",
    "seeds",
    "trace",
    "verify",
]


def enumerate(mode="pruned", seed=None, lengths=None, threads=0, only_accepted=False):
    """Run the classification and return the report as a dict."""
    text = _regpoly.enumerate_json(mode, seed, lengths, threads, only_accepted)
    return json.loads(text)


def verify(seed, lengths, shape):
    """Verify one shape. Returns (True, record) or (False, rejection)."""
    out = _regpoly.verify_json(seed, lengths, shape)
    if isinstance(out, str):
        return True, json.loads(out)
    return False, out


def export_off(record_id, path):
    _regpoly.export_off(record_id, str(path))
