"""Python bindings for the cubiclat lattice-classification library."""

import json as _json

from _cubiclat import (
    admissible_tau_range,
    brauer,
    builtin_families,
    classify,
    det_exact,
    report,
    short_vectors,
    sieve,
    verify,
    version,
)

__all__ = [
    "admissible_tau_range",
    "brauer",
    "builtin_families",
    "classify",
    "det_exact",
    "report",
    "report_dict",
    "short_vectors",
    "sieve",
    "verify",
    "version",
]


def report_dict(family):
    """Full component report for *family* as a python dict."""
    return _json.loads(report(family, "json"))
