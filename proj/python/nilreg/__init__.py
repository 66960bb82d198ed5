"""Normal forms and bounded verification for S = F[x]/(x^n)<q | xqx = x, qxq = q>."""

import json as _json

from . import _core
from ._core import ParseError, basis, check_names, phi

__all__ = ["ParseError", "basis", "check_names", "membership_T", "phi", "reduce", "verify"]


def reduce(*factors, n=3, field="gf2", presentation="S"):
    """Normal form of the product of one or more element literals."""
    return _core.reduce(list(factors), n=n, field=field, presentation=presentation)


def membership_T(matrix, n=3, field="gf2", max_degree=12):
    return _json.loads(_core.membership_T(matrix, n=n, field=field, max_degree=max_degree))


def verify(check, **options):
    """Run a named check; returns the report as a dict."""
    return _json.loads(_core.verify(check, **options))
