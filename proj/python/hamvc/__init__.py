"""Neighborhood VC dimension of vertex subsets of Hamming graphs H(d,q,t).

Thin wrapper over the compiled core: structured results arrive as JSON and
are decoded into plain dicts, so everything is printable and serializable
as-is.
"""

import json as _json
import warnings as _warnings

from ._core import (
    InfeasibleError,
    PointSet,
    PointSetParseError,
    RoleError,
    __version__,
    parse_point_set,
    to_text,
)
from . import _core

__all__ = [
    "InfeasibleError",
    "PointSet",
    "PointSetParseError",
    "RoleError",
    "construct",
    "detect",
    "parse_point_set",
    "pigeonhole_slice",
    "threshold",
    "to_text",
    "validate_witness",
    "vc_dimension",
    "verify",
]

CLAIM_IDS = (
    "P1.1", "T1.2", "T1.3", "C1.4", "P1.5",
    "P1.6", "P1.8", "T1.8t2", "L3.1", "L4.1",
)

CONSTRUCTIONS = ("u1", "u2", "u3", "diag", "band3", "ustar")

CONFIG_KINDS = (
    "line-triple", "corner", "fist", "rectangle", "pluck", "four-on-a-line",
)


def vc_dimension(u, max_k=None):
    """Dimension of (U, n(U)) with witness and refutation level.

    Returns {"dimension": int, "witness": dict | None, "refuted_at": int | None}.
    """
    return _json.loads(_core.vc_dimension_json(u, max_k))


def construct(name, q, d=3):
    """Generate a named set (u1, u2, u3, diag, band3, ustar)."""
    u, warning = _core.construct(name, q, d)
    if warning:
        _warnings.warn(warning)
    return u


def detect(kind, u, emit_witness=False):
    """Run one configuration detector; None when the set has no such
    configuration. With emit_witness the result carries a validated witness
    (raises RoleError when side conditions fail)."""
    raw = _core.detect_json(kind, u, emit_witness)
    return None if raw is None else _json.loads(raw)


def pigeonhole_slice(u, threshold):
    """First axis plane holding >= threshold members, with its slice's
    dimension; None when every plane is below threshold."""
    raw = _core.pigeonhole_slice_json(u, threshold)
    return None if raw is None else _json.loads(raw)


def validate_witness(witness, u):
    """Check a witness dict against U. Returns (ok, diagnostic)."""
    if not isinstance(witness, str):
        witness = _json.dumps(witness)
    ok, diagnostic = _core.validate_witness_json(witness, u)
    return ok, diagnostic


def verify(claims="all", q=(3, 4), d=None, seed=None, samples=100_000,
           work_cap=10_000_000, jobs=1):
    """Run claim checks; returns {"reports": [...], "exit_code": 0|1|2}."""
    if isinstance(claims, str):
        claims = [claims]
    if isinstance(q, int):
        q = [q]
    return _json.loads(
        _core.verify_json(list(claims), list(q), d, seed, samples, work_cap,
                          jobs))


def threshold(q, k, d=2, t=1, work_cap=10_000_000):
    """Least m at which every size-m subset reaches dimension k, plus the
    lexicographically least maximum certificate below it."""
    return _json.loads(_core.threshold_json(d, q, t, k, work_cap))
