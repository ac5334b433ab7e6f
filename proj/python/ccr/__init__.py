"""Cyclic codes over F_p[u,v]/<u^k, v^2, uv-vu>."""

import json as _json

try:
    from ccr._ccr import (  # type: ignore
        analyze_json,
        canonical_generators,
        dimension_fp,
        distance,
        enumerate_json,
        gray_params,
        is_free,
        phi,
        poly_to_string,
        rank,
        tables_json,
        tower_degrees,
        verify_structure,
    )
except ImportError:  # development layout: extension at the build-tree root
    from _ccr import (  # type: ignore
        analyze_json,
        canonical_generators,
        dimension_fp,
        distance,
        enumerate_json,
        gray_params,
        is_free,
        phi,
        poly_to_string,
        rank,
        tables_json,
        tower_degrees,
        verify_structure,
    )


def analyze(p, k, n, gens, budget=1 << 24):
    """Full analysis report as a dict."""
    return _json.loads(analyze_json(p, k, n, gens, budget))


def tables(max_exponent=6):
    return _json.loads(tables_json(max_exponent))


def enumerate_codes(p, k, n, cap=1 << 20):
    return _json.loads(enumerate_json(p, k, n, cap))


__all__ = [
    "analyze",
    "analyze_json",
    "canonical_generators",
    "dimension_fp",
    "distance",
    "enumerate_codes",
    "enumerate_json",
    "gray_params",
    "is_free",
    "phi",
    "poly_to_string",
    "rank",
    "tables",
    "tables_json",
    "tower_degrees",
    "verify_structure",
]
