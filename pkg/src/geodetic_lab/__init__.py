"""Constructions and checks for geodetic graphs.

Flag and Levi graphs of finite affine and projective planes, two
independent geodeticity deciders, minimal 2-cut diagnostics, and corpus
scans over enumerated or ingested graphs.
"""

from .geodesy import GeodeticVerdict, is_geodetic_sigma, is_geodetic_vertical, smooth, vertical_profile
from .geometry import affine_plane, projective_plane, validate_plane
from .flags import flag_graph, levi_graph, verify_flag_claims
from .graph import Graph, build_graph, metrics, vertex_connectivity
from .graph6 import emit_graph6, parse_graph6

__all__ = [
    "GeodeticVerdict",
    "Graph",
    "affine_plane",
    "build_graph",
    "emit_graph6",
    "flag_graph",
    "is_geodetic_sigma",
    "is_geodetic_vertical",
    "levi_graph",
    "metrics",
    "parse_graph6",
    "projective_plane",
    "smooth",
    "validate_plane",
    "verify_flag_claims",
    "vertex_connectivity",
]

__version__ = "0.1.0"
