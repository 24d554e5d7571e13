"""Quasi-strongly regular graph toolkit.

Thin re-export of the compiled core: graph construction, graph6 codec, QSR
signature analysis, canonical forms, and exhaustive isomorph-free enumeration.
"""

from ._core import (
    Bounds,
    EnumReport,
    Graph,
    QsrError,
    QsrSignature,
    __version__,
    analyze,
    automorphism_count,
    brute_force_enumerate,
    build_named,
    canonical_form,
    catalog_names,
    decode_graph6,
    encode_graph6,
    enumerate_graphs,
    explain_mismatch,
    independence_number,
    is_isomorphic,
    matches,
    sqsr_bounds,
    t_profile,
)

__all__ = [
    "Bounds",
    "EnumReport",
    "Graph",
    "QsrError",
    "QsrSignature",
    "__version__",
    "analyze",
    "automorphism_count",
    "brute_force_enumerate",
    "build_named",
    "canonical_form",
    "catalog_names",
    "decode_graph6",
    "encode_graph6",
    "enumerate_graphs",
    "explain_mismatch",
    "independence_number",
    "is_isomorphic",
    "matches",
    "sqsr_bounds",
    "t_profile",
]
