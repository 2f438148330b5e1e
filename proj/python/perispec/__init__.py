"""Spectral invariants of discrete periodic Schrodinger operators."""

from ._core import (
    DEFAULT_LENGTH_CAP,
    Cycle,
    Graph,
    GraphParseError,
    InvariantTable,
    IsospectralResult,
    LinearQuadraticResult,
    Polynomial,
    TraceReport,
    builtin,
    closed_form,
    cycle_graph,
    dft,
    invariant,
    invariant_table,
    isospectral,
    kagome,
    linear_quadratic,
    parse_graph,
    pendant,
    pendant_partner,
    prime_cycles,
    verify_trace,
    zd_closed_form,
    zd_fourier,
    zd_lattice,
)
from ._core import __version__

__all__ = [
    "DEFAULT_LENGTH_CAP",
    "Cycle",
    "Graph",
    "GraphParseError",
    "InvariantTable",
    "IsospectralResult",
    "LinearQuadraticResult",
    "Polynomial",
    "TraceReport",
    "builtin",
    "closed_form",
    "cycle_graph",
    "dft",
    "invariant",
    "invariant_table",
    "isospectral",
    "kagome",
    "linear_quadratic",
    "parse_graph",
    "pendant",
    "pendant_partner",
    "prime_cycles",
    "verify_trace",
    "zd_closed_form",
    "zd_fourier",
    "zd_lattice",
    "__version__",
]
