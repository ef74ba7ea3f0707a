"""Exact solvers and certificates for colored vertex separation and the
colored interval sandwich problem."""
from .graph import (
    EXACT_CAP,
    ColoredGraph,
    GraphError,
    InstanceTooLarge,
    Layout,
    LayoutError,
    active_set,
    active_sets,
    check_layout,
    is_colored_layout,
    is_properly_colored,
    vs_of_layout,
)
from .layout import (
    CvsResult,
    LayoutMetrics,
    PathDecomposition,
    SolverError,
    derived_metrics,
    exact_vs,
    layout_to_path_decomposition,
    solve_cvs,
)
from .intervals import (
    IcgCertificate,
    IntervalModel,
    ModelError,
    PreconditionError,
    VerificationReport,
    intervals_to_layout,
    layout_to_intervals,
    model_to_graph,
    solve_icg,
    verify_certificate,
)
from .oracle import brute_cvs, brute_icg, brute_is_interval, brute_vs
from .formats import (
    ParseError,
    parse_graph,
    parse_layout,
    parse_model,
    serialize_graph,
    serialize_layout,
    serialize_model,
)
from .generate import gen_random, gen_yes_instance

__version__ = "0.1.0"
