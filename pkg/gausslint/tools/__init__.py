"""Per-diagram tools: lintels, interlacement graphs, criteria, oracle, rendering, storage."""

from .lintel import (
    all_sorted_lintels,
    beta,
    canonical_lintel,
    cyclic_shift,
    format_gauss_word,
    format_lintel,
    from_gauss_word,
    invert,
    is_lyndon,
    l_compare,
    parse_diagram,
    parse_lintel,
    sort_lintel,
    to_gauss_word,
    words_isomorphic,
)
from .interlacement import (
    InterlacementGraph,
    common_neighbours,
    gf2_add,
    gf2_is_idempotent,
    gf2_mul,
    interlacement_graph,
    is_prime,
    reduce,
)
from .realizability import DiagramGraph, diagram_graph, find_planar_rotation, is_realizable
from .criteria import (
    check_b,
    check_b3,
    check_c1,
    check_c2,
    check_gl,
    check_r,
    check_stz,
    full_report,
)
from .render import render, render_dot, render_svg
from .storage import LintelFile, load, loads, persist

__all__ = [
    # Lintels
    "all_sorted_lintels",
    "beta",
    "canonical_lintel",
    "cyclic_shift",
    "format_gauss_word",
    "format_lintel",
    "from_gauss_word",
    "invert",
    "is_lyndon",
    "l_compare",
    "parse_diagram",
    "parse_lintel",
    "sort_lintel",
    "to_gauss_word",
    "words_isomorphic",
    # Interlacement graphs
    "InterlacementGraph",
    "common_neighbours",
    "gf2_add",
    "gf2_is_idempotent",
    "gf2_mul",
    "interlacement_graph",
    "is_prime",
    "reduce",
    # Oracle
    "DiagramGraph",
    "diagram_graph",
    "find_planar_rotation",
    "is_realizable",
    # Criteria
    "check_b",
    "check_b3",
    "check_c1",
    "check_c2",
    "check_gl",
    "check_r",
    "check_stz",
    "full_report",
    # Output
    "render",
    "render_dot",
    "render_svg",
    "LintelFile",
    "load",
    "loads",
    "persist",
]
