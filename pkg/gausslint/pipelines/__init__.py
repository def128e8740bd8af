"""Multi-step runs over whole size classes."""

from .enumeration import canonical_classes, check_size, enumerate_diagrams, evaluate, split_ranges
from .discrepancies import find_discrepancies
from .table import KNOWN_COUNTS, TableRow, run_table, to_tsv

__all__ = [
    # Enumeration
    "enumerate_diagrams",
    "canonical_classes",
    "check_size",
    "evaluate",
    "split_ranges",
    # Discrepancies
    "find_discrepancies",
    # Table
    "KNOWN_COUNTS",
    "TableRow",
    "run_table",
    "to_tsv",
]
