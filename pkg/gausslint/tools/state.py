"""Shared state for the HTTP surface."""

from ..schemas.responses import EnumerationReport
from .lintel import SortedLintel

# Finished enumerations keyed by (size, filter label, dedup mode)
report_store: dict[tuple[int, str, str], tuple[EnumerationReport, list[SortedLintel]]] = {}
