"""Pydantic schemas for filters, reports and API bodies."""

from .requests import (
    Criterion,
    DedupMode,
    FilterSpec,
    DiagramRequest,
    RenderRequest,
    EnumerateRequest,
    DiscrepancyRequest,
)
from .responses import (
    CriteriaReport,
    EnumerationReport,
    DiscrepancyRecord,
    EnumerateResponse,
    CanonResponse,
    ConvertResponse,
    RenderResponse,
)

__all__ = [
    "Criterion",
    "DedupMode",
    "FilterSpec",
    "DiagramRequest",
    "RenderRequest",
    "EnumerateRequest",
    "DiscrepancyRequest",
    "CriteriaReport",
    "EnumerationReport",
    "DiscrepancyRecord",
    "EnumerateResponse",
    "CanonResponse",
    "ConvertResponse",
    "RenderResponse",
]
