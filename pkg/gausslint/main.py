"""FastAPI application for the Gauss Lintel service.

Per-diagram endpoints answer immediately; enumeration and discrepancy
searches are capped at GAUSS_LINTEL_API_MAX_SIZE and finished enumerations
are cached in the report store.
"""

import logging
import time
import uuid
from contextlib import asynccontextmanager
from typing import Callable

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.concurrency import run_in_threadpool
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .config import settings
from .errors import GaussLintError, SizeTooLarge
from .pipelines import enumerate_diagrams, find_discrepancies
from .schemas import (
    CanonResponse,
    ConvertResponse,
    CriteriaReport,
    DedupMode,
    DiagramRequest,
    DiscrepancyRecord,
    DiscrepancyRequest,
    EnumerateRequest,
    EnumerateResponse,
    FilterSpec,
    RenderRequest,
    RenderResponse,
)
from .tools import (
    canonical_lintel,
    format_gauss_word,
    format_lintel,
    full_report,
    parse_diagram,
    render,
    to_gauss_word,
)
from .tools.state import report_store

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application startup/shutdown."""
    logger.info(f"Starting Gauss Lintel service on {settings.HOST}:{settings.PORT}")
    logger.info(f"Enumeration capped at size {settings.API_MAX_SIZE} over HTTP")

    yield

    report_store.clear()
    logger.info("Shutting down")


app = FastAPI(
    title="Gauss Lintel Service",
    description="Gauss diagram canonization, realizability criteria and enumeration.",
    version=__version__,
    lifespan=lifespan,
)


@app.middleware("http")
async def tracing_middleware(request: Request, call_next: Callable) -> Response:
    """Add request tracing."""
    trace_id = str(uuid.uuid4())[:8]
    start_time = time.time()

    response = await call_next(request)

    duration_ms = (time.time() - start_time) * 1000
    logger.info(f"{request.method} {request.url.path} - {response.status_code} ({duration_ms:.0f}ms)")

    response.headers["X-Trace-ID"] = trace_id
    return response


app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def _bad_input(e: GaussLintError) -> HTTPException:
    status = 413 if isinstance(e, SizeTooLarge) else 400
    return HTTPException(status_code=status, detail=str(e))


def _check_api_size(n: int) -> None:
    if n > settings.API_MAX_SIZE:
        raise SizeTooLarge(f"size {n} exceeds the HTTP limit {settings.API_MAX_SIZE}; use the CLI")


def _check_chords(lintel: tuple) -> None:
    if len(lintel) > settings.API_MAX_CHORDS:
        raise SizeTooLarge(
            f"diagram has {len(lintel)} chords, over the HTTP limit {settings.API_MAX_CHORDS}; use the CLI"
        )


# =============================================================================
# Health & Config
# =============================================================================

@app.get("/")
async def root():
    """Health check."""
    return {
        "service": "Gauss Lintel Service",
        "version": __version__,
        "status": "healthy",
    }


@app.get("/config")
async def get_config():
    """Get service configuration."""
    return {
        "max_size": settings.size_cap,
        "api_max_size": settings.API_MAX_SIZE,
        "api_max_chords": settings.API_MAX_CHORDS,
        "workers": settings.WORKERS,
        "dedup": settings.DEDUP_MODE,
        "ca_prefilter": settings.CA_PREFILTER,
        "environment": settings.ENVIRONMENT,
    }


# =============================================================================
# Single diagrams
# =============================================================================

@app.post("/check", response_model=CriteriaReport)
async def check_diagram(request: DiagramRequest):
    """Evaluate every criterion and the genus oracle on one diagram."""
    try:
        lintel = parse_diagram(request.diagram)
        _check_chords(lintel)
        return await run_in_threadpool(full_report, lintel)
    except GaussLintError as e:
        raise _bad_input(e)


@app.post("/canon", response_model=CanonResponse)
async def canon_diagram(request: DiagramRequest):
    try:
        lintel = parse_diagram(request.diagram)
    except GaussLintError as e:
        raise _bad_input(e)
    return CanonResponse(lintel=format_lintel(lintel), canonical=format_lintel(canonical_lintel(lintel)))


@app.post("/convert", response_model=ConvertResponse)
async def convert_diagram(request: DiagramRequest):
    """Both encodings of the diagram, whichever one was sent."""
    try:
        lintel = parse_diagram(request.diagram)
    except GaussLintError as e:
        raise _bad_input(e)
    return ConvertResponse(lintel=format_lintel(lintel), word=format_gauss_word(to_gauss_word(lintel)))


@app.post("/render", response_model=RenderResponse)
async def render_diagram(request: RenderRequest):
    try:
        lintel = parse_diagram(request.diagram)
        _check_chords(lintel)
        content = render(lintel, request.format)
    except GaussLintError as e:
        raise _bad_input(e)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return RenderResponse(format=request.format.lower(), content=content)


# =============================================================================
# Sweeps
# =============================================================================

@app.post("/enumerate", response_model=EnumerateResponse)
async def enumerate_endpoint(request: EnumerateRequest):
    """Canonical diagrams of one size passing a filter.

    Results are cached per (size, filter, dedup) for the lifetime of the process.
    """
    try:
        _check_api_size(request.size)
        spec = FilterSpec.parse(request.filter)
        dedup = request.dedup or DedupMode(settings.DEDUP_MODE)
        key = (request.size, spec.label, dedup.value)

        if key in report_store:
            logger.info(f"[STORE] cache hit for size={request.size} filter={spec.label}")
            report, lintels = report_store[key]
        else:
            report, lintels = await run_in_threadpool(
                enumerate_diagrams, request.size, spec, 1, dedup
            )
            report_store[key] = (report, lintels)
    except GaussLintError as e:
        raise _bad_input(e)
    except Exception as e:
        logger.error(f"Enumeration failed: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail=str(e))

    return EnumerateResponse(report=report, lintels=[format_lintel(lintel) for lintel in lintels])


@app.post("/discrepancies", response_model=list[DiscrepancyRecord])
async def discrepancies_endpoint(request: DiscrepancyRequest):
    """Prime canonical diagrams on which criteria a and b disagree."""
    try:
        _check_api_size(request.size)
        return await run_in_threadpool(find_discrepancies, request.size, request.a, request.b, 1)
    except GaussLintError as e:
        raise _bad_input(e)
    except Exception as e:
        logger.error(f"Discrepancy search failed: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail=str(e))


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "gausslint.main:app",
        host=settings.HOST,
        port=settings.PORT,
        reload=settings.is_development,
    )
