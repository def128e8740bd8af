"""DiscrepancyPipeline - prime canonical diagrams on which two criteria disagree."""

import logging
import time
from typing import Optional

from ..config import settings
from ..schemas import Criterion, DiscrepancyRecord
from ..tools.criteria import full_report
from ..tools.interlacement import interlacement_graph, is_prime
from ..tools.lintel import SortedLintel, all_sorted_lintels, is_lyndon
from .enumeration import CHUNKS_PER_WORKER, check_size, evaluate, run_tasks, split_ranges

logger = logging.getLogger(__name__)


def _scan(task: tuple[int, int, int, Criterion, Criterion, bool]) -> list[SortedLintel]:
    n, start, end, a, b, ca_prefilter = task
    found = []
    for lintel in all_sorted_lintels(n, start, end):
        if not is_lyndon(lintel):
            continue
        graph = interlacement_graph(lintel)
        if not is_prime(graph):
            continue
        if evaluate(a, lintel, graph, ca_prefilter) != evaluate(b, lintel, graph, ca_prefilter):
            found.append(lintel)
    return found


def find_discrepancies(
    n: int,
    a: Criterion,
    b: Criterion,
    workers: Optional[int] = None,
    ca_prefilter: Optional[bool] = None,
) -> list[DiscrepancyRecord]:
    """Canonical prime lintels where criteria a and b disagree, in L-order, with full reports."""
    check_size(n)
    a, b = Criterion(a), Criterion(b)
    workers = settings.WORKERS if workers is None else max(1, workers)
    ca_prefilter = settings.CA_PREFILTER if ca_prefilter is None else ca_prefilter

    logger.info(f"[DISCREPANCY] size={n} a={a.value} b={b.value} workers={workers}")
    started = time.perf_counter()

    ranges = split_ranges(n, workers * CHUNKS_PER_WORKER)
    tasks = [(n, start, end, a, b, ca_prefilter) for start, end in ranges]
    found: list[SortedLintel] = []
    for part in run_tasks(_scan, tasks, workers):
        found.extend(part)
    found.sort()

    records = [
        DiscrepancyRecord(lintel=list(lintel), a=a.value, b=b.value, report=full_report(lintel))
        for lintel in found
    ]
    logger.info(f"[DISCREPANCY] size={n}: {len(records)} records in {time.perf_counter() - started:.2f}s")
    return records
