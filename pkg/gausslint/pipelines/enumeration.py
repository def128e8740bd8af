"""EnumerationPipeline - permutations → beta → canonize → dedup → filter → tally."""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional, Sequence, TypeVar

from ..config import settings
from ..errors import SizeTooLarge, SizeTooSmall
from ..schemas import Criterion, DedupMode, EnumerationReport, FilterSpec
from ..tools.criteria import check_b, check_b3, check_c2, check_gl, check_r, check_stz
from ..tools.interlacement import InterlacementGraph, interlacement_graph, is_prime
from ..tools.lintel import SortedLintel, all_sorted_lintels, canonical_lintel, is_lyndon
from ..tools.realizability import is_realizable

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# Rank ranges handed out per worker; more chunks than workers evens out the load.
CHUNKS_PER_WORKER = 4


def _ca(lintel: SortedLintel, graph: InterlacementGraph, ca_prefilter: bool) -> bool:
    # C2 is necessary for realizability.
    if ca_prefilter and not check_c2(graph):
        return False
    return is_realizable(lintel)


CHECKS: dict[Criterion, Callable[[SortedLintel, InterlacementGraph, bool], bool]] = {
    Criterion.C2: lambda lintel, graph, _: check_c2(graph),
    Criterion.B3: lambda lintel, graph, _: check_b3(graph),
    Criterion.B: lambda lintel, graph, _: check_b(graph),
    Criterion.GL: lambda lintel, graph, _: check_gl(graph),
    Criterion.STZ: lambda lintel, graph, _: check_stz(graph)[0],
    Criterion.R: lambda lintel, graph, _: check_r(graph)[0],
    Criterion.CA: _ca,
}


def evaluate(criterion: Criterion, lintel: SortedLintel, graph: InterlacementGraph, ca_prefilter: bool = False) -> bool:
    return CHECKS[criterion](lintel, graph, ca_prefilter)


def stage_labels(spec: FilterSpec) -> list[str]:
    """Labels of the filter prefixes, in evaluation order."""
    parts = ["prime"] if spec.require_prime else []
    labels = []
    for criterion in spec.criteria:
        parts = parts + [criterion.value]
        labels.append("+".join(parts))
    if spec.require_prime:
        labels.insert(0, "prime")
    return labels


def stages_passed(lintel: SortedLintel, spec: FilterSpec, ca_prefilter: bool) -> int:
    """How many filter stages the lintel passes before the first failure."""
    graph = interlacement_graph(lintel)
    depth = 0
    if spec.require_prime:
        if not is_prime(graph):
            return depth
        depth += 1
    for criterion in spec.criteria:
        if not evaluate(criterion, lintel, graph, ca_prefilter):
            return depth
        depth += 1
    return depth


def check_size(n: int) -> None:
    if n < 1:
        raise SizeTooSmall(f"size must be at least 1, got {n}")
    if n > settings.size_cap:
        raise SizeTooLarge(f"size {n} exceeds the configured maximum {settings.size_cap} (GAUSS_LINTEL_MAX_SIZE)")
    if n >= settings.SLOW_SIZE:
        logger.warning(f"[ENUM] size {n}: {math.factorial(n):,} lintels to visit, expect hours of compute")


def split_ranges(n: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous lexicographic rank ranges covering all n! permutations."""
    total = math.factorial(n)
    parts = max(1, min(parts, total))
    bounds = [total * k // parts for k in range(parts + 1)]
    return [(bounds[k], bounds[k + 1]) for k in range(parts) if bounds[k] < bounds[k + 1]]


def run_tasks(fn: Callable[[T], R], tasks: Sequence[T], workers: int) -> Iterable[R]:
    """Map over tasks inline, or in a process pool when workers > 1."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, tasks))


# =============================================================================
# Workers (module level so they pickle)
# =============================================================================

def _scan_lyndon(task: tuple[int, int, int, FilterSpec, bool]) -> tuple[int, list[int], list[SortedLintel]]:
    """Count the Lyndon lintels in a rank range and filter them on the spot."""
    n, start, end, spec, ca_prefilter = task
    stages = len(stage_labels(spec))
    total = 0
    tallies = [0] * stages
    accepted = []
    for lintel in all_sorted_lintels(n, start, end):
        if not is_lyndon(lintel):
            continue
        total += 1
        depth = stages_passed(lintel, spec, ca_prefilter)
        for k in range(depth):
            tallies[k] += 1
        if depth == stages:
            accepted.append(lintel)
    return total, tallies, accepted


def _scan_set(task: tuple[int, int, int]) -> set[SortedLintel]:
    """Canonical forms reached from a rank range."""
    n, start, end = task
    return {canonical_lintel(lintel) for lintel in all_sorted_lintels(n, start, end)}


def _filter_chunk(task: tuple[list[SortedLintel], FilterSpec, bool]) -> tuple[list[int], list[SortedLintel]]:
    lintels, spec, ca_prefilter = task
    stages = len(stage_labels(spec))
    tallies = [0] * stages
    accepted = []
    for lintel in lintels:
        depth = stages_passed(lintel, spec, ca_prefilter)
        for k in range(depth):
            tallies[k] += 1
        if depth == stages:
            accepted.append(lintel)
    return tallies, accepted


def canonical_classes(n: int, workers: int = 1) -> list[SortedLintel]:
    """Every canonical lintel of size n, in L-order, by merging per-range sets."""
    ranges = split_ranges(n, workers * CHUNKS_PER_WORKER)
    merged: set[SortedLintel] = set()
    for part in run_tasks(_scan_set, [(n, start, end) for start, end in ranges], workers):
        merged |= part
    return sorted(merged)


# =============================================================================
# Pipeline
# =============================================================================

def enumerate_diagrams(
    n: int,
    spec: FilterSpec,
    workers: Optional[int] = None,
    dedup: Optional[DedupMode] = None,
    ca_prefilter: Optional[bool] = None,
) -> tuple[EnumerationReport, list[SortedLintel]]:
    """Visit all n! sorted lintels, count classes and keep canonical ones passing the filter.

    The returned lintels are canonical, distinct and in L-order whatever the
    worker count or dedup mode.
    """
    check_size(n)
    workers = settings.WORKERS if workers is None else max(1, workers)
    dedup = DedupMode(settings.DEDUP_MODE) if dedup is None else DedupMode(dedup)
    ca_prefilter = settings.CA_PREFILTER if ca_prefilter is None else ca_prefilter
    labels = stage_labels(spec)

    logger.info(f"[ENUM] size={n} filter={spec.label} dedup={dedup.value} workers={workers}")
    started = time.perf_counter()

    tallies = [0] * len(labels)
    accepted: list[SortedLintel] = []

    if dedup is DedupMode.LYNDON_TEST:
        ranges = split_ranges(n, workers * CHUNKS_PER_WORKER)
        tasks = [(n, start, end, spec, ca_prefilter) for start, end in ranges]
        total = 0
        for part_total, part_tallies, part_accepted in run_tasks(_scan_lyndon, tasks, workers):
            total += part_total
            tallies = [x + y for x, y in zip(tallies, part_tallies)]
            accepted.extend(part_accepted)
    else:
        classes = canonical_classes(n, workers)
        total = len(classes)
        size = max(1, math.ceil(total / (workers * CHUNKS_PER_WORKER)))
        tasks = [(classes[i:i + size], spec, ca_prefilter) for i in range(0, total, size)]
        for part_tallies, part_accepted in run_tasks(_filter_chunk, tasks, workers):
            tallies = [x + y for x, y in zip(tallies, part_tallies)]
            accepted.extend(part_accepted)

    accepted.sort()
    elapsed = time.perf_counter() - started

    counts = {"all": total}
    counts.update(zip(labels, tallies))

    report = EnumerationReport(
        size=n,
        filter=spec.label,
        dedup=dedup.value,
        workers=workers,
        total_canonical=total,
        count=len(accepted),
        counts=counts,
        elapsed=elapsed,
    )
    logger.info(f"[ENUM] size={n} filter={spec.label}: {report.count}/{total} classes in {elapsed:.2f}s")
    return report, accepted
