"""Realizability conditions on interlacement graphs.

C1, C2, B3, B and GL are parity conditions. STZ and R each ask for a GF(2)
labelling of the vertices; both reduce to the same edge-parity system
``x_u + x_v = 1 + |N(u) & N(v)|`` over the edges, together with C1 and C2.
The default search solves that system by propagation; ``exhaustive=True``
tries every mask literally.
"""

import logging
from typing import Optional, Sequence

from ..schemas.responses import CriteriaReport
from .interlacement import (
    InterlacementGraph,
    diagonal,
    gf2_add,
    gf2_is_idempotent,
    interlacement_graph,
    is_prime,
    iter_bits,
    reduce,
)
from .lintel import Chord, sort_lintel
from .realizability import is_realizable

logger = logging.getLogger(__name__)


def check_c1(graph: InterlacementGraph) -> bool:
    """Every vertex has even degree."""
    return all(row.bit_count() % 2 == 0 for row in graph.rows)


def check_c2(graph: InterlacementGraph) -> bool:
    """Every non-adjacent pair has an even number of common neighbours."""
    rows = graph.rows
    for u in range(graph.n):
        # Vertices after u that are not neighbours of u.
        others = ~rows[u] & ~((1 << (u + 1)) - 1) & ((1 << graph.n) - 1)
        for v in iter_bits(others):
            if (rows[u] & rows[v]).bit_count() % 2:
                return False
    return True


def _triangles(graph: InterlacementGraph):
    rows = graph.rows
    for x in range(graph.n):
        later = rows[x] >> (x + 1) << (x + 1)
        for y in iter_bits(later):
            for z in iter_bits(later & rows[y] >> (y + 1) << (y + 1)):
                yield x, y, z


def check_b3(graph: InterlacementGraph) -> bool:
    """Triangle parity condition, every vertex of a triangle in turn distinguished.

    For a triangle with distinguished vertex a and others b, c, the vertices
    adjacent to a but to neither b nor c, plus those adjacent to b and c but
    not to a (a itself excluded), must be even in number.
    """
    rows = graph.rows
    for x, y, z in _triangles(graph):
        for a, b, c in ((x, y, z), (y, x, z), (z, x, y)):
            only_a = rows[a] & ~rows[b] & ~rows[c]
            only_bc = rows[b] & rows[c] & ~rows[a] & ~(1 << a)
            if (only_a.bit_count() + only_bc.bit_count()) % 2:
                return False
    return True


def check_b(graph: InterlacementGraph) -> bool:
    return check_c1(graph) and check_c2(graph) and check_b3(graph)


def check_gl(graph: InterlacementGraph) -> bool:
    """C2 on the graph and on every reduced graph I/v."""
    if not check_c2(graph):
        return False
    if graph.n < 2:
        return True
    return all(check_c2(reduce(graph, v)) for v in range(graph.n))


# =============================================================================
# STZ and R
# =============================================================================

def _solve_edge_parity(graph: InterlacementGraph) -> Optional[int]:
    """A vertex labelling with x_u + x_v = 1 + |N(u) & N(v)| on every edge.

    Non-adjacent pairs must have an even number of common neighbours. Labels
    are propagated breadth-first from the lowest vertex of each component.
    """
    if not check_c2(graph):
        return None

    rows = graph.rows
    labels: list[Optional[int]] = [None] * graph.n
    for root in range(graph.n):
        if labels[root] is not None:
            continue
        labels[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            for v in iter_bits(rows[u]):
                want = labels[u] ^ 1 ^ ((rows[u] & rows[v]).bit_count() & 1)
                if labels[v] is None:
                    labels[v] = want
                    queue.append(v)
                elif labels[v] != want:
                    return None

    return sum(bit << i for i, bit in enumerate(labels))


def stz_holds(graph: InterlacementGraph, mask: int) -> bool:
    """M + Lambda is idempotent for the diagonal given by ``mask``."""
    return gf2_is_idempotent(gf2_add(graph.rows, diagonal(mask, graph.n)))


def r_holds(graph: InterlacementGraph, subset: int) -> bool:
    """For all distinct u, v: odd common neighbours iff adjacent and on the same side of A."""
    rows = graph.rows
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            odd = (rows[u] & rows[v]).bit_count() % 2 == 1
            same_side = ((subset >> u) & 1) == ((subset >> v) & 1)
            if odd != (bool((rows[u] >> v) & 1) and same_side):
                return False
    return True


def check_stz(graph: InterlacementGraph, exhaustive: bool = False) -> tuple[bool, Optional[int]]:
    """C1 and a diagonal Lambda with M + Lambda idempotent over GF(2).

    Returns the witnessing mask (bit i = Lambda(i, i)).
    """
    if not check_c1(graph):
        return False, None

    if exhaustive:
        mask = next((m for m in range(1 << graph.n) if stz_holds(graph, m)), None)
    else:
        mask = _solve_edge_parity(graph)

    if mask is None:
        return False, None
    assert stz_holds(graph, mask), "STZ certificate does not verify"
    return True, mask


def check_r(graph: InterlacementGraph, exhaustive: bool = False) -> tuple[bool, Optional[int]]:
    """C1 and a vertex subset A satisfying the odd-common-neighbour biconditional.

    Returns the witnessing subset as a bitmask.
    """
    if not check_c1(graph):
        return False, None

    if exhaustive:
        subset = next((s for s in range(1 << graph.n) if r_holds(graph, s)), None)
    else:
        subset = _solve_edge_parity(graph)

    if subset is None:
        return False, None
    assert r_holds(graph, subset), "R certificate does not verify"
    return True, subset


# =============================================================================
# Reports
# =============================================================================

def mask_bits(mask: Optional[int], n: int) -> Optional[list[int]]:
    if mask is None:
        return None
    return [(mask >> i) & 1 for i in range(n)]


def full_report(lintel: Sequence[Chord]) -> CriteriaReport:
    """Every criterion on one diagram, with certificates when found."""
    lintel = sort_lintel(lintel)
    graph = interlacement_graph(lintel)

    c1 = check_c1(graph)
    c2 = check_c2(graph)
    b3 = check_b3(graph)
    stz, stz_mask = check_stz(graph)
    r, r_subset = check_r(graph)
    realizable = is_realizable(lintel)

    if realizable != stz:
        logger.warning(f"[CHECK] oracle and STZ disagree on {lintel}: CA={realizable} STZ={stz}")

    return CriteriaReport(
        lintel=list(lintel),
        prime=is_prime(graph),
        c1=c1,
        c2=c2,
        b3=b3,
        b=c1 and c2 and b3,
        gl=check_gl(graph),
        stz=stz,
        r=r,
        realizable=realizable,
        stz_certificate=mask_bits(stz_mask, graph.n),
        r_certificate=mask_bits(r_subset, graph.n),
    )
