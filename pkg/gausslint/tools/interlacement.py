"""Interlacement graphs and GF(2) matrix algebra on bit-packed rows.

Row ``i`` of a graph or matrix is an int whose bit ``j`` is entry (i, j).
"""

from dataclasses import dataclass
from typing import Iterator, Sequence

from ..errors import OutOfRange, SizeMismatch, SizeTooLarge, SizeTooSmall
from .lintel import Chord

# Rows of one machine word.
MAX_VERTICES = 64

Matrix = tuple[int, ...]


@dataclass(frozen=True)
class InterlacementGraph:
    """Symmetric adjacency over n chord-vertices, zero diagonal."""

    n: int
    rows: Matrix

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.rows[u] >> (u + 1)):
                yield u, u + 1 + v

    def to_dot(self) -> str:
        """Plain DOT: vertices are 0-based chord indices, edges undirected."""
        lines = ["graph {"]
        lines.extend(f"  {v};" for v in range(self.n))
        lines.extend(f"  {u} -- {v};" for u, v in self.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def interlacement_graph(lintel: Sequence[Chord]) -> InterlacementGraph:
    """Chords (i,j) and (k,l) are adjacent iff exactly one of k, l lies strictly between i and j."""
    n = len(lintel)
    if n > MAX_VERTICES:
        raise SizeTooLarge(f"interlacement rows hold at most {MAX_VERTICES} chords, got {n}")
    inside = []
    for a, b in lintel:
        lo, hi = (a, b) if a < b else (b, a)
        inside.append(((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1))

    rows = [0] * n
    for i in range(n):
        mask = inside[i]
        for k in range(i + 1, n):
            a, b = lintel[k]
            if ((mask >> a) ^ (mask >> b)) & 1:
                rows[i] |= 1 << k
                rows[k] |= 1 << i
    return InterlacementGraph(n=n, rows=tuple(rows))


def graph_from_edges(n: int, edges: Sequence[tuple[int, int]]) -> InterlacementGraph:
    rows = [0] * n
    for u, v in edges:
        _check_vertex(n, u)
        _check_vertex(n, v)
        if u != v:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return InterlacementGraph(n=n, rows=tuple(rows))


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise OutOfRange(f"vertex {v} not in 0..{n - 1}")


def is_prime(graph: InterlacementGraph) -> bool:
    """Connected; a single vertex counts as connected."""
    if graph.n <= 1:
        return True
    full = (1 << graph.n) - 1
    seen = frontier = 1
    while frontier:
        reached = 0
        for v in iter_bits(frontier):
            reached |= graph.rows[v]
        frontier = reached & ~seen
        seen |= frontier
    return seen == full


def common_neighbours(graph: InterlacementGraph, u: int, v: int) -> int:
    _check_vertex(graph.n, u)
    _check_vertex(graph.n, v)
    if u == v:
        raise OutOfRange(f"common neighbours need two distinct vertices, got {u} twice")
    return (graph.rows[u] & graph.rows[v]).bit_count()


def _drop_bit(row: int, v: int) -> int:
    low = row & ((1 << v) - 1)
    return low | ((row >> (v + 1)) << v)


def reduce(graph: InterlacementGraph, v: int) -> InterlacementGraph:
    """The reduced graph I/v.

    Edges between two neighbours of v are toggled, every other edge is kept,
    v is removed and the survivors are renumbered in order.
    """
    _check_vertex(graph.n, v)
    if graph.n < 2:
        raise SizeTooSmall(f"reduction needs at least 2 vertices, graph has {graph.n}")

    hood = graph.rows[v]
    rows = []
    for u in range(graph.n):
        if u == v:
            continue
        row = graph.rows[u]
        if (hood >> u) & 1:
            row ^= hood & ~(1 << u)
        rows.append(_drop_bit(row, v))
    return InterlacementGraph(n=graph.n - 1, rows=tuple(rows))


# =============================================================================
# GF(2) matrices
# =============================================================================

def _check_square(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise SizeMismatch(f"matrices of dimension {len(a)} and {len(b)}")


def gf2_add(a: Sequence[int], b: Sequence[int]) -> Matrix:
    _check_square(a, b)
    return tuple(x ^ y for x, y in zip(a, b))


def gf2_mul(a: Sequence[int], b: Sequence[int]) -> Matrix:
    """Row i of AB is the XOR of the rows of B selected by row i of A."""
    _check_square(a, b)
    product = []
    for row in a:
        acc = 0
        for k in iter_bits(row):
            acc ^= b[k]
        product.append(acc)
    return tuple(product)


def gf2_is_idempotent(a: Sequence[int]) -> bool:
    return gf2_mul(a, a) == tuple(a)


def gf2_identity(n: int) -> Matrix:
    return tuple(1 << i for i in range(n))


def diagonal(mask: int, n: int) -> Matrix:
    """Diagonal matrix with bit i of the mask at (i, i)."""
    return tuple(((mask >> i) & 1) << i for i in range(n))
