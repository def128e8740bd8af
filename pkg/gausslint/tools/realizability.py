"""Diagram graph and the genus realizability oracle.

Arc ``t`` runs from position ``t`` to position ``t+1 mod 2n``. Its two darts
are ``2t`` (leaving position t forwards) and ``2t+1`` (leaving position t+1
backwards), so reversing a dart is ``d ^ 1``. A rotation system puts the four
dart-ends of each crossing in cyclic order; the curve must pass straight
through, so the two ends of one pass sit opposite each other and each crossing
has exactly two admissible orders.
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .lintel import Chord


@dataclass(frozen=True)
class DiagramGraph:
    """The 4-valent graph <V,E,H> of a diagram with its dart structure."""

    n: int
    crossing_of: tuple[int, ...]
    passes: tuple[tuple[int, int], ...]

    @property
    def num_arcs(self) -> int:
        return 2 * self.n

    @property
    def num_darts(self) -> int:
        return 4 * self.n

    def arcs(self) -> list[tuple[int, int]]:
        m = 2 * self.n
        return [(t, (t + 1) % m) for t in range(m)]

    def dart_tail(self, dart: int) -> int:
        """Position a dart leaves from."""
        t, backwards = divmod(dart, 2)
        return (t + backwards) % (2 * self.n)

    def dart_ends(self, crossing: int) -> tuple[int, int, int, int]:
        """(p out, p back, q out, q back) for the pass through p and through q."""
        m = 2 * self.n
        p, q = self.passes[crossing]
        return 2 * p, 2 * ((p - 1) % m) + 1, 2 * q, 2 * ((q - 1) % m) + 1

    def rotation(self, choice: int) -> list[int]:
        """Vertex permutation of the rotation system selected by ``choice``.

        Bit c picks between the cyclic orders (p out, q out, p back, q back)
        and (p out, q back, p back, q out) at crossing c.
        """
        vp = [0] * (4 * self.n)
        for c in range(self.n):
            p_out, p_back, q_out, q_back = self.dart_ends(c)
            if (choice >> c) & 1:
                cycle = (p_out, q_back, p_back, q_out)
            else:
                cycle = (p_out, q_out, p_back, q_back)
            for i in range(4):
                vp[cycle[i]] = cycle[(i + 1) % 4]
        return vp


def diagram_graph(lintel: Sequence[Chord]) -> DiagramGraph:
    n = len(lintel)
    crossing_of = [0] * (2 * n)
    passes = []
    for c, (a, b) in enumerate(lintel):
        p, q = (a, b) if a < b else (b, a)
        crossing_of[p] = c
        crossing_of[q] = c
        passes.append((p, q))
    return DiagramGraph(n=n, crossing_of=tuple(crossing_of), passes=tuple(passes))


def trace_faces(graph: DiagramGraph, choice: int) -> list[int]:
    """Face lengths: orbits of d -> rotation successor of the reversed dart."""
    vp = graph.rotation(choice)
    seen = [False] * len(vp)
    lengths = []
    for start in range(len(vp)):
        if seen[start]:
            continue
        length = 0
        d = start
        while not seen[d]:
            seen[d] = True
            length += 1
            d = vp[d ^ 1]
        lengths.append(length)
    return lengths


def euler_characteristic(graph: DiagramGraph, faces: Sequence[int]) -> int:
    return graph.n - graph.num_arcs + len(faces)


def rotation_choices(n: int) -> Iterator[int]:
    """Choices with the first crossing fixed; its flip only mirrors the surface."""
    for half in range(1 << max(n - 1, 0)):
        yield half << 1


def find_planar_rotation(lintel: Sequence[Chord]) -> Optional[int]:
    """A rotation choice embedding the diagram graph in the sphere, if any."""
    graph = diagram_graph(lintel)
    for choice in rotation_choices(graph.n):
        faces = trace_faces(graph, choice)
        chi = euler_characteristic(graph, faces)
        assert sum(faces) == graph.num_darts, "faces must partition the darts"
        assert len(faces) >= 1 and chi <= 2 and chi % 2 == 0, f"impossible Euler characteristic {chi}"
        if chi == 2:
            return choice
    return None


def is_realizable(lintel: Sequence[Chord]) -> bool:
    """Whether some transversal rotation system has genus 0 (F = n + 2)."""
    return find_planar_rotation(lintel) is not None
