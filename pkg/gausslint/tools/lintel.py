"""Lintels: Gauss diagrams as n chords partitioning {0..2n-1}.

A lintel is a tuple of chords ``(first, second)`` whose endpoints are exactly
the positions ``0..2n-1`` and whose endpoint differences are odd. Every public
operation that produces a new diagram returns the sorted form (each chord
ascending, chords ascending by first endpoint), except ``cyclic_shift`` and
``invert`` which act entrywise and keep the chord layout of their input.
"""

import itertools
import json
import math
from collections import Counter
from typing import Hashable, Iterator, Optional, Sequence

from ..errors import (
    C1Violation,
    InvalidLintel,
    LintelParseError,
    NotDoubleOccurrence,
    SizeMismatch,
)

Chord = tuple[int, int]
Lintel = tuple[Chord, ...]
SortedLintel = tuple[Chord, ...]
GaussWord = tuple[Hashable, ...]
Permutation = tuple[int, ...]


# =============================================================================
# Validation, parsing, formatting
# =============================================================================

def validate_lintel(chords: Sequence[Sequence[int]], line: Optional[int] = None) -> Lintel:
    """Check the lintel invariants and return the chords as a tuple of pairs."""
    if not chords:
        raise InvalidLintel("a lintel needs at least one chord", line)

    result = []
    for chord in chords:
        if len(chord) != 2:
            raise InvalidLintel(f"chord {list(chord)} does not have two endpoints", line)
        a, b = chord
        if not isinstance(a, int) or not isinstance(b, int) or isinstance(a, bool) or isinstance(b, bool):
            raise InvalidLintel(f"chord {list(chord)} has non-integer endpoints", line)
        result.append((a, b))

    n = len(result)
    endpoints = sorted(e for chord in result for e in chord)
    if endpoints != list(range(2 * n)):
        raise InvalidLintel(f"endpoints must be exactly 0..{2 * n - 1}", line)

    for a, b in result:
        if (a - b) % 2 == 0:
            raise C1Violation(f"chord [{a},{b}] has even difference {abs(a - b)}", symbol=(a, b), line=line)

    return tuple(result)


def parse_lintel(text: str, line: Optional[int] = None) -> Lintel:
    """Parse ``[[0,5],[1,8],...]``; whitespace and a trailing period are tolerated."""
    body = text.strip()
    if body.endswith("."):
        body = body[:-1].rstrip()
    try:
        data = json.loads(body)
    except json.JSONDecodeError as e:
        raise LintelParseError(f"malformed lintel: {e.msg}", position=e.pos, line=line) from e

    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        raise LintelParseError("a lintel is a list of [a,b] pairs", position=0, line=line)
    return validate_lintel(data, line=line)


def format_lintel(lintel: Sequence[Chord]) -> str:
    """Render in the listing style, e.g. ``[[0,3],[1,4],[2,5]]``."""
    return "[" + ",".join(f"[{a},{b}]" for a, b in lintel) + "]"


def parse_gauss_word(text: str) -> GaussWord:
    """Parse a Gauss word.

    Delimited input (whitespace or commas) is split into integer or string
    tokens; otherwise every character is one symbol.
    """
    body = text.strip()
    if not body:
        raise LintelParseError("empty Gauss word", position=0)

    if any(ch.isspace() or ch == "," for ch in body):
        tokens = [t for t in body.replace(",", " ").split() if t]
    else:
        tokens = list(body)
    return tuple(int(t) if t.isdecimal() else t for t in tokens)


def format_gauss_word(word: Sequence[Hashable]) -> str:
    """Single characters for up to 9 symbols, space-delimited beyond."""
    tokens = [str(s) for s in word]
    if len(set(tokens)) <= 9 and all(len(t) == 1 for t in tokens):
        return "".join(tokens)
    return " ".join(tokens)


def parse_diagram(text: str, line: Optional[int] = None) -> SortedLintel:
    """Accept either a lintel listing or a Gauss word and return a sorted lintel."""
    body = text.strip()
    if body.startswith("["):
        return sort_lintel(parse_lintel(body, line=line))
    return from_gauss_word(parse_gauss_word(body))


# =============================================================================
# Gauss words
# =============================================================================

def from_gauss_word(word: Sequence[Hashable]) -> SortedLintel:
    """Lintel of a double occurrence word: chords join the two positions of each symbol."""
    counts = Counter(word)
    for symbol, count in counts.items():
        if count != 2:
            raise NotDoubleOccurrence(symbol, count)

    positions: dict[Hashable, list[int]] = {}
    for i, symbol in enumerate(word):
        positions.setdefault(symbol, []).append(i)

    chords = []
    for symbol, (i, j) in positions.items():
        if (j - i) % 2 == 0:
            raise C1Violation(f"symbol {symbol!r} at positions {i} and {j}", symbol=symbol)
        chords.append((i, j))
    return tuple(sorted(chords))


def to_gauss_word(lintel: Sequence[Chord]) -> tuple[int, ...]:
    """Positions of chord k both carry symbol k+1."""
    word = [0] * (2 * len(lintel))
    for k, (a, b) in enumerate(lintel):
        word[a] = k + 1
        word[b] = k + 1
    return tuple(word)


def rotate_word(word: Sequence[Hashable], s: int) -> GaussWord:
    """Cyclic shift of a word by s positions to the left."""
    if not word:
        return tuple(word)
    s %= len(word)
    return tuple(word[s:]) + tuple(word[:s])


def reverse_word(word: Sequence[Hashable]) -> GaussWord:
    return tuple(reversed(word))


def words_isomorphic(w1: Sequence[Hashable], w2: Sequence[Hashable]) -> bool:
    """Whether two Gauss words encode equivalent diagrams."""
    if len(w1) != len(w2):
        return False
    return canonical_lintel(from_gauss_word(w1)) == canonical_lintel(from_gauss_word(w2))


# =============================================================================
# Strong equivalence and L-order
# =============================================================================

def sort_lintel(lintel: Sequence[Chord]) -> SortedLintel:
    """Sort both numbers in each chord, then sort chords by their first entry."""
    return tuple(sorted((a, b) if a < b else (b, a) for a, b in lintel))


def l_compare(lintel: Sequence[Chord], other: Sequence[Chord]) -> int:
    """Compare two sorted lintels in L-order: -1, 0 or 1."""
    if len(lintel) != len(other):
        raise SizeMismatch(f"cannot compare lintels of sizes {len(lintel)} and {len(other)}")
    left = tuple(tuple(chord) for chord in lintel)
    right = tuple(tuple(chord) for chord in other)
    return (left > right) - (left < right)


def cyclic_shift(lintel: Sequence[Chord], s: int) -> Lintel:
    """Add s to every entry modulo 2n."""
    m = 2 * len(lintel)
    return tuple(((a + s) % m, (b + s) % m) for a, b in lintel)


def invert(lintel: Sequence[Chord]) -> Lintel:
    """Negate every entry modulo 2n."""
    m = 2 * len(lintel)
    return tuple(((-a) % m, (-b) % m) for a, b in lintel)


# =============================================================================
# Canonization
# =============================================================================

def partners(lintel: Sequence[Chord]) -> list[int]:
    """Position -> position at the other end of its chord."""
    p = [0] * (2 * len(lintel))
    for a, b in lintel:
        p[a] = b
        p[b] = a
    return p


def _shifted(p: list[int], s: int) -> SortedLintel:
    m = len(p)
    return tuple(
        (x, q) for x in range(m) if (q := (p[(x - s) % m] + s) % m) > x
    )


def _inverted(p: list[int], s: int) -> SortedLintel:
    m = len(p)
    return tuple(
        (x, q) for x in range(m) if (q := (s - p[(s - x) % m]) % m) > x
    )


def _min_span(p: list[int]) -> int:
    """Smallest second entry of the first chord over all shifts and inversions."""
    m = len(p)
    return min(min((p[i] - i) % m, (i - p[i]) % m) for i in range(m))


def canonical_lintel(lintel: Sequence[Chord]) -> SortedLintel:
    """L-order minimum over sort(shift(L, s)) and sort(shift(invert(L), s)).

    Every candidate starts with the chord (0, x), so only the shifts that
    bring a shortest chord to position 0 can win; the rest are not built.
    """
    p = partners(lintel)
    m = len(p)
    g = _min_span(p)

    best: Optional[SortedLintel] = None
    for i in range(m):
        if (p[i] - i) % m == g:
            candidate = _shifted(p, (-i) % m)
            if best is None or candidate < best:
                best = candidate
        if (i - p[i]) % m == g:
            candidate = _inverted(p, i)
            if best is None or candidate < best:
                best = candidate
    return best


def is_lyndon(lintel: SortedLintel) -> bool:
    """Whether a sorted lintel is the L-minimum of its equivalence class."""
    p = partners(lintel)
    if lintel[0][1] != _min_span(p):
        return False
    return canonical_lintel(lintel) == tuple(lintel)


# =============================================================================
# Permutations and the beta bijection
# =============================================================================

def beta(perm: Sequence[int]) -> SortedLintel:
    """Sorted lintel {{2i-1, 2*perm(i)-2} : i in 1..n} of a 1-based permutation."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidLintel(f"{list(perm)} is not a permutation of 1..{n}")
    return _beta(perm)


def _beta(perm: Sequence[int]) -> SortedLintel:
    return sort_lintel((2 * i - 1, 2 * sigma - 2) for i, sigma in enumerate(perm, start=1))


def unrank_permutation(n: int, rank: int) -> Permutation:
    """The permutation of 1..n at the given lexicographic rank."""
    items = list(range(1, n + 1))
    result = []
    for k in range(n, 0, -1):
        block = math.factorial(k - 1)
        index, rank = divmod(rank, block)
        result.append(items.pop(index))
    return tuple(result)


def permutation_blocks(n: int, start: int, end: int) -> Iterator[tuple[Permutation, list[int]]]:
    """Split the rank range [start, end) into (fixed prefix, free suffix) blocks.

    Each block covers the permutations that extend the prefix, in
    lexicographic order, so a block can be expanded with itertools.
    """
    rank = start
    while rank < end:
        for depth in range(n + 1):
            size = math.factorial(n - depth)
            if rank % size == 0 and rank + size <= end:
                perm = unrank_permutation(n, rank)
                yield perm[:depth], sorted(perm[depth:])
                rank += size
                break


def all_sorted_lintels(n: int, start: int = 0, end: Optional[int] = None) -> Iterator[SortedLintel]:
    """All n! sorted lintels of size n, in lexicographic permutation order.

    ``start`` and ``end`` select a rank sub-range so workers can split the sweep.
    """
    total = math.factorial(n)
    end = total if end is None else min(end, total)
    for prefix, rest in permutation_blocks(n, start, end):
        for suffix in itertools.permutations(rest):
            yield _beta(prefix + suffix)
