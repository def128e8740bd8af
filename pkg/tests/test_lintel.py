import functools
import itertools
import math

import pytest

from gausslint.errors import C1Violation, InvalidLintel, LintelParseError, NotDoubleOccurrence, SizeMismatch
from gausslint.tools.lintel import (
    all_sorted_lintels,
    beta,
    canonical_lintel,
    cyclic_shift,
    format_gauss_word,
    format_lintel,
    from_gauss_word,
    invert,
    is_lyndon,
    l_compare,
    parse_diagram,
    parse_gauss_word,
    parse_lintel,
    permutation_blocks,
    reverse_word,
    rotate_word,
    sort_lintel,
    to_gauss_word,
    unrank_permutation,
    validate_lintel,
    words_isomorphic,
)


def naive_canonical(lintel):
    """Minimum over every shift of the lintel and of its inversion."""
    m = 2 * len(lintel)
    candidates = []
    for base in (lintel, invert(lintel)):
        for s in range(m):
            candidates.append(sort_lintel(cyclic_shift(base, s)))
    return min(candidates)


def random_lintel(rng, n):
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return beta(perm)


def scramble(rng, lintel):
    """Random shift, optional inversion, chord reordering and endpoint swaps."""
    if rng.random() < 0.5:
        lintel = invert(lintel)
    lintel = list(cyclic_shift(lintel, rng.randrange(2 * len(lintel))))
    rng.shuffle(lintel)
    return tuple((b, a) if rng.random() < 0.5 else (a, b) for a, b in lintel)


# =============================================================================
# Gauss words
# =============================================================================

def test_from_gauss_word_fig1():
    assert from_gauss_word(parse_gauss_word("12334124")) == ((0, 5), (1, 6), (2, 3), (4, 7))


def test_from_gauss_word_single_chord():
    assert from_gauss_word("11") == ((0, 1),)


def test_from_gauss_word_even_gap():
    with pytest.raises(C1Violation) as info:
        from_gauss_word("1212")
    assert info.value.symbol == "1"


def test_from_gauss_word_not_double_occurrence():
    with pytest.raises(NotDoubleOccurrence) as info:
        from_gauss_word("1121")
    assert info.value.count == 3


def test_to_gauss_word(trefoil, fig1):
    assert to_gauss_word(((0, 1),)) == (1, 1)
    assert format_gauss_word(to_gauss_word(trefoil)) == "123123"
    assert format_gauss_word(to_gauss_word(fig1)) == "12334124"


@pytest.mark.parametrize("n", range(1, 7))
def test_gauss_word_round_trip(rng, n):
    for lintel in all_sorted_lintels(n):
        assert from_gauss_word(to_gauss_word(lintel)) == lintel
        scrambled = scramble(rng, lintel)
        assert from_gauss_word(to_gauss_word(scrambled)) == sort_lintel(scrambled)
        assert l_compare(canonical_lintel(scrambled), sort_lintel(scrambled)) <= 0


def test_non_decimal_digits_stay_symbols():
    assert parse_gauss_word("²²") == ("²", "²")
    assert from_gauss_word(parse_gauss_word("²²")) == ((0, 1),)
    with pytest.raises(NotDoubleOccurrence):
        from_gauss_word(parse_gauss_word("1²"))


def test_delimited_word_tokens():
    assert parse_gauss_word("10 11 11 10") == (10, 11, 11, 10)
    assert parse_gauss_word("a,b,b,a") == ("a", "b", "b", "a")
    assert from_gauss_word(parse_gauss_word("10 11 11 10")) == ((0, 3), (1, 2))


def test_long_words_are_space_delimited():
    word = to_gauss_word(beta(range(1, 11)))
    assert format_gauss_word(word).split() == [str(s) for s in word]


def test_word_rotations_and_reversal_are_isomorphic():
    word = parse_gauss_word("12334124")
    for s in range(len(word)):
        assert words_isomorphic(word, rotate_word(word, s))
        assert words_isomorphic(word, reverse_word(rotate_word(word, s)))


def test_words_not_isomorphic():
    assert not words_isomorphic("123123", "112233")
    assert not words_isomorphic("11", "1221")


# =============================================================================
# Parsing and formatting
# =============================================================================

def test_parse_lintel_tolerates_whitespace_and_period(trefoil):
    assert parse_lintel(" [[0, 3], [1,4],\t[2,5]]. ") == trefoil


def test_format_lintel_listing_style(size9):
    assert format_lintel(size9) == "[[0,5],[1,8],[2,9],[3,14],[4,15],[6,13],[7,12],[10,17],[11,16]]"


def test_parse_lintel_malformed():
    with pytest.raises(LintelParseError) as info:
        parse_lintel("[[0,3],[1,4]")
    assert info.value.position > 0


@pytest.mark.parametrize(
    "text, error",
    [
        ("[[0,2],[1,3]]", C1Violation),
        ("[[0,1],[0,1]]", InvalidLintel),
        ("[[0,1,2]]", InvalidLintel),
        ("[]", InvalidLintel),
        ("{}", LintelParseError),
    ],
)
def test_parse_lintel_rejects(text, error):
    with pytest.raises(error):
        parse_lintel(text)


def test_parse_lintel_reports_line():
    with pytest.raises(C1Violation) as info:
        parse_lintel("[[0,2],[1,3]]", line=7)
    assert info.value.line == 7
    assert str(info.value).startswith("line 7:")


def test_parse_diagram_detects_input_kind(trefoil):
    assert parse_diagram("[[2,5],[0,3],[4,1]]") == trefoil
    assert parse_diagram("123123") == trefoil


def test_validate_lintel_rejects_bools():
    with pytest.raises(InvalidLintel):
        validate_lintel([[False, True]])


# =============================================================================
# Order and transforms
# =============================================================================

def test_sort_lintel_five_chords():
    assert sort_lintel(((4, 7), (8, 1), (5, 0), (2, 9), (6, 3))) == ((0, 5), (1, 8), (2, 9), (3, 6), (4, 7))


def test_sort_lintel_small():
    assert sort_lintel(((0, 1), (2, 3))) == ((0, 1), (2, 3))
    assert sort_lintel(((3, 0), (1, 2))) == ((0, 3), (1, 2))


def test_l_compare():
    a, b = ((0, 1), (2, 3)), ((0, 3), (1, 2))
    assert l_compare(a, b) == -1
    assert l_compare(a, a) == 0
    assert l_compare(b, a) == 1
    assert l_compare([[0, 1], [2, 3]], a) == 0


def test_l_compare_is_a_total_order(rng):
    for _ in range(2000):
        n = rng.randint(1, 6)
        a, b, c = (random_lintel(rng, n) for _ in range(3))
        assert l_compare(a, b) == -l_compare(b, a)
        assert (l_compare(a, b) == 0) == (a == b)
        if l_compare(a, b) <= 0 and l_compare(b, c) <= 0:
            assert l_compare(a, c) <= 0
        assert sorted((a, b, c)) == sorted((a, b, c), key=functools.cmp_to_key(l_compare))


def test_l_compare_size_mismatch():
    with pytest.raises(SizeMismatch):
        l_compare(((0, 1),), ((0, 1), (2, 3)))


def test_cyclic_shift():
    lintel = ((0, 1), (2, 3), (4, 5))
    assert cyclic_shift(lintel, 1) == ((1, 2), (3, 4), (5, 0))
    assert cyclic_shift(lintel, 0) == lintel
    for s in range(6):
        assert cyclic_shift(cyclic_shift(lintel, s), 6 - s) == lintel


def test_invert(trefoil):
    assert invert(((0, 1),)) == ((0, 1),)
    assert invert(trefoil) == ((0, 3), (5, 2), (4, 1))
    assert invert(invert(trefoil)) == trefoil


# =============================================================================
# Canonization
# =============================================================================

def test_canonical_lintel_examples():
    assert canonical_lintel(((0, 5), (1, 2), (3, 4))) == ((0, 1), (2, 3), (4, 5))
    assert canonical_lintel(((0, 1), (2, 3), (4, 5))) == ((0, 1), (2, 3), (4, 5))


def test_canonical_trefoil_is_fixed(trefoil):
    assert canonical_lintel(trefoil) == trefoil
    assert is_lyndon(trefoil)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_canonical_matches_naive_minimum(n):
    for lintel in all_sorted_lintels(n):
        assert canonical_lintel(lintel) == naive_canonical(lintel)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_is_lyndon_matches_canonical_fixed_points(n):
    for lintel in all_sorted_lintels(n):
        assert is_lyndon(lintel) == (canonical_lintel(lintel) == lintel)


def test_canonical_idempotent_and_invariant(rng):
    for _ in range(10_000):
        n = rng.randint(3, 10)
        lintel = random_lintel(rng, n)
        canon = canonical_lintel(lintel)
        assert canonical_lintel(canon) == canon
        assert canonical_lintel(scramble(rng, lintel)) == canon
        assert canonical_lintel(scramble(rng, scramble(rng, lintel))) == canon


# =============================================================================
# Permutations
# =============================================================================

def test_beta_examples():
    assert beta((1, 2, 3)) == ((0, 1), (2, 3), (4, 5))
    assert beta((2, 1)) == ((0, 3), (1, 2))


def test_beta_rejects_non_permutation():
    with pytest.raises(InvalidLintel):
        beta((1, 1))


def test_unrank_permutation():
    assert unrank_permutation(3, 0) == (1, 2, 3)
    assert unrank_permutation(3, 5) == (3, 2, 1)
    assert [unrank_permutation(4, r) for r in range(24)] == list(itertools.permutations(range(1, 5)))


def test_permutation_blocks_cover_range():
    expanded = []
    for prefix, rest in permutation_blocks(5, 7, 93):
        expanded.extend(prefix + suffix for suffix in itertools.permutations(rest))
    assert expanded == [unrank_permutation(5, r) for r in range(7, 93)]


def test_all_sorted_lintels_single():
    assert list(all_sorted_lintels(1)) == [((0, 1),)]


@pytest.mark.parametrize("n", range(1, 8))
def test_all_sorted_lintels_bijection(n):
    lintels = list(all_sorted_lintels(n))
    assert len(lintels) == math.factorial(n)
    assert len(set(lintels)) == math.factorial(n)


def test_all_sorted_lintels_valid_and_ordered():
    lintels = list(all_sorted_lintels(5))
    assert lintels == [beta(p) for p in itertools.permutations(range(1, 6))]
    for lintel in lintels:
        assert validate_lintel(lintel) == lintel
        assert sort_lintel(lintel) == lintel


def test_all_sorted_lintels_ranges_concatenate():
    full = list(all_sorted_lintels(6))
    bounds = [0, 1, 100, 101, 500, 720]
    parts = []
    for start, end in zip(bounds, bounds[1:]):
        parts.extend(all_sorted_lintels(6, start, end))
    assert parts == full
