import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permpart import (
    Permutation,
    RGFWord,
    SearchCancelled,
    SetPartition,
    brute_partition_contains,
    brute_partition_count,
    partition_contains,
    partition_count,
    perm_contains,
    perm_count,
    rgf_contains,
    rgf_count,
)
from permpart.core import restrict, rgf_of, value_standardize
from helpers import (
    partition_witnesses,
    partitions_of,
    perm_occurrences,
    perms_of,
    rgf_positions,
    rgf_words_of,
)


class TestPermMatcher:
    def test_contains_examples(self):
        result = perm_contains(Permutation((1, 3, 2)), Permutation((2, 1)))
        assert result.contains and result.witness == (2, 3)
        tau = Permutation((3, 1, 2))
        assert perm_contains(tau, tau).witness == (1, 2, 3)
        assert not perm_contains(Permutation((1, 2, 3)), Permutation((2, 1))).contains

    def test_count_examples(self):
        assert perm_count(Permutation((1, 2, 3)), Permutation((1, 2))) == 3
        assert perm_count(Permutation((2, 3, 1)), Permutation((2, 1))) == 2
        assert perm_count(Permutation((2, 3, 1)), Permutation(())) == 1

    def test_pattern_longer_than_text(self):
        assert not perm_contains(Permutation((1,)), Permutation((1, 2))).contains
        assert perm_count(Permutation((1,)), Permutation((1, 2))) == 0


class TestPartitionMatcher:
    def test_contains_examples(self):
        result = partition_contains(SetPartition(((1, 3), (2, 4))), SetPartition(((1, 2),)))
        assert result.contains and result.witness == (1, 3)
        singletons = SetPartition(((1,), (2,), (3,), (4,)))
        assert not partition_contains(singletons, SetPartition(((1, 2),))).contains
        result = partition_contains(
            SetPartition(((1, 4), (2, 6), (3, 5))), SetPartition(((1, 4), (2, 3)))
        )
        assert result.contains and result.witness == (2, 3, 5, 6)

    def test_count_examples(self):
        assert partition_count(SetPartition(((1, 3), (2, 4))), SetPartition(((1, 2),))) == 2
        sigma = SetPartition(((1, 4), (2, 6), (3, 5)))
        assert partition_count(sigma, sigma) == 1
        # exhaustive over all 15 subsets: {2,3,5,6} is the only witness,
        # matching the single occurrence on the permutation side
        assert partition_count(sigma, SetPartition(((1, 4), (2, 3)))) == 1


class TestRgfMatcher:
    def test_contains_examples(self):
        result = rgf_contains(RGFWord((1, 2, 1, 2)), RGFWord((1, 1)))
        assert result.contains and result.witness == (1, 3)
        # the pair separating the word notion from the partition notion:
        # the partitions of these words DO contain
        assert not rgf_contains(RGFWord((1, 2, 2, 1)), RGFWord((1, 1, 2))).contains
        word = RGFWord((1, 2, 3, 1))
        assert rgf_contains(word, word).witness == (1, 2, 3, 4)

    def test_count_examples(self):
        assert rgf_count(RGFWord((1, 2, 1, 2)), RGFWord((1, 1))) == 2
        assert rgf_count(RGFWord((1, 1, 1)), RGFWord((1, 1))) == 3
        assert rgf_count(RGFWord((1, 2, 1)), RGFWord(())) == 1


class TestAgainstBruteForce:
    def test_perm_engine_exhaustive(self):
        # all text/pattern pairs up to size 5: answer, least witness, count
        for n in range(6):
            for k in range(6):
                for text in perms_of(n):
                    for pattern in perms_of(k):
                        hits = perm_occurrences(text.values, pattern.values)
                        result = perm_contains(text, pattern)
                        assert result.contains == bool(hits)
                        assert result.witness == (min(hits) if hits else None)
                        assert perm_count(text, pattern) == len(hits)

    def test_partition_engine_exhaustive(self):
        # containment against subset enumeration for all pairs up to n = 6,
        # counts up to n = 5
        for n in range(7):
            for k in range(7):
                for text in partitions_of(n):
                    for pattern in partitions_of(k):
                        reference = brute_partition_contains(text, pattern)
                        assert partition_contains(text, pattern).contains == reference
                        if n <= 5:
                            assert partition_count(text, pattern) == brute_partition_count(
                                text, pattern
                            )

    def test_partition_witnesses_exhaustive(self):
        for n in range(6):
            for k in range(6):
                for text in partitions_of(n):
                    for pattern in partitions_of(k):
                        hits = partition_witnesses(text, pattern)
                        result = partition_contains(text, pattern)
                        assert result.witness == (min(hits) if hits else None)

    def test_rgf_engine_exhaustive(self):
        for n in range(6):
            for k in range(6):
                for text in rgf_words_of(n):
                    for pattern in rgf_words_of(k):
                        hits = rgf_positions(text.letters, pattern.letters)
                        result = rgf_contains(text, pattern)
                        assert result.contains == bool(hits)
                        assert result.witness == (min(hits) if hits else None)
                        assert rgf_count(text, pattern) == len(hits)


class TestProperties:
    def test_witnesses_reverify(self):
        # every reported witness re-checks against the definition it certifies
        for n in range(6):
            for k in range(n + 1):
                for text in perms_of(n):
                    for pattern in perms_of(k):
                        result = perm_contains(text, pattern)
                        if result.contains:
                            sub = [text.values[i - 1] for i in result.witness]
                            assert value_standardize(sub) == pattern.values
                for text in partitions_of(n):
                    for pattern in partitions_of(k):
                        result = partition_contains(text, pattern)
                        if result.contains:
                            assert restrict(text, result.witness) == pattern
                for text in rgf_words_of(n):
                    for pattern in rgf_words_of(k):
                        result = rgf_contains(text, pattern)
                        if result.contains:
                            sub = [text.letters[i - 1] for i in result.witness]
                            assert value_standardize(sub) == pattern.letters

    def test_containment_reflexive_transitive(self):
        for structures, holds in (
            (
                [p for n in range(6) for p in perms_of(n)],
                lambda a, b: perm_contains(a, b).contains,
            ),
            (
                [p for n in range(6) for p in partitions_of(n)],
                lambda a, b: partition_contains(a, b).contains,
            ),
            (
                [w for n in range(6) for w in rgf_words_of(n)],
                lambda a, b: rgf_contains(a, b).contains,
            ),
        ):
            matrix = {
                (a, b): holds(a, b) for a in structures for b in structures
            }
            for a in structures:
                assert matrix[(a, a)]
            for (a, b), ab in matrix.items():
                if not ab:
                    continue
                for c in structures:
                    if matrix[(b, c)]:
                        assert matrix[(a, c)], (a, b, c)

    def test_block_size_injection_necessary(self):
        # containment requires an injection from pattern blocks to text
        # blocks that never shrinks a block
        for n in range(6):
            for k in range(n + 1):
                for text in partitions_of(n):
                    text_sizes = sorted((len(b) for b in text.blocks), reverse=True)
                    for pattern in partitions_of(k):
                        if not partition_contains(text, pattern).contains:
                            continue
                        pattern_sizes = sorted(
                            (len(b) for b in pattern.blocks), reverse=True
                        )
                        assert len(pattern_sizes) <= len(text_sizes)
                        assert all(
                            p <= t for p, t in zip(pattern_sizes, text_sizes)
                        )

    def test_contains_iff_count_positive(self):
        for n in range(6):
            for k in range(6):
                for text in perms_of(n):
                    for pattern in perms_of(k):
                        assert perm_contains(text, pattern).contains == (
                            perm_count(text, pattern) >= 1
                        )
                for text in partitions_of(n):
                    for pattern in partitions_of(k):
                        assert partition_contains(text, pattern).contains == (
                            partition_count(text, pattern) >= 1
                        )
                for text in rgf_words_of(n):
                    for pattern in rgf_words_of(k):
                        assert rgf_contains(text, pattern).contains == (
                            rgf_count(text, pattern) >= 1
                        )

    def test_word_containment_implies_partition_containment(self):
        # one direction holds everywhere; the recorded pair breaks the converse
        for n in range(6):
            for k in range(6):
                for text in partitions_of(n):
                    for pattern in partitions_of(k):
                        if rgf_contains(rgf_of(text), rgf_of(pattern)).contains:
                            assert partition_contains(text, pattern).contains
        text = RGFWord((1, 2, 2, 1))
        pattern = RGFWord((1, 1, 2))
        assert not rgf_contains(text, pattern).contains
        assert partition_contains(
            SetPartition(((1, 4), (2, 3))), SetPartition(((1, 2), (3,)))
        ).contains


class TestCancellation:
    def test_cancel_aborts_long_count(self):
        text = Permutation(tuple(range(1, 1501)))
        with pytest.raises(SearchCancelled):
            perm_count(text, Permutation((1, 2, 3)), cancel=lambda: True)

    def test_cancel_false_completes(self):
        assert perm_count(Permutation((1, 2, 3)), Permutation((1, 2)), cancel=lambda: False) == 3
        sigma = SetPartition(((1, 3), (2, 4)))
        assert partition_count(sigma, SetPartition(((1, 2),)), cancel=lambda: False) == 2
        assert rgf_count(RGFWord((1, 1, 1)), RGFWord((1, 1)), cancel=lambda: False) == 3


@st.composite
def rgf_word_strategy(draw, max_len=9):
    length = draw(st.integers(min_value=0, max_value=max_len))
    letters = []
    peak = 0
    for _ in range(length):
        letter = draw(st.integers(min_value=1, max_value=peak + 1))
        letters.append(letter)
        if letter > peak:
            peak = letter
    return RGFWord(tuple(letters))


@settings(max_examples=150, deadline=None)
@given(
    st.permutations(list(range(1, 8))),
    st.permutations(list(range(1, 4))),
)
def test_perm_engine_matches_brute_random(text_values, pattern_values):
    text = Permutation(tuple(text_values))
    pattern = Permutation(tuple(pattern_values))
    hits = perm_occurrences(text.values, pattern.values)
    assert perm_contains(text, pattern).contains == bool(hits)
    assert perm_count(text, pattern) == len(hits)


@settings(max_examples=150, deadline=None)
@given(rgf_word_strategy(), rgf_word_strategy(max_len=4))
def test_rgf_engine_matches_brute_random(text, pattern):
    hits = rgf_positions(text.letters, pattern.letters)
    result = rgf_contains(text, pattern)
    assert result.contains == bool(hits)
    assert result.witness == (min(hits) if hits else None)
    assert rgf_count(text, pattern) == len(hits)
