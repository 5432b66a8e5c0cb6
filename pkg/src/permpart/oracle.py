"""Brute-force references, exhaustive enumerators, and verification gates.

The references here are deliberately naive transcriptions of the
definitions: partition containment scans every subset of the right size and
compares restrictions.  They share no search code with the engines in
permpart.matchers, which is the point; verify_reduction and
verify_rgf_coincidence judge the engines (and the permutation-to-partition
reduction itself) against them over every instance up to the given bounds.

Enumeration orders are fixed so runs reproduce byte for byte:
permutations stream in lexicographic order of their value words, partitions
in lexicographic order of their canonical block forms.

Factorial and Bell growth make unbounded runs runaway jobs, so the
verification and census entry points refuse bounds above a safety limit
unless forced.  Verification may spread independent instances over worker
processes; reports aggregate associatively and mismatch lists are sorted,
so the outcome is schedule independent.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from .core import (
    Permutation,
    RGFWord,
    SetPartition,
    partition_of_rgf,
    restrict,
    rgf_of,
)
from .errors import BoundExceeded
from .fastpaths import dispatch_contains
from .matchers import partition_count, perm_contains, perm_count, rgf_contains
from .reduction import reduce_perm

VERIFY_BOUND = 6
CENSUS_BOUND = 10

# The two containment notions provably differ on this pair: the word text
# avoids the word pattern, yet the corresponding partitions do contain.
SEPARATION_TEXT = (1, 2, 2, 1)
SEPARATION_PATTERN = (1, 1, 2)

Notion = Literal["partition", "rgf"]


def bell_number(n: int) -> int:
    """n-th Bell number via the Bell triangle recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations of [n], in lexicographic order of value words."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


def _rgf_words(n: int) -> Iterator[tuple[int, ...]]:
    """All restricted growth words of length n, lexicographically."""
    if n == 0:
        yield ()
        return
    word = [0] * n

    def grow(i: int, peak: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(word)
            return
        for letter in range(1, peak + 2):
            word[i] = letter
            yield from grow(i + 1, max(peak, letter))

    yield from grow(0, 0)


def enumerate_partitions(n: int) -> Iterator[SetPartition]:
    """All Bell(n) partitions of [n], in lexicographic order of canonical
    block forms."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    parts = [partition_of_rgf(RGFWord(word)) for word in _rgf_words(n)]
    parts.sort(key=lambda p: p.blocks)
    yield from parts


def brute_partition_contains(text: SetPartition, pattern: SetPartition) -> bool:
    """Literal containment definition: does any subset of the text's ground
    set, of the pattern's size, restrict the text to the pattern?"""
    k = pattern.n
    for subset in itertools.combinations(range(1, text.n + 1), k):
        if restrict(text, subset) == pattern:
            return True
    return False


def brute_partition_count(text: SetPartition, pattern: SetPartition) -> int:
    """Number of witnesses, by full subset enumeration."""
    k = pattern.n
    return sum(
        1
        for subset in itertools.combinations(range(1, text.n + 1), k)
        if restrict(text, subset) == pattern
    )


@dataclass(frozen=True)
class Mismatch:
    """One disagreement found by a verification run."""

    check: str
    text: tuple[int, ...]
    pattern: tuple[int, ...]
    engine: bool | int
    oracle: bool | int


@dataclass(frozen=True)
class VerificationReport:
    max_n: int
    max_k: int
    pairs_checked: int
    mismatches: tuple[Mismatch, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _check_verify_bounds(max_n: int, max_k: int, force: bool) -> None:
    if max_n < 0 or max_k < 0:
        raise ValueError("bounds must be nonnegative")
    if not force and (max_n > VERIFY_BOUND or max_k > VERIFY_BOUND):
        raise BoundExceeded(
            f"refusing max_n={max_n}, max_k={max_k}: factorial growth past "
            f"{VERIFY_BOUND} is a runaway job (pass force=True / --force to override)"
        )


def _sorted_mismatches(mismatches: Iterable[Mismatch]) -> tuple[Mismatch, ...]:
    return tuple(
        sorted(
            mismatches,
            key=lambda m: (len(m.text), m.text, len(m.pattern), m.pattern, m.check),
        )
    )


def _chunks(items: list, jobs: int) -> list[list]:
    per = max(1, (len(items) + jobs - 1) // jobs)
    return [items[i : i + per] for i in range(0, len(items), per)]


def _run_chunked(worker, texts: list, args: tuple, jobs: int) -> tuple[int, list[Mismatch]]:
    pairs = 0
    mismatches: list[Mismatch] = []
    if jobs <= 1 or len(texts) < 2:
        pairs, mismatches = worker((texts, *args))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            payloads = [(chunk, *args) for chunk in _chunks(texts, jobs)]
            for chunk_pairs, chunk_mismatches in pool.map(worker, payloads):
                pairs += chunk_pairs
                mismatches.extend(chunk_mismatches)
    return pairs, mismatches


def _reduction_patterns(max_k: int) -> list[tuple[Permutation, SetPartition]]:
    return [
        (tau, reduce_perm(tau))
        for k in range(1, max_k + 1)
        for tau in enumerate_permutations(k)
    ]


def _verify_reduction_chunk(payload) -> tuple[int, list[Mismatch]]:
    perm_values, max_k = payload
    patterns = _reduction_patterns(max_k)
    pairs = 0
    mismatches = []
    for values in perm_values:
        perm = Permutation(values)
        reduced_text = reduce_perm(perm)
        for tau, reduced_pattern in patterns:
            pairs += 1
            engine = perm_contains(perm, tau).contains
            reference = brute_partition_contains(reduced_text, reduced_pattern)
            if engine != reference:
                mismatches.append(
                    Mismatch("containment", values, tau.values, engine, reference)
                )
            if perm.n <= 5 and tau.n <= 3:
                occurrences = perm_count(perm, tau)
                witnesses = brute_partition_count(reduced_text, reduced_pattern)
                if occurrences != witnesses:
                    mismatches.append(
                        Mismatch("parsimony", values, tau.values, occurrences, witnesses)
                    )
                engine_witnesses = partition_count(reduced_text, reduced_pattern)
                if engine_witnesses != witnesses:
                    mismatches.append(
                        Mismatch(
                            "count-agreement",
                            values,
                            tau.values,
                            engine_witnesses,
                            witnesses,
                        )
                    )
    return pairs, mismatches


def verify_reduction(
    max_n: int = 6, max_k: int = 4, *, force: bool = False, jobs: int = 1
) -> VerificationReport:
    """Check the reduction against the subset-enumeration reference.

    For every permutation pair (text of size 1..max_n, pattern of size
    1..max_k): the permutation engine's containment answer must equal
    brute-force containment of the reduced partitions.  For texts up to 5
    and patterns up to 3, occurrence counts must also match witness counts
    exactly (the reduction is parsimonious), on both the brute-force and
    backtracking count routes.
    """
    _check_verify_bounds(max_n, max_k, force)
    start = time.perf_counter()
    texts = [
        perm.values for n in range(1, max_n + 1) for perm in enumerate_permutations(n)
    ]
    pairs, mismatches = _run_chunked(_verify_reduction_chunk, texts, (max_k,), jobs)
    return VerificationReport(
        max_n, max_k, pairs, _sorted_mismatches(mismatches), time.perf_counter() - start
    )


def _verify_rgf_chunk(payload) -> tuple[int, list[Mismatch]]:
    perm_values, max_k = payload
    patterns = [
        (tau.values, reduce_perm(tau), rgf_of(reduce_perm(tau)))
        for k in range(1, max_k + 1)
        for tau in enumerate_permutations(k)
    ]
    pairs = 0
    mismatches = []
    for values in perm_values:
        perm = Permutation(values)
        reduced_text = reduce_perm(perm)
        text_word = rgf_of(reduced_text)
        for tau_values, reduced_pattern, pattern_word in patterns:
            pairs += 1
            word_answer = rgf_contains(text_word, pattern_word).contains
            partition_answer = brute_partition_contains(reduced_text, reduced_pattern)
            if word_answer != partition_answer:
                mismatches.append(
                    Mismatch(
                        "rgf-coincidence", values, tau_values, word_answer, partition_answer
                    )
                )
    return pairs, mismatches


def verify_rgf_coincidence(
    max_n: int = 5, max_k: int = 3, *, force: bool = False, jobs: int = 1
) -> VerificationReport:
    """Check that word containment and partition containment coincide on
    reduced instances, and that they differ in general.

    On every reduced pair the word notion must answer exactly as brute-force
    partition containment.  Separately, the recorded separation pair (word
    text 1,2,2,1 against pattern 1,1,2) must avoid as words yet contain as
    partitions, pinning down that the coincidence is special to reduced
    instances.
    """
    _check_verify_bounds(max_n, max_k, force)
    start = time.perf_counter()
    texts = [
        perm.values for n in range(1, max_n + 1) for perm in enumerate_permutations(n)
    ]
    pairs, mismatches = _run_chunked(_verify_rgf_chunk, texts, (max_k,), jobs)

    word_answer = rgf_contains(RGFWord(SEPARATION_TEXT), RGFWord(SEPARATION_PATTERN)).contains
    partition_answer = brute_partition_contains(
        partition_of_rgf(RGFWord(SEPARATION_TEXT)),
        partition_of_rgf(RGFWord(SEPARATION_PATTERN)),
    )
    if word_answer is not False or partition_answer is not True:
        mismatches.append(
            Mismatch(
                "rgf-separation",
                SEPARATION_TEXT,
                SEPARATION_PATTERN,
                word_answer,
                partition_answer,
            )
        )
    return VerificationReport(
        max_n, max_k, pairs, _sorted_mismatches(mismatches), time.perf_counter() - start
    )


@dataclass(frozen=True)
class CensusRow:
    """Avoider/container counts for one pattern over all structures of [n]."""

    n: int
    pattern: SetPartition | RGFWord
    notion: Notion
    avoiders: int
    containers: int

    @property
    def total(self) -> int:
        return self.avoiders + self.containers


def _census_chunk(payload) -> int:
    words, pattern, notion = payload
    hits = 0
    if notion == "partition":
        for word in words:
            if dispatch_contains(partition_of_rgf(RGFWord(word)), pattern).contains:
                hits += 1
    else:
        for word in words:
            if rgf_contains(RGFWord(word), pattern).contains:
                hits += 1
    return hits


def census(
    n: int,
    pattern: SetPartition | RGFWord,
    notion: Notion = "partition",
    *,
    force: bool = False,
    jobs: int = 1,
) -> CensusRow:
    """Count avoiders and containers of a pattern among all Bell(n)
    structures of [n], under the chosen containment notion.

    The partition notion takes a SetPartition pattern and runs the
    dispatching matcher; the word notion takes an RGFWord pattern and runs
    the word matcher over the words of all partitions of [n].
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not force and n > CENSUS_BOUND:
        raise BoundExceeded(
            f"refusing census at n={n}: Bell growth past {CENSUS_BOUND} is a "
            "runaway job (pass force=True / --force to override)"
        )
    if notion == "partition":
        if not isinstance(pattern, SetPartition):
            raise ValueError("partition-notion census needs a SetPartition pattern")
    elif notion == "rgf":
        if not isinstance(pattern, RGFWord):
            raise ValueError("word-notion census needs an RGFWord pattern")
    else:
        raise ValueError(f"unknown notion: {notion!r}")

    words = list(_rgf_words(n))
    if jobs <= 1 or len(words) < 2:
        hits = _census_chunk((words, pattern, notion))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            payloads = [(chunk, pattern, notion) for chunk in _chunks(words, jobs)]
            hits = sum(pool.map(_census_chunk, payloads))
    return CensusRow(n, pattern, notion, len(words) - hits, hits)
