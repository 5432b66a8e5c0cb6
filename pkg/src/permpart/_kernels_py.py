"""Pure-Python search kernels.

Fallback implementations of the backtracking loops behind permpart.matchers.
The compiled extension permpart._kernels implements the same six functions
with identical semantics and identical search order; permpart._backend picks
whichever is available at import time.

Kernel conventions:

- inputs are plain tuples of ints; permutations come as their value words,
  set partitions as their block-index words (a restricted growth word whose
  i-th letter names the block containing i);
- returned witnesses are 1-based position tuples, always the
  lexicographically least solution, or None;
- every slot of the search picks positions left to right in increasing
  order, so the first complete match found is the lexicographically least;
- ``cancel`` is an optional zero-argument callable polled every few thousand
  search steps; returning True aborts the search with SearchCancelled.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .errors import SearchCancelled

_POLL_MASK = (1 << 14) - 1

# Suffix-count pruning tables are skipped above this size (entries); the
# search stays correct, only less pruned.
_TABLE_LIMIT = 4_000_000

Cancel = Callable[[], bool] | None


def _poll(cancel: Cancel, ticks: int) -> None:
    if cancel is not None and ticks & _POLL_MASK == 0 and cancel():
        raise SearchCancelled("search aborted by cancellation signal")


def _order_bounds(pattern: Sequence[int]) -> tuple[list[int], list[int]]:
    """For each slot j, the earlier slot holding the nearest pattern value
    below (lo) and above (hi) pattern[j]; -1 when there is none.

    A partial selection is order isomorphic to the pattern prefix iff each
    new value lies strictly between the text values chosen for these two
    neighbor slots.
    """
    k = len(pattern)
    lo = [-1] * k
    hi = [-1] * k
    for j in range(k):
        for i in range(j):
            if pattern[i] < pattern[j] and (lo[j] < 0 or pattern[i] > pattern[lo[j]]):
                lo[j] = i
            if pattern[i] > pattern[j] and (hi[j] < 0 or pattern[i] < pattern[hi[j]]):
                hi[j] = i
    return lo, hi


def perm_find(
    text: Sequence[int], pattern: Sequence[int], cancel: Cancel = None
) -> tuple[int, ...] | None:
    """Lexicographically least occurrence of the pattern permutation in the
    text permutation, as 1-based index tuple, or None."""
    n, k = len(text), len(pattern)
    if k == 0:
        return ()
    if k > n:
        return None
    lo, hi = _order_bounds(pattern)
    chosen = [0] * k
    j = 0
    i = 0
    ticks = 0
    while True:
        ticks += 1
        _poll(cancel, ticks)
        if i > n - (k - j):
            if j == 0:
                return None
            j -= 1
            i = chosen[j] + 1
            continue
        v = text[i]
        if (lo[j] < 0 or text[chosen[lo[j]]] < v) and (
            hi[j] < 0 or v < text[chosen[hi[j]]]
        ):
            chosen[j] = i
            if j == k - 1:
                return tuple(c + 1 for c in chosen)
            j += 1
        i += 1


def perm_count(text: Sequence[int], pattern: Sequence[int], cancel: Cancel = None) -> int:
    """Exact number of occurrences of the pattern permutation in the text."""
    n, k = len(text), len(pattern)
    if k == 0:
        return 1
    if k > n:
        return 0
    lo, hi = _order_bounds(pattern)
    chosen = [0] * k
    count = 0
    j = 0
    i = 0
    ticks = 0
    while True:
        ticks += 1
        _poll(cancel, ticks)
        if i > n - (k - j):
            if j == 0:
                return count
            j -= 1
            i = chosen[j] + 1
            continue
        v = text[i]
        if (lo[j] < 0 or text[chosen[lo[j]]] < v) and (
            hi[j] < 0 or v < text[chosen[hi[j]]]
        ):
            if j == k - 1:
                count += 1
            else:
                chosen[j] = i
                j += 1
        i += 1


def _suffix_counts(word: Sequence[int], width: int) -> list[int] | None:
    """Flat (len+1) x width table: entry [i*width + t-1] counts letter t among
    word[i:].  None when the table would be too large to pay off."""
    n = len(word)
    if (n + 1) * width > _TABLE_LIMIT:
        return None
    table = [0] * ((n + 1) * width)
    for i in range(n - 1, -1, -1):
        base = i * width
        nxt = base + width
        for t in range(width):
            table[base + t] = table[nxt + t]
        table[base + word[i] - 1] += 1
    return table


def _letter_counts(word: Sequence[int], width: int) -> list[int]:
    counts = [0] * (width + 1)
    for letter in word:
        counts[letter] += 1
    return counts


def _sizes_dominate(text_counts: list[int], pattern_counts: list[int]) -> bool:
    """Can pattern blocks inject into text blocks without shrinking?  True iff
    the descending-sorted text block sizes dominate the pattern's."""
    ts = sorted((c for c in text_counts if c), reverse=True)
    ps = sorted((c for c in pattern_counts if c), reverse=True)
    if len(ps) > len(ts):
        return False
    return all(p <= t for p, t in zip(ps, ts))


def _first_occurrences(word: Sequence[int]) -> list[bool]:
    # For a restricted growth word, letter growth marks first occurrences.
    peak = 0
    new = []
    for letter in word:
        new.append(letter > peak)
        if letter > peak:
            peak = letter
    return new


def part_find(
    text: Sequence[int], pattern: Sequence[int], cancel: Cancel = None
) -> tuple[int, ...] | None:
    """Lexicographically least subset T of the text partition's ground set
    whose restriction equals the pattern partition, or None.

    Both partitions arrive as block-index words.  The restriction of the
    text to positions T equals the pattern iff the text word's subsequence
    at T flattens (first-occurrence relabeling) to the pattern word, so the
    search assigns pattern blocks to distinct text blocks left to right.
    """
    n, k = len(text), len(pattern)
    if k == 0:
        return ()
    if k > n:
        return None
    nb = max(text)
    npat = max(pattern)
    if not _sizes_dominate(_letter_counts(text, nb), _letter_counts(pattern, npat)):
        return None
    avail = _suffix_counts(text, nb)
    need = _suffix_counts_pattern(pattern, npat)
    is_new = _first_occurrences(pattern)
    assigned = [0] * (npat + 1)  # pattern block -> text block, 0 = unassigned
    used = [False] * (nb + 1)
    chosen = [0] * k
    j = 0
    i = 0
    ticks = 0
    while True:
        ticks += 1
        _poll(cancel, ticks)
        if i > n - (k - j):
            if j == 0:
                return None
            j -= 1
            block = pattern[j]
            if is_new[j]:
                used[assigned[block]] = False
                assigned[block] = 0
            i = chosen[j] + 1
            continue
        t = text[i]
        block = pattern[j]
        ok = (not used[t]) if is_new[j] else (t == assigned[block])
        if (
            ok
            and avail is not None
            and avail[(i + 1) * nb + t - 1] < need[(j + 1) * npat + block - 1]
        ):
            ok = False
        if ok:
            chosen[j] = i
            if j == k - 1:
                return tuple(c + 1 for c in chosen)
            if is_new[j]:
                assigned[block] = t
                used[t] = True
            j += 1
        i += 1


def part_count(text: Sequence[int], pattern: Sequence[int], cancel: Cancel = None) -> int:
    """Exact number of subsets whose restriction equals the pattern."""
    n, k = len(text), len(pattern)
    if k == 0:
        return 1
    if k > n:
        return 0
    nb = max(text)
    npat = max(pattern)
    if not _sizes_dominate(_letter_counts(text, nb), _letter_counts(pattern, npat)):
        return 0
    avail = _suffix_counts(text, nb)
    need = _suffix_counts_pattern(pattern, npat)
    is_new = _first_occurrences(pattern)
    assigned = [0] * (npat + 1)
    used = [False] * (nb + 1)
    chosen = [0] * k
    count = 0
    j = 0
    i = 0
    ticks = 0
    while True:
        ticks += 1
        _poll(cancel, ticks)
        if i > n - (k - j):
            if j == 0:
                return count
            j -= 1
            block = pattern[j]
            if is_new[j]:
                used[assigned[block]] = False
                assigned[block] = 0
            i = chosen[j] + 1
            continue
        t = text[i]
        block = pattern[j]
        ok = (not used[t]) if is_new[j] else (t == assigned[block])
        if (
            ok
            and avail is not None
            and avail[(i + 1) * nb + t - 1] < need[(j + 1) * npat + block - 1]
        ):
            ok = False
        if ok:
            if j == k - 1:
                count += 1
            else:
                chosen[j] = i
                if is_new[j]:
                    assigned[block] = t
                    used[t] = True
                j += 1
        i += 1


def _suffix_counts_pattern(pattern: Sequence[int], width: int) -> list[int]:
    # Pattern-side table is always built: patterns are small.
    k = len(pattern)
    table = [0] * ((k + 1) * width)
    for j in range(k - 1, -1, -1):
        base = j * width
        nxt = base + width
        for t in range(width):
            table[base + t] = table[nxt + t]
        table[base + pattern[j] - 1] += 1
    return table


def rgf_find(
    text: Sequence[int], pattern: Sequence[int], cancel: Cancel = None
) -> tuple[int, ...] | None:
    """Lexicographically least position set at which the text word's
    subsequence value-standardizes to the pattern word, or None.

    The pattern is a restricted growth word, so its letters are exactly the
    value ranks 1..m; the search binds each rank to a text letter, keeping
    the binding strictly increasing in the rank.
    """
    n, k = len(text), len(pattern)
    if k == 0:
        return ()
    if k > n:
        return None
    m = max(pattern)
    maxt = max(text)
    avail = _suffix_counts(text, maxt)
    need = _suffix_counts_pattern(pattern, m)
    is_new = _first_occurrences(pattern)
    bound = [0] * (m + 1)  # rank -> text letter, 0 = unbound
    chosen = [0] * k
    j = 0
    i = 0
    ticks = 0
    while True:
        ticks += 1
        _poll(cancel, ticks)
        if i > n - (k - j):
            if j == 0:
                return None
            j -= 1
            if is_new[j]:
                bound[pattern[j]] = 0
            i = chosen[j] + 1
            continue
        t = text[i]
        rank = pattern[j]
        if is_new[j]:
            ok = _between_bounds(bound, rank, m, t)
        else:
            ok = t == bound[rank]
        if (
            ok
            and avail is not None
            and avail[(i + 1) * maxt + t - 1] < need[(j + 1) * m + rank - 1]
        ):
            ok = False
        if ok:
            chosen[j] = i
            if j == k - 1:
                return tuple(c + 1 for c in chosen)
            if is_new[j]:
                bound[rank] = t
            j += 1
        i += 1


def rgf_count(text: Sequence[int], pattern: Sequence[int], cancel: Cancel = None) -> int:
    """Exact number of position sets whose subsequence value-standardizes to
    the pattern word."""
    n, k = len(text), len(pattern)
    if k == 0:
        return 1
    if k > n:
        return 0
    m = max(pattern)
    maxt = max(text)
    avail = _suffix_counts(text, maxt)
    need = _suffix_counts_pattern(pattern, m)
    is_new = _first_occurrences(pattern)
    bound = [0] * (m + 1)
    chosen = [0] * k
    count = 0
    j = 0
    i = 0
    ticks = 0
    while True:
        ticks += 1
        _poll(cancel, ticks)
        if i > n - (k - j):
            if j == 0:
                return count
            j -= 1
            if is_new[j]:
                bound[pattern[j]] = 0
            i = chosen[j] + 1
            continue
        t = text[i]
        rank = pattern[j]
        if is_new[j]:
            ok = _between_bounds(bound, rank, m, t)
        else:
            ok = t == bound[rank]
        if (
            ok
            and avail is not None
            and avail[(i + 1) * maxt + t - 1] < need[(j + 1) * m + rank - 1]
        ):
            ok = False
        if ok:
            if j == k - 1:
                count += 1
            else:
                chosen[j] = i
                if is_new[j]:
                    bound[rank] = t
                j += 1
        i += 1


def _between_bounds(bound: list[int], rank: int, m: int, t: int) -> bool:
    """May text letter t be bound to this rank?  It must sit strictly between
    the letters bound to the nearest lower and higher ranks."""
    for r in range(rank - 1, 0, -1):
        if bound[r]:
            if t <= bound[r]:
                return False
            break
    for r in range(rank + 1, m + 1):
        if bound[r]:
            if t >= bound[r]:
                return False
            break
    return True
