"""Core types for permutations, set partitions, and restricted growth words.

Conventions used throughout the package:

- Ground sets are [n] = {1, 2, ..., n}; every element, value, and index that
  crosses a public boundary is 1-based.
- A set partition is kept in canonical form: elements ascending inside each
  block, blocks ordered by their minimum element.  Equality and hashing are
  equality of canonical forms.
- Empty structures (the empty permutation, the partition of [0], the empty
  word) are legal and are contained in everything.
- All values are immutable after construction and every operation is a pure
  function of its inputs, so everything here is safe for unrestricted
  concurrent use.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Permutation:
    """A bijective word p_1 ... p_n on {1, ..., n}.

    >>> Permutation((2, 3, 1)).n
    3
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if sorted(values) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {values}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


@dataclass(frozen=True)
class SetPartition:
    """Disjoint nonempty blocks covering {1, ..., n}, held in canonical form.

    The constructor accepts blocks in any order with elements in any order
    and canonicalizes; the partition of [0] is ``SetPartition(())``.

    >>> SetPartition(((2, 4), (3, 1))).blocks
    ((1, 3), (2, 4))
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        raw = tuple(tuple(sorted(block)) for block in self.blocks)
        if any(not block for block in raw):
            raise ValueError("set partition blocks must be nonempty")
        blocks = tuple(sorted(raw, key=lambda block: block[0]))
        object.__setattr__(self, "blocks", blocks)
        elements = [e for block in blocks for e in block]
        n = len(elements)
        if sorted(elements) != list(range(1, n + 1)):
            raise ValueError(f"blocks do not partition [{n}]: {blocks}")

    @classmethod
    def _from_canonical(cls, blocks: tuple[tuple[int, ...], ...]) -> SetPartition:
        # Caller guarantees canonical, valid blocks; skips validation.
        part = object.__new__(cls)
        object.__setattr__(part, "blocks", blocks)
        return part

    @property
    def n(self) -> int:
        """Size of the ground set."""
        return sum(len(block) for block in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.blocks)


@dataclass(frozen=True)
class RGFWord:
    """A restricted growth word: w_1 = 1 and no letter exceeds the running
    maximum of the letters before it by more than one."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        peak = 0
        for position, letter in enumerate(letters, start=1):
            if not 1 <= letter <= peak + 1:
                raise ValueError(
                    f"letter {letter} at position {position} violates restricted growth"
                )
            if letter > peak:
                peak = letter
        object.__setattr__(self, "_peak", peak)

    @property
    def max_letter(self) -> int:
        return self._peak  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)


@dataclass(frozen=True)
class StandardizationMap:
    """The order-preserving bijection from a finite set onto {1, ..., #T}:
    the i-th smallest element of the domain maps to i."""

    domain: tuple[int, ...]

    def __post_init__(self) -> None:
        domain = tuple(self.domain)
        object.__setattr__(self, "domain", domain)
        if list(domain) != sorted(set(domain)):
            raise ValueError("domain must be strictly ascending")

    @property
    def mapping(self) -> dict[int, int]:
        return {e: i for i, e in enumerate(self.domain, start=1)}

    def __len__(self) -> int:
        return len(self.domain)

    def __getitem__(self, element: int) -> int:
        i = bisect_left(self.domain, element)
        if i == len(self.domain) or self.domain[i] != element:
            raise KeyError(element)
        return i + 1

    def image(self, subset: Iterable[int]) -> tuple[int, ...]:
        """Ascending image of a subset of the domain."""
        return tuple(sorted(self[e] for e in set(subset)))


def standardize(elements: Iterable[int]) -> StandardizationMap:
    """Order-preserving relabeling of a finite set of positive integers.

    >>> standardize({1, 3, 4}).mapping
    {1: 1, 3: 2, 4: 3}
    """
    return StandardizationMap(tuple(sorted(set(elements))))


def restrict(sigma: SetPartition, subset: Iterable[int]) -> SetPartition:
    """Restriction of a partition to a subset of its ground set.

    The result is the partition of [#T] whose blocks are the standardized
    nonempty intersections of sigma's blocks with T.

    >>> restrict(SetPartition(((1, 3), (2, 4))), {1, 3, 4}).blocks
    ((1, 2), (3,))
    """
    chosen = set(subset)
    n = sigma.n
    for e in chosen:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} is outside the ground set [{n}]")
    order = sorted(chosen)
    rank = {e: i for i, e in enumerate(order, start=1)}
    blocks = []
    for block in sigma.blocks:
        reduced = tuple(rank[e] for e in block if e in rank)
        if reduced:
            blocks.append(reduced)
    blocks.sort(key=lambda block: block[0])
    return SetPartition._from_canonical(tuple(blocks))


def rgf_of(sigma: SetPartition) -> RGFWord:
    """Encode a partition as the word whose i-th letter is the index of the
    block containing i, blocks numbered 1, 2, ... by their minima."""
    letters = [0] * sigma.n
    for index, block in enumerate(sigma.blocks, start=1):
        for e in block:
            letters[e - 1] = index
    return RGFWord(tuple(letters))


def partition_of_rgf(word: RGFWord) -> SetPartition:
    """Inverse of rgf_of: block j collects the positions carrying letter j."""
    blocks: dict[int, list[int]] = {}
    for position, letter in enumerate(word.letters, start=1):
        blocks.setdefault(letter, []).append(position)
    return SetPartition(tuple(tuple(block) for block in blocks.values()))


def flatten(word: Sequence[int]) -> tuple[int, ...]:
    """Relabel letters by order of first occurrence.

    The output is always a valid restricted growth word.

    >>> flatten((3, 1, 3))
    (1, 2, 1)
    """
    relabel: dict[int, int] = {}
    out = []
    for letter in word:
        if letter not in relabel:
            relabel[letter] = len(relabel) + 1
        out.append(relabel[letter])
    return tuple(out)


def value_standardize(word: Sequence[int]) -> tuple[int, ...]:
    """Relabel letters by value rank: the smallest distinct letter becomes 1,
    the next smallest 2, and so on.  Preserves every equality and strict
    comparison between positions; the output need not be a restricted growth
    word.

    >>> value_standardize((3, 1, 3))
    (2, 1, 2)
    """
    rank = {v: i for i, v in enumerate(sorted(set(word)), start=1)}
    return tuple(rank[v] for v in word)
