"""Exact Catalan / generalized-Catalan arithmetic and ballot sequence enumeration.

All counts are plain Python integers, so every result is exact at any size.
A ballot sequence over the alphabet {1..m} contains each symbol exactly `a`
times and, in every prefix, a smaller symbol occurs at least as often as any
larger one.  For m = 2 these are Dyck paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class BallotSequence:
    """An admissible word: `a` copies of each symbol in 1..m, ballot-ordered."""

    symbols: tuple[int, ...]
    a: int
    m: int

    def __post_init__(self):
        if not is_admissible(self.symbols, self.a, self.m):
            raise ValueError(
                f"not an admissible ({self.a}, {self.m}) sequence: {self.symbols}"
            )

    def __len__(self) -> int:
        return len(self.symbols)


def catalan(a: int) -> int:
    """The a-th Catalan number, (2a)! / (a! (a+1)!)."""
    if a < 0:
        raise ValueError("a must be nonnegative")
    return math.comb(2 * a, a) // (a + 1)


def generalized_catalan(a: int, m: int) -> int:
    """Number of ballot words with `a` copies of each of m symbols.

    Closed form (a*m)! * prod_{i=0}^{m-1} i!/(a+i)!; reduces to catalan(a)
    when m = 2.
    """
    if a < 1:
        raise ValueError("a must be positive")
    if m < 2:
        raise ValueError("m must be at least 2")
    num = math.factorial(a * m)
    den = 1
    for i in range(m):
        num *= math.factorial(i)
        den *= math.factorial(a + i)
    if num % den:
        raise ArithmeticError("generalized Catalan formula did not divide exactly")
    return num // den


def is_admissible(symbols, a: int, m: int) -> bool:
    """True iff `symbols` is a valid ballot word for (a, m).

    Requires length a*m, each symbol in 1..m occurring exactly a times, and
    in every prefix count(s) >= count(t) whenever s < t.
    """
    symbols = tuple(symbols)
    if len(symbols) != a * m:
        return False
    counts = [0] * (m + 1)
    for s in symbols:
        if not 1 <= s <= m:
            return False
        counts[s] += 1
        if counts[s] > a:
            return False
        # prefix condition: the count vector stays non-increasing in s
        if s > 1 and counts[s] > counts[s - 1]:
            return False
    return True


def enumerate_ballot(a: int, m: int = 2) -> Iterator[BallotSequence]:
    """Yield every admissible (a, m) sequence once, in lexicographic order."""
    if a < 1:
        raise ValueError("a must be positive")
    if m < 2:
        raise ValueError("m must be at least 2")
    counts = [0] * (m + 1)
    word: list[int] = []
    total = a * m

    def extend() -> Iterator[BallotSequence]:
        if len(word) == total:
            yield BallotSequence(tuple(word), a, m)
            return
        for s in range(1, m + 1):
            if counts[s] == a:
                continue
            if s > 1 and counts[s] + 1 > counts[s - 1]:
                continue
            counts[s] += 1
            word.append(s)
            yield from extend()
            word.pop()
            counts[s] -= 1

    yield from extend()
