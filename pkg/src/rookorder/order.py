"""The Bruhat-Chevalley order on rook elements, two independent ways.

deodhar_leq compares sorted truncations of the one-line vectors, and
deodhar_leq_gamma restates the same comparison through threshold counts.
ppr_leq instead takes the reflexive-transitive closure of two generator
moves: raising one entry to a larger unused value, and exchanging a
smaller entry with a larger one to its right.  The two routes share no
comparison logic; the verification harness checks that they agree.

is_cover_type1 and is_cover_type2 certify covering relations (edges of
the Hasse diagram) directly from the entries of the two elements.
"""

from bisect import insort
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .elements import OneLine
from .length import length

__all__ = [
    "GeneratorMove",
    "nonincreasing",
    "truncate",
    "containment_leq",
    "deodhar_leq_vectors",
    "deodhar_leq",
    "gamma_count",
    "deodhar_leq_gamma",
    "generator_moves",
    "ppr_raises",
    "ppr_leq",
    "is_cover_type1",
    "is_cover_type2",
    "covers_of",
]


def nonincreasing(values: Sequence[int]) -> tuple[int, ...]:
    """Entries rearranged from largest to smallest."""
    return tuple(sorted(values, reverse=True))


def truncate(values: Sequence[int], k: int) -> tuple[int, ...]:
    """First k entries; k must stay within 1..len(values)."""
    if not 1 <= k <= len(values):
        raise IndexError(f"truncation point {k} outside 1..{len(values)}")
    return tuple(values[:k])


def containment_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise comparison after sorting both vectors non-increasingly."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(u <= v for u, v in zip(nonincreasing(a), nonincreasing(b)))


def deodhar_leq_vectors(a: Sequence[int], b: Sequence[int]) -> bool:
    """Containment of every pair of same-length sorted truncations.

    The sorted prefixes grow by insertion, so the whole test runs in
    O(n^2); the first failing truncation exits early.  Comparing the
    ascending prefixes componentwise is the same as comparing the
    non-increasing ones.
    """
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    xs: list[int] = []
    ys: list[int] = []
    for u, v in zip(a, b):
        insort(xs, u)
        insort(ys, v)
        for p, q in zip(xs, ys):
            if p > q:
                return False
    return True


def deodhar_leq(x: OneLine, y: OneLine) -> bool:
    """Order test by containment of sorted truncations."""
    _check_same_n(x, y)
    return deodhar_leq_vectors(x.entries, y.entries)


def gamma_count(values: Sequence[int], threshold: int) -> int:
    """Number of entries strictly larger than the threshold."""
    return sum(1 for v in values if v > threshold)


def deodhar_leq_gamma(x: OneLine, y: OneLine) -> bool:
    """Order test by threshold counts, no sorting.

    For each truncation length k and each nonzero entry a of the prefix
    x(k), the prefix y(k) must hold at least as many entries >= a as x(k)
    does.  Counting entries >= a as gamma_count(..., a - 1) makes the
    condition exactly equivalent to containment of the sorted prefixes,
    so this must agree with deodhar_leq on every pair.
    """
    _check_same_n(x, y)
    a, b = x.entries, y.entries
    for k in range(1, x.n + 1):
        xk = a[:k]
        yk = b[:k]
        for v in xk:
            if v and gamma_count(xk, v - 1) > gamma_count(yk, v - 1):
                return False
    return True


@dataclass(frozen=True)
class GeneratorMove:
    """One order-generating move, 1-based positions.

    kind "raise": entry i goes up to new_value (unused, larger).
    kind "swap": entries i < j with a_i < a_j trade places.
    """

    kind: str
    i: int
    j: Optional[int] = None
    new_value: Optional[int] = None


def generator_moves(x: OneLine) -> list[tuple[GeneratorMove, OneLine]]:
    """Every single generator move applicable to x, with its result.

    Raises come first (position-major, values ascending), then swaps in
    lexicographic position order.  Results are pairwise distinct and all
    strictly above x.
    """
    a = x.entries
    n = x.n
    taken = {v for v in a if v}
    out: list[tuple[GeneratorMove, OneLine]] = []
    for i in range(n):
        for v in range(a[i] + 1, n + 1):
            if v not in taken:
                moved = a[:i] + (v,) + a[i + 1:]
                out.append((GeneratorMove("raise", i + 1, new_value=v), OneLine(moved)))
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] < a[j]:
                swapped = list(a)
                swapped[i], swapped[j] = swapped[j], swapped[i]
                out.append((GeneratorMove("swap", i + 1, j=j + 1), OneLine(tuple(swapped))))
    return out


def ppr_raises(x: OneLine) -> list[OneLine]:
    """Results of every generator move on x."""
    return [y for _, y in generator_moves(x)]


@lru_cache(maxsize=None)
def _successors(entries: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(y.entries for y in ppr_raises(OneLine(entries)))


@lru_cache(maxsize=None)
def _cached_length(entries: tuple[int, ...]) -> int:
    return length(OneLine(entries))


def ppr_leq(x: OneLine, y: OneLine) -> bool:
    """Order test by reachability of y from x under generator moves.

    Breadth-first closure over the moves with a visited set, pruned by
    the length bound alone: every move strictly increases length, so no
    element at or above length(y), other than y itself, can sit on a
    path to y.  No containment logic is consulted.
    """
    _check_same_n(x, y)
    target = y.entries
    if x.entries == target:
        return True
    bound = _cached_length(target)
    if _cached_length(x.entries) >= bound:
        return False
    seen = {x.entries}
    queue = deque((x.entries,))
    while queue:
        current = queue.popleft()
        for nxt in _successors(current):
            if nxt == target:
                return True
            if nxt not in seen and _cached_length(nxt) < bound:
                seen.add(nxt)
                queue.append(nxt)
    return False


def is_cover_type1(x: OneLine, y: OneLine) -> bool:
    """Covering test for a single raised entry.

    Raising position i from a to b is a cover exactly when every value
    strictly between a and b already sits to the left of position i and,
    when a == 0, every entry to the right of position i exceeds b (so in
    particular no empty column remains after i).  False whenever x and y
    do not differ by exactly one raise.
    """
    if x.n != y.n:
        return False
    diff = [p for p in range(x.n) if x.entries[p] != y.entries[p]]
    if len(diff) != 1:
        return False
    i = diff[0]
    a, b = x.entries[i], y.entries[i]
    if b <= a:
        return False
    before = set(x.entries[:i])
    if any(v not in before for v in range(a + 1, b)):
        return False
    if a == 0 and any(t <= b for t in x.entries[i + 1:]):
        return False
    return True


def is_cover_type2(x: OneLine, y: OneLine) -> bool:
    """Covering test for one exchange.

    Swapping positions i < j with a_i < a_j is a cover exactly when no
    entry strictly between the two positions lies in the closed value
    range [a_i, a_j]; with a_i == 0 that bars intervening empty columns
    too.  False whenever x and y do not differ by exactly one ascending
    exchange.
    """
    if x.n != y.n:
        return False
    diff = [p for p in range(x.n) if x.entries[p] != y.entries[p]]
    if len(diff) != 2:
        return False
    i, j = diff
    if x.entries[i] != y.entries[j] or x.entries[j] != y.entries[i]:
        return False
    lo, hi = x.entries[i], x.entries[j]
    if lo >= hi:
        return False
    return all(v < lo or v > hi for v in x.entries[i + 1: j])


def covers_of(x: OneLine) -> list[OneLine]:
    """All elements covering x, certified by the two covering predicates."""
    return [y for y in ppr_raises(x) if is_cover_type1(x, y) or is_cover_type2(x, y)]


def _check_same_n(x: OneLine, y: OneLine) -> None:
    if x.n != y.n:
        raise ValueError(f"size mismatch: {x.n} vs {y.n}")
