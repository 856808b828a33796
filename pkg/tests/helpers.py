"""Shared test oracles and hypothesis strategies.

The oracles here are deliberately naive and independent of the library
code paths they are used to check.
"""

from collections import deque
from functools import lru_cache
from math import comb, factorial

from hypothesis import strategies as st

from rookorder import OneLine, deodhar_leq, enumerate_elements, length


def closed_form_count(n: int) -> int:
    """Number of n-by-n partial permutation matrices: choose k occupied
    rows, k occupied columns, and a bijection between them."""
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


@lru_cache(maxsize=None)
def elements_of(n: int) -> tuple[OneLine, ...]:
    return tuple(enumerate_elements(n))


def zero_el(n: int) -> OneLine:
    return OneLine((0,) * n)


def identity_el(n: int) -> OneLine:
    return OneLine(tuple(range(1, n + 1)))


def reversal_el(n: int) -> OneLine:
    return OneLine(tuple(range(n, 0, -1)))


def matrix_product_01(a, b):
    """Plain triple-loop integer matrix product over tuple-of-tuples."""
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def tuple_inversions(t: tuple[int, ...]) -> int:
    return sum(
        1 for i in range(len(t)) for j in range(i + 1, len(t)) if t[i] > t[j]
    )


def classical_bruhat_leq(u: OneLine, w: OneLine) -> bool:
    """Bruhat order on permutations as the transitive closure of
    inversion-increasing transpositions, pruned by the inversion count."""
    if u.n != w.n:
        raise ValueError("size mismatch")
    target = w.entries
    if u.entries == target:
        return True
    bound = tuple_inversions(target)
    if tuple_inversions(u.entries) >= bound:
        return False
    seen = {u.entries}
    queue = deque((u.entries,))
    while queue:
        cur = queue.popleft()
        for i in range(len(cur)):
            for j in range(i + 1, len(cur)):
                if cur[i] < cur[j]:
                    nxt = list(cur)
                    nxt[i], nxt[j] = nxt[j], nxt[i]
                    t = tuple(nxt)
                    if t == target:
                        return True
                    if t not in seen and tuple_inversions(t) < bound:
                        seen.add(t)
                        queue.append(t)
    return False


@lru_cache(maxsize=None)
def deodhar_matrix(n: int) -> tuple[int, ...]:
    """Bitset rows of the containment order: bit j of row i says
    element i <= element j in lexicographic indexing."""
    els = elements_of(n)
    rows = []
    for x in els:
        bits = 0
        for j, y in enumerate(els):
            if deodhar_leq(x, y):
                bits |= 1 << j
        rows.append(bits)
    return tuple(rows)


@lru_cache(maxsize=None)
def brute_cover_sets(n: int) -> tuple[frozenset[tuple[int, ...]], ...]:
    """For each element (lexicographic index), the entry tuples of its
    covers, extracted from the order relation alone: y covers x when y is
    strictly above x and the open interval between them is empty."""
    els = elements_of(n)
    count = len(els)
    rows = deodhar_matrix(n)
    strict_up = [rows[i] & ~(1 << i) for i in range(count)]
    strict_down = [0] * count
    for i in range(count):
        bits = strict_up[i]
        while bits:
            low = bits & -bits
            strict_down[low.bit_length() - 1] |= 1 << i
            bits ^= low
    out = []
    for i in range(count):
        covers = set()
        bits = strict_up[i]
        while bits:
            low = bits & -bits
            j = low.bit_length() - 1
            bits ^= low
            if strict_up[i] & strict_down[j] == 0:
                covers.add(els[j].entries)
        out.append(frozenset(covers))
    return tuple(out)


@lru_cache(maxsize=None)
def lengths_of(n: int) -> tuple[int, ...]:
    return tuple(length(e) for e in elements_of(n))


@st.composite
def rook_entries(draw, n: int) -> tuple[int, ...]:
    k = draw(st.integers(0, n))
    positions = draw(st.permutations(tuple(range(n))))
    values = draw(st.permutations(tuple(range(1, n + 1))))
    entries = [0] * n
    for p, v in zip(positions[:k], values[:k]):
        entries[p] = v
    return tuple(entries)


@st.composite
def rook_elements(draw, max_n: int = 5, n: int | None = None) -> OneLine:
    size = n if n is not None else draw(st.integers(1, max_n))
    return OneLine(draw(rook_entries(size)))


@st.composite
def element_pairs(draw, max_n: int = 4, n: int | None = None):
    size = n if n is not None else draw(st.integers(1, max_n))
    return OneLine(draw(rook_entries(size))), OneLine(draw(rook_entries(size)))


@st.composite
def element_triples(draw, max_n: int = 3):
    size = draw(st.integers(1, max_n))
    return tuple(OneLine(draw(rook_entries(size))) for _ in range(3))


@st.composite
def permutation_elements(draw, max_n: int = 5) -> OneLine:
    size = draw(st.integers(1, max_n))
    return OneLine(draw(st.permutations(tuple(range(1, size + 1)))))
