"""Rook-monoid elements and their basic arithmetic.

An element of the rook monoid R_n is an n-by-n matrix of zeros and ones
with at most one 1 in every row and every column.  Column j is recorded
by a single number: the row index of its 1, or 0 when the column is
empty.  The vector of those column values is the "one line" form used
throughout this package; n is always the vector length.

>>> x = parse_one_line("3,0,4,0")
>>> x.entries
(3, 0, 4, 0)
>>> rank(x)
2
>>> to_matrix(x).cells[2]
(1, 0, 0, 0)
>>> str(multiply(x, x))
'4,0,0,0'
"""

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

__all__ = [
    "OneLine",
    "RookMatrix",
    "parse_one_line",
    "from_matrix",
    "to_matrix",
    "multiply",
    "rank",
    "is_permutation",
    "enumerate_elements",
    "read_elements",
    "load_elements",
]


@dataclass(frozen=True)
class OneLine:
    """One-line form of a rook-monoid element.

    Entry j is the row holding the 1 of column j, or 0 for an empty
    column.  Entries lie in 0..n and nonzero values never repeat.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise ValueError("element needs at least one column")
        seen = set()
        for a in self.entries:
            if not 0 <= a <= n:
                raise ValueError(f"entry {a} outside 0..{n}")
            if a:
                if a in seen:
                    raise ValueError(f"nonzero entry {a} appears twice")
                seen.add(a)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


@dataclass(frozen=True)
class RookMatrix:
    """Square 0-1 matrix with at most one 1 per row and per column."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.cells)
        if n == 0 or any(len(row) != n for row in self.cells):
            raise ValueError("cells must form a nonempty square array")
        for row in self.cells:
            if any(v not in (0, 1) for v in row):
                raise ValueError("cells must contain only 0 and 1")
            if sum(row) > 1:
                raise ValueError("row holds more than one 1")
        for j in range(n):
            if sum(row[j] for row in self.cells) > 1:
                raise ValueError("column holds more than one 1")

    @property
    def n(self) -> int:
        return len(self.cells)


def parse_one_line(text: str) -> OneLine:
    """Parse element text.

    The canonical form is comma separated ("3,0,4,0").  Single digits may
    also be packed together without commas ("3040", surrounding parens
    allowed), which is unambiguous only while n <= 9.
    """
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if "," in s:
        tokens = [t.strip() for t in s.split(",")]
    else:
        if len(s) > 9:
            raise ValueError("digit-packed form is limited to n <= 9; use commas")
        tokens = list(s)
    if not tokens or any(not t.isdigit() for t in tokens):
        raise ValueError(f"malformed element text: {text!r}")
    return OneLine(tuple(int(t) for t in tokens))


def from_matrix(m: RookMatrix) -> OneLine:
    """Read the column values off a 0-1 matrix."""
    entries = []
    for j in range(m.n):
        hit = 0
        for i in range(m.n):
            if m.cells[i][j]:
                hit = i + 1
                break
        entries.append(hit)
    return OneLine(tuple(entries))


def to_matrix(x: OneLine) -> RookMatrix:
    """Inverse of from_matrix."""
    n = x.n
    rows = [[0] * n for _ in range(n)]
    for j, a in enumerate(x.entries):
        if a:
            rows[a - 1][j] = 1
    return RookMatrix(tuple(tuple(r) for r in rows))


def multiply(x: OneLine, y: OneLine) -> OneLine:
    """Monoid product; agrees with the matrix product to_matrix(x) * to_matrix(y).

    Column j of the product is column y_j of x when y_j is nonzero, and
    empty otherwise.
    """
    if x.n != y.n:
        raise ValueError(f"size mismatch: {x.n} vs {y.n}")
    return OneLine(tuple(x.entries[b - 1] if b else 0 for b in y.entries))


def rank(x: OneLine) -> int:
    """Number of ones in the matrix, i.e. of nonzero columns."""
    return sum(1 for a in x.entries if a)


def is_permutation(x: OneLine) -> bool:
    """True when every column is occupied, so the element is invertible."""
    return rank(x) == x.n


def enumerate_elements(n: int) -> Iterator[OneLine]:
    """Yield every element of R_n exactly once, in lexicographic order of
    the entry vectors."""
    if n < 1:
        raise ValueError("n must be at least 1")
    entries = [0] * n
    used = [False] * (n + 1)

    def fill(j: int) -> Iterator[OneLine]:
        if j == n:
            yield OneLine(tuple(entries))
            return
        entries[j] = 0
        yield from fill(j + 1)
        for v in range(1, n + 1):
            if not used[v]:
                entries[j] = v
                used[v] = True
                yield from fill(j + 1)
                used[v] = False
        entries[j] = 0

    return fill(0)


def read_elements(lines: Iterable[str]) -> list[OneLine]:
    """Parse an element listing: one element per line, blank lines skipped,
    '#' starts a comment that runs to the end of the line."""
    out = []
    for line in lines:
        body = line.split("#", 1)[0].strip()
        if body:
            out.append(parse_one_line(body))
    return out


def load_elements(path: Union[str, os.PathLike]) -> list[OneLine]:
    with open(path, encoding="utf-8") as fh:
        return read_elements(fh)
