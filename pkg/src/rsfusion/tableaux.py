"""Partitions, Young tableaux and symmetric-group bookkeeping.

Cells are 1-based ``(row, column)`` pairs. A cell's content exponent is
``column - row``; its (r,s)-content is ``(s/r) ** exponent``.

Text formats: a partition is ``"2,1"``; a tableau is ``"1,3;2"`` (rows
separated by ``;``).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence

Cell = tuple[int, int]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def coerce(cls, value) -> "Partition":
        if isinstance(value, Partition):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(tuple(p for p in value if p))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(t) for t in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"malformed partition: {text!r}") from exc

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """lambda_i with 1-based i; zero past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def cells(self) -> list[Cell]:
        return [(i, j) for i, row in enumerate(self.parts, 1) for j in range(1, row + 1)]

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self.parts) > n:
            raise ValueError(f"{self} has more than {n} rows")
        return self.parts + (0,) * (n - len(self.parts))

    def __str__(self):
        return ",".join(map(str, self.parts))


def partitions(m: int) -> list[Partition]:
    """All partitions of m in reverse-lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if m < 1:
        raise ValueError("m must be positive")

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in gen(m, m)]


def conjugate(lam) -> Partition:
    lam = Partition.coerce(lam)
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def hooks(lam) -> dict[Cell, int]:
    """Hook length lambda_i + lambda'_j - i - j + 1 of every cell."""
    lam = Partition.coerce(lam)
    lc = conjugate(lam)
    return {(i, j): lam.part(i) + lc.part(j) - i - j + 1 for i, j in lam.cells()}


def b_stat(lam) -> int:
    """b(lambda) = sum_i C(lambda'_i, 2)."""
    return sum(comb(c, 2) for c in conjugate(lam).parts)


def addable_cells(lam) -> list[Cell]:
    lam = Partition.coerce(lam)
    out = []
    for i in range(1, len(lam) + 2):
        j = lam.part(i) + 1
        if i == 1 or lam.part(i - 1) >= j:
            out.append((i, j))
    return out


def removable_cells(lam) -> list[Cell]:
    lam = Partition.coerce(lam)
    return [(i, lam.part(i)) for i in range(1, len(lam) + 1) if lam.part(i) > lam.part(i + 1)]


def num_standard(lam) -> int:
    """Hook length formula."""
    lam = Partition.coerce(lam)
    return factorial(lam.weight) // prod(hooks(lam).values())


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True, order=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(tuple(len(r) for r in rows))  # shape check
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"tableau entries must be 1..m exactly once: {rows}")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"rows must increase: {rows}")
        for upper, lower in zip(rows, rows[1:]):
            if any(lower[j] <= upper[j] for j in range(len(lower))):
                raise ValueError(f"columns must increase: {rows}")

    @classmethod
    def parse(cls, text: str) -> "StandardTableau":
        try:
            rows = tuple(
                tuple(int(x) for x in row.split(",")) for row in text.strip().split(";")
            )
        except ValueError as exc:
            raise ValueError(f"malformed tableau: {text!r}") from exc
        return cls(rows)

    @classmethod
    def coerce(cls, value) -> "StandardTableau":
        if isinstance(value, StandardTableau):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(tuple(tuple(r) for r in value))

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rows)

    def cell_of(self, k: int) -> Cell:
        for i, row in enumerate(self.rows, 1):
            if k in row:
                return (i, row.index(k) + 1)
        raise KeyError(k)

    @property
    def content_exponents(self) -> tuple[int, ...]:
        pos = {}
        for i, row in enumerate(self.rows, 1):
            for j, x in enumerate(row, 1):
                pos[x] = j - i
        return tuple(pos[k] for k in range(1, self.m + 1))

    def remove_max(self) -> "StandardTableau":
        """The tableau with the cell holding m removed."""
        m = self.m
        rows = [tuple(x for x in r if x != m) for r in self.rows]
        return StandardTableau(tuple(r for r in rows if r))

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def __str__(self):
        return ";".join(",".join(map(str, r)) for r in self.rows)


def content_exponents(T) -> tuple[int, ...]:
    return StandardTableau.coerce(T).content_exponents


@lru_cache(maxsize=None)
def _standard(parts: tuple[int, ...]) -> tuple[StandardTableau, ...]:
    if not parts:
        return (StandardTableau(()),)
    lam = Partition(parts)
    m = lam.weight
    out = []
    for i, j in removable_cells(lam):
        smaller = list(parts)
        smaller[i - 1] -= 1
        smaller = tuple(p for p in smaller if p)
        for U in _standard(smaller):
            rows = [list(r) for r in U.rows]
            if i > len(rows):
                rows.append([])
            rows[i - 1].append(m)
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
    out.sort(key=StandardTableau.reading_word)
    return tuple(out)


def standard_tableaux(lam) -> list[StandardTableau]:
    """Standard tableaux of shape lam, sorted by row reading word."""
    return list(_standard(Partition.coerce(lam).parts))


def all_standard_tableaux(m: int) -> list[tuple[Partition, StandardTableau]]:
    return [(lam, T) for lam in partitions(m) for T in standard_tableaux(lam)]


def hook_content_dim(lam, n: int) -> int:
    """prod over cells of (n + j - i) / h; the dimension of the GL_n irreducible."""
    lam = Partition.coerce(lam)
    h = hooks(lam)
    num = prod(n + j - i for i, j in lam.cells())
    return num // prod(h.values())


def _horizontal_strips(outer: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Partitions inner with outer/inner a horizontal strip of the given size."""
    rows = len(outer)

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        nxt = outer[i + 1] if i + 1 < rows else 0
        # inner_i ranges over [outer_{i+1}, outer_i]
        for take in range(0, min(left, outer[i] - nxt) + 1):
            yield from rec(i + 1, left - take, acc + [outer[i] - take])

    yield from rec(0, size, [])


def kostka(lam, mu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    lam = Partition.coerce(lam)
    mu = tuple(int(x) for x in mu)
    if sum(mu) != lam.weight:
        return 0

    @lru_cache(maxsize=None)
    def count(shape: tuple[int, ...], k: int) -> int:
        # fill letters 1..k into shape; letter k occupies a horizontal strip
        if k == 0:
            return 1 if not shape else 0
        return sum(count(inner, k - 1) for inner in _horizontal_strips(shape, mu[k - 1]))

    return count(lam.parts, len(mu))


def semistandard_tableaux(lam, n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Explicit enumeration of semistandard tableaux with entries <= n."""
    lam = Partition.coerce(lam)
    cells = lam.cells()
    out = []
    filling: dict[Cell, int] = {}

    def rec(idx):
        if idx == len(cells):
            out.append(tuple(tuple(filling[(i, j)] for j in range(1, lam.part(i) + 1))
                             for i in range(1, len(lam) + 1)))
            return
        i, j = cells[idx]
        lo = 1
        if j > 1:
            lo = max(lo, filling[(i, j - 1)])
        if i > 1:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            rec(idx + 1)
        filling.pop((i, j), None)

    rec(0)
    return out


def compositions(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of m into n parts, lexicographically decreasing."""
    if n == 1:
        yield (m,)
        return
    for first in range(m, -1, -1):
        for rest in compositions(m - first, n - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# permutations in one-line notation


class Permutation(tuple):
    """A permutation of 1..m in one-line notation.

    Right multiplication by s_i swaps positions i and i+1; this is the
    convention under which T_sigma T_i = T_{sigma s_i} when the length grows.
    """

    def __new__(cls, oneline: Sequence[int]):
        t = tuple(int(x) for x in oneline)
        if sorted(t) != list(range(1, len(t) + 1)):
            raise ValueError(f"not a permutation: {t}")
        return super().__new__(cls, t)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(1, m + 1))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(int(c) for c in text)

    @property
    def m(self) -> int:
        return len(self)

    @property
    def length(self) -> int:
        return length(self)

    @property
    def reduced_word(self) -> tuple[int, ...]:
        return reduced_word(self)

    def __str__(self):
        return "".join(map(str, self))

    def __repr__(self):
        return f"Permutation({str(self)!r})"


def length(p: Sequence[int]) -> int:
    """Number of inversions."""
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def times_simple(p: tuple, i: int) -> tuple:
    """p * s_i: swap one-line positions i and i+1 (1-based)."""
    return p[: i - 1] + (p[i], p[i - 1]) + p[i + 1:]


def simple_times(i: int, p: tuple) -> tuple:
    """s_i * p: swap the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in p)


@lru_cache(maxsize=None)
def _reduced_word(p: tuple) -> tuple[int, ...]:
    for i in range(1, len(p)):
        if p[i - 1] > p[i]:
            return _reduced_word(times_simple(p, i)) + (i,)
    return ()


def reduced_word(p: Sequence[int]) -> tuple[int, ...]:
    """A reduced word (i_1..i_k) with p = s_{i_1} ... s_{i_k}."""
    return _reduced_word(tuple(p))


def from_word(word: Sequence[int], m: int) -> Permutation:
    p = tuple(range(1, m + 1))
    for i in word:
        p = times_simple(p, i)
    return Permutation(p)


def longest_word(k: int) -> tuple[int, ...]:
    """s_1 (s_2 s_1) ... (s_{k-1} ... s_1)."""
    return tuple(i for top in range(1, k) for i in range(top, 0, -1))


def longest_element(k: int, m: int | None = None) -> Permutation:
    """w_k, reversing 1..k, inside S_m (default m = k)."""
    if k < 1:
        raise ValueError("k must be positive")
    m = k if m is None else m
    if m < k:
        raise ValueError("k must not exceed m")
    return Permutation(tuple(range(k, 0, -1)) + tuple(range(k + 1, m + 1)))


@lru_cache(maxsize=None)
def all_permutations(m: int) -> tuple[tuple[int, ...], ...]:
    from itertools import permutations as _perms

    return tuple(_perms(range(1, m + 1)))
