"""Sparse exact operators on V^{(x)m} and fraction-free elimination.

Basis words (i_1, ..., i_m) with letters 1..n are ordered lexicographically;
word <-> index is the base-n positional encoding.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import lcm
from typing import Iterable, Mapping

from gmpy2 import mpq

from .exactring import rational

Vector = dict  # index -> rational


@dataclass(frozen=True)
class TensorSpace:
    n: int
    m: int

    @property
    def dim(self) -> int:
        return self.n ** self.m

    def index(self, word: Iterable[int]) -> int:
        idx = 0
        for letter in word:
            idx = idx * self.n + (letter - 1)
        return idx

    def word(self, index: int) -> tuple[int, ...]:
        letters = []
        for _ in range(self.m):
            index, r = divmod(index, self.n)
            letters.append(r + 1)
        return tuple(reversed(letters))

    def words(self) -> list[tuple[int, ...]]:
        return list(product(range(1, self.n + 1), repeat=self.m))

    def content(self, index: int) -> tuple[int, ...]:
        """Letter multiplicities of the basis word (its gl_n weight)."""
        c = [0] * self.n
        for letter in self.word(index):
            c[letter - 1] += 1
        return tuple(c)

    def basis_vector(self, word) -> Vector:
        return {self.index(word): mpq(1)}


class LinOp:
    """Exact sparse operator; ``cols[j]`` maps row index -> nonzero entry."""

    __slots__ = ("space", "cols")

    def __init__(self, space: TensorSpace, cols: Mapping[int, Mapping[int, object]] | None = None):
        self.space = space
        self.cols = {}
        for j, col in (cols or {}).items():
            c = {i: mpq(v) for i, v in col.items() if v}
            if c:
                self.cols[j] = c

    @classmethod
    def _raw(cls, space, cols):
        op = cls.__new__(cls)
        op.space, op.cols = space, cols
        return op

    @classmethod
    def identity(cls, space: TensorSpace) -> "LinOp":
        return cls._raw(space, {j: {j: mpq(1)} for j in range(space.dim)})

    @classmethod
    def zero(cls, space: TensorSpace) -> "LinOp":
        return cls._raw(space, {})

    @classmethod
    def from_entries(cls, space: TensorSpace, entries: Iterable[tuple[int, int, object]]) -> "LinOp":
        cols: dict = {}
        for i, j, v in entries:
            col = cols.setdefault(j, {})
            col[i] = col.get(i, 0) + mpq(v)
        return cls(space, cols)

    @classmethod
    def matrix_unit(cls, n: int, i: int, j: int) -> "LinOp":
        """E_ij on V (1-based)."""
        return cls._raw(TensorSpace(n, 1), {j - 1: {i - 1: mpq(1)}})

    def entry(self, i: int, j: int):
        return self.cols.get(j, {}).get(i, mpq(0))

    def apply(self, vec: Mapping[int, object]) -> Vector:
        out: dict = {}
        for j, c in vec.items():
            col = self.cols.get(j)
            if not col:
                continue
            for i, v in col.items():
                out[i] = out.get(i, 0) + v * c
        return {i: v for i, v in out.items() if v}

    def __matmul__(self, other: "LinOp") -> "LinOp":
        if self.space != other.space:
            raise ValueError("operators act on different spaces")
        cols = {}
        for j, col in other.cols.items():
            c = self.apply(col)
            if c:
                cols[j] = c
        return LinOp._raw(self.space, cols)

    def __add__(self, other: "LinOp") -> "LinOp":
        if self.space != other.space:
            raise ValueError("operators act on different spaces")
        cols = {j: dict(c) for j, c in self.cols.items()}
        for j, col in other.cols.items():
            tgt = cols.setdefault(j, {})
            for i, v in col.items():
                w = tgt.get(i, 0) + v
                if w:
                    tgt[i] = w
                else:
                    tgt.pop(i, None)
            if not tgt:
                del cols[j]
        return LinOp._raw(self.space, cols)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LinOp":
        c = mpq(c)
        if not c:
            return LinOp.zero(self.space)
        return LinOp._raw(self.space, {j: {i: v * c for i, v in col.items()} for j, col in self.cols.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LinOp.identity(self.space)
        for _ in range(k):
            out = out @ self
        return out

    def __eq__(self, other):
        if not isinstance(other, LinOp):
            return NotImplemented
        return self.space == other.space and self.cols == other.cols

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.cols

    def kron(self, other: "LinOp") -> "LinOp":
        """self (x) other on V^{(x)(a+b)}."""
        if self.space.n != other.space.n:
            raise ValueError("local dimensions differ")
        nb = other.space.dim
        space = TensorSpace(self.space.n, self.space.m + other.space.m)
        cols = {}
        for j1, c1 in self.cols.items():
            for j2, c2 in other.cols.items():
                cols[j1 * nb + j2] = {i1 * nb + i2: v1 * v2 for i1, v1 in c1.items() for i2, v2 in c2.items()}
        return LinOp._raw(space, cols)

    def columns(self) -> list[Vector]:
        return [self.cols[j] for j in sorted(self.cols)]

    def to_dense(self) -> list[list]:
        d = self.space.dim
        return [[self.entry(i, j) for j in range(d)] for i in range(d)]

    def triplets(self) -> list[tuple[int, int, str]]:
        return sorted((i, j, str(v)) for j, col in self.cols.items() for i, v in col.items())

    def to_json(self, annotate: bool = False) -> str:
        data = {"n": self.space.n, "m": self.space.m,
                "entries": [list(t) for t in self.triplets()]}
        if annotate:
            data["basis"] = ["".join(map(str, w)) for w in self.space.words()]
        return json.dumps(data)

    @classmethod
    def from_json(cls, text: str) -> "LinOp":
        data = json.loads(text)
        space = TensorSpace(data["n"], data["m"])
        return cls.from_entries(space, ((i, j, rational(v)) for i, j, v in data["entries"]))

    def __repr__(self):
        return f"LinOp(n={self.space.n}, m={self.space.m}, nnz={sum(map(len, self.cols.values()))})"


def kron_all(ops: Iterable[LinOp]) -> LinOp:
    return reduce(LinOp.kron, ops)


def identity_on(n: int, m: int) -> LinOp:
    return LinOp.identity(TensorSpace(n, m))


def commutator(a: LinOp, b: LinOp) -> LinOp:
    return a @ b - b @ a


# ---------------------------------------------------------------------------
# fraction-free elimination


def _integral(vec: Mapping[int, object]) -> dict[int, int]:
    """Scale a rational vector to a primitive integer vector."""
    from math import gcd

    den = 1
    for v in vec.values():
        den = lcm(den, int(mpq(v).denominator))
    ints = {i: int(mpq(v) * den) for i, v in vec.items() if v}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {i: v // g for i, v in ints.items()}
    return ints


class Echelon:
    """Incremental fraction-free row echelon form over the integers.

    Vectors are cleared to primitive integer vectors; elimination uses
    ``v <- p * v - c * w`` with first-nonzero pivoting, followed by content
    removal, so no division ever happens.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, int]] = {}  # pivot index -> row

    def reduce(self, vec: Mapping[int, object]) -> dict[int, int]:
        from math import gcd

        v = _integral(vec)
        while v:
            piv = min(v)
            row = self.rows.get(piv)
            if row is None:
                return v
            a, b = row[piv], v[piv]
            g = gcd(a, b)
            a, b = a // g, b // g
            out = {i: a * x for i, x in v.items()}
            for i, x in row.items():
                w = out.get(i, 0) - b * x
                if w:
                    out[i] = w
                else:
                    out.pop(i, None)
            c = 0
            for x in out.values():
                c = gcd(c, x)
            v = {i: x // c for i, x in out.items()} if c > 1 else out
        return v

    def add(self, vec: Mapping[int, object]) -> bool:
        """Insert vec; True if it was independent of the rows so far."""
        v = self.reduce(vec)
        if not v:
            return False
        self.rows[min(v)] = v
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def image_basis(vectors_or_op) -> list[Vector]:
    """Independent vectors from the input spanning the same space.

    Accepts a LinOp (columns are used) or an iterable of vectors. The
    returned vectors are the original inputs that were independent of
    their predecessors, so they lie in the image.
    """
    vectors = vectors_or_op.columns() if isinstance(vectors_or_op, LinOp) else vectors_or_op
    ech = Echelon()
    out = []
    for v in vectors:
        if ech.add(v):
            out.append({i: mpq(x) for i, x in v.items() if x})
    return out


def rank(vectors_or_op) -> int:
    vectors = vectors_or_op.columns() if isinstance(vectors_or_op, LinOp) else vectors_or_op
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def same_span(a: list[Vector], b: list[Vector]) -> bool:
    ra = rank(a)
    return ra == rank(b) == rank(list(a) + list(b))


def kernel_basis(op: LinOp) -> list[Vector]:
    """Nullspace of op by RREF over the rationals (small operators only)."""
    return nullspace([op.cols.get(j, {}) for j in range(op.space.dim)])


def nullspace(columns: list[Mapping[int, object]]) -> list[Vector]:
    """Basis of {c : sum_j c_j columns[j] = 0}, as sparse coefficient vectors."""
    # rows of the matrix whose columns are given
    ncols = len(columns)
    rows: dict[int, dict[int, mpq]] = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            if v:
                rows.setdefault(i, {})[j] = mpq(v)
    pivots: dict[int, dict[int, mpq]] = {}  # pivot col -> normalized row
    for row in rows.values():
        r = dict(row)
        for pc, prow in pivots.items():
            c = r.get(pc)
            if c:
                for k, v in prow.items():
                    w = r.get(k, 0) - c * v
                    if w:
                        r[k] = w
                    else:
                        r.pop(k, None)
        if not r:
            continue
        pc = min(r)
        inv = 1 / r[pc]
        r = {k: v * inv for k, v in r.items()}
        for qc, qrow in pivots.items():
            c = qrow.get(pc)
            if c:
                for k, v in r.items():
                    w = qrow.get(k, 0) - c * v
                    if w:
                        qrow[k] = w
                    else:
                        qrow.pop(k, None)
        pivots[pc] = r
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = {f: mpq(1)}
        for pc, prow in pivots.items():
            c = prow.get(f)
            if c:
                vec[pc] = -c
        basis.append(vec)
    return basis


def combine(coeffs: Mapping[int, object], vectors: list[Vector]) -> Vector:
    out: dict = {}
    for j, c in coeffs.items():
        for i, v in vectors[j].items():
            out[i] = out.get(i, 0) + c * v
    return {i: v for i, v in out.items() if v}
