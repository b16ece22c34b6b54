"""Exact sparse vectors, operators and incremental echelon forms.

Vectors are plain ``dict`` objects mapping a global basis index to a nonzero
``gmpy2.mpq``.  Zero entries are never stored, so ``not vec`` tests for the
zero vector.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Tuple

from gmpy2 import mpq

Vector = Dict[int, mpq]

ZERO = mpq(0)
ONE = mpq(1)


def axpy(target: Vector, coeff, vec: Vector) -> None:
    """``target += coeff * vec`` in place, dropping cancelled entries."""
    for k, v in vec.items():
        x = target.get(k)
        if x is None:
            target[k] = coeff * v
        else:
            x += coeff * v
            if x:
                target[k] = x
            else:
                del target[k]


def scale(vec: Vector, coeff) -> Vector:
    if not coeff:
        return {}
    return {k: coeff * v for k, v in vec.items()}


def to_fraction_string(x) -> str:
    x = mpq(x)
    return f"{x.numerator}/{x.denominator}"


def from_fraction_string(text: str) -> mpq:
    num, _, den = text.partition("/")
    return mpq(int(num), int(den or 1))


class SparseOperator:
    """A linear map stored column by column.

    ``shift`` is the weight displacement in simple-root coordinates, e.g.
    ``(-1, 0)`` for ``f_1`` of a rank-2 algebra.
    """

    __slots__ = ("shift", "cols")

    def __init__(self, shift: Tuple[int, ...], cols: Optional[Dict[int, Vector]] = None):
        self.shift = tuple(shift)
        self.cols: Dict[int, Vector] = {} if cols is None else cols

    def col(self, j: int) -> Vector:
        return self.cols.get(j, {})

    def set_col(self, j: int, vec: Vector) -> None:
        if vec:
            self.cols[j] = vec
        else:
            self.cols.pop(j, None)

    def apply(self, vec: Vector) -> Vector:
        out: Vector = {}
        cols = self.cols
        for j, c in vec.items():
            column = cols.get(j)
            if column:
                axpy(out, c, column)
        return out

    def compose(self, other: "SparseOperator") -> "SparseOperator":
        """``self @ other``."""
        shift = tuple(a + b for a, b in zip(self.shift, other.shift))
        cols = {}
        for j, column in other.cols.items():
            v = self.apply(column)
            if v:
                cols[j] = v
        return SparseOperator(shift, cols)

    def commutator(self, other: "SparseOperator") -> "SparseOperator":
        """``[self, other] = self @ other - other @ self``."""
        ab = self.compose(other)
        ba = other.compose(self)
        cols = {j: dict(v) for j, v in ab.cols.items()}
        for j, v in ba.cols.items():
            target = cols.setdefault(j, {})
            axpy(target, -ONE, v)
            if not target:
                del cols[j]
        return SparseOperator(ab.shift, cols)

    def scaled(self, coeff) -> "SparseOperator":
        coeff = mpq(coeff)
        return SparseOperator(self.shift, {j: scale(v, coeff) for j, v in self.cols.items()} if coeff else {})

    def is_zero(self) -> bool:
        return not self.cols

    def nnz(self) -> int:
        return sum(len(v) for v in self.cols.values())

    def triplets(self) -> List[Tuple[int, int, mpq]]:
        """Sorted ``(row, col, value)`` triplets."""
        return sorted((i, j, x) for j, v in self.cols.items() for i, x in v.items())

    @classmethod
    def from_triplets(cls, shift, triplets: Iterable[Tuple[int, int, object]]) -> "SparseOperator":
        cols: Dict[int, Vector] = {}
        for i, j, x in triplets:
            x = mpq(x)
            if x:
                cols.setdefault(j, {})[i] = x
        return cls(shift, cols)

    def __eq__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self.shift == other.shift and self.cols == other.cols

    def __repr__(self):
        return f"SparseOperator(shift={self.shift}, nnz={self.nnz()})"


class Echelon:
    """Incrementally maintained echelon basis of a subspace.

    Rows are kept in insertion order; each row is normalised to 1 at its
    pivot and vanishes at the pivots of all earlier rows, so a single pass
    in insertion order fully reduces a new vector.
    """

    __slots__ = ("rows", "pivots", "capacity")

    def __init__(self, capacity: Optional[int] = None):
        self.rows: List[Tuple[int, Vector]] = []
        self.pivots = set()
        self.capacity = capacity

    @property
    def rank(self) -> int:
        return len(self.rows)

    def full(self) -> bool:
        return self.capacity is not None and len(self.rows) >= self.capacity

    def reduce(self, vec: Vector) -> Vector:
        v = dict(vec)
        if not v:
            return v
        for piv, row in self.rows:
            c = v.get(piv)
            if c is not None:
                axpy(v, -c, row)
        return v

    def insert(self, vec: Vector) -> Optional[Vector]:
        """Adjoin ``vec``; return the new normalised row or None if dependent."""
        if self.full():
            return None
        v = self.reduce(vec)
        if not v:
            return None
        piv = min(v)
        inv = ONE / v[piv]
        if inv != ONE:
            v = {k: x * inv for k, x in v.items()}
        self.rows.append((piv, v))
        self.pivots.add(piv)
        return v


def rank_of(vectors: Iterable[Vector]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.insert(v)
    return ech.rank
