"""Exact rational linear algebra on small dense and large sparse systems."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def dot(x: Sequence, y: Sequence):
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def mat_vec(m: Sequence[Sequence], x: Sequence) -> Vector:
    return tuple(dot(row, x) for row in m)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def inverse(m: Sequence[Sequence]) -> Matrix:
    """Gauss-Jordan inverse over the rationals."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class EchelonBasis:
    """Incrementally built row-echelon basis of sparse rational rows.

    Rows are mappings ``column -> coefficient``.  Each stored pivot row is
    normalised so its leading (smallest) column has coefficient 1, and rows
    are reduced on insertion, so ``rank`` is always exact.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, object]) -> dict[int, Fraction]:
        r = {c: Fraction(a) for c, a in row.items() if a}
        while r:
            lead = min(r)
            piv = self.pivots.get(lead)
            if piv is None:
                return r
            f = r[lead]
            for c, a in piv.items():
                val = r.get(c, 0) - f * a
                if val:
                    r[c] = val
                else:
                    r.pop(c, None)
        return r

    def add(self, row: Mapping[int, object]) -> bool:
        """Insert ``row``; return True when it was independent of the basis."""
        r = self.reduce(row)
        if not r:
            return False
        lead = min(r)
        f = r[lead]
        self.pivots[lead] = {c: a / f for c, a in r.items()}
        return True


def sparse_rank(rows: Iterable[Mapping[int, object]]) -> int:
    basis = EchelonBasis()
    seen = set()
    for row in rows:
        key = frozenset((c, a) for c, a in row.items() if a)
        if not key or key in seen:
            continue
        seen.add(key)
        basis.add(row)
    return basis.rank


def dense_rank(m: Sequence[Sequence]) -> int:
    return sparse_rank({j: a for j, a in enumerate(row) if a} for row in m)


def nullity(rows: Iterable[Mapping[int, object]], ncols: int) -> int:
    return ncols - sparse_rank(rows)
