"""Octonions, the exceptional Jordan algebra, derivations, triality and the magic square.

Everything is classical (q = 1) and exact: structure constants are Fractions
and every dimension is a nullity computed by rational elimination.

Octonion convention: Cayley-Dickson doubling

    (a, b)(c, d) = (ac - d* b, d a + b c*)

starting from the reals, with basis e_0 = 1 and e_{k + m} = (0, e_k) at each
doubling of an m-dimensional algebra.  The resulting table:

    e1 e2 = e3    e1 e4 = e5    e1 e6 = -e7   e2 e4 = e6
    e2 e5 = e7    e3 e4 = e7    e3 e5 = -e6

(and e_i e_j = -e_j e_i, e_i^2 = -1 for i, j >= 1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import EchelonBasis, dense_rank
from .rootsys import LieType, lie_dimension

__all__ = [
    "AlgebraTensor",
    "MagicCell",
    "cayley_dickson",
    "real_algebra",
    "complex_algebra",
    "quaternion_algebra",
    "octonion_algebra",
    "division_algebra",
    "jordan_h3o",
    "derivation_dimension",
    "triality_dimension",
    "magic_square_check",
    "MAGIC_SQUARE_LABELS",
    "clifford_tower",
    "bott_homotopy",
    "BOTT_TABLE",
]


@dataclass(frozen=True)
class AlgebraTensor:
    """Structure constants: ``mul[i][j][k]`` is the e_k coefficient of e_i e_j."""

    dim: int
    mul: tuple
    unit_index: int | None = None

    def product(self, x, y) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in self._row(i, j):
                    out[k] += ab * c
        return tuple(out)

    def _row(self, i, j):
        return [(k, c) for k, c in enumerate(self.mul[i][j]) if c]

    def basis(self, i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def is_unital(self) -> bool:
        u = self.unit_index
        if u is None:
            return False
        for i in range(self.dim):
            e = self.basis(i)
            if self.product(self.basis(u), e) != e or self.product(e, self.basis(u)) != e:
                return False
        return True

    def associator(self, x, y, z):
        left = self.product(self.product(x, y), z)
        right = self.product(x, self.product(y, z))
        return tuple(a - b for a, b in zip(left, right))


def _tensor_from(dim: int, mult) -> tuple:
    return tuple(tuple(tuple(mult(i, j)) for j in range(dim)) for i in range(dim))


def cayley_dickson(alg: AlgebraTensor) -> AlgebraTensor:
    """Double ``alg`` using (a, b)(c, d) = (ac - d* b, d a + b c*)."""
    m = alg.dim

    def conj(x):
        return tuple(x[0:1]) + tuple(-c for c in x[1:])

    def mul(x, y):
        a, b = x[:m], x[m:]
        c, d = y[:m], y[m:]
        p = alg.product
        first = tuple(s - t for s, t in zip(p(a, c), p(conj(d), b)))
        second = tuple(s + t for s, t in zip(p(d, a), p(b, conj(c))))
        return first + second

    basis = [tuple(Fraction(int(k == i)) for k in range(2 * m)) for i in range(2 * m)]
    return AlgebraTensor(2 * m, _tensor_from(2 * m, lambda i, j: mul(basis[i], basis[j])), 0)


def real_algebra() -> AlgebraTensor:
    return AlgebraTensor(1, (((Fraction(1),),),), 0)


@lru_cache(maxsize=None)
def complex_algebra() -> AlgebraTensor:
    return cayley_dickson(real_algebra())


@lru_cache(maxsize=None)
def quaternion_algebra() -> AlgebraTensor:
    return cayley_dickson(complex_algebra())


@lru_cache(maxsize=None)
def octonion_algebra() -> AlgebraTensor:
    return cayley_dickson(quaternion_algebra())


def division_algebra(tag: str) -> AlgebraTensor:
    try:
        return {"R": real_algebra, "C": complex_algebra,
                "H": quaternion_algebra, "O": octonion_algebra}[tag]()
    except KeyError:
        raise ValueError(f"unknown division algebra {tag!r}; use R, C, H or O") from None


# ---------------------------------------------------------------------------
# exceptional Jordan algebra

_OFF_DIAG = ((0, 1), (1, 2), (0, 2))


@lru_cache(maxsize=None)
def jordan_h3o() -> AlgebraTensor:
    """3x3 octonionic Hermitian matrices under A o B = (AB + BA) / 2.

    Basis: the three diagonal idempotents E_11, E_22, E_33, then for each
    position (1,2), (2,3), (1,3) the eight matrices with e_k there and its
    conjugate in the mirrored slot.  Products are computed with full octonion
    matrix multiplication, then read back in this basis.
    """
    o = octonion_algebra()
    zero = (Fraction(0),) * 8

    def conj(x):
        return (x[0],) + tuple(-c for c in x[1:])

    def basis_matrix(idx):
        m = [[zero] * 3 for _ in range(3)]
        if idx < 3:
            m[idx][idx] = o.basis(0)
        else:
            pos, k = divmod(idx - 3, 8)
            a, b = _OFF_DIAG[pos]
            m[a][b] = o.basis(k)
            m[b][a] = conj(o.basis(k))
        return m

    def matmul(x, y):
        out = [[zero] * 3 for _ in range(3)]
        for a in range(3):
            for b in range(3):
                acc = [Fraction(0)] * 8
                for c in range(3):
                    p = o.product(x[a][c], y[c][b])
                    for k in range(8):
                        acc[k] += p[k]
                out[a][b] = tuple(acc)
        return out

    def coords(m):
        v = [m[i][i][0] for i in range(3)]
        for a, b in _OFF_DIAG:
            v.extend(m[a][b])
        return tuple(v)

    mats = [basis_matrix(i) for i in range(27)]

    def jprod(i, j):
        xy = coords(matmul(mats[i], mats[j]))
        yx = coords(matmul(mats[j], mats[i]))
        return tuple((s + t) / 2 for s, t in zip(xy, yx))

    table = [[None] * 27 for _ in range(27)]
    for i in range(27):
        for j in range(i, 27):
            table[i][j] = table[j][i] = jprod(i, j)
    return AlgebraTensor(27, tuple(tuple(row) for row in table), None)


# ---------------------------------------------------------------------------
# derivations and triality


def derivation_dimension(alg: AlgebraTensor) -> int:
    """dim { D : D(xy) = D(x) y + x D(y) }, as an exact nullity.

    Unknown D[b][a] (column ``a * dim + b``) is the e_b coefficient of D(e_a).
    For each basis pair (i, j) and output index k:

        sum_c mul[i][j][c] D[k][c] - sum_b D[b][i] mul[b][j][k] - sum_b D[b][j] mul[i][b][k] = 0
    """
    n = alg.dim
    mul = alg.mul
    col = lambda b, a: a * n + b
    # sparse views: for each (j, k) the b with mul[b][j][k] != 0, etc.
    left = {}
    right = {}
    for b in range(n):
        for j in range(n):
            for k, c in enumerate(mul[b][j]):
                if c:
                    left.setdefault((j, k), []).append((b, c))
                    right.setdefault((b, k), []).append((j, c))
    basis = EchelonBasis()
    for i in range(n):
        for j in range(n):
            out = [(c, v) for c, v in enumerate(mul[i][j]) if v]
            for k in range(n):
                row: dict[int, Fraction] = {}
                for c, v in out:
                    key = col(k, c)
                    row[key] = row.get(key, 0) + v
                for b, v in left.get((j, k), ()):
                    key = col(b, i)
                    row[key] = row.get(key, 0) - v
                # x D(y): mul[i][b][k] with D[b][j]
                for b, v in right.get((i, k), ()):
                    key = col(b, j)
                    row[key] = row.get(key, 0) - v
                if any(row.values()):
                    basis.add(row)
                if basis.rank == n * n:
                    return 0
    return n * n - basis.rank


def _so_basis(d: int) -> list[dict[tuple[int, int], int]]:
    """E_ab - E_ba for a < b, as sparse matrices {(row, col): value}."""
    return [{(a, b): 1, (b, a): -1} for a, b in itertools.combinations(range(d), 2)]


def triality_dimension(tag: str) -> int:
    """dim { (D1, D2, D3) in so(K)^3 : D1(xy) = D2(x) y + x D3(y) }."""
    alg = division_algebra(tag)
    d = alg.dim
    so = _so_basis(d)
    m = len(so)
    if m == 0:
        return 0
    mul = alg.mul
    basis = EchelonBasis()
    # unknown t in block (0, 1, 2) * m selects D1, D2, D3
    for i in range(d):
        for j in range(d):
            for k in range(d):
                row: dict[int, Fraction] = {}
                for t, gen in enumerate(so):
                    # D1(e_i e_j)_k
                    v = sum(mul[i][j][c] * gen.get((k, c), 0) for c in range(d))
                    # D2(e_i) e_j
                    w = sum(gen.get((b, i), 0) * mul[b][j][k] for b in range(d))
                    # e_i D3(e_j)
                    u = sum(gen.get((b, j), 0) * mul[i][b][k] for b in range(d))
                    for off, val in ((0, v), (m, -w), (2 * m, -u)):
                        if val:
                            row[off + t] = row.get(off + t, 0) + val
                if row:
                    basis.add(row)
    return 3 * m - basis.rank


# ---------------------------------------------------------------------------
# magic square

MAGIC_SQUARE_LABELS = {
    ("R", "R"): "A1", ("R", "C"): "A2", ("R", "H"): "C3", ("R", "O"): "F4",
    ("C", "R"): "A2", ("C", "C"): "A2+A2", ("C", "H"): "A5", ("C", "O"): "E6",
    ("H", "R"): "C3", ("H", "C"): "A5", ("H", "H"): "B6", ("H", "O"): "E7",
    ("O", "R"): "F4", ("O", "C"): "E6", ("O", "H"): "E7", ("O", "O"): "E8",
}

_TAGS = ("R", "C", "H", "O")


@dataclass(frozen=True)
class MagicCell:
    row: str
    col: str
    label: str
    formula_dim: int
    label_dim: int

    @property
    def consistent(self) -> bool:
        return self.formula_dim == self.label_dim

    def to_json(self) -> dict:
        return {
            "row": self.row,
            "col": self.col,
            "label": self.label,
            "formula_dim": self.formula_dim,
            "label_dim": self.label_dim,
            "consistent": self.consistent,
        }


def _label_dimension(label: str) -> int:
    return sum(lie_dimension(LieType.parse(p)) for p in label.split("+"))


def magic_square_check(labels: dict | None = None) -> list[MagicCell]:
    """tri(K1) + tri(K2) + 3 dim(K1) dim(K2) against the dimension of each label."""
    labels = MAGIC_SQUARE_LABELS if labels is None else labels
    tri = {t: triality_dimension(t) for t in _TAGS}
    dims = {t: division_algebra(t).dim for t in _TAGS}
    cells = []
    for r in _TAGS:
        for c in _TAGS:
            label = labels[(r, c)]
            cells.append(MagicCell(r, c, label, tri[r] + tri[c] + 3 * dims[r] * dims[c],
                                   _label_dimension(label)))
    return cells


# ---------------------------------------------------------------------------
# Clifford algebras and Bott periodicity


def _left_mult(alg: AlgebraTensor, i: int) -> list[list[int]]:
    """Matrix of x -> e_i x."""
    n = alg.dim
    return [[int(alg.mul[i][col][row]) for col in range(n)] for row in range(n)]


def _block(a, b, c, d):
    top = [ra + rb for ra, rb in zip(a, b)]
    bottom = [rc + rd for rc, rd in zip(c, d)]
    return top + bottom


def _matmul_int(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def clifford_tower(n: int) -> tuple[list[list[list[int]]], int]:
    """Real matrices g_1..g_n with g_i g_j + g_j g_i = 2 delta_ij I.

    With K the smallest of R, C, H, O whose imaginary units number at least
    n - 2, the generators act on K + K:

        [[0, 1], [1, 0]],  [[1, 0], [0, -1]],  [[0, L_u], [-L_u, 0]]

    where L_u is left multiplication by an imaginary unit u.  For n = 8 this is
    the representation on O + O.  Returns the generators and the dimension of
    the span of all their products.
    """
    if not 0 <= n <= 8:
        raise ValueError("clifford_tower supports 0 <= n <= 8")
    if n == 0:
        return [], 1
    tag = next(t for t in _TAGS if division_algebra(t).dim - 1 >= n - 2)
    alg = division_algebra(tag)
    m = alg.dim
    eye = [[int(i == j) for j in range(m)] for i in range(m)]
    zero = [[0] * m for _ in range(m)]
    neg = lambda x: [[-v for v in row] for row in x]
    gens = [_block(zero, eye, eye, zero), _block(eye, zero, zero, neg(eye))]
    for u in range(1, m):
        lu = _left_mult(alg, u)
        gens.append(_block(zero, lu, neg(lu), zero))
    gens = gens[:n]
    size = 2 * m
    products = []
    for subset in itertools.product((0, 1), repeat=n):
        p = [[int(i == j) for j in range(size)] for i in range(size)]
        for g, use in zip(gens, subset):
            if use:
                p = _matmul_int(p, g)
        products.append([v for row in p for v in row])
    return gens, dense_rank(products)


# pi_n(O) for n = 0..7, the stable homotopy of the infinite orthogonal group
BOTT_TABLE = ("Z2", "Z2", "0", "Z", "0", "0", "0", "Z")


def bott_homotopy(n: int) -> str:
    if n < 0:
        raise ValueError("n must be >= 0")
    return BOTT_TABLE[n % 8]
