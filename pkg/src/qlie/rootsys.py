"""Finite root systems of types A-G in exact rational coordinates.

Simple roots use the classical orthonormal realisations (type A in the
sum-zero hyperplane of R^{n+1}, E8 with the half-integer spinor root, E7 and
E6 as the leading subdiagrams of E8).  The Cartan matrix convention is

    A[i][j] = 2 (a_i, a_j) / (a_j, a_j)

which makes G2 come out as [[2, -1], [-3, 2]] with the first simple root short.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .linalg import Vector, dot, inverse

__all__ = [
    "LieType",
    "RootSystem",
    "simple_roots",
    "cartan_matrix",
    "generate_roots",
    "coxeter_numbers",
    "diagram_automorphism_count",
    "lie_dimension",
    "reflect",
]

MAX_RANK = 8

_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_RULES:
            raise ValueError(f"unknown Lie family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_RULES[self.family](self.rank):
            raise ValueError(f"invalid rank {self.rank} for family {self.family}")

    @classmethod
    def parse(cls, text: "str | LieType") -> "LieType":
        if isinstance(text, LieType):
            return text
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def __str__(self):
        return f"{self.family}{self.rank}"


def _e(n: int, *entries: tuple[int, object]) -> Vector:
    v = [Fraction(0)] * n
    for i, x in entries:
        v[i] = Fraction(x)
    return tuple(v)


def _chain(n: int, dim: int) -> list[Vector]:
    """e_i - e_{i+1} for i < n."""
    return [_e(dim, (i, 1), (i + 1, -1)) for i in range(n)]


def _e8_simple() -> list[Vector]:
    h = Fraction(1, 2)
    a1 = (h, -h, -h, -h, -h, -h, -h, h)
    a2 = _e(8, (0, 1), (1, 1))
    rest = [_e(8, (i - 1, -1), (i, 1)) for i in range(1, 7)]
    return [a1, a2] + rest


def simple_roots(t: LieType) -> list[Vector]:
    t = LieType.parse(t)
    f, n = t.family, t.rank
    if f == "A":
        return _chain(n, n + 1)
    if f == "B":
        return _chain(n - 1, n) + [_e(n, (n - 1, 1))]
    if f == "C":
        return _chain(n - 1, n) + [_e(n, (n - 1, 2))]
    if f == "D":
        return _chain(n - 1, n) + [_e(n, (n - 2, 1), (n - 1, 1))]
    if f == "E":
        return _e8_simple()[:n]
    if f == "F":
        h = Fraction(1, 2)
        return [
            _e(4, (1, 1), (2, -1)),
            _e(4, (2, 1), (3, -1)),
            _e(4, (3, 1)),
            (h, -h, -h, -h),
        ]
    if f == "G":
        return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    raise AssertionError(f)


def _cartan_from_roots(simple: list[Vector]) -> tuple[tuple[int, ...], ...]:
    rows = []
    for ai in simple:
        row = []
        for aj in simple:
            x = 2 * dot(ai, aj) / dot(aj, aj)
            if x.denominator != 1:
                raise ValueError("simple roots do not give an integral Cartan matrix")
            row.append(int(x))
        rows.append(tuple(row))
    return tuple(rows)


def cartan_matrix(t: "LieType | str") -> tuple[tuple[int, ...], ...]:
    return _cartan_from_roots(simple_roots(LieType.parse(t)))


def reflect(x: Vector, alpha: Vector) -> Vector:
    c = 2 * dot(x, alpha) / dot(alpha, alpha)
    if not c:
        return x
    return tuple(a - c * b for a, b in zip(x, alpha))


@dataclass(frozen=True)
class RootSystem:
    type: LieType
    simple_roots: tuple[Vector, ...]
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    weyl_vector: Vector
    # coefficients of each root in the simple-root basis
    coords: dict = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def ambient_dim(self) -> int:
        return len(self.simple_roots[0])

    def height(self, root: Vector) -> int:
        return int(sum(self.coords[root]))

    def highest_root(self) -> Vector:
        return max(self.positive_roots, key=self.height)

    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(dot(a, b) for b in self.simple_roots) for a in self.simple_roots)

    def coroot(self, root: Vector) -> Vector:
        n = dot(root, root)
        return tuple(2 * x / n for x in root)

    def fundamental_weights(self) -> tuple[Vector, ...]:
        """Vectors w_i in the span of the simple roots with <w_i, a_j^vee> = delta_ij."""
        cinv = inverse(self.cartan)
        dim = self.ambient_dim
        out = []
        for i in range(self.rank):
            w = [Fraction(0)] * dim
            for k, a in enumerate(self.simple_roots):
                c = cinv[i][k]
                if c:
                    for d in range(dim):
                        w[d] += c * a[d]
            out.append(tuple(w))
        return tuple(out)

    def weight(self, coefficients) -> Vector:
        """Ambient vector of ``sum_i m_i w_i``."""
        if len(coefficients) != self.rank:
            raise ValueError(f"need {self.rank} fundamental-weight coefficients")
        fw = self.fundamental_weights()
        return tuple(
            sum((Fraction(m) * w[d] for m, w in zip(coefficients, fw)), Fraction(0))
            for d in range(self.ambient_dim)
        )


@lru_cache(maxsize=None)
def generate_roots(t: "LieType | str") -> RootSystem:
    """Close the simple roots under all simple reflections (breadth first)."""
    t = LieType.parse(t)
    if t.rank > MAX_RANK:
        raise ValueError(f"rank {t.rank} exceeds the exhaustive-generation cap {MAX_RANK}")
    simple = simple_roots(t)
    cartan = _cartan_from_roots(simple)
    seen = set(simple)
    order = list(simple)
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for a in simple:
            s = reflect(r, a)
            if s not in seen:
                seen.add(s)
                order.append(s)
                queue.append(s)

    gram = [[dot(a, b) for b in simple] for a in simple]
    ginv = inverse(gram)
    coords = {}
    for r in order:
        pair = [dot(r, a) for a in simple]
        c = tuple(sum((ginv[i][j] * pair[j] for j in range(len(simple))), Fraction(0))
                  for i in range(len(simple)))
        if any(x.denominator != 1 for x in c):
            raise ArithmeticError(f"root {r} is not an integral combination of simple roots")
        coords[r] = c
    positive = [r for r in order if all(x >= 0 for x in coords[r])]
    if len(positive) * 2 != len(order):
        raise ArithmeticError("roots are not split evenly into positive and negative")
    key = lambda r: (sum(coords[r]), tuple(coords[r]))
    positive.sort(key=key)
    roots = sorted(order, key=key)
    dim = len(simple[0])
    rho = tuple(sum((r[d] for r in positive), Fraction(0)) / 2 for d in range(dim))
    return RootSystem(t, tuple(simple), cartan, tuple(roots), tuple(positive), rho, coords)


def coxeter_numbers(t: "LieType | str") -> tuple[int, int]:
    """(h, h_dual): one plus the height of the highest root, resp. highest short coroot."""
    rs = generate_roots(t)
    h = 1 + max(rs.height(r) for r in rs.positive_roots)
    simple = rs.simple_roots

    def coroot_height(r):
        # r^vee = sum c_i (a_i,a_i)/(r,r) a_i^vee
        n = dot(r, r)
        return sum(c * dot(a, a) / n for c, a in zip(rs.coords[r], simple))

    lengths = {dot(r, r) for r in rs.positive_roots}
    longest = max(lengths)
    # coroots of long roots are the short coroots
    h_dual = 1 + max(coroot_height(r) for r in rs.positive_roots if dot(r, r) == longest)
    return h, int(h_dual)


def diagram_automorphism_count(t: "LieType | str") -> int:
    """Number of node permutations preserving the Cartan matrix (exhaustive)."""
    a = cartan_matrix(t)
    n = len(a)
    count = 0
    for p in itertools.permutations(range(n)):
        if all(a[p[i]][p[j]] == a[i][j] for i in range(n) for j in range(n)):
            count += 1
    return count


def lie_dimension(t: "LieType | str") -> int:
    rs = generate_roots(t)
    return len(rs.roots) + rs.rank
