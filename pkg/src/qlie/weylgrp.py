"""Weyl groups as exact rational matrix groups.

Orders come from the fundamental degrees, and are re-derived two independent
ways: breadth-first enumeration of the matrix group (small rank) and an
orbit-stabiliser chain over parabolic subgroups (any rank, including E8).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import Matrix, Vector, dot, inverse
from .rootsys import (
    LieType,
    coxeter_numbers,
    diagram_automorphism_count,
    generate_roots,
    reflect,
)

__all__ = [
    "WeylGroup",
    "OrbitResult",
    "GroupTooLarge",
    "fundamental_degrees",
    "weyl_group",
    "weyl_order",
    "enumerate_group",
    "order_by_stabilizer_chain",
    "orbit",
    "stabilizer_order",
    "catalan",
    "weyl_catalan",
    "lattice_automorphism_order",
    "count_root_isometries",
]

ENUMERATION_RANK = 4


class GroupTooLarge(RuntimeError):
    """Enumeration exceeded its element budget."""


def fundamental_degrees(t: "LieType | str") -> tuple[int, ...]:
    t = LieType.parse(t)
    n = t.rank
    f = t.family
    if f == "A":
        return tuple(range(2, n + 2))
    if f in "BC":
        return tuple(range(2, 2 * n + 1, 2))
    if f == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    if f == "E":
        return {
            6: (2, 5, 6, 8, 9, 12),
            7: (2, 6, 8, 10, 12, 14, 18),
            8: (2, 8, 12, 14, 18, 20, 24, 30),
        }[n]
    if f == "F":
        return (2, 6, 8, 12)
    if f == "G":
        return (2, 6)
    raise AssertionError(f)


def _reflection_matrix(alpha: Vector) -> Matrix:
    n = len(alpha)
    norm = dot(alpha, alpha)
    return tuple(
        tuple(Fraction(int(i == j)) - 2 * alpha[i] * alpha[j] / norm for j in range(n))
        for i in range(n)
    )


@dataclass(frozen=True)
class WeylGroup:
    type: LieType
    generators: tuple[Matrix, ...]
    degrees: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(self.degrees)


@dataclass(frozen=True)
class OrbitResult:
    seed: Vector
    orbit_size: int
    points: tuple[Vector, ...]
    representative_words: tuple[tuple[int, ...], ...] | None = None


@lru_cache(maxsize=None)
def weyl_group(t: "LieType | str") -> WeylGroup:
    t = LieType.parse(t)
    rs = generate_roots(t)
    gens = tuple(_reflection_matrix(a) for a in rs.simple_roots)
    return WeylGroup(t, gens, fundamental_degrees(t))


def enumerate_group(generators, limit: int = 200_000) -> set[Matrix]:
    """All products of the generators, by breadth-first search from the identity."""
    n = len(generators[0])
    ident = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    seen = {ident}
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        mt = list(zip(*m))
        for g in generators:
            prod = tuple(tuple(dot(row, col) for col in mt) for row in g)
            if prod not in seen:
                seen.add(prod)
                if len(seen) > limit:
                    raise GroupTooLarge(f"more than {limit} elements")
                queue.append(prod)
    return seen


def weyl_order(t: "LieType | str", verify: bool = True) -> int:
    """Product of the fundamental degrees; checked by enumeration for rank <= 4."""
    w = weyl_group(t)
    order = w.order
    if verify and w.type.rank <= ENUMERATION_RANK:
        found = _enumerated_order(w.type)
        if found != order:
            raise ArithmeticError(
                f"degree product {order} disagrees with enumeration {found} for {w.type}"
            )
    return order


@lru_cache(maxsize=None)
def _enumerated_order(t: LieType) -> int:
    w = weyl_group(t)
    return len(enumerate_group(w.generators, limit=10 * w.order))


def _vector_orbit(seed: Vector, mirrors) -> list[Vector]:
    seen = {seed}
    out = [seed]
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for a in mirrors:
            y = reflect(x, a)
            if y not in seen:
                seen.add(y)
                out.append(y)
                queue.append(y)
    return out


def order_by_stabilizer_chain(mirrors) -> int:
    """Order of the reflection group generated by ``mirrors`` (a set of simple roots).

    The highest root of the generated system is dominant, so its stabiliser is
    the parabolic subgroup on the simple roots orthogonal to it.  Recursing
    gives |W| = prod of orbit sizes.
    """
    mirrors = list(mirrors)
    if not mirrors:
        return 1
    roots: set[Vector] = set()
    for a in mirrors:
        if a not in roots:
            roots.update(_vector_orbit(a, mirrors))
    gram = [[dot(a, b) for b in mirrors] for a in mirrors]
    ginv = inverse(gram)

    def height(r):
        pair = [dot(r, a) for a in mirrors]
        return sum(ginv[i][j] * pair[j] for i in range(len(mirrors)) for j in range(len(mirrors)))

    top = max(sorted(roots), key=height)
    orbit_size = len(_vector_orbit(top, mirrors))
    rest = [a for a in mirrors if dot(a, top) == 0]
    return orbit_size * order_by_stabilizer_chain(rest)


def orbit(t: "LieType | str", seed, words: bool = False) -> OrbitResult:
    """Orbit of ``seed`` under the simple reflections, in breadth-first order."""
    rs = generate_roots(t)
    seed = tuple(Fraction(x) for x in seed)
    if len(seed) != rs.ambient_dim:
        raise ValueError(f"seed has dimension {len(seed)}, expected {rs.ambient_dim}")
    simple = rs.simple_roots
    seen = {seed: ()}
    out = [seed]
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for i, a in enumerate(simple):
            y = reflect(x, a)
            if y not in seen:
                seen[y] = (i,) + seen[x]
                out.append(y)
                queue.append(y)
    reps = tuple(seen[p] for p in out) if words else None
    return OrbitResult(seed, len(out), tuple(out), reps)


def stabilizer_order(t: "LieType | str", seed) -> int:
    """Count group elements fixing ``seed`` by full enumeration (small rank only)."""
    w = weyl_group(t)
    if w.type.rank > ENUMERATION_RANK:
        raise ValueError("stabiliser enumeration is limited to rank <= 4")
    seed = tuple(Fraction(x) for x in seed)
    return sum(
        1 for m in enumerate_group(w.generators)
        if tuple(dot(row, seed) for row in m) == seed
    )


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("catalan needs k >= 0")
    return math.comb(2 * k, k) // (k + 1)


def weyl_catalan(t: "LieType | str") -> int:
    """prod_i (h + d_i) / d_i."""
    h, _ = coxeter_numbers(t)
    degs = fundamental_degrees(t)
    num = math.prod(h + d for d in degs)
    den = math.prod(degs)
    if num % den:
        raise ArithmeticError(f"non-integral Catalan number for {t}")
    return num // den


def count_root_isometries(t: "LieType | str") -> int:
    """Backtracking count of Gram-preserving images of the simple roots among all roots.

    Each such tuple extends to a unique isometry that permutes the roots, so
    this counts the automorphism group of the root system.
    """
    rs = generate_roots(t)
    gram = rs.gram()
    cands = sorted(rs.roots, key=lambda r: (dot(r, r), r))
    table = [[dot(a, b) for b in cands] for a in cands]
    n = rs.rank
    chosen: list[int] = []

    def extend(i: int) -> int:
        if i == n:
            return 1
        total = 0
        for c, row in enumerate(table):
            if row[c] != gram[i][i]:
                continue
            if all(row[chosen[j]] == gram[i][j] for j in range(i)):
                chosen.append(c)
                total += extend(i + 1)
                chosen.pop()
        return total

    return extend(0)


def lattice_automorphism_order(t: "LieType | str", verify: bool = True) -> int:
    """|W| times the number of Dynkin diagram automorphisms.

    For rank <= 4 the product is checked against :func:`count_root_isometries`.
    """
    t = LieType.parse(t)
    order = weyl_order(t, verify=verify) * diagram_automorphism_count(t)
    if verify and t.rank <= ENUMERATION_RANK:
        found = count_root_isometries(t)
        if found != order:
            raise ArithmeticError(f"isometry search found {found}, expected {order} for {t}")
    return order
