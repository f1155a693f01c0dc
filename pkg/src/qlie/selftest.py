"""Fast invariant suite behind ``qlie selftest``.

Each group recomputes its numbers from the raw data (Cartan matrices,
octonion table) rather than from cached derived objects, so corrupting that
data makes the matching group fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exalg import derivation_dimension, magic_square_check, octonion_algebra
from .partition import partitions
from .qarith import evaluate, q_binomial, q_factorial, q_number
from .qgroup import partition_to_highest_weight, qdim_roots, qdim_typeA
from .rootsys import LieType, cartan_matrix
from .weylgrp import GroupTooLarge, enumerate_group, fundamental_degrees


@dataclass(frozen=True)
class GroupResult:
    name: str
    passed: bool
    detail: str


def _qarith_limits() -> str | None:
    for m in range(-8, 9):
        p = q_number(m)
        if evaluate(p, 1) != m or p.bar() != p or q_number(-m) != -p:
            return f"[{m}] fails"
    for n in range(9):
        if evaluate(q_factorial(n), 1) != math.factorial(n):
            return f"[{n}]! fails"
        for k in range(n + 1):
            if evaluate(q_binomial(n, k), 1) != math.comb(n, k):
                return f"binomial ({n},{k}) fails"
    return None


def _simple_reflections(cartan) -> list:
    """s_i on simple-root coordinates: s_i(a_j) = a_j - A[j][i] a_i."""
    n = len(cartan)
    gens = []
    for i in range(n):
        m = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        for j in range(n):
            m[i][j] -= cartan[j][i]
        gens.append(tuple(tuple(row) for row in m))
    return gens


_WEYL_TYPES = ("A1", "A2", "A3", "B2", "B3", "C3", "G2")


def _weyl_enumeration() -> str | None:
    for name in _WEYL_TYPES:
        t = LieType.parse(name)
        expected = math.prod(fundamental_degrees(t))
        try:
            found = len(enumerate_group(_simple_reflections(cartan_matrix(t)), limit=10 * expected))
        except GroupTooLarge:
            found = None
        if found != expected:
            return f"{name}: enumerated {found}, degree product {expected}"
    return None


def _qdim_agreement() -> str | None:
    for N in range(2, 5):
        for size in range(4):
            for lam in partitions(size, N):
                a = qdim_typeA(lam, N)
                b = qdim_roots(partition_to_highest_weight(lam, N), f"A{N - 1}")
                if a != b:
                    return f"{lam} for U({N}): {a.to_text()} vs {b.to_text()}"
    return None


def _magic_square() -> str | None:
    bad = [(c.row, c.col) for c in magic_square_check() if not c.consistent]
    if bad != [("H", "H")]:
        return f"inconsistent cells {bad}, expected only (H, H)"
    return None


def _octonion_derivations() -> str | None:
    d = derivation_dimension(octonion_algebra())
    if d != 14:
        return f"derivation dimension {d}, expected 14"
    return None


GROUPS = (
    ("qarith limits", _qarith_limits),
    ("weyl enumeration", _weyl_enumeration),
    ("qdim agreement", _qdim_agreement),
    ("magic square", _magic_square),
    ("octonion derivations", _octonion_derivations),
)


def run_selftest() -> list[GroupResult]:
    out = []
    for name, fn in GROUPS:
        try:
            problem = fn()
        except (ArithmeticError, ValueError) as exc:
            problem = f"{type(exc).__name__}: {exc}"
        out.append(GroupResult(name, problem is None, problem or "ok"))
    return out
