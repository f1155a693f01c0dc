from fractions import Fraction

import pytest

from qlie.linalg import dot
from qlie.rootsys import (
    LieType,
    cartan_matrix,
    coxeter_numbers,
    diagram_automorphism_count,
    generate_roots,
    lie_dimension,
    reflect,
)

ALL_TYPES = [f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 9)] + \
    [f"C{n}" for n in range(2, 9)] + [f"D{n}" for n in range(3, 9)] + ["E6", "E7", "E8", "F4", "G2"]


def _classical_root_count(t: LieType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
    }.get(t.family) or {"E6": 72, "E7": 126, "E8": 240, "F4": 48, "G2": 12}[str(t)]


@pytest.mark.parametrize("name", ALL_TYPES)
def test_root_count(name):
    rs = generate_roots(name)
    assert len(rs.roots) == _classical_root_count(rs.type)
    assert len(rs.positive_roots) * 2 == len(rs.roots)
    assert lie_dimension(name) == len(rs.roots) + rs.rank


@pytest.mark.parametrize("name", ALL_TYPES)
def test_closure_and_integrality(name):
    rs = generate_roots(name)
    roots = set(rs.roots)
    for a in rs.simple_roots:
        assert {reflect(b, a) for b in rs.roots} == roots
        for b in rs.roots:
            assert (2 * dot(b, a) / dot(a, a)).denominator == 1


@pytest.mark.parametrize("name", ALL_TYPES)
def test_weyl_vector_and_highest_root(name):
    rs = generate_roots(name)
    for a in rs.simple_roots:
        assert dot(rs.weyl_vector, rs.coroot(a)) == 1
    top = max(rs.height(r) for r in rs.positive_roots)
    assert sum(1 for r in rs.positive_roots if rs.height(r) == top) == 1
    # highest root is dominant
    assert all(dot(rs.highest_root(), a) >= 0 for a in rs.simple_roots)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_coxeter_number_identity(name):
    rs = generate_roots(name)
    h, hv = coxeter_numbers(name)
    assert h * rs.rank == len(rs.roots)
    assert hv <= h


def test_known_coxeter_pairs():
    assert coxeter_numbers("E8") == (30, 30)
    assert coxeter_numbers("G2") == (6, 4)
    assert coxeter_numbers("F4") == (12, 9)
    assert coxeter_numbers("B3") == (6, 5)
    assert coxeter_numbers("C3") == (6, 4)


def test_cartan_conventions():
    assert cartan_matrix("G2") == ((2, -1), (-3, 2))
    assert cartan_matrix("A2") == ((2, -1), (-1, 2))
    b2 = cartan_matrix("B2")
    c2 = cartan_matrix("C2")
    assert b2 == tuple(zip(*c2))


@pytest.mark.parametrize("name", ALL_TYPES)
def test_cartan_symmetrizable(name):
    rs = generate_roots(name)
    a = rs.cartan
    n = rs.rank
    for i in range(n):
        assert a[i][i] == 2
        for j in range(n):
            assert (a[i][j] == 0) == (a[j][i] == 0)
            assert a[i][j] * dot(rs.simple_roots[j], rs.simple_roots[j]) == \
                a[j][i] * dot(rs.simple_roots[i], rs.simple_roots[i])


def test_diagram_automorphisms():
    expected = {"A1": 1, "A2": 2, "A5": 2, "D4": 6, "D5": 2, "E6": 2, "E7": 1, "E8": 1, "B3": 1, "G2": 1}
    for name, n in expected.items():
        assert diagram_automorphism_count(name) == n


def test_fundamental_weights_are_dual():
    rs = generate_roots("F4")
    for i, w in enumerate(rs.fundamental_weights()):
        for j, a in enumerate(rs.simple_roots):
            assert dot(w, rs.coroot(a)) == int(i == j)


@pytest.mark.parametrize("bad", ["E9", "B1", "D2", "F3", "G3", "X2", "A0", "A"])
def test_invalid_types(bad):
    with pytest.raises(ValueError):
        LieType.parse(bad)


def test_parse_round_trip():
    assert str(LieType.parse("e8")) == "E8"
    assert LieType.parse(LieType("D", 4)) == LieType("D", 4)
    assert isinstance(generate_roots("A1").simple_roots[0][0], Fraction)
