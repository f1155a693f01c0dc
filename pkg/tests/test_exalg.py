import itertools
from fractions import Fraction

import pytest

from qlie.exalg import (
    MAGIC_SQUARE_LABELS,
    AlgebraTensor,
    bott_homotopy,
    clifford_tower,
    derivation_dimension,
    division_algebra,
    jordan_h3o,
    magic_square_check,
    octonion_algebra,
    quaternion_algebra,
    triality_dimension,
)
from qlie.rootsys import lie_dimension


def _basis(alg, i):
    return alg.basis(i)


def test_octonion_table_convention():
    o = octonion_algebra()
    e = lambda i: _basis(o, i)
    assert o.product(e(1), e(2)) == e(3)
    assert o.product(e(1), e(4)) == e(5)
    assert o.product(e(3), e(4)) == e(7)
    assert o.product(e(1), e(6)) == tuple(-x for x in e(7))
    assert o.is_unital()


def test_octonion_imaginary_units():
    o = octonion_algebra()
    for i in range(1, 8):
        assert o.product(_basis(o, i), _basis(o, i)) == tuple(-x for x in _basis(o, 0))
        for j in range(1, 8):
            if i != j:
                ij = o.product(_basis(o, i), _basis(o, j))
                ji = o.product(_basis(o, j), _basis(o, i))
                assert ij == tuple(-x for x in ji)


def test_composition_on_basis():
    o = octonion_algebra()
    for i, j in itertools.product(range(8), repeat=2):
        p = o.product(_basis(o, i), _basis(o, j))
        assert sum(x * x for x in p) == 1


def test_octonions_alternative_not_associative():
    o = octonion_algebra()
    nonassoc = 0
    for i, j, k in itertools.product(range(8), repeat=3):
        x, y, z = _basis(o, i), _basis(o, j), _basis(o, k)
        assert not any(o.associator(x, x, y))
        assert not any(o.associator(y, x, x))
        nonassoc += any(o.associator(x, y, z))
    assert nonassoc > 0


def test_quaternions_associative():
    h = quaternion_algebra()
    for i, j, k in itertools.product(range(4), repeat=3):
        assert not any(h.associator(_basis(h, i), _basis(h, j), _basis(h, k)))


@pytest.mark.parametrize("tag,expected", [("R", 0), ("C", 0), ("H", 3), ("O", 14)])
def test_derivations_of_division_algebras(tag, expected):
    assert derivation_dimension(division_algebra(tag)) == expected


def test_octonion_derivations_are_g2():
    assert derivation_dimension(octonion_algebra()) == lie_dimension("G2")


def test_jordan_algebra_structure():
    j = jordan_h3o()
    assert j.dim == 27
    ident = tuple(Fraction(int(k < 3)) for k in range(27))
    for i in range(27):
        e = _basis(j, i)
        assert j.product(ident, e) == e
        for k in range(27):
            assert j.mul[i][k] == j.mul[k][i]


def test_jordan_identity_on_basis_samples():
    j = jordan_h3o()
    for a in range(0, 27, 4):
        x = _basis(j, a)
        xx = j.product(x, x)
        for b in range(0, 27, 3):
            y = _basis(j, b)
            assert j.product(j.product(x, y), xx) == j.product(x, j.product(y, xx))


def test_jordan_derivations_are_f4():
    assert derivation_dimension(jordan_h3o()) == 52 == lie_dimension("F4")


@pytest.mark.parametrize("tag,expected", [("R", 0), ("C", 2), ("H", 9), ("O", 28)])
def test_triality(tag, expected):
    assert triality_dimension(tag) == expected


def test_triality_of_octonions_is_d4():
    assert triality_dimension("O") == lie_dimension("D4")


def test_magic_square():
    cells = magic_square_check()
    assert len(cells) == 16
    bad = [c for c in cells if not c.consistent]
    assert [(c.row, c.col, c.formula_dim, c.label_dim) for c in bad] == [("H", "H", 66, 78)]
    assert lie_dimension("D6") == 66
    by_pos = {(c.row, c.col): c for c in cells}
    assert by_pos[("O", "O")].formula_dim == 248
    assert by_pos[("R", "R")].formula_dim == 3
    for (r, c), cell in by_pos.items():
        assert cell.formula_dim == by_pos[(c, r)].formula_dim


def test_magic_square_with_corrected_label():
    labels = dict(MAGIC_SQUARE_LABELS)
    labels[("H", "H")] = "D6"
    assert all(c.consistent for c in magic_square_check(labels))


def _mm(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


@pytest.mark.parametrize("n", range(0, 9))
def test_clifford_anticommutation(n):
    gens, span = clifford_tower(n)
    assert len(gens) == n
    size = len(gens[0]) if gens else 1
    eye = [[int(i == j) for j in range(size)] for i in range(size)]
    for i, a in enumerate(gens):
        for j, b in enumerate(gens):
            ab, ba = _mm(a, b), _mm(b, a)
            s = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]
            assert s == [[2 * int(i == j) * v for v in row] for row in eye]
    assert span <= 2**n


@pytest.mark.parametrize("n,size,span", [(0, 1, 1), (1, 2, 2), (2, 2, 4), (8, 16, 256)])
def test_clifford_faithful_cases(n, size, span):
    gens, s = clifford_tower(n)
    assert (len(gens[0]) if gens else 1) == size
    assert s == span


def test_clifford_range():
    with pytest.raises(ValueError):
        clifford_tower(9)
    with pytest.raises(ValueError):
        clifford_tower(-1)


def test_bott_periodicity():
    assert [bott_homotopy(n) for n in range(8)] == ["Z2", "Z2", "0", "Z", "0", "0", "0", "Z"]
    for n in range(41):
        assert bott_homotopy(n) == bott_homotopy(n + 8)
    with pytest.raises(ValueError):
        bott_homotopy(-1)


def test_wrong_sign_table_changes_derivations():
    o = octonion_algebra()
    mul = [[list(o.mul[i][j]) for j in range(8)] for i in range(8)]
    # flip e1 e2 = e3 without touching e2 e1
    mul[1][2] = [-x for x in mul[1][2]]
    broken = AlgebraTensor(8, tuple(tuple(tuple(c) for c in row) for row in mul), 0)
    assert derivation_dimension(broken) != 14
