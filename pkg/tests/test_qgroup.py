import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlie.linalg import dot
from qlie.partition import partitions
from qlie.qarith import LaurentPoly, evaluate, q_number
from qlie.qgroup import (
    build_sl2_rep,
    build_sln_fundamental,
    check_relations,
    partition_to_highest_weight,
    perturb,
    q_cartan,
    qdim_roots,
    qdim_typeA,
)
from qlie.rootsys import cartan_matrix, generate_roots


def _ssyt_poly(lam, N) -> LaurentPoly:
    """Sum over semistandard tableaux of prod q^{N + 1 - 2t}, i.e. s_lam(q^{N-1}, ..., q^{1-N})."""
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]
    total = {}

    def fill(k, tab):
        if k == len(cells):
            e = sum(2 * (N + 1 - 2 * t) for t in tab.values())  # v-exponent
            total[e] = total.get(e, 0) + 1
            return
        r, c = cells[k]
        lo = 1
        if c:
            lo = max(lo, tab[(r, c - 1)])
        if r:
            lo = max(lo, tab[(r - 1, c)] + 1)
        for t in range(lo, N + 1):
            tab[(r, c)] = t
            fill(k + 1, tab)
        tab.pop((r, c), None)

    fill(0, {})
    return LaurentPoly(total)


def _hook_content(lam, N) -> int:
    num = den = 1
    conj = [sum(1 for x in lam if x > c) for c in range(lam[0])] if lam else []
    for r, row in enumerate(lam):
        for c in range(row):
            num *= N + c - r
            den *= (row - c - 1) + (conj[c] - r - 1) + 1
    return num // den


@pytest.mark.parametrize("N", range(1, 5))
def test_qdim_typeA_is_principal_specialization(N):
    for size in range(5):
        for lam in partitions(size, N):
            assert qdim_typeA(lam, N) == _ssyt_poly(lam, N)


@pytest.mark.parametrize("N", range(2, 6))
def test_qdim_formulas_agree(N):
    for size in range(7):
        for lam in partitions(size, N):
            a = qdim_typeA(lam, N)
            assert a == qdim_roots(partition_to_highest_weight(lam, N), f"A{N - 1}")
            assert a.is_bar_invariant()
            assert evaluate(a, 1) == _hook_content(lam, N)


def test_qdim_example():
    assert qdim_typeA((2, 1), 3).to_text() == "q^4 + 2q^2 + 2 + 2q^-2 + q^-4"
    assert qdim_typeA((1,), 2).to_text() == "q + q^-1"


def _weyl_dimension(hw, name) -> Fraction:
    rs = generate_roots(name)
    lam = rs.weight(hw)
    out = Fraction(1)
    for a in rs.positive_roots:
        out *= dot([x + y for x, y in zip(lam, rs.weyl_vector)], a) / dot(rs.weyl_vector, a)
    return out


@pytest.mark.parametrize("name", ["B2", "C3", "G2", "F4", "D4"])
def test_nonsimply_laced_classical_limit(name):
    rank = generate_roots(name).rank
    for i in range(rank):
        hw = tuple(int(i == j) for j in range(rank))
        p = qdim_roots(hw, name)
        assert p.is_bar_invariant()
        assert evaluate(p, 1) == _weyl_dimension(hw, name)


def test_known_small_dimensions():
    assert sorted(evaluate(qdim_roots(hw, "B2"), 1) for hw in [(1, 0), (0, 1)]) == [4, 5]
    assert sorted(evaluate(qdim_roots(hw, "G2"), 1) for hw in [(1, 0), (0, 1)]) == [7, 14]


def test_adjoint_of_e8():
    rs = generate_roots("E8")
    theta = rs.highest_root()
    hw = [int(dot(theta, rs.coroot(a))) for a in rs.simple_roots]
    assert evaluate(qdim_roots(hw, "E8"), 1) == 248


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        qdim_roots((-1, 0), "A2")
    with pytest.raises(ValueError):
        qdim_typeA((1, 2), 3)
    with pytest.raises(ValueError):
        qdim_typeA((1, 1, 1, 1), 3)


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "F4"])
def test_q_cartan_classical_limit(name):
    qa = q_cartan(name)
    a = cartan_matrix(name)
    for i, row in enumerate(qa):
        for j, p in enumerate(row):
            assert p == q_number(a[i][j])
            assert evaluate(p, 1) == a[i][j]


@pytest.mark.parametrize("fast", [False, True])
@pytest.mark.parametrize("dim", range(1, 7))
def test_sl2_reps_pass(dim, fast):
    report = check_relations(build_sl2_rep(dim), fast=fast)
    assert report.passed, report.failed()
    assert not report.structural_errors


@pytest.mark.parametrize("fast", [False, True])
@pytest.mark.parametrize("n", range(2, 6))
def test_sln_fundamentals_pass(n, fast):
    report = check_relations(build_sln_fundamental(n), fast=fast)
    assert report.passed, report.failed()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_mutations_fail_in_both_modes(data):
    n = data.draw(st.integers(2, 4))
    rep = build_sln_fundamental(n)
    gen = data.draw(st.sampled_from(["X", "Y"]))
    node = data.draw(st.integers(0, n - 2))
    r = data.draw(st.integers(0, n - 1))
    c = data.draw(st.integers(0, n - 1))
    bad = perturb(rep, gen, node, r, c)
    exact = check_relations(bad)
    fast = check_relations(bad, fast=True)
    assert not exact.passed
    assert not fast.passed
    assert {x.relation for x in exact.failed()} == {x.relation for x in fast.failed()}


def test_witness_points_at_commutator():
    bad = perturb(build_sln_fundamental(3), "X", 0, 0, 1)
    failed = {r.relation for r in check_relations(bad).failed()}
    assert "[X,Y]" in failed


def test_singular_z_is_structural():
    rep = build_sl2_rep(2)
    z = rep.Z[0]
    bad = perturb(rep, "Z", 0, 1, 1, -z[1][1])
    report = check_relations(bad)
    assert report.structural_errors
    assert not report.passed


def test_offdiagonal_z_is_structural():
    bad = perturb(build_sl2_rep(2), "Z", 0, 0, 1)
    assert check_relations(bad).structural_errors


def test_degenerate_zero_rep_passes():
    from dataclasses import replace

    from qlie.qarith import QScalar

    base = build_sln_fundamental(3)
    n = base.dimension
    zero = tuple(tuple(QScalar(0) for _ in range(n)) for _ in range(n))
    ident = tuple(tuple(QScalar(int(a == b)) for b in range(n)) for a in range(n))
    rep = replace(base, X=(zero, zero), Y=(zero, zero), Z=(ident, ident))
    report = check_relations(rep)
    assert report.passed
    assert check_relations(rep, fast=True).passed


def test_trivial_and_adjoint():
    assert qdim_roots((0, 0), "A2") == LaurentPoly.const(1)
    assert qdim_typeA((), 4) == LaurentPoly.const(1)
    assert evaluate(qdim_roots((1, 1), "A2"), 1) == 8
