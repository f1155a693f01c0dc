import cmath
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlie.partition import (
    casimir,
    character,
    coupling_to_q,
    haar_mc_overlap,
    haar_unitary_eigenvalues,
    multicenter_sum,
    partitions,
    z_blackhole,
    z_blackhole_mc,
    z_blackhole_multistack,
    z_qym,
)

angles = st.lists(st.floats(0, 2 * math.pi, allow_nan=False), min_size=1, max_size=4, unique=True)


def _spec(thetas):
    return [cmath.exp(1j * t) for t in thetas]


def _ssyt_character(lam, xs) -> complex:
    N = len(xs)
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]
    total = 0j

    def fill(k, tab):
        nonlocal total
        if k == len(cells):
            total += math.prod((xs[t - 1] for t in tab.values()), start=1 + 0j)
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
    return total


def _hook_content(lam, N) -> int:
    num = den = 1
    conj = [sum(1 for x in lam if x > c) for c in range(lam[0])] if lam else []
    for r, row in enumerate(lam):
        for c in range(row):
            num *= N + c - r
            den *= (row - c) + (conj[c] - r - 1)
    return num // den


def test_partitions_count():
    # partition numbers p(n) for at most n parts
    assert [sum(1 for _ in partitions(n, n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert list(partitions(3, 2)) == [(3,), (2, 1)]


@settings(max_examples=60, deadline=None)
@given(angles, st.data())
def test_character_routes_agree(thetas, data):
    xs = _spec(thetas)
    N = len(xs)
    size = data.draw(st.integers(0, 6))
    for lam in partitions(size, N):
        jt = character(lam, xs)
        assert abs(jt - _ssyt_character(lam, xs)) < 1e-9
        gap = min((abs(a - b) for i, a in enumerate(xs) for b in xs[i + 1:]), default=1.0)
        if gap > 1e-3:
            assert abs(jt - character(lam, xs, method="bialternant")) < 1e-8


def test_character_at_identity_is_dimension():
    for N in range(1, 5):
        for size in range(5):
            for lam in partitions(size, N):
                assert character(lam, [1] * N) == pytest.approx(_hook_content(lam, N))


def test_character_errors():
    with pytest.raises(ValueError):
        character((1,), [2.0])
    with pytest.raises(ValueError):
        character((1, 1, 1), _spec([0.1, 0.2]))
    with pytest.raises(ValueError):
        character(3, _spec([0.1, 0.2]))
    with pytest.raises(ValueError):
        character((1,), [1, 1], method="bialternant")


@pytest.mark.parametrize("theta", [0.3, 1.0, 2.5])
@pytest.mark.parametrize("M", [0, 1, 5, 20])
def test_zqym_u1_dirichlet(theta, M):
    res = z_qym(1, 1, _spec([theta]), M)
    assert res.terms == 2 * M + 1
    assert abs(res.value - math.sin((M + 0.5) * theta) / math.sin(theta / 2)) < 1e-10


@pytest.mark.parametrize("N", [2, 3])
@pytest.mark.parametrize("cutoff", range(0, 5))
def test_zqym_classical_limit(N, cutoff):
    xs = _spec([0.4, 1.7, 2.9][:N])
    brute = sum(
        _hook_content(lam, N) * _ssyt_character(lam, xs)
        for size in range(cutoff + 1)
        for lam in partitions(size, N)
    )
    assert abs(z_qym(N, 1, xs, cutoff).value - brute) < 1e-9


def test_zqym_damping_extension():
    xs = _spec([0.4, 1.7])
    plain = z_qym(2, 0.9, xs, 3)
    damped = z_qym(2, 0.9, xs, 3, damping=0.0)
    assert plain.value == damped.value
    assert z_qym(2, 0.9, xs, 3, damping=50.0).value == pytest.approx(1.0)


def test_casimir():
    assert casimir((), 3) == 0
    assert casimir((1,), 2) == 2
    assert casimir(3, 1) == 9


def test_blackhole_exact():
    assert z_blackhole({(): 1, (1,): 2}) == 5.0
    assert z_blackhole({(): 1, (1, 0): 2, (1,): 1}) == 10.0
    assert z_blackhole_multistack([{(): 1, (1,): 2}, {(2,): 1j}]) == 5.0


def test_haar_eigenvalues_unit_circle():
    e = haar_unitary_eigenvalues(2, 500, 3)
    assert np.allclose(np.abs(e), 1.0)


def test_haar_mean_trace_vanishes():
    est, err = haar_mc_overlap((1,), (), 2, 20000, 11)
    assert abs(est) < 4 * err


@pytest.mark.parametrize("r1", [(), (1,), (2,), (1, 1)])
@pytest.mark.parametrize("r2", [(), (1,), (2,), (1, 1)])
def test_orthogonality(r1, r2):
    est, err = haar_mc_overlap(r1, r2, 2, 100_000, 7)
    expected = 1.0 if r1 == r2 else 0.0
    assert abs(est - expected) <= 3 * err + 1e-12


def test_blackhole_mc_matches():
    coeffs = {(): 1, (1,): 2, (1, 1): -1j}
    est, err = z_blackhole_mc(coeffs, 2, 100_000, 5)
    assert abs(est - z_blackhole(coeffs)) <= 3 * err


def test_mc_requires_u2():
    with pytest.raises(ValueError):
        haar_mc_overlap((1,), (1,), 3, 2000, 0)
    with pytest.raises(ValueError):
        haar_mc_overlap((1,), (1,), 2, 10, 0)


def _multicenter_brute(entropies, k_max):
    total = 0.0
    for k in range(1, k_max + 1):
        cat = math.comb(2 * (k - 1), k - 1) // k
        inner = 0.0
        for idx in np.ndindex(*([len(entropies)] * k)):
            inner += math.exp(sum(entropies[i] for i in idx))
        total += cat * inner
    return total


def test_multicenter_against_brute_force():
    rng = random.Random(4)
    for _ in range(20):
        s = [rng.uniform(-1, 1) for _ in range(rng.randint(1, 3))]
        k = rng.randint(1, 4)
        assert multicenter_sum(s, k) == pytest.approx(_multicenter_brute(s, k), rel=1e-12)
    assert multicenter_sum([0.0], 3) == 4.0


def test_multicenter_monotone():
    rng = random.Random(9)
    for _ in range(100):
        s = [rng.uniform(-3, 3) for _ in range(rng.randint(1, 5))]
        values = [multicenter_sum(s, k) for k in range(1, 8)]
        assert all(a <= b for a, b in zip(values, values[1:]))


def test_coupling_to_q():
    g, q = coupling_to_q(1j)
    assert g == pytest.approx(2 * math.pi)
    assert q == pytest.approx(math.exp(-2 * math.pi))
    g, q = coupling_to_q(2.0)
    assert abs(q) == pytest.approx(1.0)
    with pytest.raises(ZeroDivisionError):
        coupling_to_q(0)
