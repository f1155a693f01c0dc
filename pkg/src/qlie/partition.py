"""Characters, the q-deformed Yang-Mills sum, black-hole norms and multi-center sums."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from .qarith import evaluate
from .qgroup import qdim_typeA, validate_partition
from .weylgrp import catalan

__all__ = [
    "character",
    "partitions",
    "QYMResult",
    "z_qym",
    "casimir",
    "z_blackhole",
    "z_blackhole_multistack",
    "haar_unitary_eigenvalues",
    "haar_mc_overlap",
    "z_blackhole_mc",
    "multicenter_sum",
    "coupling_to_q",
]

UNIT_TOL = 1e-12


def _check_spectrum(spectrum: Sequence[complex]) -> list[complex]:
    xs = [complex(x) for x in spectrum]
    for x in xs:
        if abs(abs(x) - 1.0) > UNIT_TOL:
            raise ValueError(f"holonomy eigenvalue {x} is not of unit modulus")
    return xs


def _bialternant(lam: tuple[int, ...], xs: list[complex]) -> complex:
    n = len(xs)
    lam = lam + (0,) * (n - len(lam))
    num = np.array([[x ** (lam[j] + n - 1 - j) for j in range(n)] for x in xs])
    den = np.array([[x ** (n - 1 - j) for j in range(n)] for x in xs])
    vdm = np.linalg.det(den)
    if abs(vdm) < 1e-12:
        raise ValueError("bialternant needs distinct eigenvalues")
    return complex(np.linalg.det(num) / vdm)


def _complete_homogeneous(xs: list[complex], kmax: int) -> list[complex]:
    h = [1.0 + 0j] + [0j] * kmax
    for x in xs:
        for k in range(1, kmax + 1):
            h[k] += x * h[k - 1]
    return h


def _jacobi_trudi(lam: tuple[int, ...], xs: list[complex]) -> complex:
    m = len(lam)
    if m == 0:
        return 1 + 0j
    h = _complete_homogeneous(xs, lam[0] + m)
    hk = lambda k: h[k] if 0 <= k < len(h) else 0j
    mat = np.array([[hk(lam[i] - i + j) for j in range(m)] for i in range(m)])
    return complex(np.linalg.det(mat))


def character(label, spectrum: Sequence[complex], method: str = "jacobi_trudi") -> complex:
    """Character of a U(N) irrep at a holonomy with the given eigenvalues.

    ``label`` is a partition (Schur polynomial) or, for N = 1, an integer charge.
    ``method`` picks the Jacobi-Trudi determinant or the bialternant ratio; the
    latter needs distinct eigenvalues.
    """
    xs = _check_spectrum(spectrum)
    if isinstance(label, int):
        if len(xs) != 1:
            raise ValueError("integer labels are U(1) charges; spectrum must have one entry")
        return xs[0] ** label
    lam = validate_partition(label)
    if len(lam) > len(xs):
        raise ValueError(f"partition {lam} is longer than the spectrum ({len(xs)})")
    if method == "jacobi_trudi":
        return _jacobi_trudi(lam, xs)
    if method == "bialternant":
        return _bialternant(lam, xs)
    raise ValueError(f"unknown method {method!r}")


def partitions(total: int, max_parts: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` with at most ``max_parts`` parts, in reverse lexicographic order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def casimir(label, N: int) -> int:
    """Quadratic Casimir of U(N): sum_i l_i (l_i - 2i + N + 1); n**2 for U(1)."""
    if isinstance(label, int):
        return label * label
    lam = validate_partition(label, N)
    return sum(l * (l - 2 * (i + 1) + N + 1) for i, l in enumerate(lam))


@dataclass(frozen=True)
class QYMResult:
    value: complex
    terms: int
    cutoff: int


def z_qym(N: int, q_value, spectrum: Sequence[complex], cutoff: int,
          damping: float | None = None) -> QYMResult:
    """Truncated sum over representations of dim_q(R) * Tr_R U.

    For N >= 2 the sum runs over partitions with at most N parts and at most
    ``cutoff`` boxes.  For N = 1 the labels are U(1) charges n with |n| <= cutoff
    and every quantum dimension is 1.

    ``damping`` (an extension, off by default) multiplies each term by
    exp(-damping * C2(R)) for convergence studies.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    xs = _check_spectrum(spectrum)
    if len(xs) != N:
        raise ValueError(f"spectrum has {len(xs)} eigenvalues, expected {N}")
    weight = (lambda lab: math.exp(-damping * casimir(lab, N))) if damping else (lambda lab: 1.0)
    total = 0j
    terms = 0
    if N == 1:
        for n in range(-cutoff, cutoff + 1):
            total += weight(n) * xs[0] ** n
            terms += 1
        return QYMResult(total, terms, cutoff)
    for size in range(cutoff + 1):
        for lam in partitions(size, N):
            d = complex(evaluate(qdim_typeA(lam, N), q_value))
            total += weight(lam) * d * character(lam, xs)
            terms += 1
    return QYMResult(total, terms, cutoff)


def _key(label):
    return label if isinstance(label, int) else validate_partition(label)


def z_blackhole(coeffs: Mapping) -> float:
    """Haar integral of |sum_R c_R chi_R(U)|^2, i.e. sum_R |c_R|^2 by orthonormality."""
    merged: dict = {}
    for lab, c in coeffs.items():
        k = _key(lab)
        merged[k] = merged.get(k, 0) + complex(c)
    return math.fsum(abs(c) ** 2 for c in merged.values())


def z_blackhole_multistack(stacks: Sequence[Mapping]) -> float:
    """Product of single-stack norms for independent holonomies U_1 .. U_k."""
    return math.prod(z_blackhole(c) for c in stacks)


def haar_unitary_eigenvalues(N: int, samples: int, seed: int) -> np.ndarray:
    """Eigenvalues of Haar-random U(N) matrices, shape (samples, N).

    QR of a complex Ginibre matrix with the phases of R's diagonal moved into
    Q.  Draws come from a Philox counter-based generator.
    """
    rng = np.random.Generator(np.random.Philox(seed))
    z = (rng.standard_normal((samples, N, N)) + 1j * rng.standard_normal((samples, N, N))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=1, axis2=2)
    q = q * (d / np.abs(d))[:, None, :]
    return np.linalg.eigvals(q)


def _characters_batch(label, eigs: np.ndarray) -> np.ndarray:
    if isinstance(label, int):
        return eigs[:, 0] ** label
    lam = validate_partition(label)
    n = eigs.shape[1]
    if len(lam) > n:
        raise ValueError(f"partition {lam} is longer than N={n}")
    m = len(lam)
    if m == 0:
        return np.ones(eigs.shape[0], dtype=complex)
    kmax = lam[0] + m
    h = np.zeros((kmax + 1, eigs.shape[0]), dtype=complex)
    h[0] = 1
    for j in range(n):
        x = eigs[:, j]
        for k in range(1, kmax + 1):
            h[k] = h[k] + x * h[k - 1]
    mat = np.zeros((eigs.shape[0], m, m), dtype=complex)
    for i in range(m):
        for j in range(m):
            k = lam[i] - i + j
            if 0 <= k <= kmax:
                mat[:, i, j] = h[k]
    return np.linalg.det(mat)


def _mean_and_stderr(x: np.ndarray) -> tuple[complex, float]:
    n = x.shape[0]
    mean = x.mean()
    if n < 2:
        return complex(mean), 0.0
    var = float(np.sum(np.abs(x - mean) ** 2)) / (n - 1)
    return complex(mean), math.sqrt(var / n)


def _require_mc(N: int, samples: int):
    if N != 2:
        raise ValueError("Haar Monte Carlo is only supported for U(2)")
    if samples < 1000:
        raise ValueError("need at least 1000 samples")


def haar_mc_overlap(r1, r2, N: int, samples: int, seed: int) -> tuple[complex, float]:
    """Monte Carlo estimate of the Haar integral of chi_r1(U) * conj(chi_r2(U)) over U(2)."""
    _require_mc(N, samples)
    eigs = haar_unitary_eigenvalues(N, samples, seed)
    x = _characters_batch(r1, eigs) * np.conj(_characters_batch(r2, eigs))
    return _mean_and_stderr(x)


def z_blackhole_mc(coeffs: Mapping, N: int, samples: int, seed: int) -> tuple[float, float]:
    """Monte Carlo estimate of the Haar integral of |Z_top(U)|^2 on shared samples."""
    _require_mc(N, samples)
    eigs = haar_unitary_eigenvalues(N, samples, seed)
    z = np.zeros(samples, dtype=complex)
    for lab, c in coeffs.items():
        z = z + complex(c) * _characters_batch(lab, eigs)
    mean, err = _mean_and_stderr(np.abs(z) ** 2)
    return mean.real, err


def multicenter_sum(entropies: Sequence[float], k_max: int) -> float:
    """sum_{k=1..k_max} C_{k-1} (sum_charges e^S)^k.

    Independent centers make the inner k-fold charge sum the k-th power of the
    single-center sum.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    single = math.fsum(math.exp(s) for s in entropies)
    return math.fsum(catalan(k - 1) * single**k for k in range(1, k_max + 1))


def coupling_to_q(beta_eta: complex) -> tuple[complex, complex]:
    """g = 2 pi i / (beta * eta) and q = exp(-g)."""
    if beta_eta == 0:
        raise ZeroDivisionError("beta * eta must be nonzero")
    g = 2j * math.pi / complex(beta_eta)
    return g, cmath.exp(-g)
