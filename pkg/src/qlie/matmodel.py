"""Eigenvalue integrals of the multi-matrix model attached to a Dynkin diagram.

For node sizes ``N_a`` and potentials ``V_a`` the integrand is

    exp(-sum_{a,i} V_a(l_{a,i}) / g) * prod_{pairs} w(l_{a,i} - l_{b,j}) ** C(a, b)

over unordered pairs of distinct eigenvalues, with ``C(a, b) = (a_a, a_b)``.
Same-node pairs therefore carry the squared Vandermonde.  Negative exponents
(adjacent nodes) are regulated as ``(d**2 + eps**2) ** (C / 2)``; nonnegative
ones use ``|d| ** C``.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .linalg import dot
from .rootsys import LieType, cartan_matrix, generate_roots

__all__ = ["ModelSpec", "Estimate", "z_matrix_model", "quadrature_oracle", "QUADRATURE_MAX_DIM"]

QUADRATURE_MAX_DIM = 3
_CHUNK = 100_000
_EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class ModelSpec:
    type: LieType
    node_sizes: tuple[int, ...]
    potentials: tuple[tuple[float, ...], ...]  # coefficients c_0, c_1, ... of V_a
    g: float
    epsilon: float = 0.0
    use_cartan: bool = False  # symmetrised Cartan entries instead of inner products

    def __post_init__(self):
        t = LieType.parse(self.type)
        object.__setattr__(self, "type", t)
        object.__setattr__(self, "node_sizes", tuple(int(n) for n in self.node_sizes))
        object.__setattr__(self, "potentials", tuple(tuple(float(c) for c in p) for p in self.potentials))
        if len(self.node_sizes) != t.rank:
            raise ValueError(f"need {t.rank} node sizes for {t}")
        if any(n < 0 for n in self.node_sizes):
            raise ValueError("node sizes must be nonnegative")
        if len(self.potentials) != t.rank:
            raise ValueError(f"need {t.rank} potentials for {t}")
        if not self.g > 0:
            raise ValueError("coupling g must be positive")
        if self.epsilon < 0:
            raise ValueError("epsilon must be nonnegative")
        for a, p in enumerate(self.potentials):
            coeffs = list(p)
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            deg = len(coeffs) - 1
            if deg < 2 or deg % 2 or coeffs[-1] <= 0:
                raise ValueError(
                    f"potential of node {a} is not integrable: need even degree >= 2 "
                    "and positive leading coefficient"
                )
        exps = self.exponents()
        if self.epsilon == 0:
            for a in range(t.rank):
                for b in range(t.rank):
                    if exps[a][b] < 0 and self.node_sizes[a] and self.node_sizes[b]:
                        raise ValueError("negative exponents need a positive regulator epsilon")

    @classmethod
    def from_json(cls, doc: dict) -> "ModelSpec":
        return cls(
            type=LieType.parse(doc["type"]),
            node_sizes=tuple(doc["node_sizes"]),
            potentials=tuple(tuple(p) for p in doc["potentials"]),
            g=float(doc["g"]),
            epsilon=float(doc.get("epsilon", 0.0)),
            use_cartan=bool(doc.get("use_cartan", False)),
        )

    def exponents(self) -> tuple[tuple[Fraction, ...], ...]:
        if self.use_cartan:
            a = cartan_matrix(self.type)
            n = len(a)
            return tuple(tuple(Fraction(a[i][j] + a[j][i], 2) for j in range(n)) for i in range(n))
        s = generate_roots(self.type).simple_roots
        return tuple(tuple(dot(x, y) for y in s) for x in s)

    def labels(self) -> list[int]:
        """Node index of each eigenvalue, in order."""
        return [a for a, n in enumerate(self.node_sizes) for _ in range(n)]


@dataclass(frozen=True)
class Estimate:
    value: float
    stderr: float
    samples: int
    method: str
    seed: int | None = None


def _poly(coeffs: Sequence[float], x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def _log_integrand(spec: ModelSpec, lam: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split log-integrand for points ``lam`` of shape (n, dim).

    Returns (potential part, interaction part) so callers can bound rounding.
    """
    labels = spec.labels()
    exps = spec.exponents()
    pot = np.zeros(lam.shape[0])
    for k, a in enumerate(labels):
        pot -= _poly(spec.potentials[a], lam[:, k]) / spec.g
    inter = np.zeros(lam.shape[0])
    eps2 = spec.epsilon**2
    for k in range(len(labels)):
        for m in range(k + 1, len(labels)):
            c = float(exps[labels[k]][labels[m]])
            if c == 0:
                continue
            d = lam[:, k] - lam[:, m]
            if c < 0:
                inter += 0.5 * c * np.log(d * d + eps2)
            else:
                with np.errstate(divide="ignore"):
                    inter += c * np.log(np.abs(d))
    return pot, inter


def _node_moments(spec: ModelSpec, a: int) -> tuple[float, float]:
    """Mean and standard deviation of the 1-d density exp(-V_a / g)."""
    coeffs = spec.potentials[a]
    trimmed = list(coeffs)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    if len(trimmed) == 3:
        c0, c1, c2 = trimmed
        var = spec.g / (2 * c2)
        return -c1 / (2 * c2), math.sqrt(var)
    lo, hi = _box(spec, a)
    x = np.linspace(lo, hi, 20001)
    logw = -_poly(coeffs, x) / spec.g
    w = np.exp(logw - logw.max())
    z = np.trapezoid(w, x)
    mean = np.trapezoid(w * x, x) / z
    var = np.trapezoid(w * (x - mean) ** 2, x) / z
    return float(mean), float(math.sqrt(var))


def _box(spec: ModelSpec, a: int) -> tuple[float, float]:
    """Symmetric interval covering at least +-6 sqrt(g), widened until the
    node weight at the edge is negligible in double precision."""
    coeffs = spec.potentials[a]
    half = 6.0 * math.sqrt(spec.g)
    grid = np.linspace(-half, half, 2001)
    vmin = float(np.min(_poly(coeffs, grid)))
    step = math.sqrt(spec.g)
    for _ in range(200):
        edge = np.array([-half, half])
        drop = (_poly(coeffs, edge) - vmin) / spec.g
        # leave room for polynomial Vandermonde growth
        if np.all(drop > 45.0 + 4.0 * math.log1p(half)):
            break
        half += step
    return -half, half


def z_matrix_model(spec: ModelSpec, samples: int, seed: int, method: str = "monte_carlo") -> Estimate:
    """Estimate the eigenvalue integral.

    Monte Carlo uses independent Gaussian proposals per eigenvalue whose mean
    and width match the node's density exp(-V/g).  Randomness comes from a
    Philox generator consumed in fixed-size chunks, so the result depends only
    on (spec, samples, seed).  ``method="quadrature"`` delegates to
    :func:`quadrature_oracle` with ``samples`` grid points per dimension.
    """
    if method == "quadrature":
        return quadrature_oracle(spec, samples)
    if method != "monte_carlo":
        raise ValueError(f"unknown method {method!r}")
    if samples < 2:
        raise ValueError("need at least 2 samples")
    labels = spec.labels()
    dim = len(labels)
    if dim == 0:
        return Estimate(1.0, 0.0, samples, "monte_carlo", seed)
    moments = [_node_moments(spec, a) for a in range(spec.type.rank)]
    mu = np.array([moments[a][0] for a in labels])
    sd = np.array([moments[a][1] for a in labels])
    log_norm = float(np.sum(np.log(sd)) + 0.5 * dim * math.log(2 * math.pi))
    rng = np.random.Generator(np.random.Philox(seed))
    total = 0.0
    total_sq = 0.0
    done = 0
    shift = None
    while done < samples:
        n = min(_CHUNK, samples - done)
        z = rng.standard_normal((n, dim))
        lam = mu + sd * z
        pot, inter = _log_integrand(spec, lam)
        logw = pot + inter + 0.5 * np.sum(z * z, axis=1) + log_norm
        if shift is None:
            shift = float(np.max(logw))
        w = np.exp(logw - shift)
        total += math.fsum(w)
        total_sq += math.fsum(w * w)
        done += n
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    scale = math.exp(shift)
    return Estimate(mean * scale, math.sqrt(var / samples) * scale, samples, "monte_carlo", seed)


def _trapezoid(spec: ModelSpec, points: int, boxes) -> tuple[float, float]:
    """Tensor trapezoid value and a bound on its floating-point evaluation error."""
    axes = [np.linspace(lo, hi, points) for lo, hi in boxes]
    h = [(hi - lo) / (points - 1) for lo, hi in boxes]
    mesh = np.meshgrid(*axes, indexing="ij")
    lam = np.stack([m.ravel() for m in mesh], axis=1)
    pot, inter = _log_integrand(spec, lam)
    f = np.exp(pot + inter)
    wts = np.ones(lam.shape[0])
    for k in range(len(boxes)):
        edge = (mesh[k].ravel() == axes[k][0]) | (mesh[k].ravel() == axes[k][-1])
        wts = np.where(edge, wts * 0.5, wts)
    cell = math.prod(h)
    terms = wts * f
    value = math.fsum(terms) * cell
    # each term is exp of a sum whose magnitude sets its relative rounding error
    mag = np.where(terms > 0, np.abs(pot) + np.abs(inter) + 8.0, 0.0)
    rounding = math.fsum(terms * mag) * _EPS * cell
    return value, rounding


def quadrature_oracle(spec: ModelSpec, grid_points_per_dim: int) -> Estimate:
    """Tensor-grid trapezoid rule over a box of at least +-6 sqrt(g) per eigenvalue.

    ``stderr`` is |I(n) - I(n/2)| plus a bound on floating-point evaluation
    error of the finer grid.
    """
    labels = spec.labels()
    dim = len(labels)
    if dim > QUADRATURE_MAX_DIM:
        raise ValueError(f"quadrature is limited to {QUADRATURE_MAX_DIM} eigenvalues, got {dim}")
    if dim == 0:
        return Estimate(1.0, 0.0, 1, "quadrature")
    n = int(grid_points_per_dim)
    if n < 8:
        raise ValueError("need at least 8 grid points per dimension")
    boxes = [_box(spec, a) for a in labels]
    fine, rounding = _trapezoid(spec, n, boxes)
    coarse, _ = _trapezoid(spec, n // 2, boxes)
    return Estimate(fine, abs(fine - coarse) + rounding, n**dim, "quadrature")
