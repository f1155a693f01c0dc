"""Matrix models of the quantum group presentation and quantum dimensions.

A :class:`QuantumRep` carries matrices ``X_i, Y_i, Z_i`` (one triple per node of a
Cartan matrix) with exact :class:`~qlie.qarith.QScalar` entries.  The defining
relations checked by :func:`check_relations` are

    Z_j X_i Z_j^-1 = q^{(a_j, a_i)} X_i
    Z_j Y_i Z_j^-1 = q^{-(a_j, a_i)} Y_i
    [X_i, Y_j]     = delta_ij (Z_i - Z_i^-1) / (q_i - q_i^-1)
    sum_n (-1)^n [N choose n]_{q_i} X_i^n X_j X_i^{N-n} = 0     (i != j)
    (same for Y)

with ``q_i = q^{(a_i, a_i)/2}`` and ``N = 1 - 2 (a_i, a_j) / (a_i, a_i)``.  The
symmetric form is recovered from the Cartan matrix and the symmetrisers
``d_i = (a_i, a_i)/2`` as ``(a_i, a_j) = A[i][j] * d_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .qarith import LaurentPoly, QScalar, evaluate, q_binomial, q_number
from .rootsys import LieType, cartan_matrix, generate_roots
from .linalg import dot

__all__ = [
    "QuantumRep",
    "RelationResult",
    "RelationReport",
    "q_cartan",
    "build_sl2_rep",
    "build_sln_fundamental",
    "perturb",
    "check_relations",
    "qdim_typeA",
    "qdim_roots",
    "partition_to_highest_weight",
    "validate_partition",
]

QMatrix = tuple[tuple[QScalar, ...], ...]


@dataclass(frozen=True)
class QuantumRep:
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[Fraction, ...]
    dimension: int
    X: tuple[QMatrix, ...]
    Y: tuple[QMatrix, ...]
    Z: tuple[QMatrix, ...]
    weights: tuple = field(default=(), compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def form(self, i: int, j: int) -> Fraction:
        """(a_i, a_j) = A[i][j] * d_j."""
        return self.cartan[i][j] * self.symmetrizers[j]


def _zeros(n: int) -> list[list[QScalar]]:
    return [[QScalar(0) for _ in range(n)] for _ in range(n)]


def _freeze(m) -> QMatrix:
    return tuple(tuple(QScalar._coerce(x) for x in row) for row in m)


def q_cartan(t: "LieType | str") -> tuple[tuple[LaurentPoly, ...], ...]:
    """Entrywise symmetric q-bracket ``[A_ij]_q`` of the Cartan matrix."""
    return tuple(tuple(q_number(a) for a in row) for row in cartan_matrix(t))


def build_sl2_rep(dim: int) -> QuantumRep:
    """Irreducible ``dim``-dimensional module with basis v_0 (highest) .. v_{dim-1}."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    top = dim - 1
    x, y, z = _zeros(dim), _zeros(dim), _zeros(dim)
    for k in range(dim):
        z[k][k] = QScalar(LaurentPoly.q_power(top - 2 * k))
        if k >= 1:
            x[k - 1][k] = QScalar(q_number(k))
        if k + 1 < dim:
            y[k + 1][k] = QScalar(q_number(top - k))
    return QuantumRep(
        cartan=((2,),),
        symmetrizers=(Fraction(1),),
        dimension=dim,
        X=(_freeze(x),),
        Y=(_freeze(y),),
        Z=(_freeze(z),),
        weights=tuple((top - 2 * k,) for k in range(dim)),
    )


def build_sln_fundamental(n: int) -> QuantumRep:
    """Defining n-dimensional module: X_i = E_{i,i+1}, Y_i = E_{i+1,i}."""
    if n < 2:
        raise ValueError("n must be >= 2")
    xs, ys, zs = [], [], []
    for i in range(n - 1):
        x, y, z = _zeros(n), _zeros(n), _zeros(n)
        x[i][i + 1] = QScalar(1)
        y[i + 1][i] = QScalar(1)
        for a in range(n):
            z[a][a] = QScalar(1)
        z[i][i] = QScalar(LaurentPoly.q_power(1))
        z[i + 1][i + 1] = QScalar(LaurentPoly.q_power(-1))
        xs.append(_freeze(x))
        ys.append(_freeze(y))
        zs.append(_freeze(z))
    weights = tuple(tuple(int(a == b) for b in range(n)) for a in range(n))
    return QuantumRep(
        cartan=cartan_matrix(LieType("A", n - 1)),
        symmetrizers=tuple(Fraction(1) for _ in range(n - 1)),
        dimension=n,
        X=tuple(xs),
        Y=tuple(ys),
        Z=tuple(zs),
        weights=weights,
    )


def perturb(rep: QuantumRep, gen: str, node: int, row: int, col: int, delta=1) -> QuantumRep:
    """Copy of ``rep`` with one matrix entry shifted by ``delta``."""
    mats = list(getattr(rep, gen))
    m = [list(r) for r in mats[node]]
    m[row][col] = m[row][col] + QScalar._coerce(delta)
    mats[node] = _freeze(m)
    return replace(rep, **{gen: tuple(mats)})


# ---------------------------------------------------------------------------
# relation checking


@dataclass(frozen=True)
class RelationResult:
    relation: str
    i: int
    j: int
    passed: bool
    witness: tuple | None = None  # (row, col, lhs - rhs) at the first failing entry


@dataclass
class RelationReport:
    mode: str
    structural_errors: list[str]
    results: list[RelationResult]

    @property
    def passed(self) -> bool:
        return not self.structural_errors and all(r.passed for r in self.results)

    def failed(self) -> list[RelationResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> dict[str, bool]:
        out: dict[str, bool] = {}
        for r in self.results:
            out[r.relation] = out.get(r.relation, True) and r.passed
        return out


def _mm(a, b, zero):
    bt = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = zero
            for x, y in zip(row, col):
                acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def _madd(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _msub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _mscale(c, a):
    return [[c * x for x in r] for r in a]


def _mpow(a, k, one, zero):
    n = len(a)
    out = [[one if r == c else zero for c in range(n)] for r in range(n)]
    for _ in range(k):
        out = _mm(out, a, zero)
    return out


def _structure(rep: QuantumRep) -> list[str]:
    errs = []
    n = rep.dimension
    r = rep.rank
    if any(len(row) != r for row in rep.cartan):
        errs.append("Cartan matrix is not square")
    if len(rep.symmetrizers) != r or not (len(rep.X) == len(rep.Y) == len(rep.Z) == r):
        errs.append("need one X, Y, Z and symmetriser per node")
        return errs
    for i in range(r):
        for j in range(r):
            if rep.form(i, j) != rep.form(j, i):
                errs.append(f"Cartan matrix not symmetrised by d at ({i},{j})")
        if (2 * rep.symmetrizers[i]).denominator != 1 or rep.symmetrizers[i] <= 0:
            errs.append(f"symmetriser d_{i} must be a positive half-integer")
    for name in ("X", "Y", "Z"):
        for k, m in enumerate(getattr(rep, name)):
            if len(m) != n or any(len(row) != n for row in m):
                errs.append(f"{name}_{k} is not {n}x{n}")
    if errs:
        return errs
    for k, z in enumerate(rep.Z):
        if any(a != b and not z[a][b].is_zero() for a in range(n) for b in range(n)):
            errs.append(f"Z_{k} is not diagonal")
        elif any(z[a][a].is_zero() for a in range(n)):
            errs.append(f"Z_{k} is singular")
    return errs


def _first_nonzero(m, is_zero):
    for a, row in enumerate(m):
        for b, x in enumerate(row):
            if not is_zero(x):
                return (a, b, x)
    return None


def _serre_degree(rep: QuantumRep, i: int, j: int) -> int:
    n = 2 * rep.form(i, j) / rep.form(i, i)
    if n.denominator != 1 or n > 0:
        raise ValueError(f"off-diagonal Cartan pairing ({i},{j}) must be a nonpositive integer")
    return 1 - int(n)


def _check_exact(rep: QuantumRep) -> list[RelationResult]:
    zero, one = QScalar(0), QScalar(1)
    n, r = rep.dimension, rep.rank
    X = [[list(row) for row in m] for m in rep.X]
    Y = [[list(row) for row in m] for m in rep.Y]
    Z = [[list(row) for row in m] for m in rep.Z]
    Zinv = [[[z[a][a].inverse() if a == b else zero for b in range(n)] for a in range(n)]
            for z in Z]
    is_zero = lambda x: x.is_zero()
    results = []

    def record(name, i, j, lhs, rhs):
        diff = _msub(lhs, rhs)
        w = _first_nonzero(diff, is_zero)
        if w is not None:
            w = (w[0], w[1], str(w[2]))
        results.append(RelationResult(name, i, j, w is None, w))

    for i in range(r):
        for j in range(r):
            s = QScalar(LaurentPoly.monomial(int(2 * rep.form(j, i))))
            sinv = s.inverse()
            record("ZXZ^-1", i, j, _mm(_mm(Z[j], X[i], zero), Zinv[j], zero), _mscale(s, X[i]))
            record("ZYZ^-1", i, j, _mm(_mm(Z[j], Y[i], zero), Zinv[j], zero), _mscale(sinv, Y[i]))
    for i in range(r):
        li = int(2 * rep.symmetrizers[i])
        qi = LaurentPoly.monomial(li) - LaurentPoly.monomial(-li)
        for j in range(r):
            lhs = _msub(_mm(X[i], Y[j], zero), _mm(Y[j], X[i], zero))
            if i == j:
                rhs = _mscale(QScalar(1, qi), _msub(Z[i], Zinv[i]))
            else:
                rhs = [[zero] * n for _ in range(n)]
            record("[X,Y]", i, j, lhs, rhs)
    for i in range(r):
        li = int(2 * rep.symmetrizers[i])
        for j in range(r):
            if i == j:
                continue
            N = _serre_degree(rep, i, j)
            for name, G in (("Serre X", X), ("Serre Y", Y)):
                acc = [[zero] * n for _ in range(n)]
                for k in range(N + 1):
                    c = QScalar(q_binomial(N, k, li) * (-1) ** k)
                    term = _mm(_mm(_mpow(G[i], k, one, zero), G[j], zero),
                               _mpow(G[i], N - k, one, zero), zero)
                    acc = _madd(acc, _mscale(c, term))
                record(name, i, j, acc, [[zero] * n for _ in range(n)])
    return results


class _Span:
    """Exponent range of a Laurent polynomial; used to bound residual degrees."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo=None, hi=None):
        self.lo, self.hi = lo, hi

    @classmethod
    def of(cls, p: LaurentPoly) -> "_Span":
        return cls() if p.is_zero() else cls(p.min_exp, p.max_exp)

    def __add__(self, o):
        if self.lo is None:
            return o
        if o.lo is None:
            return self
        return _Span(min(self.lo, o.lo), max(self.hi, o.hi))

    __sub__ = __add__

    def __mul__(self, o):
        if self.lo is None or o.lo is None:
            return _Span()
        return _Span(self.lo + o.lo, self.hi + o.hi)

    @property
    def width(self) -> int:
        return -1 if self.lo is None else self.hi - self.lo


def _residuals(X, Y, Z, rep, mono, const, lift):
    """Inverse-free relation residuals over an abstract coefficient ring.

    ``mono(k)`` builds v**k, ``const(c)`` an integer, ``lift(p)`` a Laurent
    polynomial coefficient.  Yields (name, i, j, matrix).
    """
    n, r = rep.dimension, rep.rank
    zero, one = const(0), const(1)
    ident = [[one if a == b else zero for b in range(n)] for a in range(n)]
    for i in range(r):
        for j in range(r):
            e = int(2 * rep.form(j, i))
            yield "ZXZ^-1", i, j, _msub(_mm(Z[j], X[i], zero), _mscale(mono(e), _mm(X[i], Z[j], zero)))
            yield "ZYZ^-1", i, j, _msub(_mm(Z[j], Y[i], zero), _mscale(mono(-e), _mm(Y[i], Z[j], zero)))
    for i in range(r):
        li = int(2 * rep.symmetrizers[i])
        qi = mono(li) - mono(-li)
        for j in range(r):
            comm = _msub(_mm(X[i], Y[j], zero), _mm(Y[j], X[i], zero))
            lhs = _mscale(qi, _mm(Z[i], comm, zero))
            if i == j:
                lhs = _msub(lhs, _msub(_mm(Z[i], Z[i], zero), ident))
            yield "[X,Y]", i, j, lhs
    for i in range(r):
        li = int(2 * rep.symmetrizers[i])
        for j in range(r):
            if i == j:
                continue
            N = _serre_degree(rep, i, j)
            for name, G in (("Serre X", X), ("Serre Y", Y)):
                acc = [[zero] * n for _ in range(n)]
                for k in range(N + 1):
                    c = lift(q_binomial(N, k, li) * (-1) ** k)
                    term = _mm(_mm(_mpow(G[i], k, one, zero), G[j], zero),
                               _mpow(G[i], N - k, one, zero), zero)
                    acc = _madd(acc, _mscale(c, term))
                yield name, i, j, acc


def _check_fast(rep: QuantumRep) -> list[RelationResult] | None:
    """Certify each relation by evaluation at enough points of ``v``.

    A residual whose exponents lie in [lo, hi] vanishes identically iff it
    vanishes at hi - lo + 1 distinct nonzero points.  Returns None when some
    entry is not a Laurent polynomial.
    """
    if not all(x.is_laurent() for name in ("X", "Y", "Z")
               for m in getattr(rep, name) for row in m for x in row):
        return None
    lp = lambda ms: [[[x.as_laurent() for x in row] for row in m] for m in ms]
    X, Y, Z = lp(rep.X), lp(rep.Y), lp(rep.Z)
    sp = lambda ms: [[[_Span.of(x) for x in row] for row in m] for m in ms]
    spans = list(_residuals(
        sp(X), sp(Y), sp(Z), rep,
        mono=lambda k: _Span(k, k),
        const=lambda c: _Span() if c == 0 else _Span(0, 0),
        lift=_Span.of,
    ))
    width = max((s.width for *_, m in spans for row in m for s in row), default=-1)
    npts = max(width + 1, 1)
    points = [Fraction(2 + k) for k in range(npts)]
    failing: dict[int, tuple] = {}
    for v in points:
        ev = lambda ms: [[[evaluate(x, v=v) for x in row] for row in m] for m in ms]
        vals = _residuals(
            ev(X), ev(Y), ev(Z), rep,
            mono=lambda k: v**k,
            const=Fraction,
            lift=lambda p: evaluate(p, v=v),
        )
        for idx, (name, i, j, m) in enumerate(vals):
            if idx not in failing:
                w = _first_nonzero(m, lambda x: x == 0)
                if w is not None:
                    failing[idx] = (w[0], w[1], f"{w[2]} at v={v}")
    return [
        RelationResult(name, i, j, idx not in failing, failing.get(idx))
        for idx, (name, i, j, _) in enumerate(spans)
    ]


def check_relations(rep: QuantumRep, fast: bool = False) -> RelationReport:
    """Check every relation of the presentation on ``rep``.

    ``fast=True`` certifies the inverse-free form of each relation by point
    evaluation; it falls back to the exact path if an entry has a genuine
    denominator.
    """
    errs = _structure(rep)
    if errs:
        return RelationReport("structural", errs, [])
    if fast:
        res = _check_fast(rep)
        if res is not None:
            return RelationReport("fast", [], res)
    return RelationReport("exact", [], _check_exact(rep))


# ---------------------------------------------------------------------------
# quantum dimensions


def validate_partition(partition: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    lam = tuple(int(x) for x in partition)
    if any(x < 0 for x in lam):
        raise ValueError(f"partition {lam} has negative parts")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"partition {lam} is not weakly decreasing")
    lam = tuple(x for x in lam if x)
    if n is not None and len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    return lam


def qdim_typeA(partition: Sequence[int], N: int) -> LaurentPoly:
    """prod_{i<j} [l_i - l_j + j - i]_q / [j - i]_q for U(N)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    lam = validate_partition(partition, N)
    lam = lam + (0,) * (N - len(lam))
    num = LaurentPoly.const(1)
    den = LaurentPoly.const(1)
    for i in range(N):
        for j in range(i + 1, N):
            num = num * q_number(lam[i] - lam[j] + j - i)
            den = den * q_number(j - i)
    return num.exact_div(den)


def partition_to_highest_weight(partition: Sequence[int], N: int) -> tuple[int, ...]:
    """Fundamental-weight coefficients of the A_{N-1} highest weight of a partition."""
    lam = validate_partition(partition, N)
    lam = lam + (0,) * (N - len(lam))
    return tuple(lam[i] - lam[i + 1] for i in range(N - 1))


def qdim_roots(hw: Sequence[int], t: "LieType | str") -> LaurentPoly:
    """prod over positive roots of [<L + rho, a^vee>]_{q_a} / [<rho, a^vee>]_{q_a}.

    With ``q_a = q^{(a, a)/2}`` each factor equals
    (q^{(L+rho, a)} - q^{-(L+rho, a)}) / (q^{(rho, a)} - q^{-(rho, a)}), which is
    the product in :func:`qdim_typeA` when all roots have (a, a) = 2.
    """
    rs = generate_roots(t)
    hw = tuple(int(m) for m in hw)
    if len(hw) != rs.rank:
        raise ValueError(f"highest weight needs {rs.rank} coefficients")
    if any(m < 0 for m in hw):
        raise ValueError(f"highest weight {hw} is not dominant")
    lam = rs.weight(hw)
    shifted = tuple(a + b for a, b in zip(lam, rs.weyl_vector))
    num = LaurentPoly.const(1)
    den = LaurentPoly.const(1)
    for a in rs.positive_roots:
        norm = dot(a, a)
        if norm.denominator != 1:
            raise ArithmeticError("root lengths must be integral in this realisation")
        top = 2 * dot(shifted, a) / norm
        bottom = 2 * dot(rs.weyl_vector, a) / norm
        num = num * q_number(int(top), int(norm))
        den = den * q_number(int(bottom), int(norm))
    return num.exact_div(den)
