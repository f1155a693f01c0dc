"""Exact Laurent polynomials in ``v`` (with ``v**2 == q``) and symmetric q-integers.

Exponents are stored in units of ``v`` so that ``q_i = q**((a_i, a_i)/2)`` is a
Laurent monomial even when root lengths are odd.  All arithmetic is exact over
Python integers; nothing here ever touches a float unless ``evaluate`` is asked
for a complex value.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from numbers import Complex, Rational
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "QScalar",
    "DivisionError",
    "q_number",
    "q_factorial",
    "q_binomial",
    "evaluate",
]


class DivisionError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class LaurentPoly:
    """Immutable Laurent polynomial in ``v`` with integer coefficients.

    ``LaurentPoly({k: c})`` is ``c * v**k``.  Zero coefficients are dropped on
    construction.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for k, a in coeffs.items():
                if a:
                    if not isinstance(k, int) or not isinstance(a, int):
                        raise TypeError("exponents and coefficients must be integers")
                    c[k] = a
        self._c = c
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def q_power(cls, k: int, c: int = 1) -> "LaurentPoly":
        """``c * q**k`` i.e. ``c * v**(2k)``."""
        return cls({2 * k: c})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def _coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls({0: x})
        return NotImplemented

    # -- inspection ---------------------------------------------------
    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._c

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    @property
    def min_exp(self) -> int:
        return min(self._c) if self._c else 0

    @property
    def max_exp(self) -> int:
        return max(self._c) if self._c else 0

    def coeff(self, k: int) -> int:
        return self._c.get(k, 0)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._c)
        for k, a in other._c.items():
            out[k] = out.get(k, 0) + a
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -a for k, a in self._c.items()})

    def __sub__(self, other):
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for k1, a1 in self._c.items():
            for k2, a2 in other._c.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + a1 * a2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise DivisionError("only monomials have Laurent inverses")
            ((k, a),) = self._c.items()
            if a not in (1, -1):
                raise DivisionError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly({k * n: a ** (-n)})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: "LaurentPoly | int") -> "LaurentPoly":
        """Quotient ``self / other``; raises DivisionError on a nonzero remainder."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise DivisionError(f"{other} does not divide {self}")
        return q

    def divmod(self, other: "LaurentPoly | int") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Synthetic division after shifting both operands to ordinary polynomials.

        The remainder is returned in the same shifted frame; it is zero exactly
        when ``other`` divides ``self`` in the Laurent ring.
        """
        d = LaurentPoly._coerce(other)
        if d is NotImplemented:
            raise TypeError("cannot divide by %r" % (other,))
        if d.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        lo_n, lo_d = self.min_exp, d.min_exp
        num = {k - lo_n: a for k, a in self._c.items()}
        den = {k - lo_d: a for k, a in d._c.items()}
        deg_d = max(den)
        lead = den[deg_d]
        quot: dict[int, int] = {}
        while num:
            deg_n = max(num)
            if deg_n < deg_d:
                break
            a = num[deg_n]
            if a % lead:
                break
            c = a // lead
            shift = deg_n - deg_d
            quot[shift] = c
            for k, b in den.items():
                kk = k + shift
                val = num.get(kk, 0) - c * b
                if val:
                    num[kk] = val
                else:
                    num.pop(kk, None)
        off = lo_n - lo_d
        return (
            LaurentPoly({k + off: a for k, a in quot.items()}),
            LaurentPoly({k + lo_n: a for k, a in num.items()}),
        )

    def bar(self) -> "LaurentPoly":
        """The involution ``v -> v**-1``."""
        return LaurentPoly({-k: a for k, a in self._c.items()})

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def content(self) -> int:
        g = 0
        for a in self._c.values():
            g = math.gcd(g, a)
        return g

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: a for e, a in self._c.items()})

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        other = LaurentPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    # -- text form ----------------------------------------------------
    def to_text(self) -> str:
        """Canonical text, descending exponent: ``q^2 + 1 + q^-2``.

        Exponents are printed in ``q`` when every ``v``-exponent is even,
        otherwise the whole polynomial is printed in ``v``.
        """
        if not self._c:
            return "0"
        in_q = all(k % 2 == 0 for k in self._c)
        var = "q" if in_q else "v"
        parts = []
        for k, a in self.items():
            e = k // 2 if in_q else k
            if e == 0:
                body = str(abs(a))
            else:
                base = var if e == 1 else f"{var}^{e}"
                body = base if abs(a) == 1 else f"{abs(a)}{base}"
            if not parts:
                parts.append(("-" if a < 0 else "") + body)
            else:
                parts.append(("- " if a < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    _TERM = re.compile(r"([+-]?)\s*(\d*)\s*(?:([qv])(?:\^(-?\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of :meth:`to_text`."""
        s = text.replace(" ", "")
        if s == "0":
            return cls()
        out: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            sign, digits, var, exp = m.groups()
            if not digits and not var:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            e = 0
            if var:
                e = int(exp) if exp is not None else 1
                if var == "q":
                    e *= 2
            out[e] = out.get(e, 0) + c
            pos = m.end()
        return cls(out)


class QScalar:
    """Ratio of Laurent polynomials, used for the commutator-relation right side.

    Common monomial factors and common integer content are cancelled on
    construction; when the denominator divides the numerator the result is
    stored with denominator 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = LaurentPoly._coerce(num)
        den = LaurentPoly._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("QScalar needs Laurent polynomial or integer parts")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = LaurentPoly(), LaurentPoly.const(1)
            return
        if den.is_monomial():
            ((k, a),) = den._c.items()
            if a in (1, -1):
                self.num = LaurentPoly({e - k: c * a for e, c in num._c.items()})
                self.den = LaurentPoly.const(1)
                return
        q, r = num.divmod(den)
        if r.is_zero():
            self.num, self.den = q, LaurentPoly.const(1)
            return
        shift = min(num.min_exp, den.min_exp)
        g = math.gcd(num.content(), den.content())
        lead = den._c[den.max_exp]
        if lead < 0:
            g = -g
        self.num = LaurentPoly({e - shift: c // g for e, c in num._c.items()})
        self.den = LaurentPoly({e - shift: c // g for e, c in den._c.items()})

    @classmethod
    def _coerce(cls, x):
        if isinstance(x, QScalar):
            return x
        if isinstance(x, (LaurentPoly, int)):
            return cls(x)
        return NotImplemented

    def is_laurent(self) -> bool:
        return self.den == 1

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise DivisionError(f"{self} is not a Laurent polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == 1 and o.den == 1:
            return QScalar(self.num + o.num)
        if self.den == o.den:
            return QScalar(self.num + o.num, self.den)
        return QScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return QScalar(-self.num, self.den)

    def __sub__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == 1 and o.den == 1:
            return QScalar(self.num * o.num)
        return QScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return QScalar(self.den, self.num)

    def __truediv__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, other):
        o = QScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __str__(self):
        if self.den == 1:
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"

    __repr__ = __str__


def q_number(m: int, length_sq: int = 2) -> LaurentPoly:
    """Symmetric quantum integer ``[m]_{q_i}`` with ``q_i = v**length_sq``.

    ``length_sq`` is the squared root length ``(a_i, a_i)``; the default 2 gives
    ``[m]_q`` for a long root of a simply-laced type.
    """
    if length_sq <= 0:
        raise ValueError("length_sq must be positive")
    n = abs(m)
    sign = 1 if m >= 0 else -1
    return LaurentPoly({length_sq * (n - 1 - 2 * k): sign for k in range(n)})


def q_factorial(n: int, length_sq: int = 2) -> LaurentPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = LaurentPoly.const(1)
    for m in range(1, n + 1):
        out = out * q_number(m, length_sq)
    return out


def q_binomial(n: int, k: int, length_sq: int = 2) -> LaurentPoly:
    """Gaussian binomial ``[n]! / ([n-k]! [k]!)`` by exact division."""
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    num = q_factorial(n, length_sq)
    den = q_factorial(n - k, length_sq) * q_factorial(k, length_sq)
    return num.exact_div(den)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    a, b = x.numerator, x.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


Number = Union[int, Fraction, float, complex]


def evaluate(p: LaurentPoly, q_value: Number | None = None, *, v: Number | None = None):
    """Substitute a value for ``q`` (or directly for ``v``).

    Integers and Fractions stay exact.  If some exponent of ``v`` is odd an
    exact rational ``q`` must be a perfect square; otherwise ``q`` is used
    directly.  Floats and complex numbers use the principal square root.
    """
    if (q_value is None) == (v is None):
        raise ValueError("give exactly one of q_value or v")
    if v is not None:
        if v == 0:
            raise ZeroDivisionError("cannot substitute v = 0")
        if isinstance(v, Rational):
            v = Fraction(v)
            return sum((Fraction(a) * v**k for k, a in p.items()), Fraction(0))
        return sum(a * v**k for k, a in p.items())
    if q_value == 0:
        raise ZeroDivisionError("cannot substitute q = 0")
    if isinstance(q_value, Rational):
        q = Fraction(q_value)
        if all(k % 2 == 0 for k in p.coeffs):
            return sum((Fraction(a) * q ** (k // 2) for k, a in p.items()), Fraction(0))
        root = _rational_sqrt(q)
        if root is None:
            raise ValueError(
                f"q = {q} is not a rational square; pass v explicitly or use a complex q"
            )
        return evaluate(p, v=root)
    if isinstance(q_value, Complex):
        z = complex(q_value)
        root = cmath.sqrt(z)
        if isinstance(q_value, float) and q_value > 0:
            return evaluate(p, v=math.sqrt(q_value))
        return evaluate(p, v=root)
    raise TypeError(f"unsupported q value {q_value!r}")


def laurent_sum(terms: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict[int, int] = {}
    for t in terms:
        for k, a in t.coeffs.items():
            out[k] = out.get(k, 0) + a
    return LaurentPoly(out)
