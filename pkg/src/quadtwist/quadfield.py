"""Exact arithmetic in real quadratic fields Q(sqrt(D)) and in quadratic surds.

All values are immutable and all predicates are decided over exact rationals;
no floating point enters any comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

_TRIAL_LIMIT = 10**6


class InvalidFieldError(ValueError):
    """Raised when D is not a squarefree integer > 1."""


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_squarefree(n: int) -> bool:
    """Exact squarefree test: trial division, then factorization fallback.

    Trial division strips all prime factors up to 10**6.  A remainder below
    10**12 has only prime factors above 10**6 and therefore cannot contain a
    square; larger remainders fall back to a full deterministic factorization.
    """
    if n < 1:
        return False
    if n == 1:
        return True
    m = n
    p = 2
    while p * p <= m and p <= _TRIAL_LIMIT:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return False
        p += 1 if p == 2 else 2
    if m == 1 or m < _TRIAL_LIMIT * _TRIAL_LIMIT:
        return not _is_square(m) or m == 1
    from sympy import factorint

    return all(e == 1 for e in factorint(m).values())


def check_field(D: int) -> int:
    if not isinstance(D, int) or D <= 1:
        raise InvalidFieldError(f"D must be an integer > 1, got {D!r}")
    if not is_squarefree(D):
        raise InvalidFieldError(f"D = {D} is not squarefree")
    return D


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def _sign_x_plus_y_sqrt(x: Fraction, y: Fraction, m: Fraction) -> int:
    """Exact sign of x + y*sqrt(m) for rational x, y and m >= 0."""
    if m < 0:
        raise ValueError("negative radicand")
    if y == 0 or m == 0:
        return _sign(x)
    if x == 0:
        return _sign(y)
    if x > 0 and y > 0:
        return 1
    if x < 0 and y < 0:
        return -1
    # Opposite signs: compare x^2 against m*y^2, one squaring decides.
    d = x * x - m * y * y
    return _sign(x) * _sign(d) if d != 0 else 0


@dataclass(frozen=True)
class QuadElem:
    """An element x + y*sqrt(D) of K = Q(sqrt(D)), D squarefree > 1."""

    D: int
    x: Fraction
    y: Fraction

    def __post_init__(self):
        check_field(self.D)
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    @staticmethod
    def of(D: int, x: Rational = 0, y: Rational = 0) -> "QuadElem":
        return QuadElem(D, Fraction(x), Fraction(y))

    def _coerce(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.D != self.D:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(self.D, Fraction(other), Fraction(0))
        return NotImplemented

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.D, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(self.D, -self.x, -self.y)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.D, self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem(
            self.D,
            self.x * o.x + self.D * self.y * o.y,
            self.x * o.y + self.y * o.x,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero element of the field")
        return QuadElem(self.D, self.x / n, -self.y / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        r = QuadElem(self.D, Fraction(1), Fraction(0))
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    # -- field invariants -------------------------------------------------

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.D, self.x, -self.y)

    def norm(self) -> Fraction:
        return self.x * self.x - self.D * self.y * self.y

    def trace(self) -> Fraction:
        return 2 * self.x

    def sign_embedding(self, i: int) -> int:
        """Exact sign of sigma_i(self), i in {1, 2}."""
        y = self.y if i == 1 else -self.y
        return _sign_x_plus_y_sqrt(self.x, y, Fraction(self.D))

    def is_totally_positive(self) -> bool:
        return self.sign_embedding(1) > 0 and self.sign_embedding(2) > 0

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    # -- order and conversion ----------------------------------------------

    def _cmp_sign(self, other) -> int:
        o = self._coerce(other)
        return _sign_x_plus_y_sqrt(self.x - o.x, self.y - o.y, Fraction(self.D))

    def __lt__(self, other):
        return self._cmp_sign(other) < 0

    def __le__(self, other):
        return self._cmp_sign(other) <= 0

    def __gt__(self, other):
        return self._cmp_sign(other) > 0

    def __ge__(self, other):
        return self._cmp_sign(other) >= 0

    def __abs__(self):
        return -self if self < 0 else self

    def embed(self, i: int) -> float:
        s = math.sqrt(self.D)
        return float(self.x) + float(self.y) * (s if i == 1 else -s)

    def __float__(self):
        return self.embed(1)

    def __str__(self):
        if self.y == 0:
            return str(self.x)
        head = "" if self.x == 0 else f"{self.x} + "
        coef = "" if self.y == 1 else f"{self.y}*"
        return f"{head}{coef}sqrt({self.D})"


def delta(D: int) -> QuadElem:
    """Generator of O_K over Z: -sqrt(D), or (1-sqrt(D))/2 when D = 1 mod 4."""
    check_field(D)
    if D % 4 == 1:
        return QuadElem(D, Fraction(1, 2), Fraction(-1, 2))
    return QuadElem(D, Fraction(0), Fraction(-1))


def discriminant(D: int) -> int:
    check_field(D)
    return D if D % 4 == 1 else 4 * D


def norm(z: QuadElem) -> Fraction:
    return z.norm()


def trace(z: QuadElem) -> Fraction:
    return z.trace()


def is_totally_positive(z: QuadElem) -> bool:
    return z.is_totally_positive()


def _pell_unit(D: int) -> QuadElem:
    """Minimal unit x + y*sqrt(D) > 1 of Z[sqrt(D)], |x^2 - D y^2| = 1.

    Convergents of the continued fraction of sqrt(D); the first convergent
    with x^2 - D y^2 = +-1 is the fundamental solution.
    """
    sq = math.isqrt(D)
    a, P, Q = sq, 0, 1  # complete quotient (P + sqrt(D))/Q with floor a
    h2, h1 = 1, a
    k2, k1 = 0, 1
    while abs(h1 * h1 - D * k1 * k1) != 1:
        P = a * Q - P
        Q = (D - P * P) // Q
        a = (P + sq) // Q
        h2, h1 = h1, a * h1 + h2
        k2, k1 = k1, a * k1 + k2
    return QuadElem(D, Fraction(h1), Fraction(k1))


def fundamental_unit(D: int) -> tuple[QuadElem, QuadElem]:
    """Fundamental unit eps > 1 of O_K and the least totally positive unit.

    For D != 1 (mod 4), O_K = Z[sqrt(D)] and eps is the minimal Pell unit.
    For D = 1 (mod 4) the half-integral unit (t + u*sqrt(D))/2 may generate
    an index-3 subgroup containing the Pell unit; the exact cube-root descent
    below finds it when it exists.  eps_plus = eps if N(eps) = 1 else eps^2.
    """
    check_field(D)
    eta = _pell_unit(D)
    eps = eta
    if D % 4 == 1:
        import mpmath

        x = int(eta.x)
        with mpmath.workdps(len(str(x)) + 30):
            e_val = mpmath.cbrt(x + int(eta.y) * mpmath.sqrt(D))
            t0 = int(mpmath.nint(e_val))
        for t in range(max(1, t0 - 2), t0 + 3):
            for s in (4, -4):
                num = t * t - s
                if num <= 0 or num % D != 0 or not _is_square(num // D):
                    continue
                u = math.isqrt(num // D)
                cand = QuadElem(D, Fraction(t, 2), Fraction(u, 2))
                if abs(cand.norm()) == 1 and cand ** 3 == eta:
                    eps = cand
                    break
            if eps is not eta:
                break
    n = eps.norm()
    eps_plus = eps if n == 1 else eps * eps
    return eps, eps_plus


def _rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    if _is_square(q.numerator) and _is_square(q.denominator):
        return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))
    return None


@dataclass(frozen=True)
class Surd:
    """Exact real value u + v*sqrt(m) with rational u, v and rational m >= 0.

    Canonical form: when m is a perfect rational square the radical is folded
    into u and v = 0, m = 0.  Total order against rationals and other Surds
    is decided by sign-tracked squaring, never by floating point.
    """

    u: Fraction
    v: Fraction
    m: Fraction

    def __post_init__(self):
        u, v, m = Fraction(self.u), Fraction(self.v), Fraction(self.m)
        if m < 0:
            raise ValueError("negative radicand")
        if v == 0:
            m = Fraction(0)
        else:
            r = _rational_sqrt(m)
            if r is not None:
                u, v, m = u + v * r, Fraction(0), Fraction(0)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "m", m)

    @staticmethod
    def of(u: Rational, v: Rational = 0, m: Rational = 0) -> "Surd":
        return Surd(Fraction(u), Fraction(v), Fraction(m))

    @staticmethod
    def sqrt(q: Rational) -> "Surd":
        return Surd(Fraction(0), Fraction(1), Fraction(q))

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        head = f"{self.u} + " if self.u else ""
        coeff = "" if self.v == 1 else f"{self.v}*"
        return f"{head}{coeff}sqrt({self.m})"

    def is_rational(self) -> bool:
        return self.v == 0

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.u

    def sign(self) -> int:
        return _sign_x_plus_y_sqrt(self.u, self.v, self.m)

    def __float__(self):
        return float(self.u) + float(self.v) * math.sqrt(self.m)

    def __neg__(self):
        return Surd(-self.u, -self.v, self.m)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return Surd(self.u + other, self.v, self.m)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Surd(self.u - other, self.v, self.m)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Surd(self.u * other, self.v * other, self.m)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        head = "" if self.u == 0 else f"{self.u} + "
        coef = "" if self.v == 1 else f"{self.v}*"
        return f"{head}{coef}sqrt({self.m})"

    def __lt__(self, other):
        return surd_compare(self, other) < 0

    def __le__(self, other):
        return surd_compare(self, other) <= 0

    def __gt__(self, other):
        return surd_compare(self, other) > 0

    def __ge__(self, other):
        return surd_compare(self, other) >= 0

    def __eq__(self, other):
        if isinstance(other, (Surd, int, Fraction)):
            return surd_compare(self, other) == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.u, self.v, self.m))


def _sign_two_radicals(a: Fraction, b: Fraction, m1: Fraction,
                       c: Fraction, m2: Fraction) -> int:
    """Exact sign of a + b*sqrt(m1) + c*sqrt(m2), all radicands irrational."""
    if b == 0:
        return _sign_x_plus_y_sqrt(a, c, m2)
    if c == 0:
        return _sign_x_plus_y_sqrt(a, b, m1)
    if _sign(b) == _sign(c):
        # b*sqrt(m1) + c*sqrt(m2) has the sign of b; compare against -a.
        s = _sign(b)
        if _sign(a) == s or a == 0:
            return s
        # sign(a + T) with sign(T) = s = -sign(a): compare a^2 with T^2.
        # T^2 = b^2 m1 + c^2 m2 + 2bc sqrt(m1 m2), a single-radical value.
        d = _sign_x_plus_y_sqrt(
            a * a - b * b * m1 - c * c * m2, -2 * b * c, m1 * m2
        )
        return _sign(a) * d if d != 0 else 0
    # Mixed signs: T = b*sqrt(m1) + c*sqrt(m2); sign(T) from squares.
    st = _sign(b) * _sign(b * b * m1 - c * c * m2)
    if st == 0:
        return _sign(a)
    if a == 0:
        return st
    if _sign(a) == st:
        return st
    d = _sign_x_plus_y_sqrt(
        a * a - b * b * m1 - c * c * m2, -2 * b * c, m1 * m2
    )
    return _sign(a) * d if d != 0 else 0


def surd_compare(s1, s2) -> int:
    """Exact three-way comparison of Surd/rational values: -1, 0 or +1."""
    if isinstance(s1, (int, Fraction)):
        s1 = Surd.of(s1)
    if isinstance(s2, (int, Fraction)):
        s2 = Surd.of(s2)
    if s1.m == s2.m:
        return _sign_x_plus_y_sqrt(s1.u - s2.u, s1.v - s2.v, s1.m)
    return _sign_two_radicals(s1.u - s2.u, s1.v, s1.m, -s2.v, s2.m)
