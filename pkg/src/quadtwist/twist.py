"""Decision procedures for WR and stable twists of canonical ideal bases.

A twist by a totally positive alpha = p + q*sqrt(D) is normalized to q = 1
(the criteria are homogeneous of degree 2 in (p, q), and scaling alpha by a
positive rational produces a similar lattice).  The single remaining variable
is t = p/q ranging over (sqrt(D), oo); the q < 0 branch is omitted because
swapping the two embeddings is an isometry of the twisted lattice.

WR twistability is a closed form: the equal-norm equation forces the ratio
t*, and the reduction inequality decides.  Stable twistability is an exact
intersection of quadratic-inequality solution sets with surd endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ideals import CanonicalIdeal
from .lattice2 import Gram2, gram_of_twist, is_paper_reduced, is_stable, is_wr
from .quadfield import QuadElem, Surd, surd_compare


# ---------------------------------------------------------------------------
# Exact intervals with surd endpoints
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    """[lo, hi] with surd endpoints; hi = None means +oo; flags mark closure."""

    lo: Surd
    hi: Optional[Surd]
    lo_closed: bool = True
    hi_closed: bool = True

    def is_empty(self) -> bool:
        if self.hi is None:
            return False
        c = surd_compare(self.lo, self.hi)
        return c > 0 or (c == 0 and not (self.lo_closed and self.hi_closed))

    def is_point(self) -> bool:
        return self.hi is not None and surd_compare(self.lo, self.hi) == 0

    def __str__(self):
        left = "[" if self.lo_closed else "("
        if self.hi is None:
            return f"{left}{self.lo}, oo)"
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo}, {self.hi}{right}"

    def contains(self, t, strict: bool = False) -> bool:
        cl = surd_compare(t, self.lo)
        if cl < 0 or (cl == 0 and (strict or not self.lo_closed)):
            return False
        if self.hi is None:
            return True
        ch = surd_compare(t, self.hi)
        return ch < 0 or (ch == 0 and not strict and self.hi_closed)


def _intersect_pair(a: Interval, b: Interval) -> Optional[Interval]:
    cl = surd_compare(a.lo, b.lo)
    if cl > 0 or (cl == 0 and not a.lo_closed):
        lo, lo_closed = a.lo, a.lo_closed
    else:
        lo, lo_closed = b.lo, b.lo_closed
    if a.hi is None:
        hi, hi_closed = b.hi, b.hi_closed
    elif b.hi is None:
        hi, hi_closed = a.hi, a.hi_closed
    else:
        ch = surd_compare(a.hi, b.hi)
        if ch < 0 or (ch == 0 and not a.hi_closed):
            hi, hi_closed = a.hi, a.hi_closed
        else:
            hi, hi_closed = b.hi, b.hi_closed
    out = Interval(lo, hi, lo_closed, hi_closed)
    return None if out.is_empty() else out


def intersect_interval_lists(xs: list[Interval], ys: list[Interval]) -> list[Interval]:
    out = []
    for a in xs:
        for b in ys:
            c = _intersect_pair(a, b)
            if c is not None:
                out.append(c)
    return out


def solve_quadratic_ge0(A: Fraction, B: Fraction, C: Fraction,
                        domain: Interval) -> list[Interval]:
    """Exact solution set of A*t^2 + B*t + C >= 0 intersected with domain."""
    if A == 0:
        if B == 0:
            return [domain] if C >= 0 else []
        bound = Surd.of(Fraction(-C, 1) / B)
        if B > 0:
            sol = Interval(bound, None, True, True)
        else:
            sol = Interval(domain.lo, bound, domain.lo_closed, True)
        return intersect_interval_lists([domain], [sol])
    disc = B * B - 4 * A * C
    if A > 0:
        if disc <= 0:
            return [domain]
        r1 = Surd(Fraction(-B, 1) / (2 * A), Fraction(-1, 1) / (2 * A), disc)
        r2 = Surd(Fraction(-B, 1) / (2 * A), Fraction(1, 1) / (2 * A), disc)
        sols = [
            Interval(domain.lo, r1, domain.lo_closed, True),
            Interval(r2, None, True, True),
        ]
    else:
        if disc < 0:
            return []
        # A < 0: the smaller root carries the +sqrt(disc) branch.
        r1 = Surd(Fraction(-B, 1) / (2 * A), Fraction(1, 1) / (2 * A), disc)
        r2 = Surd(Fraction(-B, 1) / (2 * A), Fraction(-1, 1) / (2 * A), disc)
        sols = [Interval(r1, r2, True, True)]
    return intersect_interval_lists([domain], sols)


def _max_stride(check) -> int:
    """Largest k >= 1 with check(k) true, given check(1) is true and check is
    monotone (true up to some point, false after)."""
    k = 1
    while check(2 * k):
        k *= 2
    lo_k, hi_k = k, 2 * k
    while lo_k + 1 < hi_k:
        mid = (lo_k + hi_k) // 2
        if check(mid):
            lo_k = mid
        else:
            hi_k = mid
    return lo_k


def simplest_rational_in(lo: Surd, hi: Optional[Surd]) -> Optional[Fraction]:
    """Smallest-denominator rational strictly inside (lo, hi), by the
    Stern-Brocot walk with exponential stride acceleration."""
    if hi is not None and surd_compare(lo, hi) >= 0:
        return None
    ln, ld = 0, 1  # left endpoint of the walk
    rn, rd = 1, 0  # right endpoint, starts at +oo
    while True:
        m = Fraction(ln + rn, ld + rd)
        if surd_compare(m, lo) <= 0:
            k = _max_stride(
                lambda k: surd_compare(Fraction(ln + k * rn, ld + k * rd), lo) <= 0
            )
            ln, ld = ln + k * rn, ld + k * rd
        elif hi is not None and surd_compare(m, hi) >= 0:
            k = _max_stride(
                lambda k: surd_compare(Fraction(k * ln + rn, k * ld + rd), hi) >= 0
            )
            rn, rd = k * ln + rn, k * ld + rd
        else:
            return m


# ---------------------------------------------------------------------------
# Twist verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwistVerdict:
    """Outcome of the closed-form WR twist construction."""

    wr_twistable: bool
    reason: Optional[str] = None
    t_star: Optional[Fraction] = None
    alpha: Optional[QuadElem] = None
    gram: Optional[Gram2] = None


@dataclass(frozen=True)
class FeasibilityReport:
    """Exact stable-twist feasibility set over t in (sqrt(D), oo)."""

    feasible_real: bool
    intervals: tuple[Interval, ...]
    witness_t: Optional[Fraction] = None
    witness_alpha: Optional[QuadElem] = None

    def contains_t(self, t) -> bool:
        return any(iv.contains(t) for iv in self.intervals)


def wr_bound_filter(I: CanonicalIdeal) -> bool:
    """Necessary condition for WR twistability (closed-form bound on b)."""
    D, b, g = I.D, I.b, I.g
    if D % 4 == 1:
        return (2 * b + g) ** 2 < g * g * D
    return b * b < g * g * D


def stable_bound_filter(I: CanonicalIdeal) -> bool:
    """Necessary condition for stable twistability (closed-form bound on b)."""
    D, b, g = I.D, I.b, I.g
    if D % 4 == 1:
        return 3 * (2 * b + g) ** 2 < 4 * g * g * D
    return 3 * b * b < 4 * g * g * D


def _wr_ratio(I: CanonicalIdeal) -> tuple[Fraction, Fraction, bool]:
    """(numerator, denominator) of the forced ratio t*, and whether the
    reduction inequality holds."""
    D, a, b, g = I.D, I.a, I.b, I.g
    if D % 4 == 1:
        num = Fraction(2 * g * D * (2 * b + g))
        den = Fraction(4 * b * b + 4 * b * g + g * g * (D + 1) - 4 * a * a)
        reduced_ok = abs(4 * a * a + 4 * b * b + 4 * b * g - (D - 1) * g * g) \
            <= 2 * a * (2 * b + g)
    else:
        num = Fraction(2 * b * g * D)
        den = Fraction(b * b + g * g * D - a * a)
        reduced_ok = abs(b * b - g * g * D + a * a) <= a * b
    return num, den, reduced_ok


def wr_twist(I: CanonicalIdeal) -> TwistVerdict:
    """Closed-form WR twist of the canonical basis of I, if one exists.

    The equal-norm equation forces t* = p/q; the twist exists iff the forced
    ratio is positive, alpha = t* + sqrt(D) is totally positive, and the
    reduction inequality holds.
    """
    num, den, reduced_ok = _wr_ratio(I)
    if den <= 0 or num <= 0:
        return TwistVerdict(False, reason="forced ratio not positive")
    t_star = num / den
    if not t_star * t_star > I.D:
        return TwistVerdict(False, reason="alpha not totally positive",
                            t_star=t_star)
    if not reduced_ok:
        return TwistVerdict(False, reason="reduction inequality fails",
                            t_star=t_star)
    alpha = QuadElem(I.D, t_star, Fraction(1))
    gram = gram_of_twist(I, alpha)
    assert is_wr(gram) and is_paper_reduced(gram)
    return TwistVerdict(True, t_star=t_star, alpha=alpha, gram=gram)


def _stable_constraints(I: CanonicalIdeal) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Quadratic constraints A*t^2 + B*t + C >= 0 for stable twistability.

    Three quadratics (weak reducedness and the two squared stability
    conditions) plus, returned separately by the caller, the linear
    nonnegativity guard for the squared second member.
    """
    D, a, b, g = I.D, I.a, I.b, I.g
    F = Fraction
    cons = []
    if D % 4 == 1:
        B2 = 2 * b + g  # the "b" of the half-integral basis, doubled
        # reducedness: 4*g12^2 <= g11*g22
        cons.append((F(g * g * D - 3 * B2 * B2), F(6 * D * g * B2),
                     F(-4 * D * D * g * g)))
        # first member: (2*a^2*t)^2 >= a^2 g^2 D (t^2 - D)
        cons.append((F(4 * a * a - g * g * D), F(0), F(g * g * D * D)))
        # second member (g22): ((B2^2 + g^2 D)/2) t - D g B2 >= a g sqrt(D(t^2-D))
        L1 = F(B2 * B2 + g * g * D, 2)
        L0 = F(-D * g * B2)
    else:
        cons.append((F(g * g * D - 3 * b * b), F(6 * D * b * g),
                     F(-4 * D * D * g * g)))
        # first member: (a^2 t)^2 >= a^2 g^2 D (t^2 - D)
        cons.append((F(a * a - g * g * D), F(0), F(g * g * D * D)))
        # second member: (D g^2 + b^2) t - 2 D b g >= a g sqrt(D(t^2-D))
        L1 = F(D * g * g + b * b)
        L0 = F(-2 * D * b * g)
    # squared second member: (L1 t + L0)^2 - a^2 g^2 D (t^2 - D) >= 0
    k = Fraction(a * a * g * g * D)
    cons.append((L1 * L1 - k, 2 * L1 * L0, L0 * L0 + k * D))
    # nonnegativity guard for the squaring: L1 t + L0 >= 0, encoded as a
    # degenerate quadratic.
    cons.append((F(0), L1, L0))
    return cons


def raw_stable_polynomials(I: CanonicalIdeal, t: Fraction) -> bool:
    """The stable-twistability criterion evaluated directly at (p, q) = (t, 1).

    Conjunction of the weak-reducedness polynomial and the min-of-two-norms
    stability condition, each checked exactly (square roots eliminated by
    sign-guarded squaring).
    """
    D, a, g = I.D, I.a, I.g
    if not t * t > D:
        return False
    cons = _stable_constraints(I)
    (A1, B1, C1) = cons[0]
    if A1 * t * t + B1 * t + C1 < 0:
        return False
    rhs_sq = Fraction(a * a * g * g * D) * (t * t - D)
    if D % 4 == 1:
        m1 = Fraction(2 * a * a) * t
    else:
        m1 = Fraction(a * a) * t
    _, L1, L0 = cons[3]
    m2 = L1 * t + L0
    for m in (m1, m2):
        if m < 0 or m * m < rhs_sq:
            return False
    return True


def stable_twist(I: CanonicalIdeal) -> FeasibilityReport:
    """Exact stable-twist feasibility over t in (sqrt(D), oo).

    Solves each quadratic constraint with surd endpoints, intersects, and
    picks the smallest-denominator rational witness in the interior of the
    leftmost nondegenerate interval (absent when the set has empty interior).
    """
    D = I.D
    domain = Interval(Surd.sqrt(D), None, lo_closed=False)
    feas = [domain]
    for (A, B, C) in _stable_constraints(I):
        feas = intersect_interval_lists(feas, solve_quadratic_ge0(A, B, C, domain))
        if not feas:
            break
    feas.sort(key=lambda iv: float(iv.lo))
    if not feas:
        return FeasibilityReport(False, ())
    witness_t = None
    witness_alpha = None
    for iv in feas:
        if iv.is_point():
            continue
        witness_t = simplest_rational_in(iv.lo, iv.hi)
        if witness_t is not None:
            break
    if witness_t is not None:
        witness_alpha = QuadElem(D, witness_t, Fraction(1))
        gram = gram_of_twist(I, witness_alpha)
        assert is_paper_reduced(gram) and is_stable(gram)
        assert raw_stable_polynomials(I, witness_t)
    return FeasibilityReport(True, tuple(feas), witness_t, witness_alpha)
