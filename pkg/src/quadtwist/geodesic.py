"""Sampling the closed similarity-class orbit of an ideal lattice.

The similarity classes of the twists A(alpha)*L_K(I), alpha totally positive,
trace a closed curve in the fundamental domain; one period is parameterized
by s = sigma_1(alpha)/sigma_2(alpha) in [1, eps_plus^2).  All region flags
are computed exactly from the rational Gram matrix at a rational t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .ideals import CanonicalIdeal
from .lattice2 import (
    Gram2,
    SimilarityPoint,
    gram_of_twist,
    is_stable,
    is_wr,
    similarity_point,
)
from .quadfield import QuadElem, check_field, discriminant, fundamental_unit

_MAX_DEN = 10**9


@dataclass(frozen=True)
class GeodesicSample:
    """One exactly-evaluated point of the orbit curve."""

    s: float  # sigma_1(alpha)/sigma_2(alpha), reporting companion
    alpha: QuadElem
    tau: SimilarityPoint
    is_wr: bool
    is_stable: bool


def sample_at(I: CanonicalIdeal, alpha: Union[QuadElem, Fraction, int]) -> GeodesicSample:
    """Exact orbit sample at a given totally positive alpha."""
    if not isinstance(alpha, QuadElem):
        alpha = QuadElem(I.D, Fraction(alpha), Fraction(0))
    G = gram_of_twist(I, alpha)
    s = alpha.embed(1) / alpha.embed(2)
    return GeodesicSample(s, alpha, similarity_point(G), is_wr(G), is_stable(G))


def _t_for_ratio(D: int, s: float) -> Fraction:
    """Rational t with sigma ratio of t + sqrt(D) close to s (s > 1)."""
    t = math.sqrt(D) * (s + 1) / (s - 1)
    f = Fraction(t).limit_denominator(_MAX_DEN)
    while not f * f > D:
        f += 1
    return f


def sample_orbit(I: CanonicalIdeal, n: int) -> list[GeodesicSample]:
    """n samples covering one unit period of the orbit.

    Target ratios are geometric in (1, eps_plus^2) (arclength is uniform in
    log s); each target is realized at a nearby rational t, where the Gram
    and all flags are exact.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    _, eps_plus = fundamental_unit(I.D)
    period = float(eps_plus) ** 2
    samples = []
    for k in range(n):
        s = period ** ((k + Fraction(1, 2)) / n)
        t = _t_for_ratio(I.D, s)
        samples.append(sample_at(I, QuadElem(I.D, t, Fraction(1))))
    return samples


def F_invariant(x: QuadElem, y: QuadElem, I: CanonicalIdeal) -> Fraction:
    """Basis invariant N(x)^2 + N(y)^2 + N(x)N(y) - N(I)^2 * Delta_K / 4.

    (x, y) must be a basis of I, verified exactly by the determinant identity
    (sigma_1(x)sigma_2(y) - sigma_2(x)sigma_1(y))^2 = N(I)^2 * Delta_K.
    """
    w = x * y.conjugate() - x.conjugate() * y
    det_sq = (w * w).x  # w is a pure multiple of sqrt(D), its square rational
    dk = discriminant(I.D)
    if det_sq != Fraction(I.norm() ** 2 * dk):
        raise ValueError("pair is not a basis of the ideal")
    nx, ny = x.norm(), y.norm()
    return nx * nx + ny * ny + nx * ny - Fraction(I.norm() ** 2 * dk, 4)


def _in_cone(z: QuadElem, eps_plus: QuadElem) -> bool:
    """Exact membership in the cone 1 <= |sigma_1(z)/sigma_2(z)| < eps_plus^2.

    Squared form: sigma_1(z)^2 >= sigma_2(z)^2 and
    sigma_1(z)^2 < eps_plus^4 * sigma_2(z)^2, decided as QuadElem comparisons
    (sigma_1 of z^2 against sigma_1 of conj(z)^2).
    """
    sq = z * z
    csq = z.conjugate() * z.conjugate()
    return sq >= csq and sq < csq * eps_plus ** 4


def _ideal_elements_in_cone(I: CanonicalIdeal, norm_bound_sq: Fraction) -> list[QuadElem]:
    """Nonzero z in I with N(z)^2 <= norm_bound_sq, one per unit orbit.

    Representatives are taken in the cone 1 <= |sigma_1(z)/sigma_2(z)| <
    eps_plus^2.  A single rectangular coordinate box over the whole cone is
    infeasible for large units, so the cone is cut into ratio bands
    [lam^k, lam^(k+1)); each band fits in a small box that is scanned with a
    float prefilter, and every survivor is checked exactly.
    """
    z1, z2 = I.basis_elements()
    _, eps_plus = fundamental_unit(I.D)
    M = math.sqrt(float(norm_bound_sq))  # bound on |N(z)|
    e = float(eps_plus)
    s1 = (z1.embed(1), z2.embed(1))
    s2 = (z1.embed(2), z2.embed(2))
    lam = 4.0
    n_bands = max(1, math.ceil(2 * math.log(e) / math.log(lam)))
    slack = 1.02
    seen: set[tuple[Fraction, Fraction]] = set()
    out: list[QuadElem] = []
    for k in range(n_bands):
        # band: ratio in [lam^k, lam^(k+1)] => |sigma_1| <= B1, |sigma_2| <= B2
        B1 = math.sqrt(M) * lam ** ((k + 1) / 2) * slack
        B2 = math.sqrt(M) * lam ** (-k / 2) * slack
        for cx, cy in _points_in_embedding_box(s1, s2, B1, B2):
            z = cx * z1 + cy * z2
            key = (z.x, z.y)
            if key in seen:
                continue
            seen.add(key)
            n = z.norm()
            if n != 0 and n * n <= norm_bound_sq and _in_cone(z, eps_plus):
                out.append(z)
    return out


def _points_in_embedding_box(s1, s2, B1: float, B2: float) -> list[tuple[int, int]]:
    """Integer (cx, cy) with |cx*s1[0] + cy*s1[1]| <= B1 and
    |cx*s2[0] + cy*s2[1]| <= B2.

    The box may be extremely anisotropic, so the embedding is rescaled to make
    it a unit square and the coefficients are enumerated against a
    float-reduced basis of the rescaled lattice (norm bound 2 covers the box).
    """
    # rescaled Gram: q(v) = (v.s1 / B1)^2 + (v.s2 / B2)^2
    def q(cx, cy):
        e1 = (cx * s1[0] + cy * s1[1]) / B1
        e2 = (cx * s2[0] + cy * s2[1]) / B2
        return e1 * e1 + e2 * e2

    q11, q22 = q(1, 0), q(0, 1)
    q12 = (s1[0] * s1[1] / (B1 * B1) + s2[0] * s2[1] / (B2 * B2))
    # float Lagrange reduction with integer transform u
    u = [[1, 0], [0, 1]]
    for _ in range(256):
        if q11 > q22:
            q11, q22 = q22, q11
            u[0][0], u[0][1] = u[0][1], u[0][0]
            u[1][0], u[1][1] = u[1][1], u[1][0]
        r = round(q12 / q11)
        if r == 0:
            break
        q22 = q22 - 2 * r * q12 + r * r * q11
        q12 = q12 - r * q11
        u[0][1] -= r * u[0][0]
        u[1][1] -= r * u[1][0]
    out = []
    # coefficient bound for q(v) <= 2 against a reduced basis: the basis
    # angle sine squared is >= 3/4, so |ci| <= sqrt(8 / (3 * qii))
    m1 = int(math.sqrt(8.0 / (3.0 * q11))) + 1 if q11 > 0 else 1
    m2 = int(math.sqrt(8.0 / (3.0 * q22))) + 1 if q22 > 0 else 1
    for c1 in range(-m1, m1 + 1):
        for c2 in range(-m2, m2 + 1):
            cx = c1 * u[0][0] + c2 * u[0][1]
            cy = c1 * u[1][0] + c2 * u[1][1]
            e1 = cx * s1[0] + cy * s1[1]
            e2 = cx * s2[0] + cy * s2[1]
            if abs(e1) <= B1 and abs(e2) <= B2:
                out.append((cx, cy))
    return out


def wr_intersection_classes(I: CanonicalIdeal) -> tuple[int, set[Fraction]]:
    """Count and F-values of the basis classes with F(B) < 0.

    These classes are in bijection with the crossings of the orbit curve and
    the WR locus.  F < 0 forces |N| of both basis members below
    N(I)*sqrt(Delta_K/3), so the enumeration is finite.
    """
    dk = discriminant(I.D)
    bound_sq = Fraction(I.norm() ** 2 * dk, 3)
    elems = _ideal_elements_in_cone(I, bound_sq)
    _, eps_plus = fundamental_unit(I.D)
    # unit shifts so that basis partners outside the representative cone are
    # still seen
    shifted = []
    for j in (-2, -1, 0, 1, 2):
        u = eps_plus ** j
        shifted.extend([z * u for z in elems])
    values: set[Fraction] = set()
    target = Fraction(I.norm() ** 2 * dk)
    for x in elems:
        for y in shifted:
            w = x * y.conjugate() - x.conjugate() * y
            if (w * w).x != target:
                continue
            f = F_invariant(x, y, I)
            if f < 0:
                values.add(f)
    return len(values), values


def orthogonal_only(D: int) -> bool:
    """Whether the orbit of O_K meets the WR locus only at the square class.

    Exact integer test: D - 1 or D - 4 is a perfect square.
    """
    check_field(D)
    for n in (D - 1, D - 4):
        if n >= 0 and math.isqrt(n) ** 2 == n:
            return True
    return False
