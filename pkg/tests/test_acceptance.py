"""End-to-end acceptance gate.

Each test covers one numbered criterion and emits a single PASS/FAIL line so
the run log doubles as a checklist.
"""

import functools
import math
import random
import time
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from quadtwist.applications import (
    HEXAGONAL_THICKNESS_SQ,
    d_min_sq_twist,
    euclidean_bounds,
    tau_min_search,
)
from quadtwist.geodesic import orthogonal_only, sample_orbit, wr_intersection_classes
from quadtwist.ideals import enumerate_canonical, ring_of_integers, validate_canonical
from quadtwist.lattice2 import (
    Gram2,
    covering_radius_sq,
    det_gram,
    gram_of_twist,
    is_paper_reduced,
    is_stable,
    is_wr,
    lagrange_reduce,
    minima_brute_force,
    successive_minima,
)
from quadtwist.quadfield import QuadElem, fundamental_unit, is_squarefree
from quadtwist.twist import (
    raw_stable_polynomials,
    stable_bound_filter,
    stable_twist,
    wr_bound_filter,
    wr_twist,
)


def criterion(n, label):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"FAIL  criterion {n}: {label}")
                raise
            print(f"PASS  criterion {n}: {label}")

        return run

    return wrap


def rel_close(x, y, rel):
    return abs(x - y) <= rel * abs(y)


@criterion(1, "WR twist of (9, 7-sqrt(139)), exact alpha, minima and cosine")
def test_criterion_1():
    start = time.monotonic()
    v = wr_twist(validate_canonical(139, 9, 7, 1))
    assert v.wr_twistable
    assert v.alpha == QuadElem.of(139, Fraction(1946, 107), 1)
    l1, l2 = successive_minima(v.gram)
    assert l1 == l2 == Fraction(315252, 107)
    assert v.gram.g12 / v.gram.g11 == Fraction(-1, 14)
    assert rel_close(math.sqrt(Fraction(315252, 107)), 54.27964973, 1e-8)
    assert time.monotonic() - start < 1.0


@criterion(2, "WR twist of (5, 4+(1-sqrt(141))/2), exact alpha, minima and cosine")
def test_criterion_2():
    v = wr_twist(validate_canonical(141, 5, 4, 1))
    assert v.wr_twistable
    assert v.alpha == QuadElem.of(141, Fraction(1269, 61), 1)
    l1, l2 = successive_minima(v.gram)
    assert l1 == l2 == Fraction(63450, 61)
    assert v.gram.g12 / v.gram.g11 == Fraction(2, 9)
    assert rel_close(math.sqrt(Fraction(63450, 61)), 32.25157258, 1e-8)


@criterion(3, "stable twist of (39, 38-sqrt(1327)) at t=63, exact Gram and det")
def test_criterion_3():
    I = validate_canonical(1327, 39, 38, 1)
    fr = stable_twist(I)
    assert fr.feasible_real
    assert fr.contains_t(Fraction(63))
    G = gram_of_twist(I, QuadElem.of(1327, 63, 1))
    assert G.entries() == (191646, 83226, 147442)
    assert det_gram(G) == 21330102456
    assert rel_close(math.sqrt(21330102456), 146048.2881, 1e-6)
    cos = float(G.g12) / math.sqrt(float(G.g11) * float(G.g22))
    assert rel_close(cos, 0.4951063950, 1e-8)
    assert is_stable(G) and not is_wr(G)
    assert not wr_bound_filter(I)
    assert minima_brute_force(G, box=6) == (147442, 172636)
    assert successive_minima(G) == (147442, 172636)
    # the quoted sqrt(191646) is the longer reduced-basis vector, not the
    # classical second minimum 172636; reported, not failed
    print("  note: criterion 3: classical lambda2^2 = 172636, the quoted "
          "191646 is the longer weakly-reduced basis norm")


@criterion(4, "stable twist of (183, 182+(1-sqrt(125173))/2) at t=611")
def test_criterion_4():
    I = validate_canonical(125173, 183, 182, 1)
    fr = stable_twist(I)
    assert fr.feasible_real
    assert fr.contains_t(Fraction(611))
    G = gram_of_twist(I, QuadElem.of(125173, 611, 1))
    assert (G.g11, G.g22) == (40923558, 33252444)
    assert G.g12 == 17905086
    cos = float(G.g12) / math.sqrt(float(G.g11) * float(G.g22))
    assert rel_close(cos, 0.4853755919, 1e-8)
    assert rel_close(math.sqrt(float(det_gram(G))), 32252383.1, 1e-5)
    assert is_stable(G) and not is_wr(G)
    assert minima_brute_force(G, box=6)[1] == 38365830
    assert successive_minima(G) == (33252444, 38365830)


@criterion(5, "O_K is WR/stable twistable iff D = 5, over squarefree D <= 1000")
def test_criterion_5():
    start = time.monotonic()
    wr_ok = []
    stable_ok = []
    for D in range(2, 1001):
        if not is_squarefree(D):
            continue
        I = ring_of_integers(D)
        if wr_twist(I).wr_twistable:
            wr_ok.append(D)
        if stable_twist(I).feasible_real:
            stable_ok.append(D)
    assert wr_ok == [5]
    assert stable_ok == [5]
    v = wr_twist(ring_of_integers(5))
    assert v.alpha == QuadElem.of(5, 5, 1)
    assert v.gram.entries() == (10, 0, 10)
    assert time.monotonic() - start < 60.0


@criterion(6, "bound filters are necessary over D <= 200, a <= 50; t* stable")
def test_criterion_6():
    for D in range(2, 201):
        if not is_squarefree(D):
            continue
        for I in enumerate_canonical(D, 50):
            v = wr_twist(I)
            fr = stable_twist(I)
            if v.wr_twistable:
                assert wr_bound_filter(I), I
                assert fr.contains_t(v.t_star), I
            if fr.witness_t is not None:
                assert stable_bound_filter(I), I


def _deep_hole_oracle(G, n=400):
    """Independent covering-radius oracle.

    An n x n grid over the fundamental cell locates the deep hole; the exact
    circumcenter of the three nearest lattice points (a Voronoi vertex,
    certified by the empty-circle check) gives its exact squared distance.
    """
    R, _ = lagrange_reduce(G)
    e11, e12, e22 = R.entries()
    g11, g12, g22 = float(e11), float(e12), float(e22)
    grid_trans = [(i, j) for i in range(-1, 3) for j in range(-1, 3)]
    check_trans = [(i, j) for i in range(-2, 4) for j in range(-2, 4)]
    xs = np.linspace(0.0, 1.0, n)
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    dmin = None
    for (i, j) in grid_trans:
        dx, dy = X - i, Y - j
        d = g11 * dx * dx + 2 * g12 * dx * dy + g22 * dy * dy
        dmin = d if dmin is None else np.minimum(dmin, d)
    k = np.unravel_index(np.argmax(dmin), dmin.shape)
    px, py = xs[k[0]], xs[k[1]]

    def fdist(t):
        dx, dy = px - t[0], py - t[1]
        return g11 * dx * dx + 2 * g12 * dx * dy + g22 * dy * dy

    def gdot(u, v):
        return e11 * u[0] * v[0] + e12 * (u[0] * v[1] + u[1] * v[0]) \
            + e22 * u[1] * v[1]

    def circum_dist_sq(p0, p1, p2):
        a1 = (p1[0] - p0[0], p1[1] - p0[1])
        a2 = (p2[0] - p0[0], p2[1] - p0[1])
        A11, A12, A22 = 2 * gdot(a1, a1), 2 * gdot(a1, a2), 2 * gdot(a2, a2)
        b1, b2 = gdot(a1, a1), gdot(a2, a2)
        det = A11 * A22 - A12 * A12
        if det == 0:
            return None
        s = (b1 * A22 - b2 * A12) / det
        t = (A11 * b2 - A12 * b1) / det
        c = (s * a1[0] + t * a2[0], s * a1[1] + t * a2[1])
        mu2 = gdot(c, c)
        for w in check_trans:
            rel = (c[0] + p0[0] - w[0], c[1] + p0[1] - w[1])
            if gdot(rel, rel) < mu2:
                return None
        return mu2

    # 10 nearest: highly anisotropic cells put many collinear points close
    # to the hole, and collinear triples have no circumcenter
    near = sorted(check_trans, key=fdist)[:10]
    best = None
    for combo in combinations(range(10), 3):
        mu2 = circum_dist_sq(*(near[i] for i in combo))
        if mu2 is not None and (best is None or mu2 > best):
            best = mu2
    return best


def _random_gram(rng):
    while True:
        g11 = Fraction(rng.randint(1, 100), rng.randint(1, 100))
        g22 = Fraction(rng.randint(1, 100), rng.randint(1, 100))
        g12 = Fraction(rng.randint(-100, 100), rng.randint(1, 100))
        if g11 > 0 and g11 * g22 - g12 * g12 > 0:
            return Gram2.of(g11, g12, g22)


@criterion(7, "reduction minima, covering radius and reducedness vs oracles "
              "on 1000 random Grams")
def test_criterion_7():
    rng = random.Random(20260823)
    for _ in range(1000):
        G = _random_gram(rng)
        R, U = lagrange_reduce(G)
        assert G.transform(U).entries() == R.entries()
        l1, l2 = successive_minima(G)
        assert (l1, l2) == minima_brute_force(R, box=25)
        mu2 = covering_radius_sq(G)
        oracle = _deep_hole_oracle(G)
        assert oracle is not None
        assert abs(float(oracle - mu2)) <= 1e-5 * float(mu2)
        if is_paper_reduced(G):
            assert min(G.g11, G.g22) == l1


@criterion(8, "stability polynomials match the generic Gram predicates on "
              "500 random (ideal, t)")
def test_criterion_8():
    rng = random.Random(99)
    checked = 0
    while checked < 500:
        D = rng.randint(2, 300)
        if not is_squarefree(D):
            continue
        ideals = enumerate_canonical(D, 30)
        I = rng.choice(ideals)
        t = Fraction(rng.randint(1, 1200), rng.randint(1, 10))
        if t * t <= D:
            continue
        G = gram_of_twist(I, QuadElem.of(D, t, 1))
        expected = is_paper_reduced(G) and is_stable(G)
        assert raw_stable_polynomials(I, t) == expected, (D, I, t)
        checked += 1


@criterion(9, "orbit crossings, square-only detection and exact sample flags")
def test_criterion_9():
    assert wr_intersection_classes(ring_of_integers(2)) == (1, {Fraction(-1)})
    assert wr_intersection_classes(ring_of_integers(5)) == \
        (1, {Fraction(-1, 4)})
    for D in (2, 5, 10, 17, 29):
        assert orthogonal_only(D), D
    assert not orthogonal_only(59)
    for D, a, b, g in [(5, 1, 0, 1), (59, 1, 0, 1), (139, 9, 7, 1)]:
        I = validate_canonical(D, a, b, g)
        for s in sample_orbit(I, 16):
            assert 0 <= s.tau.x <= Fraction(1, 2)
            assert s.tau.x ** 2 + s.tau.y_sq >= 1
            G = gram_of_twist(I, s.alpha)
            assert s.is_wr == is_wr(G) == (s.tau.x ** 2 + s.tau.y_sq == 1)
            assert s.is_stable == is_stable(G) == (s.tau.y_sq <= 1)


@criterion(10, "Euclidean certificates, thickness window and d_min unit "
               "invariance")
def test_criterion_10():
    certified = [D for D in range(2, 51)
                 if is_squarefree(D) and euclidean_bounds(D).euclidean_certified]
    assert certified == [2, 3, 5, 13]

    r = tau_min_search(ring_of_integers(5))
    tau = math.sqrt(r.exact_tau_sq_at_argmin)
    assert tau <= 0.5 + 1e-15
    assert tau >= math.sqrt(HEXAGONAL_THICKNESS_SQ)

    rng = random.Random(7)
    checked = 0
    while checked < 100:
        D = rng.randint(2, 120)
        if not is_squarefree(D):
            continue
        I = rng.choice(enumerate_canonical(D, 12))
        t = Fraction(rng.randint(1, 600), rng.randint(1, 6))
        if t * t <= D:
            continue
        alpha = QuadElem.of(D, t, 1)
        _, eps_plus = fundamental_unit(D)
        assert d_min_sq_twist(I, alpha) == \
            d_min_sq_twist(I, alpha * eps_plus * eps_plus)
        checked += 1
