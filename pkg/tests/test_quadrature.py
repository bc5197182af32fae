from fractions import Fraction
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import UNIT_SQUARE, curved_square, polygon, random_convex_polygon
from curvedvem.exceptions import GeometryError
from curvedvem.mesh import EdgeGeometry, ElementGeometry
from curvedvem.meshgen import sine_channel_curves, sine_channel_mesh
from curvedvem.quadrature import (edge_rule, fan_rule, gauss_legendre, gauss_lobatto, integrate_function,
                                  integrate_monomial, integrate_monomials, points_for_order)
from curvedvem._kernels import monomial_exponents


def _triangle_moment(tri, a, b):
    """Exact ∫_T x^a y^b for a triangle with rational vertices (barycentric expansion)."""
    (x1, y1), (x2, y2), (x3, y3) = [(Fraction(p[0]), Fraction(p[1])) for p in tri]
    area2 = abs((x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1))

    def power(c, n):
        # (c1 l1 + c2 l2 + c3 l3)^n as {(i, j, k): coeff}
        out = {}
        for i in range(n + 1):
            for j in range(n - i + 1):
                k = n - i - j
                m = factorial(n) // (factorial(i) * factorial(j) * factorial(k))
                out[(i, j, k)] = m * c[0] ** i * c[1] ** j * c[2] ** k
        return out

    px, py = power((x1, x2, x3), a), power((y1, y2, y3), b)
    total = Fraction(0)
    for (i, j, k), cx in px.items():
        for (p, q, r), cy in py.items():
            I, J, K = i + p, j + q, k + r
            total += cx * cy * Fraction(factorial(I) * factorial(J) * factorial(K), factorial(I + J + K + 2))
    return total * area2


def _polygon_moment(pts, a, b):
    return sum(_triangle_moment([pts[0], pts[i], pts[i + 1]], a, b) for i in range(1, len(pts) - 1))


def test_gauss_lobatto_examples():
    r = gauss_lobatto(2)
    assert np.allclose(r.nodes, [-1, 1]) and np.allclose(r.weights, [1, 1])
    r = gauss_lobatto(3)
    assert np.allclose(r.nodes, [-1, 0, 1], atol=1e-15) and np.allclose(r.weights, [1 / 3, 4 / 3, 1 / 3])
    r = gauss_lobatto(4)
    assert np.allclose(r.nodes[1:3], [-1 / np.sqrt(5), 1 / np.sqrt(5)], atol=1e-15)


def test_gauss_lobatto_argument_error():
    with pytest.raises(ValueError):
        gauss_lobatto(1)


@pytest.mark.parametrize("n", range(2, 13))
def test_gauss_lobatto_exactness(n):
    r = gauss_lobatto(n)
    for d in range(2 * n - 2):
        exact = (1 + (-1) ** d) / (d + 1)
        assert r.weights @ r.nodes ** d == pytest.approx(exact, abs=1e-13)
    assert np.array_equal(r.nodes, -r.nodes[::-1])


@pytest.mark.parametrize("n", range(1, 12))
def test_gauss_legendre_exactness(n):
    r = gauss_legendre(n)
    for d in range(2 * n):
        assert r.weights @ r.nodes ** d == pytest.approx((1 + (-1) ** d) / (d + 1), abs=1e-13)


def test_points_for_order():
    assert [points_for_order(o) for o in (0, 1, 2, 3, 4, 5)] == [1, 1, 2, 2, 3, 3]


def test_edge_rule_examples():
    e = EdgeGeometry(np.array([0.0, 0.0]), np.array([3.0, 4.0]))
    assert edge_rule(e, 5).weights.sum() == pytest.approx(5.0)
    g_bt, _ = sine_channel_curves()
    arc = EdgeGeometry(np.array([0.0, 0.0]), np.array([1.0, 0.0]), g_bt, 0.0, 1.0)
    assert edge_rule(arc, 16).weights.sum() == pytest.approx(1.006140, abs=1e-6)
    flat = EdgeGeometry(np.array([0.0, 0.0]), np.array([1.0, 0.0]))
    r = edge_rule(flat, 1)
    assert r.weights @ r.points[:, 0] == pytest.approx(0.5)


def test_integrate_monomial_examples():
    sq = polygon(UNIT_SQUARE)
    assert integrate_monomial(sq, (0, 0)) == pytest.approx(1.0)
    assert integrate_monomial(sq, (1, 0)) == pytest.approx(0.0, abs=1e-15)
    assert integrate_monomial(sq, (2, 0)) == pytest.approx(1 / 24)
    cs = curved_square()
    assert integrate_monomial(cs, (0, 0)) == pytest.approx(1 - 1 / (10 * np.pi), rel=1e-13)
    assert integrate_monomial(cs, (1, 0)) == pytest.approx(0.0, abs=1e-14)
    assert integrate_monomial(cs, (0, 1)) == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize("pts", [UNIT_SQUARE, [[0, 0], [1, 0], [0, 1]],
                                 [[0, 0], [2, 0], [3, 1], [1, 3], [-1, 1]],
                                 [[Fraction(1, 3), 0], [1, Fraction(1, 7)], [Fraction(5, 4), 1], [0, Fraction(3, 2)]]])
def test_straight_moments_exact(pts):
    el = polygon([[float(p[0]), float(p[1])] for p in pts])
    got = integrate_monomials(el, 8, center=np.zeros(2), h=1.0)
    for (a, b), val in zip(monomial_exponents(8), got):
        exact = float(_polygon_moment(pts, int(a), int(b)))
        assert val == pytest.approx(exact, rel=1e-12, abs=1e-14)


def test_function_examples():
    sq = polygon(UNIT_SQUARE)
    assert integrate_function(sq, lambda x, y: np.ones_like(x), 2) == pytest.approx(integrate_monomial(sq, (0, 0)))
    x, w = np.polynomial.legendre.leggauss(64)
    x, w = 0.5 * (x + 1), 0.5 * w
    oracle = (w @ np.sin(5 * x)) * (w @ np.sin(7 * x))
    got = integrate_function(sq, lambda x, y: np.sin(5 * x) * np.sin(7 * y), 20)
    assert got == pytest.approx(oracle, abs=1e-10)


def test_function_matches_monomial_on_curved_quad():
    el = sine_channel_mesh("quad", 2, 2).geometry(0)
    c, h = el.centroid, el.diameter
    val = integrate_function(el, lambda x, y: ((x - c[0]) / h) ** 2 * ((y - c[1]) / h), 12)
    assert val == pytest.approx(integrate_monomial(el, (2, 1)), abs=1e-10)


def test_curved_area():
    cs = curved_square()
    assert fan_rule(cs, 4).weights.sum() == pytest.approx(1 - 1 / (10 * np.pi), rel=1e-12)


def test_fan_rule_rejects_non_star_shaped():
    # arrow-shaped polygon, not star-shaped with respect to its centroid
    pts = [[0, 0], [4, 0], [4, 1], [0.2, 0.2], [1, 4], [0, 4]]
    el = polygon(pts)
    with pytest.raises(GeometryError):
        fan_rule(el, 4, center=np.array([3.5, 0.8]))


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10 ** 6), n=st.integers(3, 9))
def test_fan_rule_polynomial_exactness(seed, n):
    el = random_convex_polygon(np.random.default_rng(seed), n)
    deg = 6
    mom = integrate_monomials(el, deg)
    rule = fan_rule(el, deg)
    c, h = el.centroid, el.diameter
    xb, yb = (rule.points[:, 0] - c[0]) / h, (rule.points[:, 1] - c[1]) / h
    for (a, b), m in zip(monomial_exponents(deg), mom):
        assert rule.weights @ (xb ** a * yb ** b) == pytest.approx(m, abs=1e-12 * el.area)


def test_curved_element_agreement():
    mesh = sine_channel_mesh("quad", 8, 3)
    curved = [e for e in range(mesh.n_elements) if mesh.geometry(e).is_curved][:4]
    for e in curved:
        el = mesh.geometry(e)
        c, h = el.centroid, el.diameter
        mom = integrate_monomials(el, 8)
        for (a, b), m in zip(monomial_exponents(8), mom):
            val = integrate_function(el, lambda x, y: ((x - c[0]) / h) ** a * ((y - c[1]) / h) ** b, 14)
            assert val == pytest.approx(m, rel=1e-9, abs=1e-9 * abs(mom[0]))
