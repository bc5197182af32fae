"""1D rules, edge quadrature on (curved) edges and integration over curved polygons."""
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .exceptions import GeometryError

# extra exactness degree for curved edges in divergence-theorem moments
CURVED_EXTRA_ORDER = 20
# extra Gauss points in the arc direction of curved fan triangles
CURVED_FAN_EXTRA = 4


@dataclass(frozen=True)
class Rule1D:
    nodes: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return len(self.nodes)


def points_for_order(order):
    """Gauss points needed to integrate degree ``order`` exactly."""
    return max(1, int(order) // 2 + 1)


@lru_cache(maxsize=None)
def _gauss_legendre(n):
    x, w = np.polynomial.legendre.leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return Rule1D(x, w)


def gauss_legendre(n):
    """n-point Gauss-Legendre rule on [-1, 1]."""
    if n < 1:
        raise ValueError("Gauss rule needs n >= 1")
    return _gauss_legendre(int(n))


@lru_cache(maxsize=None)
def _gauss_lobatto(n):
    N = n - 1
    # Chebyshev-Gauss-Lobatto initial guesses, ascending
    x = -np.cos(np.pi * np.arange(n) / N)
    P = np.zeros((n, n))
    for _ in range(100):
        xold = x
        P[:, 0] = 1.0
        P[:, 1] = x
        for j in range(2, n):
            P[:, j] = ((2 * j - 1) * x * P[:, j - 1] - (j - 1) * P[:, j - 2]) / j
        x = xold - (x * P[:, N] - P[:, N - 1]) / (n * P[:, N])
        if np.max(np.abs(x - xold)) <= 1e-15:
            break
    P[:, 0] = 1.0
    P[:, 1] = x
    for j in range(2, n):
        P[:, j] = ((2 * j - 1) * x * P[:, j - 1] - (j - 1) * P[:, j - 2]) / j
    w = 2.0 / (N * n * P[:, N] ** 2)
    x[0], x[-1] = -1.0, 1.0
    # exact symmetry so that shared edge points coincide bitwise
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    x.setflags(write=False)
    w.setflags(write=False)
    return Rule1D(x, w)


def gauss_lobatto(n):
    """n-point Gauss-Lobatto rule on [-1, 1] (endpoints included)."""
    if n < 2:
        raise ValueError("Gauss-Lobatto rule needs n >= 2")
    return _gauss_lobatto(int(n))


@dataclass(frozen=True)
class EdgeRule:
    """Quadrature on one oriented edge; ``weights`` include the metric |x'(s)|."""

    s: np.ndarray
    t: np.ndarray
    points: np.ndarray
    weights: np.ndarray


def edge_rule(edge, order):
    """Gauss rule of polynomial exactness ``order`` mapped onto ``edge``."""
    if order < 1:
        raise ValueError("edge rule order must be >= 1")
    rule = gauss_legendre(points_for_order(order))
    s = np.asarray(rule.nodes)
    return EdgeRule(s, edge.param(s), edge.point(s), rule.weights * edge.speed(s))


def _edge_boundary_points(element, degree):
    xs, ys, wdy = [], [], []
    for edge in element.edges:
        if edge.is_curved:
            n = points_for_order(degree + 1 + CURVED_EXTRA_ORDER)
        else:
            n = points_for_order(degree + 1)
        rule = gauss_legendre(n)
        p = edge.point(rule.nodes)
        d = edge.d1(rule.nodes)
        xs.append(p[:, 0])
        ys.append(p[:, 1])
        wdy.append(rule.weights * d[:, 1])
    return np.concatenate(xs), np.concatenate(ys), np.concatenate(wdy)


def integrate_monomials(element, degree, center=None, h=None):
    """∫_E m_α for all α with |α| <= degree (graded-lex order).

    Scaled monomials use ``center``/``h`` (default: the element barycenter
    and diameter). Evaluated as boundary integrals of an x-antiderivative.
    """
    if center is None:
        center = element.centroid
    if h is None:
        h = element.diameter
    exps = _kernels.monomial_exponents(degree)
    x, y, wdy = _edge_boundary_points(element, degree)
    return _kernels.boundary_moments(x, y, wdy, center[0], center[1], h, exps)


def integrate_monomial(element, alpha):
    """∫_E ((x - x_E)/h_E)^alpha dE."""
    a, b = int(alpha[0]), int(alpha[1])
    d = a + b
    vals = integrate_monomials(element, d)
    # index of (a, b) in graded-lex order
    return float(vals[d * (d + 1) // 2 + b])


@dataclass(frozen=True)
class AreaRule:
    points: np.ndarray
    weights: np.ndarray


def fan_rule(element, order, center=None):
    """Quadrature over E from the fan of triangles apex-``center`` / edge.

    Each (possibly curved) triangle is the image of [0,1]x[-1,1] under
    (u, s) -> c + u (x(s) - c), which reproduces the edge exactly; the
    Jacobian is u * det(x(s) - c, x'(s)). Straight triangles are exact for
    polynomials of degree ``order``.
    """
    c = element.centroid if center is None else np.asarray(center, dtype=float)
    ru = gauss_legendre(points_for_order(order + 1))
    u = 0.5 * (np.asarray(ru.nodes) + 1.0)
    wu = 0.5 * np.asarray(ru.weights)
    pts, wts = [], []
    for edge in element.edges:
        n = points_for_order(order) + (CURVED_FAN_EXTRA if edge.is_curved else 0)
        rs = gauss_legendre(n)
        s = np.asarray(rs.nodes)
        x = edge.point(s) - c
        d = edge.d1(s)
        det = x[:, 0] * d[:, 1] - x[:, 1] * d[:, 0]
        if np.any(det <= 0.0):
            raise GeometryError("non-positive Jacobian in fan triangle: element not star-shaped w.r.t. its center")
        pts.append(c + u[:, None, None] * x[None, :, :])
        wts.append((wu * u)[:, None] * (rs.weights * det)[None, :])
    return AreaRule(np.concatenate([p.reshape(-1, 2) for p in pts]),
                    np.concatenate([w.ravel() for w in wts]))


def integrate_function(element, phi, order):
    """∫_E phi using :func:`fan_rule`; ``phi(x, y)`` is vectorized."""
    rule = fan_rule(element, order)
    vals = np.asarray(phi(rule.points[:, 0], rule.points[:, 1]), dtype=float)
    return float(rule.weights @ np.broadcast_to(vals, rule.weights.shape))
