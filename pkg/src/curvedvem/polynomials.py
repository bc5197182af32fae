"""Shifted and scaled monomial bases on elements and on edge parameter intervals."""
import numpy as np

from . import _kernels


def mono_index(a, b):
    """Position of x̄^a ȳ^b in graded-lex order."""
    d = a + b
    return d * (d + 1) // 2 + b


def mono_count(degree):
    return 0 if degree < 0 else (degree + 1) * (degree + 2) // 2


class MonomialBasis:
    """Basis ((x - x_E)/h_E)^α, |α| <= degree, in graded-lex order.

    Polynomials are coefficient vectors in this basis; ``dx``/``dy`` are the
    matrices acting on coefficient vectors that differentiate in x and y
    (including the 1/h_E factor).
    """

    def __init__(self, degree, center, h):
        self.degree = int(degree)
        self.center = np.asarray(center, dtype=float)
        self.h = float(h)
        self.exps = _kernels.monomial_exponents(self.degree)
        self.size = len(self.exps)
        n = self.size
        self.dx = np.zeros((n, n))
        self.dy = np.zeros((n, n))
        for j, (a, b) in enumerate(self.exps):
            if a > 0:
                self.dx[mono_index(a - 1, b), j] = a / self.h
            if b > 0:
                self.dy[mono_index(a, b - 1), j] = b / self.h
        self.dxx = self.dx @ self.dx
        self.dxy = self.dx @ self.dy
        self.dyy = self.dy @ self.dy
        self.lap = self.dxx + self.dyy
        self.bilap = self.lap @ self.lap

    def values(self, points):
        """Matrix V with V[q, j] = m_j(points[q])."""
        p = np.atleast_2d(np.asarray(points, dtype=float))
        return _kernels.monomial_values((p[:, 0] - self.center[0]) / self.h,
                                        (p[:, 1] - self.center[1]) / self.h, self.exps)

    def evaluate(self, coeffs, points):
        return self.values(points) @ coeffs

    def mass_matrix(self, moments):
        """∫ m_i m_j from the list of monomial integrals up to degree 2*degree."""
        e = self.exps
        a = e[:, 0][:, None] + e[:, 0][None, :]
        b = e[:, 1][:, None] + e[:, 1][None, :]
        return moments[mono_index(a, b)]

    def from_callable(self, poly, points=None):
        """Coefficients of a polynomial given as a callable, by least squares
        on ``points`` (default: fixed pseudo-random points around the center)."""
        if points is None:
            rng = np.random.default_rng(12345)
            points = self.center + self.h * (rng.random((3 * self.size, 2)) - 0.5)
        pts = np.asarray(points, dtype=float)
        V = self.values(pts)
        return np.linalg.lstsq(V, poly(pts[:, 0], pts[:, 1]), rcond=None)[0]


def interval_vandermonde(s, degree, deriv=0):
    """Rows d^deriv/ds^deriv of 1, s, ..., s^degree at points ``s``."""
    s = np.atleast_1d(np.asarray(s, dtype=float))
    out = np.zeros((len(s), degree + 1))
    for m in range(deriv, degree + 1):
        c = 1.0
        for j in range(deriv):
            c *= m - j
        out[:, m] = c * s ** (m - deriv)
    return out
