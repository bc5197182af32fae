"""Hot numeric kernels with a numba path and a pure-numpy fallback.

Set ``CURVEDVEM_DISABLE_NUMBA=1`` before import to force the numpy path.
Both implementations are always importable (``*_numpy`` / ``*_numba``) so
the test suite and the benchmark can compare them directly.
"""
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

USE_NUMBA = numba is not None and os.environ.get("CURVEDVEM_DISABLE_NUMBA", "0") not in ("1", "true", "yes")


def monomial_exponents(degree):
    """Graded-lex exponent list: (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ..."""
    if degree < 0:
        return np.zeros((0, 2), dtype=np.int64)
    exps = [(d - j, j) for d in range(degree + 1) for j in range(d + 1)]
    return np.array(exps, dtype=np.int64)


# --------------------------------------------------------------------------
# numpy implementations


def monomial_values_numpy(xb, yb, exps):
    """Values of x̄^a ȳ^b at points; shape (npts, nmono)."""
    xb = np.asarray(xb, dtype=float)
    yb = np.asarray(yb, dtype=float)
    deg = int(exps.max()) if len(exps) else 0
    xp = xb[:, None] ** np.arange(deg + 1)
    yp = yb[:, None] ** np.arange(deg + 1)
    return xp[:, exps[:, 0]] * yp[:, exps[:, 1]]


def boundary_moments_numpy(x, y, wdy, xc, yc, h, exps):
    """∫_E m_α dA for every α in ``exps`` by the divergence theorem.

    ``wdy`` holds quadrature weights times dy/ds on the boundary points, so
    the sum evaluates ∮ F dy with F = h/(a+1) x̄^(a+1) ȳ^b.
    """
    xb = (np.asarray(x) - xc) / h
    yb = (np.asarray(y) - yc) / h
    shifted = exps.copy()
    shifted[:, 0] += 1
    vals = monomial_values_numpy(xb, yb, shifted)
    return h * (wdy @ vals) / (exps[:, 0] + 1.0)


# --------------------------------------------------------------------------
# numba implementations (loop form)


def _monomial_values_loop(xb, yb, exps):
    npts = xb.shape[0]
    nm = exps.shape[0]
    deg = 0
    for j in range(nm):
        deg = max(deg, exps[j, 0], exps[j, 1])
    out = np.empty((npts, nm))
    xp = np.empty(deg + 1)
    yp = np.empty(deg + 1)
    for i in range(npts):
        xp[0] = 1.0
        yp[0] = 1.0
        for d in range(1, deg + 1):
            xp[d] = xp[d - 1] * xb[i]
            yp[d] = yp[d - 1] * yb[i]
        for j in range(nm):
            out[i, j] = xp[exps[j, 0]] * yp[exps[j, 1]]
    return out


def _boundary_moments_loop(x, y, wdy, xc, yc, h, exps):
    nm = exps.shape[0]
    deg = 0
    for j in range(nm):
        deg = max(deg, exps[j, 0] + 1, exps[j, 1])
    out = np.zeros(nm)
    xp = np.empty(deg + 1)
    yp = np.empty(deg + 1)
    for i in range(x.shape[0]):
        xb = (x[i] - xc) / h
        yb = (y[i] - yc) / h
        xp[0] = 1.0
        yp[0] = 1.0
        for d in range(1, deg + 1):
            xp[d] = xp[d - 1] * xb
            yp[d] = yp[d - 1] * yb
        for j in range(nm):
            out[j] += wdy[i] * xp[exps[j, 0] + 1] * yp[exps[j, 1]]
    for j in range(nm):
        out[j] *= h / (exps[j, 0] + 1.0)
    return out


if numba is not None:
    _monomial_values_nb = numba.njit(cache=True)(_monomial_values_loop)
    _boundary_moments_nb = numba.njit(cache=True)(_boundary_moments_loop)
else:  # pragma: no cover
    _monomial_values_nb = _monomial_values_loop
    _boundary_moments_nb = _boundary_moments_loop


def monomial_values_numba(xb, yb, exps):
    return _monomial_values_nb(np.ascontiguousarray(xb, dtype=float),
                               np.ascontiguousarray(yb, dtype=float),
                               np.ascontiguousarray(exps, dtype=np.int64))


def boundary_moments_numba(x, y, wdy, xc, yc, h, exps):
    return _boundary_moments_nb(np.ascontiguousarray(x, dtype=float),
                                np.ascontiguousarray(y, dtype=float),
                                np.ascontiguousarray(wdy, dtype=float),
                                float(xc), float(yc), float(h),
                                np.ascontiguousarray(exps, dtype=np.int64))


if USE_NUMBA:
    monomial_values = monomial_values_numba
    boundary_moments = boundary_moments_numba
else:
    monomial_values = monomial_values_numpy
    boundary_moments = boundary_moments_numpy
