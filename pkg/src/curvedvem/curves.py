"""Parametrized boundary curves and straight segments."""
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .exceptions import CurveDomainError, DegenerateParametrizationError

# composite Gauss used for arc lengths
_ARC_POINTS = 16
_ARC_PANELS = 8
_T_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Curve:
    """A regular parametrization t -> gamma(t) on ``t_range``.

    ``eval``, ``deriv1`` and ``deriv2`` accept scalars or arrays of t and
    return arrays of shape ``t.shape + (2,)``.
    """

    id: str
    eval: Callable
    deriv1: Callable
    deriv2: Callable
    t_range: tuple
    kind: str = "custom"
    params: dict = field(default_factory=dict)

    def __call__(self, t):
        return self.eval(t)

    def check_parameter(self, t):
        a, b = self.t_range
        t = np.asarray(t, dtype=float)
        tol = _T_TOL * max(1.0, abs(a), abs(b))
        if np.any(t < a - tol) or np.any(t > b + tol):
            raise CurveDomainError(f"parameter {t} outside [{a}, {b}] of curve {self.id!r}")

    def to_dict(self):
        if self.kind == "custom":
            raise ValueError(f"curve {self.id!r} has no serializable form")
        return {"id": self.id, "type": self.kind, "params": dict(self.params),
                "t_range": [float(self.t_range[0]), float(self.t_range[1])]}


def _stack(x, y):
    return np.stack(np.broadcast_arrays(x, y), axis=-1)


def sine_graph(id, amplitude, frequency, offset=0.0, t_range=(0.0, 1.0)):
    """Graph curve t -> (t, offset + amplitude*sin(frequency*pi*t))."""
    A, w, c = float(amplitude), float(frequency) * np.pi, float(offset)

    def ev(t):
        t = np.asarray(t, dtype=float)
        return _stack(t, c + A * np.sin(w * t))

    def d1(t):
        t = np.asarray(t, dtype=float)
        return _stack(np.ones_like(t), A * w * np.cos(w * t))

    def d2(t):
        t = np.asarray(t, dtype=float)
        return _stack(np.zeros_like(t), -A * w * w * np.sin(w * t))

    params = {"amplitude": A, "frequency": float(frequency), "offset": c}
    return Curve(id, ev, d1, d2, (float(t_range[0]), float(t_range[1])), "sine-graph", params)


def segment(id, p0, p1, t_range=(0.0, 1.0)):
    """Affine parametrization of the segment p0 -> p1 over ``t_range``."""
    p0 = np.asarray(p0, dtype=float)
    p1 = np.asarray(p1, dtype=float)
    a, b = float(t_range[0]), float(t_range[1])
    slope = (p1 - p0) / (b - a)

    def ev(t):
        t = np.asarray(t, dtype=float)
        return p0 + (t - a)[..., None] * slope

    def d1(t):
        t = np.asarray(t, dtype=float)
        return np.broadcast_to(slope, t.shape + (2,)).copy()

    def d2(t):
        t = np.asarray(t, dtype=float)
        return np.zeros(t.shape + (2,))

    params = {"p0": p0.tolist(), "p1": p1.tolist()}
    return Curve(id, ev, d1, d2, (a, b), "segment", params)


def polyline_spline(id, points, t_range=(0.0, 1.0)):
    """C2 parametric cubic spline through ``points`` at uniform parameters."""
    from scipy.interpolate import CubicSpline

    pts = np.asarray(points, dtype=float)
    ts = np.linspace(t_range[0], t_range[1], len(pts))
    spl = CubicSpline(ts, pts, axis=0)
    d1s, d2s = spl.derivative(1), spl.derivative(2)
    params = {"points": pts.tolist()}
    return Curve(id, lambda t: spl(np.asarray(t, dtype=float)),
                 lambda t: d1s(np.asarray(t, dtype=float)),
                 lambda t: d2s(np.asarray(t, dtype=float)),
                 (float(t_range[0]), float(t_range[1])), "polyline-spline", params)


def curve_from_dict(spec):
    """Inverse of :meth:`Curve.to_dict`."""
    kind = spec["type"]
    p = spec.get("params", {})
    t_range = tuple(spec.get("t_range", (0.0, 1.0)))
    if kind == "sine-graph":
        return sine_graph(spec["id"], p["amplitude"], p["frequency"], p.get("offset", 0.0), t_range)
    if kind == "segment":
        return segment(spec["id"], p["p0"], p["p1"], t_range)
    if kind == "polyline-spline":
        return polyline_spline(spec["id"], p["points"], t_range)
    raise ValueError(f"unknown curve type {kind!r}")


def eval_curve(curve, t):
    """gamma(t), rejecting parameters outside the curve interval."""
    curve.check_parameter(t)
    return curve.eval(t)


@dataclass(frozen=True)
class EdgeFrame:
    tangent: np.ndarray
    normal: np.ndarray
    speed: float


def rotate_cw(v):
    """Rotate plane vectors by -90 degrees: (a, b) -> (b, -a)."""
    v = np.asarray(v)
    return np.stack([v[..., 1], -v[..., 0]], axis=-1)


def frame_at(curve, t, forward=True):
    """Unit tangent/outward normal at gamma(t) for a CCW element boundary.

    ``forward`` is False when the element traverses the edge against
    increasing t; the tangent is then reversed.
    """
    curve.check_parameter(t)
    d = np.asarray(curve.deriv1(t), dtype=float)
    speed = float(np.hypot(d[0], d[1]))
    if speed == 0.0:
        raise DegenerateParametrizationError(f"zero derivative of curve {curve.id!r} at t={t}")
    tangent = d / speed if forward else -d / speed
    return EdgeFrame(tangent, rotate_cw(tangent), speed)


def arc_quantities(curve, t0, t1, points=_ARC_POINTS, panels=_ARC_PANELS):
    """Return (chord_length, arc_length) of the sub-arc [t0, t1]."""
    if not t0 < t1:
        raise ValueError(f"need t0 < t1, got {t0}, {t1}")
    curve.check_parameter([t0, t1])
    chord = float(np.linalg.norm(curve.eval(t1) - curve.eval(t0)))
    xg, wg = np.polynomial.legendre.leggauss(points)
    edges = np.linspace(t0, t1, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    tq = (mid[:, None] + half[:, None] * xg[None, :]).ravel()
    wq = (half[:, None] * wg[None, :]).ravel()
    speed = np.linalg.norm(curve.deriv1(tq), axis=-1)
    return chord, float(wq @ speed)
