"""Exact solutions with loads for the clamped plate problem."""
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _sine_channel


@dataclass(frozen=True)
class ExactSolution:
    """u with gradient (ux, uy), Hessian (uxx, uxy, uyy) and load f = Δ²u."""

    name: str
    u: Callable
    grad: Callable
    hess: Callable
    f: Callable


def sine_channel_solution():
    """-(y-g_bt)²(y-g_tp)² x²(1-x)² (3 + sin5x sin7y) on the sine channel."""
    s = _sine_channel
    return ExactSolution(
        "sine-channel",
        s.u,
        lambda x, y: np.array([s.ux(x, y), s.uy(x, y)]),
        lambda x, y: np.array([s.uxx(x, y), s.uxy(x, y), s.uyy(x, y)]),
        s.f,
    )


def polynomial_solution(coeffs, name="polynomial"):
    """Exact solution from {(a, b): c} meaning sum of c x^a y^b."""
    terms = [(int(a), int(b), float(c)) for (a, b), c in coeffs.items()]

    def ev(dx, dy):
        def fn(x, y):
            x = np.asarray(x, dtype=float)
            y = np.asarray(y, dtype=float)
            out = np.zeros(np.broadcast(x, y).shape)
            for a, b, c in terms:
                if a < dx or b < dy:
                    continue
                fa = np.prod(np.arange(a - dx + 1, a + 1)) if dx else 1
                fb = np.prod(np.arange(b - dy + 1, b + 1)) if dy else 1
                out = out + c * fa * fb * x ** (a - dx) * y ** (b - dy)
            return out
        return fn

    u, ux, uy = ev(0, 0), ev(1, 0), ev(0, 1)
    uxx, uxy, uyy = ev(2, 0), ev(1, 1), ev(0, 2)
    fx4, fx2y2, fy4 = ev(4, 0), ev(2, 2), ev(0, 4)
    return ExactSolution(
        name, u,
        lambda x, y: np.array([ux(x, y), uy(x, y)]),
        lambda x, y: np.array([uxx(x, y), uxy(x, y), uyy(x, y)]),
        lambda x, y: fx4(x, y) + 2.0 * fx2y2(x, y) + fy4(x, y),
    )


PATCH_P2 = {(0, 0): 1.0, (1, 0): 0.5, (0, 1): -2.0, (2, 0): 1.0, (1, 1): 0.5, (0, 2): -0.75}
PATCH_P3 = {**PATCH_P2, (3, 0): 1.0, (2, 1): -2.0, (1, 2): 1.0, (0, 3): 0.7}


def get_solution(name):
    if name == "sine-channel":
        return sine_channel_solution()
    if name == "patch-p2":
        return polynomial_solution(PATCH_P2, "patch-p2")
    if name == "patch-p3":
        return polynomial_solution(PATCH_P3, "patch-p3")
    raise ValueError(f"unknown solution {name!r}")
