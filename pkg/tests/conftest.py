import numpy as np
import pytest

from curvedvem.mesh import EdgeGeometry, ElementGeometry
from curvedvem.meshgen import sine_channel_curves, sine_channel_mesh


def polygon(points):
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    return ElementGeometry(pts, [EdgeGeometry(pts[i], pts[(i + 1) % n]) for i in range(n)])


def regular_polygon(n, radius=1.0, center=(0.0, 0.0), phase=0.3):
    a = phase + 2 * np.pi * np.arange(n) / n
    return polygon(np.column_stack([center[0] + radius * np.cos(a), center[1] + radius * np.sin(a)]))


def random_convex_polygon(rng, n):
    """Convex polygon from sorted random angles on a perturbed circle."""
    while True:
        a = np.sort(rng.uniform(0, 2 * np.pi, n))
        gaps = np.diff(np.concatenate([a, [a[0] + 2 * np.pi]]))
        if gaps.min() > 0.35 and gaps.max() < np.pi * 0.9:
            break
    r = 1.0 + 0.1 * rng.random()
    c = rng.uniform(-2, 2, 2)
    s = 10.0 ** rng.uniform(-1, 0.5)
    return polygon(c + s * r * np.column_stack([np.cos(a), np.sin(a)]))


def curved_square():
    """Unit square whose bottom side is the bottom sine arc."""
    g_bt, _ = sine_channel_curves()
    v = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    edges = [EdgeGeometry(v[0], v[1], g_bt, 0.0, 1.0)] + [EdgeGeometry(v[i], v[(i + 1) % 4]) for i in (1, 2, 3)]
    return ElementGeometry(v, edges)


UNIT_SQUARE = [[0, 0], [1, 0], [1, 1], [0, 1]]


@pytest.fixture(scope="session")
def mesh2():
    return sine_channel_mesh("quad", 2, 2)


@pytest.fixture(scope="session")
def mesh8():
    return sine_channel_mesh("quad", 8, 3)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
