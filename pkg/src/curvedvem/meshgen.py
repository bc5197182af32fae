"""Meshes of the sine channel: unit-square base meshes mapped onto the curved domain."""
from dataclasses import dataclass

import numpy as np
from scipy.spatial import Voronoi, cKDTree

from .curves import sine_graph
from .exceptions import MeshError
from .mesh import CurvedMesh


# short-edge threshold relative to the seed spacing 1/sqrt(m)
COLLAPSE = 0.2


def sine_channel_curves():
    """Bottom sin(pi x)/20 and top 1 + sin(3 pi x)/20 graph curves on [0, 1]."""
    return (sine_graph("bottom", 1.0 / 20.0, 1.0, 0.0),
            sine_graph("top", 1.0 / 20.0, 3.0, 1.0))


def _graph_height(curve, x, default):
    if curve is None:
        return np.full_like(np.asarray(x, dtype=float), default)
    return curve.eval(x)[..., 1]


def map_square_node(p, g_bt, g_tp):
    """Map points of the unit square onto the channel between two graphs.

    ``g_bt``/``g_tp`` are graph curves t -> (t, g(t)); None stands for the
    flat lines y = 0 / y = 1. Works on a single point or an (n, 2) array.
    """
    p = np.asarray(p, dtype=float)
    xs, ys = p[..., 0], p[..., 1]
    gb = _graph_height(g_bt, xs, 0.0)
    gt = _graph_height(g_tp, xs, 1.0)
    y = np.where(ys <= 0.5, ys + gb * (1.0 - 2.0 * ys), 1.0 - ys + gt * (2.0 * ys - 1.0))
    return np.stack([xs, y], axis=-1)


@dataclass(frozen=True)
class BaseMeshSpec:
    """Unit-square base mesh: ``quad`` n x n, or ``voronoi`` with ``seeds`` cells."""

    family: str = "quad"
    n: int = 8
    seeds: int = 0
    lloyd: int = 40
    seed: int = 0


def quad_square(n):
    """n x n uniform quadrilaterals on the unit square (nodes, CCW elements)."""
    x = np.linspace(0.0, 1.0, n + 1)
    X, Y = np.meshgrid(x, x)
    nodes = np.column_stack([X.ravel(), Y.ravel()])
    elements = []
    for j in range(n):
        for i in range(n):
            a = j * (n + 1) + i
            elements.append([a, a + 1, a + n + 2, a + n + 1])
    return nodes, elements


def _clipped_voronoi(pts):
    """Voronoi cells of ``pts`` clipped to the unit square (by mirroring)."""
    x, y = pts[:, 0], pts[:, 1]
    mirrored = np.concatenate([
        pts,
        np.column_stack([-x, y]), np.column_stack([2.0 - x, y]),
        np.column_stack([x, -y]), np.column_stack([x, 2.0 - y]),
    ])
    vor = Voronoi(mirrored)
    cells = []
    for i in range(len(pts)):
        region = vor.regions[vor.point_region[i]]
        if -1 in region or len(region) < 3:
            raise MeshError(f"unbounded Voronoi cell for seed {i}")
        poly = vor.vertices[region]
        ang = np.arctan2(poly[:, 1] - y[i], poly[:, 0] - x[i])
        cells.append(np.clip(poly[np.argsort(ang)], 0.0, 1.0))
    return cells


def _polygon_area_centroid(poly):
    x, y = poly[:, 0], poly[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = x * yn - xn * y
    a = 0.5 * cross.sum()
    if a <= 0.0:
        raise MeshError("Voronoi generation produced a cell with zero area")
    return a, np.array([((x + xn) * cross).sum(), ((y + yn) * cross).sum()]) / (6.0 * a)


def voronoi_square(m, lloyd=40, seed=0, collapse=COLLAPSE):
    """Lloyd-relaxed Voronoi mesh of the unit square with ``m`` cells.

    Edges shorter than ``collapse``/sqrt(m) are collapsed afterwards
    (0 disables this).
    """
    rng = np.random.default_rng(seed)
    pts = rng.random((m, 2))
    for _ in range(lloyd):
        cells = _clipped_voronoi(pts)
        pts = np.array([_polygon_area_centroid(c)[1] for c in cells])
    cells = _clipped_voronoi(pts)

    allv = np.concatenate(cells)
    # snap to the square sides so boundary nodes are exact
    allv[np.abs(allv) < 1e-12] = 0.0
    allv[np.abs(allv - 1.0) < 1e-12] = 1.0
    tree = cKDTree(allv)
    parent = np.arange(len(allv))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in sorted(tree.query_pairs(1e-10)):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    roots = np.array([find(i) for i in range(len(allv))])
    uniq, node_of = np.unique(roots, return_inverse=True)
    nodes = allv[uniq]

    loops = []
    offset = 0
    for c in cells:
        loops.append([int(v) for v in node_of[offset:offset + len(c)]])
        offset += len(c)
    if collapse > 0.0:
        nodes, loops = _collapse_short_edges(nodes, loops, collapse / np.sqrt(m))
    return _compact(nodes, loops)


def _clean_loop(loop):
    out = []
    for v in loop:
        if not out or v != out[-1]:
            out.append(v)
    while len(out) > 1 and out[-1] == out[0]:
        out.pop()
    return out


def _compact(nodes, loops):
    """Drop repeated/unused vertices and renumber."""
    loops = [_clean_loop(lp) for lp in loops]
    used = np.unique(np.concatenate([np.asarray(lp) for lp in loops]))
    new_id = -np.ones(len(nodes), dtype=np.int64)
    new_id[used] = np.arange(len(used))
    nodes = nodes[used]
    elements = []
    for lp in loops:
        if len(lp) < 3:
            raise MeshError("Voronoi generation produced a degenerate cell")
        loop = [int(new_id[v]) for v in lp]
        _polygon_area_centroid(nodes[loop])
        elements.append(loop)
    return nodes, elements


def _side_mask(p):
    """Bit mask of the square sides a point lies on (x=0, x=1, y=0, y=1)."""
    return int(p[0] == 0.0) | int(p[0] == 1.0) << 1 | int(p[1] == 0.0) << 2 | int(p[1] == 1.0) << 3


def _collapse_short_edges(nodes, loops, delta):
    """Merge the endpoints of edges shorter than ``delta``.

    Lloyd-relaxed Voronoi cells still carry tiny edges near four-cell
    junctions; they destroy the h_e >= rho h_E regularity the element needs.
    Corners never move, side vertices stay on their side.
    """
    nodes = nodes.copy()
    while True:
        edges = {}
        for lp in loops:
            for a, b in zip(lp, lp[1:] + lp[:1]):
                edges[(min(a, b), max(a, b))] = np.linalg.norm(nodes[a] - nodes[b])
        short = sorted((d, e) for e, d in edges.items() if d < delta)
        if not short:
            return nodes, loops
        touched = set()
        remap = {}
        for _, (a, b) in short:
            if a in touched or b in touched:
                continue
            ma, mb = _side_mask(nodes[a]), _side_mask(nodes[b])
            if ma and mb and ma != mb and (ma & mb) == 0:
                continue   # would pull a vertex off its side
            if bin(ma).count("1") == 2 and bin(mb).count("1") == 2:
                continue   # two corners
            if ma == mb:
                p = 0.5 * (nodes[a] + nodes[b])
            elif (ma & mb) == mb:
                p = nodes[a].copy()
            else:
                p = nodes[b].copy()
            nodes[a] = p
            remap[b] = a
            touched.update((a, b))
        if not remap:
            return nodes, loops
        loops = [_clean_loop([remap.get(v, v) for v in lp]) for lp in loops]


def voronoi_seeds_for(n, k):
    """Cell count whose DoF total roughly matches an n x n quad mesh at degree k.

    Vertex and edge counts of the relaxed, collapsed Voronoi meshes follow
    V ~ 1.913 m + 0.496 sqrt(m), E ~ 2.914 m + 0.425 sqrt(m) (fitted for
    m = 30..4000); m solves the resulting quadratic in sqrt(m).
    """
    ke, kn = max(0, k - 3), k - 2
    moments = (k - 3) * (k - 2) // 2 if k >= 4 else 0
    q = ke + kn
    target = 3 * (n + 1) ** 2 + q * 2 * n * (n + 1) + moments * n * n
    a = 3 * 1.913 + 2.914 * q + moments
    b = 3 * 0.496 + 0.425 * q
    s = (-b + np.sqrt(b * b + 4 * a * target)) / (2 * a)
    return max(4, int(round(s * s)))


def base_mesh(spec):
    if spec.family == "quad":
        return quad_square(spec.n)
    if spec.family == "voronoi":
        return voronoi_square(spec.seeds, spec.lloyd, spec.seed)
    raise ValueError(f"unknown mesh family {spec.family!r}")


def generate_mapped_mesh(base, g_bt, g_tp):
    """Build the curved mesh from a base square mesh spec.

    Edges whose endpoints both lie on y=0 (y=1) become arcs of ``g_bt``
    (``g_tp``) with parameter range equal to the endpoint abscissae; all
    other edges stay straight. A None curve keeps that side flat and straight.
    """
    nodes, elements = base_mesh(base) if isinstance(base, BaseMeshSpec) else base
    nodes = np.asarray(nodes, dtype=float)
    mapped = map_square_node(nodes, g_bt, g_tp)
    edge_curves = {}
    for e, loop in enumerate(elements):
        for i, a in enumerate(loop):
            b = loop[(i + 1) % len(loop)]
            for side, curve in ((0.0, g_bt), (1.0, g_tp)):
                if curve is not None and nodes[a, 1] == side and nodes[b, 1] == side:
                    edge_curves[(e, i)] = (curve.id, float(nodes[a, 0]), float(nodes[b, 0]))
    curves = [c for c in (g_bt, g_tp) if c is not None]
    return CurvedMesh(mapped, elements, curves, edge_curves)


def straighten_boundary(mesh):
    """Replace every curved edge by its chord; nodes and elements unchanged."""
    return CurvedMesh(mesh.nodes.copy(), mesh.elements, mesh.curves, {})


def sine_channel_mesh(family="quad", n=8, k=3, seed=0, lloyd=40, straight=False):
    """Mesh of the sine channel at resolution ``n`` (quad-equivalent for Voronoi)."""
    g_bt, g_tp = sine_channel_curves()
    if family == "quad":
        spec = BaseMeshSpec("quad", n=n)
    else:
        spec = BaseMeshSpec("voronoi", n=n, seeds=voronoi_seeds_for(n, k), lloyd=lloyd, seed=seed)
    mesh = generate_mapped_mesh(spec, g_bt, g_tp)
    return straighten_boundary(mesh) if straight else mesh


def square_mesh(family="quad", n=4, k=3, seed=0, lloyd=40):
    """Straight-edged mesh of the unit square."""
    if family == "quad":
        spec = BaseMeshSpec("quad", n=n)
    else:
        spec = BaseMeshSpec("voronoi", n=n, seeds=voronoi_seeds_for(n, k), lloyd=lloyd, seed=seed)
    return generate_mapped_mesh(spec, None, None)
