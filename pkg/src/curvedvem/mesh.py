"""Curved polygonal meshes: data model, element geometry, file I/O and regularity checks."""
import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .curves import arc_quantities, curve_from_dict, rotate_cw
from .exceptions import MeshError, OrientationError
from .quadrature import integrate_monomials

# samples per curved edge when searching the diameter
DIAMETER_SAMPLES = 17


class EdgeGeometry:
    """One edge of an element, oriented along the CCW boundary traversal.

    Every edge is parametrized over the reference variable s in [-1, 1];
    a curved edge maps s affinely onto [t_start, t_end] (possibly a
    decreasing interval) and then through its curve, a straight edge maps
    s affinely onto the chord.
    """

    def __init__(self, start, end, curve=None, t_start=0.0, t_end=1.0):
        self.start = np.asarray(start, dtype=float)
        self.end = np.asarray(end, dtype=float)
        self.curve = curve
        self.t_start = float(t_start)
        self.t_end = float(t_end)
        self._half = 0.5 * (self.t_end - self.t_start)
        self._chord_vec = self.end - self.start

    @property
    def is_curved(self):
        return self.curve is not None

    @property
    def chord(self):
        """h_e: distance between the endpoints."""
        return float(np.hypot(*self._chord_vec))

    def param(self, s):
        s = np.asarray(s, dtype=float)
        return self.t_start + (s + 1.0) * self._half

    def point(self, s):
        s = np.asarray(s, dtype=float)
        if self.curve is None:
            return self.start + (0.5 * (s + 1.0))[..., None] * self._chord_vec
        return self.curve.eval(self.param(s))

    def d1(self, s):
        s = np.asarray(s, dtype=float)
        if self.curve is None:
            return np.broadcast_to(0.5 * self._chord_vec, s.shape + (2,)).copy()
        return self.curve.deriv1(self.param(s)) * self._half

    def d2(self, s):
        s = np.asarray(s, dtype=float)
        if self.curve is None:
            return np.zeros(s.shape + (2,))
        return self.curve.deriv2(self.param(s)) * self._half ** 2

    def speed(self, s):
        return np.linalg.norm(self.d1(s), axis=-1)

    def tangent(self, s):
        d = self.d1(s)
        return d / np.linalg.norm(d, axis=-1)[..., None]

    def normal(self, s):
        """Outward unit normal (tangent rotated by -90 degrees)."""
        return rotate_cw(self.tangent(s))

    def length(self):
        if self.curve is None:
            return self.chord
        a, b = sorted((self.t_start, self.t_end))
        return arc_quantities(self.curve, a, b)[1]

    def reversed(self):
        return EdgeGeometry(self.end, self.start, self.curve, self.t_end, self.t_start)

    def straightened(self):
        return EdgeGeometry(self.start, self.end)


class ElementGeometry:
    """Geometry of one (possibly curved) polygon with CCW vertex loop."""

    def __init__(self, vertices, edges):
        self.vertices = np.asarray(vertices, dtype=float)
        self.edges = list(edges)
        if len(self.edges) != len(self.vertices):
            raise MeshError("element needs as many edges as vertices")

    @property
    def n_vertices(self):
        return len(self.vertices)

    @cached_property
    def _moments01(self):
        c0 = self.vertices.mean(axis=0)
        h0 = float(np.max(np.linalg.norm(self.vertices - c0, axis=1))) or 1.0
        m = integrate_monomials(self, 1, center=c0, h=h0)
        if not m[0] > 0.0:
            raise OrientationError(f"element has non-positive area {m[0]:.3e} (clockwise loop?)")
        return c0, h0, m

    @cached_property
    def area(self):
        return float(self._moments01[2][0])

    @cached_property
    def centroid(self):
        c0, h0, m = self._moments01
        return c0 + h0 * m[1:3] / m[0]

    @cached_property
    def diameter(self):
        pts = [self.vertices]
        s = np.linspace(-1.0, 1.0, DIAMETER_SAMPLES)
        for e in self.edges:
            if e.is_curved:
                pts.append(e.point(s))
        pts = np.concatenate(pts)
        diff = pts[:, None, :] - pts[None, :, :]
        return float(np.sqrt(np.max(np.sum(diff * diff, axis=-1))))

    @cached_property
    def boundary_length(self):
        return float(sum(e.length() for e in self.edges))

    @property
    def is_curved(self):
        return any(e.is_curved for e in self.edges)


@dataclass
class Edge:
    """Global edge, oriented from the lower to the higher vertex id."""

    v0: int
    v1: int
    curve_id: object = None
    t0: float = 0.0
    t1: float = 1.0
    elements: list = field(default_factory=list)

    @property
    def is_boundary(self):
        return len(self.elements) == 1


class CurvedMesh:
    """Polygonal mesh whose edges are straight or sub-arcs of registered curves.

    ``edge_curves`` maps (element, local_edge) to (curve_id, t0, t1) with t0
    the parameter of the local edge's first vertex in CCW order. Local edge
    i joins vertex i to vertex i+1 of the element loop.
    """

    def __init__(self, nodes, elements, curves=None, edge_curves=None):
        self.nodes = np.asarray(nodes, dtype=float).reshape(-1, 2)
        self.elements = [list(map(int, el)) for el in elements]
        self.curves = {}
        for c in (curves.values() if isinstance(curves, dict) else (curves or [])):
            self.curves[c.id] = c
        self.edge_curves = {}
        for key, val in (edge_curves or {}).items():
            e, i = int(key[0]), int(key[1])
            self.edge_curves[(e, i)] = (val[0], float(val[1]), float(val[2]))
        self._build_topology()
        self._geometry = {}

    def _build_topology(self):
        index = {}
        self.edges = []
        self.element_edges = []
        self.element_edge_signs = []
        for e, loop in enumerate(self.elements):
            if len(loop) < 3 or len(set(loop)) != len(loop):
                raise MeshError(f"element {e} has an invalid vertex loop {loop}")
            ids, signs = [], []
            for i, a in enumerate(loop):
                b = loop[(i + 1) % len(loop)]
                key = (min(a, b), max(a, b))
                ec = self.edge_curves.get((e, i))
                if key not in index:
                    index[key] = len(self.edges)
                    if ec is None:
                        edge = Edge(key[0], key[1])
                    elif a < b:
                        edge = Edge(key[0], key[1], ec[0], ec[1], ec[2])
                    else:
                        edge = Edge(key[0], key[1], ec[0], ec[2], ec[1])
                    self.edges.append(edge)
                edge = self.edges[index[key]]
                if edge.elements:
                    other = edge.elements[0]
                    if len(edge.elements) > 1:
                        raise MeshError(f"edge {key} shared by more than two elements")
                    if self.element_edge_signs[other][self.element_edges[other].index(index[key])] == (1 if a < b else -1):
                        raise MeshError(f"edge {key} traversed in the same direction by elements {other} and {e}")
                    mine = None if ec is None else (ec[0], *((ec[1], ec[2]) if a < b else (ec[2], ec[1])))
                    theirs = None if edge.curve_id is None else (edge.curve_id, edge.t0, edge.t1)
                    if mine != theirs:
                        raise MeshError(f"edge {key} has inconsistent curve data on its two sides")
                edge.elements.append(e)
                ids.append(index[key])
                signs.append(1 if a < b else -1)
            self.element_edges.append(ids)
            self.element_edge_signs.append(signs)
        # canonical edge numbering: sorted by (v0, v1), independent of loop starts
        order = sorted(range(len(self.edges)), key=lambda j: (self.edges[j].v0, self.edges[j].v1))
        new_id = np.empty(len(order), dtype=np.int64)
        new_id[order] = np.arange(len(order))
        self.edges = [self.edges[j] for j in order]
        self.element_edges = [[int(new_id[j]) for j in ids] for ids in self.element_edges]
        for (e, i), (cid, _, _) in self.edge_curves.items():
            if cid not in self.curves:
                raise MeshError(f"edge ({e}, {i}) references unknown curve {cid!r}")
        self.boundary_vertices = np.zeros(len(self.nodes), dtype=bool)
        for edge in self.edges:
            if edge.is_boundary:
                self.boundary_vertices[[edge.v0, edge.v1]] = True

    @property
    def n_elements(self):
        return len(self.elements)

    @property
    def n_nodes(self):
        return len(self.nodes)

    def local_edge(self, e, i):
        loop = self.elements[e]
        a, b = loop[i], loop[(i + 1) % len(loop)]
        ec = self.edge_curves.get((e, i))
        if ec is None:
            return EdgeGeometry(self.nodes[a], self.nodes[b])
        return EdgeGeometry(self.nodes[a], self.nodes[b], self.curves[ec[0]], ec[1], ec[2])

    def geometry(self, e):
        g = self._geometry.get(e)
        if g is None:
            loop = self.elements[e]
            g = ElementGeometry(self.nodes[loop], [self.local_edge(e, i) for i in range(len(loop))])
            try:
                g.area
            except OrientationError as exc:
                raise OrientationError(f"element {e}: {exc}") from None
            self._geometry[e] = g
        return g

    def diameters(self):
        return np.array([self.geometry(e).diameter for e in range(self.n_elements)])

    def vertex_h(self):
        """h_v: mean diameter of the elements sharing each vertex."""
        hE = self.diameters()
        tot = np.zeros(self.n_nodes)
        cnt = np.zeros(self.n_nodes)
        for e, loop in enumerate(self.elements):
            tot[loop] += hE[e]
            cnt[loop] += 1
        with np.errstate(invalid="ignore", divide="ignore"):
            return tot / cnt

    def total_area(self):
        return float(sum(self.geometry(e).area for e in range(self.n_elements)))

    def boundary_area(self):
        """Area of the meshed region from a single integral over its boundary."""
        from .quadrature import gauss_legendre
        rule = gauss_legendre(24)
        total = 0.0
        for edge in self.edges:
            if not edge.is_boundary:
                continue
            e = edge.elements[0]
            g = self.local_edge(e, self._local_index(e, edge))
            p = g.point(rule.nodes)
            d = g.d1(rule.nodes)
            total += float(rule.weights @ (p[:, 0] * d[:, 1] - p[:, 1] * d[:, 0])) * 0.5
        return total

    def _local_index(self, e, edge):
        loop = self.elements[e]
        for i, a in enumerate(loop):
            b = loop[(i + 1) % len(loop)]
            if {a, b} == {edge.v0, edge.v1}:
                return i
        raise MeshError("edge not found in element")

    # ------------------------------------------------------------------ I/O

    def to_dict(self):
        return {
            "nodes": self.nodes.tolist(),
            "curves": [c.to_dict() for c in self.curves.values()],
            "elements": [list(el) for el in self.elements],
            "edge_curves": [{"element": e, "local_edge": i, "curve_id": cid, "t0": t0, "t1": t1}
                            for (e, i), (cid, t0, t1) in sorted(self.edge_curves.items())],
        }

    @classmethod
    def from_dict(cls, data):
        curves = [curve_from_dict(c) for c in data.get("curves", [])]
        ec = {(d["element"], d["local_edge"]): (d["curve_id"], d["t0"], d["t1"])
              for d in data.get("edge_curves", [])}
        return cls(data["nodes"], data["elements"], curves, ec)


def save_mesh(mesh, path):
    # json writes floats with repr(): 17 significant digits, round-trip exact
    with open(path, "w") as fh:
        json.dump(mesh.to_dict(), fh)


def load_mesh(path):
    with open(path) as fh:
        return CurvedMesh.from_dict(json.load(fh))


def element_geometry(element, mesh):
    """(h_E, x_E, |E|, |∂E|) of element index ``element``."""
    g = mesh.geometry(element)
    return g.diameter, g.centroid, g.area, g.boundary_length


@dataclass
class RegularityReport:
    edge_ratio: np.ndarray      # per element min h_e / h_E
    ball_ratio: np.ndarray      # per element inscribed-ball diameter proxy / h_E
    edge_violations: list       # (element, local edge, ratio)
    ball_violations: list       # (element, ratio)
    orientation_errors: list
    curve_errors: list

    @property
    def rho_edges(self):
        return float(self.edge_ratio.min())

    @property
    def rho_ball(self):
        return float(self.ball_ratio.min())

    @property
    def ok(self):
        return not (self.edge_violations or self.ball_violations
                    or self.orientation_errors or self.curve_errors)


def _point_segment_distance(p, a, b):
    ab = b - a
    t = np.clip(np.dot(p - a, ab) / np.dot(ab, ab), 0.0, 1.0)
    return float(np.linalg.norm(p - (a + t * ab)))


def validate_mesh(mesh, rho):
    """Check (A1)/(A2)-type regularity with constant ``rho``.

    The star-shapedness measure is a proxy: the diameter of the largest
    ball around the barycenter inside the (sampled, for arcs) boundary,
    relative to h_E.
    """
    if not 0.0 < rho < 1.0:
        raise ValueError("rho must lie in (0, 1)")
    for i, edge in enumerate(mesh.edges):
        if len(edge.elements) not in (1, 2):
            raise MeshError(f"edge {i} has {len(edge.elements)} incident elements")
    s = np.linspace(-1.0, 1.0, 65)
    edge_ratio = np.empty(mesh.n_elements)
    ball_ratio = np.empty(mesh.n_elements)
    edge_viol, ball_viol, orient, curve_err = [], [], [], []
    for e in range(mesh.n_elements):
        try:
            g = mesh.geometry(e)
            hE, xE = g.diameter, g.centroid
        except OrientationError:
            orient.append(e)
            edge_ratio[e] = ball_ratio[e] = 0.0
            continue
        ratios = []
        dist = np.inf
        for i, edge in enumerate(g.edges):
            r = edge.chord / hE
            ratios.append(r)
            if r < rho:
                edge_viol.append((e, i, r))
            if edge.is_curved:
                dist = min(dist, float(np.min(np.linalg.norm(edge.point(s) - xE, axis=1))))
                ends = edge.point(np.array([-1.0, 1.0]))
                if np.max(np.abs(ends - np.array([edge.start, edge.end]))) > 1e-10 * max(1.0, hE):
                    curve_err.append((e, i))
            else:
                dist = min(dist, _point_segment_distance(xE, edge.start, edge.end))
        edge_ratio[e] = min(ratios)
        ball_ratio[e] = min(1.0, 2.0 * dist / hE)
        if ball_ratio[e] < rho:
            ball_viol.append((e, ball_ratio[e]))
    return RegularityReport(edge_ratio, ball_ratio, edge_viol, ball_viol, orient, curve_err)
