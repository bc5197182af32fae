"""Local C1 virtual element: DoFs, edge traces, projectors, stabilization, load.

Local DoF ordering (``DofLayout``):

* per vertex i (CCW from the first vertex): v(V_i), h_v dv/dx(V_i), h_v dv/dy(V_i)
* per edge i (from V_i to V_i+1): k_e trace values at mapped Gauss-Lobatto nodes
* per edge i: k_n values of h_e dv/dn at mapped Gauss-Lobatto nodes
* (k-3)(k-2)/2 moments h_E^-2 ∫ v m_j, m_j in the degree k-4 monomial basis

Edge functions are handled in the reference variable s in [-1, 1] of each
``EdgeGeometry``; on a curved edge a trace v∘x(s) is a polynomial in s.
"""
from dataclasses import dataclass, field

import numpy as np

from .exceptions import ElementDegeneracyError, GeometryError
from .polynomials import MonomialBasis, interval_vandermonde, mono_count
from .quadrature import fan_rule, gauss_legendre, gauss_lobatto, integrate_monomials, points_for_order


LOAD_MODES = ("ritz", "average")
DEFAULT_LOAD = "ritz"


def edge_quadrature_order(k):
    return 2 * k + 6


@dataclass
class DofLayout:
    k: int
    n_vertices: int
    h_E: float
    h_v: np.ndarray
    value_nodes: np.ndarray = field(repr=False)
    normal_nodes: np.ndarray = field(repr=False)

    @property
    def r(self):
        return max(self.k, 3)

    @property
    def ke(self):
        return max(0, self.k - 3)

    @property
    def kn(self):
        return self.k - 2

    @property
    def n_moments(self):
        return mono_count(self.k - 4)

    @property
    def size(self):
        return (3 + self.ke + self.kn) * self.n_vertices + self.n_moments

    def vertex(self, i):
        return 3 * (i % self.n_vertices) + np.arange(3)

    def edge_values(self, i):
        return 3 * self.n_vertices + self.ke * i + np.arange(self.ke)

    def edge_normals(self, i):
        return (3 + self.ke) * self.n_vertices + self.kn * i + np.arange(self.kn)

    @property
    def moments(self):
        return (3 + self.ke + self.kn) * self.n_vertices + np.arange(self.n_moments)

    def descriptors(self):
        """Readable (kind, entity, index) triple for every local DoF."""
        out = []
        for i in range(self.n_vertices):
            out += [("value", i, 0), ("grad_x", i, 0), ("grad_y", i, 0)]
        for i in range(self.n_vertices):
            out += [("edge_value", i, j) for j in range(self.ke)]
        for i in range(self.n_vertices):
            out += [("edge_normal", i, j) for j in range(self.kn)]
        out += [("moment", 0, j) for j in range(self.n_moments)]
        return out


def edge_value_nodes(k):
    """Reference nodes of the k_e = max(0, k-3) edge value DoFs.

    These are the interior nodes of the (k-1)-point Gauss-Lobatto rule,
    which has exactly k-3 of them.
    """
    if k < 4:
        return np.zeros(0)
    return np.asarray(gauss_lobatto(k - 1).nodes[1:-1])


def edge_normal_nodes(k):
    """Interior nodes of the k-point Gauss-Lobatto rule (k_n = k-2 of them)."""
    return np.asarray(gauss_lobatto(k).nodes[1:-1])


def build_dof_layout(element, k, h_v=None):
    if k < 2:
        raise ValueError("method order k must be >= 2")
    n = element.n_vertices
    hv = np.full(n, element.diameter) if h_v is None else np.asarray(h_v, dtype=float)
    return DofLayout(int(k), n, element.diameter, hv, edge_value_nodes(k), edge_normal_nodes(k))


# ----------------------------------------------------------------- traces


def edge_trace_maps(element, layout, i):
    """Linear maps DoFs -> coefficients (in powers of s) of the edge traces.

    Returns (Cv, Cn): Cv has shape (r+1, ndof) for v∘x(s), Cn has shape
    (k, ndof) for the outward normal derivative along the edge.
    """
    edge = element.edges[i]
    r, k, nd = layout.r, layout.k, layout.size
    ia, ib = layout.vertex(i), layout.vertex(i + 1)
    ha, hb = layout.h_v[i % layout.n_vertices], layout.h_v[(i + 1) % layout.n_vertices]
    ends = np.array([-1.0, 1.0])
    xs = edge.d1(ends)
    nrm = edge.normal(ends)

    # value trace: Hermite data at both ends + interior point values
    sv = layout.value_nodes
    A = np.vstack([interval_vandermonde(-1.0, r), interval_vandermonde(-1.0, r, 1),
                   interval_vandermonde(1.0, r), interval_vandermonde(1.0, r, 1),
                   interval_vandermonde(sv, r)])
    R = np.zeros((4 + len(sv), nd))
    R[0, ia[0]] = 1.0
    R[1, ia[1:]] = xs[0] / ha
    R[2, ib[0]] = 1.0
    R[3, ib[1:]] = xs[1] / hb
    R[4 + np.arange(len(sv)), layout.edge_values(i)] = 1.0
    Cv = np.linalg.solve(A, R)

    sn = layout.normal_nodes
    An = np.vstack([interval_vandermonde(-1.0, k - 1), interval_vandermonde(1.0, k - 1),
                    interval_vandermonde(sn, k - 1)])
    Rn = np.zeros((2 + len(sn), nd))
    Rn[0, ia[1:]] = nrm[0] / ha
    Rn[1, ib[1:]] = nrm[1] / hb
    Rn[2 + np.arange(len(sn)), layout.edge_normals(i)] = 1.0 / edge.chord
    Cn = np.linalg.solve(An, Rn)
    return Cv, Cn


@dataclass
class EdgeTrace:
    """Traces of a virtual function on one edge as polynomials of s in [-1, 1]."""

    value_coeffs: np.ndarray
    normal_coeffs: np.ndarray
    t_start: float
    t_end: float

    def _s(self, t):
        return 2.0 * (np.asarray(t, dtype=float) - self.t_start) / (self.t_end - self.t_start) - 1.0

    def value(self, t):
        """v(gamma(t)) in the edge's curve parameter t."""
        return np.polynomial.polynomial.polyval(self._s(t), self.value_coeffs)

    def normal(self, t):
        """Outward normal derivative at gamma(t)."""
        return np.polynomial.polynomial.polyval(self._s(t), self.normal_coeffs)


def reconstruct_edge_traces(element, edge_index, dof_vector, layout):
    Cv, Cn = edge_trace_maps(element, layout, edge_index)
    e = element.edges[edge_index]
    d = np.asarray(dof_vector, dtype=float)
    return EdgeTrace(Cv @ d, Cn @ d, e.t_start, e.t_end)


# ------------------------------------------------------- local operators


@dataclass
class _EdgeData:
    w: np.ndarray        # quadrature weight * speed
    x: np.ndarray        # points
    xs: np.ndarray       # dx/ds
    xss: np.ndarray      # d2x/ds2
    sig: np.ndarray      # |dx/ds|
    dsig: np.ndarray     # d|dx/ds|/ds
    tan: np.ndarray
    nrm: np.ndarray
    dnrm: np.ndarray     # d n / ds
    Q: np.ndarray        # trace values        (nq, ndof)
    Qs: np.ndarray       # d/ds trace
    Qss: np.ndarray      # d2/ds2 trace
    Pn: np.ndarray       # normal derivative    (nq, ndof)
    Pns: np.ndarray      # d/ds normal derivative


def _edge_data(element, layout, i, order):
    edge = element.edges[i]
    rule = gauss_legendre(points_for_order(order + (8 if edge.is_curved else 0)))
    s = np.asarray(rule.nodes)
    x, xs, xss = edge.point(s), edge.d1(s), edge.d2(s)
    sig = np.linalg.norm(xs, axis=1)
    dsig = np.sum(xs * xss, axis=1) / sig
    tan = xs / sig[:, None]
    nrm = np.column_stack([tan[:, 1], -tan[:, 0]])
    dtan = xss / sig[:, None] - xs * (dsig / sig ** 2)[:, None]
    dnrm = np.column_stack([dtan[:, 1], -dtan[:, 0]])
    Cv, Cn = edge_trace_maps(element, layout, i)
    r, k = layout.r, layout.k
    return _EdgeData(rule.weights * sig, x, xs, xss, sig, dsig, tan, nrm, dnrm,
                     interval_vandermonde(s, r) @ Cv,
                     interval_vandermonde(s, r, 1) @ Cv,
                     interval_vandermonde(s, r, 2) @ Cv,
                     interval_vandermonde(s, k - 1) @ Cn,
                     interval_vandermonde(s, k - 1, 1) @ Cn)


@dataclass
class LocalOperators:
    """Per-element matrices in local DoF coordinates.

    P maps DoFs to P_k coefficients of the Ritz projection; G is the
    H2-seminorm Gram matrix of the monomials; A_c = PᵀGP; S is the
    stabilizing form applied to (I - Π); A_h = A_c + S; F the load vector.
    """

    layout: DofLayout
    basis: MonomialBasis
    P: np.ndarray
    G: np.ndarray
    A_c: np.ndarray
    S: np.ndarray
    A_h: np.ndarray
    F: np.ndarray
    B: np.ndarray            # Galerkin right-hand sides a_E(v, m_i) per DoF
    mass: np.ndarray         # ∫ m_i m_j over P_k
    feat_v: np.ndarray       # stabilization functionals of virtual functions
    feat_p: np.ndarray       # the same functionals on monomials
    feat_w: np.ndarray       # their weights
    constraint_rows: np.ndarray  # rows replacing the P_1 kernel (DoF side)
    constraint_poly: np.ndarray  # same rows, polynomial side

    @property
    def S_raw(self):
        """Stabilizing form on plain DoF vectors (no projection removed)."""
        return self.feat_v.T @ (self.feat_w[:, None] * self.feat_v)

    def ritz_rhs(self, dofs, q):
        """a_E(v, q) for the virtual function with DoFs ``dofs``, q in P_k coefficients."""
        return float(np.asarray(q) @ (self.B @ np.asarray(dofs)))

    def project(self, dofs):
        return self.P @ np.asarray(dofs)


def _load_projection_degree(k):
    if k <= 3:
        return k - 2
    if k == 4:
        return 1
    return k - 4


def local_operators(element, k, h_v=None, f=None, layout=None, check=True, load=DEFAULT_LOAD):
    """Build all local VEM matrices of ``element`` at order ``k``.

    ``f`` is the load as a vectorized callable f(x, y) (None: zero load);
    ``load`` selects the load pairing, see :func:`local_load`.
    """
    if layout is None:
        layout = build_dof_layout(element, k, h_v)
    nd = layout.size
    hE = element.diameter
    xE = element.centroid
    basis = MonomialBasis(k, xE, hE)
    npk = basis.size
    mom = integrate_monomials(element, 2 * k)
    M = basis.mass_matrix(mom)
    G = (basis.dxx.T @ M @ basis.dxx + 2.0 * basis.dxy.T @ M @ basis.dxy
         + basis.dyy.T @ M @ basis.dyy)

    order = edge_quadrature_order(k)
    B = np.zeros((npk, nd))
    cons_v = np.zeros((3, nd))
    cons_p = np.zeros((3, npk))
    perim = 0.0
    feats_v, feats_p, feats_w = [], [], []
    for i in range(layout.n_vertices):
        ed = _edge_data(element, layout, i, order)
        V = basis.values(ed.x)
        mx, my = V @ basis.dx, V @ basis.dy
        mxx, mxy, myy = V @ basis.dxx, V @ basis.dxy, V @ basis.dyy
        lx, ly = V @ (basis.dx @ basis.lap), V @ (basis.dy @ basis.lap)
        nx, ny = ed.nrm[:, 0], ed.nrm[:, 1]
        tx, ty = ed.tan[:, 0], ed.tan[:, 1]
        dts = ed.Qs / ed.sig[:, None]           # tangential derivative of v
        Gx = ed.Pn * nx[:, None] + dts * tx[:, None]
        Gy = ed.Pn * ny[:, None] + dts * ty[:, None]
        w = ed.w[:, None]
        # a_E(v, m) boundary part: ∮ (D²m n)·∇v - v ∂n(Δm)
        B += ((mxx * nx[:, None] + mxy * ny[:, None]) * w).T @ Gx
        B += ((mxy * nx[:, None] + myy * ny[:, None]) * w).T @ Gy
        B -= ((lx * nx[:, None] + ly * ny[:, None]) * w).T @ ed.Q
        cons_v[0] += ed.w @ ed.Q
        cons_v[1] += ed.w @ Gx
        cons_v[2] += ed.w @ Gy
        cons_p[0] += ed.w @ V
        cons_p[1] += ed.w @ mx
        cons_p[2] += ed.w @ my
        perim += ed.w.sum()

        # edge stabilization functionals: ∂t(∂n ·) and ∂tt(·) along the edge
        sig, dsig = ed.sig[:, None], ed.dsig[:, None]
        feats_v.append(ed.Pns / sig)
        feats_v.append(ed.Qss / sig ** 2 - ed.Qs * dsig / sig ** 3)
        xs, xss, dn = ed.xs, ed.xss, ed.dnrm
        hess_xs_n = (mxx * (xs[:, 0] * nx)[:, None] + mxy * (xs[:, 0] * ny + xs[:, 1] * nx)[:, None]
                     + myy * (xs[:, 1] * ny)[:, None])
        feats_p.append((hess_xs_n + mx * dn[:, 0:1] + my * dn[:, 1:2]) / sig)
        hess_xs_xs = (mxx * (xs[:, 0] ** 2)[:, None] + 2.0 * mxy * (xs[:, 0] * xs[:, 1])[:, None]
                      + myy * (xs[:, 1] ** 2)[:, None])
        grad_xs = mx * xs[:, 0:1] + my * xs[:, 1:2]
        grad_xss = mx * xss[:, 0:1] + my * xss[:, 1:2]
        feats_p.append((hess_xs_xs + grad_xss) / sig ** 2 - grad_xs * dsig / sig ** 3)
        feats_w += [hE * ed.w, hE * ed.w]

    # ∫_E v Δ²m from the internal moments: ∫ v m_j = h_E² D°_j
    nm = layout.n_moments
    if nm:
        B[:, layout.moments] += hE ** 2 * basis.bilap[:nm, :].T

    # replace the rows of 1, x̄, ȳ (kernel of the Gram matrix) by the
    # boundary-average constraints, scaled to the size of G
    scale = np.array([hE ** -2, hE ** -1, hE ** -1]) / perim
    Gt = G.copy()
    Bt = B.copy()
    Gt[:3] = cons_p * scale[:, None]
    Bt[:3] = cons_v * scale[:, None]
    try:
        P = np.linalg.solve(Gt, Bt)
    except np.linalg.LinAlgError as exc:
        raise ElementDegeneracyError(f"singular projector system: {exc}") from exc
    if check and np.linalg.cond(Gt) > 1e14:
        raise ElementDegeneracyError(f"projector system ill-conditioned (cond={np.linalg.cond(Gt):.2e})")

    # vertex functionals: values and h_v-scaled gradients, weight h_v^-2
    Vv = basis.values(element.vertices)
    hv = layout.h_v
    fp_vert = np.empty((3 * layout.n_vertices, npk))
    fp_vert[0::3] = Vv
    fp_vert[1::3] = hv[:, None] * (Vv @ basis.dx)
    fp_vert[2::3] = hv[:, None] * (Vv @ basis.dy)
    fv_vert = np.zeros((3 * layout.n_vertices, nd))
    fv_vert[np.arange(3 * layout.n_vertices), np.arange(3 * layout.n_vertices)] = 1.0
    w_vert = np.repeat(hv ** -2.0, 3)

    fv_mom = np.zeros((nm, nd))
    fv_mom[np.arange(nm), layout.moments] = 1.0
    fp_mom = M[:nm, :] / hE ** 2
    w_mom = np.full(nm, hE ** -2.0)

    feat_v = np.vstack([fv_mom, fv_vert] + feats_v)
    feat_p = np.vstack([fp_mom, fp_vert] + feats_p)
    feat_w = np.concatenate([w_mom, w_vert] + feats_w)

    D = feat_v - feat_p @ P
    S = D.T @ (feat_w[:, None] * D)
    A_c = P.T @ G @ P
    A_h = A_c + S
    A_h = 0.5 * (A_h + A_h.T)
    if check:
        ev = np.linalg.eigvalsh(A_h)
        if ev[0] < -1e-10 * ev[-1]:
            raise ElementDegeneracyError(f"local stiffness not PSD (min eigenvalue {ev[0]:.3e})")

    F = np.zeros(nd) if f is None else local_load(element, layout, basis, M, f, load, P)
    return LocalOperators(layout, basis, P, G, A_c, S, A_h, F, B, M,
                          feat_v, feat_p, feat_w, cons_v * scale[:, None], cons_p * scale[:, None])


def project_function_l2(element, f, m, order=None, basis=None):
    """Coefficients of the L2 projection of f onto P_m(E) (scaled monomials).

    The default quadrature exactness 2m + 16 resolves smooth non-polynomial
    data on unit-size elements to round-off.
    """
    if m < 0:
        return np.zeros(0)
    if basis is None or basis.degree != m:
        basis = MonomialBasis(m, element.centroid, element.diameter)
    if order is None:
        order = 2 * m + 16
    M = basis.mass_matrix(integrate_monomials(element, 2 * m))
    rule = fan_rule(element, order)
    fv = np.broadcast_to(np.asarray(f(rule.points[:, 0], rule.points[:, 1]), dtype=float), rule.weights.shape)
    rhs = basis.values(rule.points).T @ (rule.weights * fv)
    try:
        return np.linalg.solve(M, rhs)
    except np.linalg.LinAlgError as exc:
        raise GeometryError(f"singular mass matrix on element: {exc}") from exc


def local_load(element, layout, basis, M, f, mode="average", P=None):
    """Load vector from the degree-dependent projection of f.

    mode "average": f_h paired with the vertex-average reconstruction
    ŵ + (k-2)(x - x_E)·∇̂ (k = 2, 3) or Π⁰v + (x - x_E)·∇̂ (k = 4).
    mode "ritz": for k <= 4, Π^{k-2} f paired with the Ritz projection
    Π v (needs ``P``), which keeps the load error below the L2/H1
    discretization error. Both use the internal moments for k > 4.
    """
    k = layout.k
    if mode not in LOAD_MODES:
        raise ValueError(f"unknown load mode {mode!r}")
    hE = basis.h
    F = np.zeros(layout.size)
    if mode == "ritz" and k <= 4:
        if P is None:
            raise ValueError("ritz load needs the projector matrix")
        m = k - 2
        fb = MonomialBasis(m, basis.center, basis.h)
        c = project_function_l2(element, f, m, order=edge_quadrature_order(k), basis=fb)
        return P.T @ (M[:, :mono_count(m)] @ c)
    m = _load_projection_degree(k)
    nm = mono_count(m)
    fb = MonomialBasis(m, basis.center, basis.h)
    c = project_function_l2(element, f, m, order=edge_quadrature_order(k), basis=fb)
    N = layout.n_vertices
    # ∫ f_h, ∫ f_h x̄, ∫ f_h ȳ
    ints = M[:nm, :3].T @ c
    if k <= 4:
        grad_avg = np.zeros((2, layout.size))
        for i in range(N):
            iv = layout.vertex(i)
            grad_avg[0, iv[1]] = 1.0 / (N * layout.h_v[i])
            grad_avg[1, iv[2]] = 1.0 / (N * layout.h_v[i])
        if k <= 3:
            for i in range(N):
                F[layout.vertex(i)[0]] += ints[0] / N
            lin = k - 2
        else:
            F[layout.moments[0]] += ints[0] * hE ** 2 / element.area
            lin = 1
        # (x - x_E) = h_E (x̄, ȳ)
        F += lin * hE * (ints[1] * grad_avg[0] + ints[2] * grad_avg[1])
    else:
        F[layout.moments] = hE ** 2 * c
    return F


def local_load_vector(element, k, f, h_v=None, mode="average"):
    """Standalone load vector; the ritz mode builds the projector first."""
    if mode == "ritz":
        return local_operators(element, k, h_v, f, load="ritz").F
    layout = build_dof_layout(element, k, h_v)
    basis = MonomialBasis(k, element.centroid, element.diameter)
    M = basis.mass_matrix(integrate_monomials(element, 2 * k))
    return local_load(element, layout, basis, M, f, mode)


def internal_moment_matrix(element, k, h_v=None):
    """Map from local DoFs to ∫_E v m_j, m_j in the degree k-4 basis."""
    layout = build_dof_layout(element, k, h_v)
    T = np.zeros((layout.n_moments, layout.size))
    T[np.arange(layout.n_moments), layout.moments] = element.diameter ** 2
    return T


def interpolate_local(element, layout, u, grad_u, order=None):
    """Local DoFs of a smooth function (u, grad_u vectorized callables)."""
    d = np.zeros(layout.size)
    V = element.vertices
    g = np.asarray(grad_u(V[:, 0], V[:, 1]), dtype=float).reshape(2, -1)
    d[0:3 * layout.n_vertices:3] = u(V[:, 0], V[:, 1])
    d[1:3 * layout.n_vertices:3] = layout.h_v * g[0]
    d[2:3 * layout.n_vertices:3] = layout.h_v * g[1]
    for i, edge in enumerate(element.edges):
        if layout.ke:
            p = edge.point(layout.value_nodes)
            d[layout.edge_values(i)] = u(p[:, 0], p[:, 1])
        if layout.kn:
            p = edge.point(layout.normal_nodes)
            n = edge.normal(layout.normal_nodes)
            gp = np.asarray(grad_u(p[:, 0], p[:, 1]), dtype=float).reshape(2, -1)
            d[layout.edge_normals(i)] = edge.chord * (gp[0] * n[:, 0] + gp[1] * n[:, 1])
    if layout.n_moments:
        basis = MonomialBasis(layout.k - 4, element.centroid, element.diameter)
        rule = fan_rule(element, order or edge_quadrature_order(layout.k) + 4)
        uv = u(rule.points[:, 0], rule.points[:, 1])
        d[layout.moments] = basis.values(rule.points).T @ (rule.weights * uv) / element.diameter ** 2
    return d


def kernel_dimension(A, rel_tol=1e-9):
    ev = np.linalg.eigvalsh(A)
    return int(np.sum(np.abs(ev) <= rel_tol * np.max(np.abs(ev))))
