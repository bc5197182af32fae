"""Global DoF numbering, sparse assembly with clamped boundary elimination, and the solve."""
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from .element import (DEFAULT_LOAD, build_dof_layout, edge_normal_nodes, edge_value_nodes,
                      interpolate_local, local_operators)
from .exceptions import AssemblyError, MeshError


@dataclass
class GlobalDofMap:
    """Local-to-global DoF maps with normal-sign factors.

    Global numbering: 3 DoFs per node, then per global edge its k_e value
    and k_n normal DoFs (points enumerated from the lower to the higher
    vertex id, normal = that direction rotated by -90 degrees), then the
    internal moments element by element.
    """

    k: int
    n_dofs: int
    local_to_global: list
    signs: list
    boundary: np.ndarray
    h_v: np.ndarray
    owners: dict = field(default_factory=dict, repr=False)

    @property
    def free(self):
        return np.flatnonzero(~self.boundary)

    @property
    def n_free(self):
        return int(np.count_nonzero(~self.boundary))

    def gather(self, e, U):
        """Local DoF vector of element ``e`` from a global vector."""
        return self.signs[e] * U[self.local_to_global[e]]

    def elements_of(self, dof):
        return sorted(self.owners.get(int(dof), ()))


def build_global_map(mesh, k):
    ke, kn = max(0, k - 3), k - 2
    nmom = (k - 3) * (k - 2) // 2 if k >= 4 else 0
    n_nodes = mesh.n_nodes
    edge_base = 3 * n_nodes
    mom_base = edge_base + (ke + kn) * len(mesh.edges)
    n_dofs = mom_base + nmom * mesh.n_elements
    hv = mesh.vertex_h()
    boundary = np.zeros(n_dofs, dtype=bool)
    for v in np.flatnonzero(mesh.boundary_vertices):
        boundary[3 * v:3 * v + 3] = True
    for j, edge in enumerate(mesh.edges):
        if edge.is_boundary:
            boundary[edge_base + (ke + kn) * j: edge_base + (ke + kn) * (j + 1)] = True

    l2g, signs = [], []
    owners = {}
    for e, loop in enumerate(mesh.elements):
        n = len(loop)
        g = np.empty((3 + ke + kn) * n + nmom, dtype=np.int64)
        sg = np.ones(len(g))
        for i, v in enumerate(loop):
            g[3 * i:3 * i + 3] = 3 * v + np.arange(3)
        for i in range(n):
            j = mesh.element_edges[e][i]
            forward = mesh.element_edge_signs[e][i] > 0
            base = edge_base + (ke + kn) * j
            vals = base + np.arange(ke)
            nrms = base + ke + np.arange(kn)
            if not forward:
                vals, nrms = vals[::-1], nrms[::-1]
            g[3 * n + ke * i: 3 * n + ke * (i + 1)] = vals
            lo = (3 + ke) * n + kn * i
            g[lo:lo + kn] = nrms
            sg[lo:lo + kn] = 1.0 if forward else -1.0
        g[(3 + ke + kn) * n:] = mom_base + nmom * e + np.arange(nmom)
        l2g.append(g)
        signs.append(sg)
        for d in g:
            owners.setdefault(int(d), set()).add(e)
    _check_shared_points(mesh, k)
    return GlobalDofMap(k, n_dofs, l2g, signs, boundary, hv, owners)


def _check_shared_points(mesh, k):
    """Both sides of every interior edge must place the edge DoF points identically."""
    layout_nodes = edge_value_nodes(k), edge_normal_nodes(k)
    for edge in mesh.edges:
        if len(edge.elements) != 2:
            continue
        pts = []
        for e in edge.elements:
            loc = mesh._local_index(e, edge)
            ge = mesh.local_edge(e, loc)
            forward = mesh.elements[e][loc] == edge.v0
            p = [ge.point(s) for s in layout_nodes]
            pts.append([q if forward else q[::-1] for q in p])
        for a, b in zip(*pts):
            if len(a) and np.max(np.abs(a - b)) > 1e-12:
                raise MeshError(f"edge ({edge.v0}, {edge.v1}): DoF points differ across the edge")


@dataclass
class SparseSystem:
    """Reduced SPD system on the free DoFs plus what is needed to expand it."""

    A: sp.csr_matrix
    F: np.ndarray
    dofmap: GlobalDofMap
    A_full: sp.csr_matrix
    F_full: np.ndarray
    boundary_values: np.ndarray
    local_ops: list = field(repr=False, default_factory=list)
    U: np.ndarray = None
    residual: float = None

    def expand(self, U_free):
        U = self.boundary_values.copy()
        U[self.dofmap.free] = U_free
        return U


def interpolate(mesh, dofmap, u, grad_u):
    """Global DoF vector of a smooth function."""
    U = np.zeros(dofmap.n_dofs)
    for e in range(mesh.n_elements):
        g = mesh.geometry(e)
        layout = build_dof_layout(g, dofmap.k, dofmap.h_v[mesh.elements[e]])
        d = interpolate_local(g, layout, u, grad_u)
        U[dofmap.local_to_global[e]] = dofmap.signs[e] * d
    return U


def build_local_operators(mesh, k, f=None, dofmap=None, load=DEFAULT_LOAD):
    if dofmap is None:
        dofmap = build_global_map(mesh, k)
    out = []
    for e in range(mesh.n_elements):
        try:
            out.append(local_operators(mesh.geometry(e), k, dofmap.h_v[mesh.elements[e]], f, load=load))
        except Exception as exc:
            raise AssemblyError(f"element {e}: {exc}") from exc
    return out


def assemble(mesh, k, f=None, boundary=None, dofmap=None, local_ops=None, load=DEFAULT_LOAD):
    """Assemble the clamped-plate system.

    ``boundary`` optionally gives (u, grad_u) whose DoFs are prescribed on
    the boundary; by default all boundary DoFs are zero.
    """
    if dofmap is None:
        dofmap = build_global_map(mesh, k)
    if local_ops is None:
        local_ops = build_local_operators(mesh, k, f, dofmap, load)
    rows, cols, vals = [], [], []
    F = np.zeros(dofmap.n_dofs)
    for e, ops in enumerate(local_ops):
        g = dofmap.local_to_global[e]
        s = dofmap.signs[e]
        A = (s[:, None] * s[None, :]) * ops.A_h
        rows.append(np.repeat(g, len(g)))
        cols.append(np.tile(g, len(g)))
        vals.append(A.ravel())
        np.add.at(F, g, s * ops.F)
    A_full = sp.coo_matrix((np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
                           shape=(dofmap.n_dofs, dofmap.n_dofs)).tocsr()
    A_full.sum_duplicates()
    ub = np.zeros(dofmap.n_dofs)
    if boundary is not None:
        ub_all = interpolate(mesh, dofmap, *boundary)
        ub[dofmap.boundary] = ub_all[dofmap.boundary]
    free = dofmap.free
    A = A_full[free][:, free].tocsr()
    rhs = F[free] - A_full[free] @ ub
    return SparseSystem(A, rhs, dofmap, A_full, F, ub, local_ops)


def _factorize(A):
    lu = splu(sp.csc_matrix(A), permc_spec="MMD_AT_PLUS_A", diag_pivot_thresh=0.0,
              options={"SymmetricMode": True})
    return lu


def positive_pivots(A):
    """True if a symmetric-ordering LU (no row pivoting) has only positive pivots."""
    lu = _factorize(A)
    piv = lu.U.diagonal()
    return bool(np.all(lu.perm_r == lu.perm_c) and np.all(piv > 0)), lu


def solve(system, refine_tol=1e-12):
    """Direct solve of the reduced system; returns (U_free, relative residual).

    The matrix is symmetrically scaled to unit diagonal before factorizing;
    short edges otherwise spread the diagonal over many decades.
    """
    A, F = system.A, system.F
    if A.shape[0] == 0:
        system.U = system.expand(np.zeros(0))
        system.residual = 0.0
        return np.zeros(0), 0.0
    d = A.diagonal()
    if np.any(d <= 0.0):
        j = int(np.argmin(d))
        dof = int(system.dofmap.free[j])
        raise AssemblyError(f"non-positive diagonal entry at global DoF {dof} "
                            f"(elements {system.dofmap.elements_of(dof)})")
    dinv = 1.0 / np.sqrt(d)
    As = sp.diags(dinv) @ A @ sp.diags(dinv)
    try:
        ok, lu = positive_pivots(As)
    except RuntimeError as exc:
        raise AssemblyError(f"factorization failed: {exc}") from exc
    if not ok:
        piv = lu.U.diagonal()
        # pivot i belongs to the original column c with perm_c[c] == i
        j = int(np.argsort(lu.perm_c)[np.argmin(piv)])
        dof = int(system.dofmap.free[j])
        raise AssemblyError(f"non-positive pivot at global DoF {dof} "
                            f"(elements {system.dofmap.elements_of(dof)})")
    Fs = dinv * F
    U = lu.solve(Fs)
    nF = np.linalg.norm(F) or 1.0
    res = np.linalg.norm(F - A @ (dinv * U)) / nF
    for _ in range(3):
        if res <= refine_tol:
            break
        U = U + lu.solve(Fs - As @ U)
        res = np.linalg.norm(F - A @ (dinv * U)) / nF
    U = dinv * U
    system.U = system.expand(U)
    system.residual = float(res)
    return U, float(res)
