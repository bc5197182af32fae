import numpy as np
import pytest
import scipy.sparse as sp
from hypothesis import given, settings, strategies as st

from curvedvem.assembly import GlobalDofMap, SparseSystem, assemble, build_global_map, interpolate, solve
from curvedvem.exceptions import AssemblyError
from curvedvem.mesh import CurvedMesh
from curvedvem.meshgen import sine_channel_mesh, square_mesh
from curvedvem.problems import get_solution, sine_channel_solution

TWO_SQUARES = ([[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [2, 1]], [[0, 1, 4, 3], [1, 2, 5, 4]])


def test_global_counts():
    m = sine_channel_mesh("quad", 2, 2)
    assert build_global_map(m, 2).n_dofs == 27
    dm = build_global_map(m, 3)
    assert dm.n_dofs == 27 + len(m.edges)
    assert dm.n_free == 3 + 4   # centre node + 4 interior edges


def test_single_element_map():
    m = CurvedMesh([[0, 0], [1, 0], [1, 1], [0, 1]], [[0, 1, 2, 3]])
    dm = build_global_map(m, 2)
    assert np.array_equal(dm.local_to_global[0], np.arange(12)) and np.all(dm.signs[0] == 1.0)
    for k in (3, 4, 5):
        dm = build_global_map(m, k)
        lay_n = (3 + max(0, k - 3)) * 4
        assert sorted(dm.local_to_global[0]) == list(range(dm.n_dofs))
        # only the closing edge 3 -> 0 runs against the global orientation
        neg = np.flatnonzero(dm.signs[0] < 0)
        assert list(neg) == list(lay_n + (k - 2) * 3 + np.arange(k - 2))


def test_shared_edge_sign():
    m = CurvedMesh(*TWO_SQUARES)
    dm = build_global_map(m, 3)
    shared = [j for j, e in enumerate(m.edges) if len(e.elements) == 2]
    assert len(shared) == 1
    g = 3 * m.n_nodes + shared[0]
    signs = []
    for e in (0, 1):
        pos = np.flatnonzero(dm.local_to_global[e] == g)
        assert len(pos) == 1
        signs.append(dm.signs[e][pos[0]])
    assert sorted(signs) == [-1.0, 1.0]


@pytest.mark.parametrize("k", [3, 4, 5])
def test_reversed_edges_share_points(k):
    """Both sides of a shared edge see the same physical DoF data."""
    m = CurvedMesh(*TWO_SQUARES)
    dm = build_global_map(m, k)
    u = lambda x, y: np.sin(x + 2 * y)
    grad = lambda x, y: np.array([np.cos(x + 2 * y), 2 * np.cos(x + 2 * y)])
    U = interpolate(m, dm, u, grad)
    from curvedvem.element import build_dof_layout, interpolate_local
    for e in (0, 1):
        g = m.geometry(e)
        d = interpolate_local(g, build_dof_layout(g, k, dm.h_v[m.elements[e]]), u, grad)
        assert np.allclose(dm.gather(e, U), d, atol=1e-14)


def test_sum_of_local_matrices():
    m = CurvedMesh(*TWO_SQUARES)
    k = 3
    s = assemble(m, k)
    dm = s.dofmap
    dense = np.zeros((dm.n_dofs, dm.n_dofs))
    for e, ops in enumerate(s.local_ops):
        g, sg = dm.local_to_global[e], dm.signs[e]
        dense[np.ix_(g, g)] += sg[:, None] * sg[None, :] * ops.A_h
    assert np.allclose(s.A_full.toarray(), dense, atol=1e-14 * np.abs(dense).max())


def test_zero_load_gives_zero():
    s = assemble(sine_channel_mesh("quad", 4, 3), 3)
    U, res = solve(s)
    assert np.all(U == 0) and res == 0


def test_solve_trivial_systems():
    dm = GlobalDofMap(2, 3, [], [], np.zeros(3, dtype=bool), np.ones(3))
    F = np.array([1.0, -2.0, 3.0])
    s = SparseSystem(sp.identity(3, format="csr"), F, dm, None, F, np.zeros(3))
    assert np.allclose(solve(s)[0], F)
    s = SparseSystem(sp.diags([2.0, 2.0, 2.0]).tocsr(), 2 * np.ones(3), dm, None, None, np.zeros(3))
    assert np.allclose(solve(s)[0], 1.0)


def test_indefinite_system_reports_dof():
    dm = GlobalDofMap(2, 3, [], [], np.zeros(3, dtype=bool), np.ones(3), {0: {0}, 1: {0, 1}, 2: {1}})
    A = sp.csr_matrix(np.array([[1.0, 2.0, 0.0], [2.0, 1.0, 0.0], [0.0, 0.0, 1.0]]))
    with pytest.raises(AssemblyError, match="DoF"):
        solve(SparseSystem(A, np.ones(3), dm, None, None, np.zeros(3)))
    A = sp.diags([1.0, -1.0, 1.0]).tocsr()
    with pytest.raises(AssemblyError, match="DoF 1"):
        solve(SparseSystem(A, np.ones(3), dm, None, None, np.zeros(3)))


def test_curved_residual():
    ex = sine_channel_solution()
    s = assemble(sine_channel_mesh("quad", 8, 2), 2, ex.f)
    _, res = solve(s)
    assert res <= 1e-11


@pytest.mark.parametrize("family", ["quad", "voronoi"])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_patch_dofs(family, k):
    ex = get_solution("patch-p2" if k == 2 else "patch-p3")
    m = square_mesh(family, 4, k)
    s = assemble(m, k, ex.f, boundary=(ex.u, ex.grad))
    solve(s)
    Ue = interpolate(m, s.dofmap, ex.u, ex.grad)
    assert np.abs(s.U - Ue).max() <= 1e-8 * np.abs(Ue).max()


def test_assembly_deterministic():
    ex = sine_channel_solution()
    m = sine_channel_mesh("voronoi", 8, 3)
    a, b = assemble(m, 3, ex.f), assemble(m, 3, ex.f)
    assert (a.A != b.A).nnz == 0 and np.array_equal(a.F, b.F)


def test_rotated_loops_same_matrix():
    """Changing the first vertex of every element loop changes local numbering only."""
    m = sine_channel_mesh("quad", 4, 3)
    rot = []
    ec = {}
    for e, loop in enumerate(m.elements):
        r = e % len(loop)
        rot.append(loop[r:] + loop[:r])
        for i in range(len(loop)):
            if (e, (i + r) % len(loop)) in m.edge_curves:
                ec[(e, i)] = m.edge_curves[(e, (i + r) % len(loop))]
    m2 = CurvedMesh(m.nodes, rot, m.curves, ec)
    ex = sine_channel_solution()
    a, b = assemble(m, 3, ex.f), assemble(m2, 3, ex.f)
    assert abs(a.A - b.A).max() <= 1e-11 * abs(a.A).max()
    assert np.allclose(a.F, b.F, atol=1e-13 * np.abs(a.F).max())


@settings(max_examples=6, deadline=None)
@given(family=st.sampled_from(["quad", "voronoi"]), n=st.integers(2, 6), k=st.sampled_from([2, 3]),
       seed=st.integers(0, 100), straight=st.booleans())
def test_reduced_matrix_spd(family, n, k, seed, straight):
    from curvedvem.assembly import positive_pivots
    from curvedvem.meshgen import straighten_boundary
    m = sine_channel_mesh(family, n, k, seed=seed, lloyd=10)
    if straight:
        m = straighten_boundary(m)
    s = assemble(m, k)
    if s.A.shape[0]:
        ok, _ = positive_pivots(s.A)
        assert ok
        if s.A.shape[0] < 400:
            assert np.linalg.eigvalsh(s.A.toarray())[0] > 0
