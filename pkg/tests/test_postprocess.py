import dataclasses

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from curvedvem.assembly import assemble, build_global_map, build_local_operators, interpolate, solve
from curvedvem.exceptions import ConfigError
from curvedvem.meshgen import sine_channel_mesh, square_mesh
from curvedvem.postprocess import ConvergenceReport, compute_errors, eoc
from curvedvem.problems import ExactSolution, get_solution, sine_channel_solution


def test_eoc_examples():
    assert eoc([4, 1], [2, 1]) == pytest.approx([2.0])
    assert eoc([0.3, 0.3, 0.3], [1, 0.5, 0.25]) == pytest.approx([0.0, 0.0])
    assert eoc([1, 1 / 8], [1, 1 / 2]) == pytest.approx([3.0])


@pytest.mark.parametrize("errors,hs", [([1.0], [1.0]), ([1, 2], [1]), ([1, 0], [1, 0.5]),
                                       ([1, 0.5], [1, -0.5]), ([-1, 0.5], [1, 0.5])])
def test_eoc_bad_input(errors, hs):
    with pytest.raises(ValueError):
        eoc(errors, hs)


@settings(max_examples=30, deadline=None)
@given(rate=st.floats(0.5, 6), c=st.floats(1e-3, 1e3), h0=st.floats(0.01, 1))
def test_eoc_recovers_power_law(rate, c, h0):
    hs = [h0, h0 / 2, h0 / 4]
    assert eoc([c * h ** rate for h in hs], hs) == pytest.approx([rate, rate], rel=1e-9)


@pytest.fixture(scope="module")
def patch_setup():
    ex = get_solution("patch-p3")
    m = square_mesh("voronoi", 4, 3)
    dm = build_global_map(m, 3)
    ops = build_local_operators(m, 3, None, dm)
    return m, ex, dm, ops


def test_exact_dofs_give_zero_error(patch_setup):
    m, ex, dm, ops = patch_setup
    U = interpolate(m, dm, ex.u, ex.grad)
    assert max(compute_errors(m, 3, U, ex, dm, ops)) <= 1e-9


def test_zero_solution_normalization(patch_setup):
    m, ex, dm, ops = patch_setup
    errs = compute_errors(m, 3, np.zeros(dm.n_dofs), ex, dm, ops)
    assert errs == pytest.approx((1.0, 1.0, 1.0), abs=1e-14)


def test_vanishing_exact_norm(patch_setup):
    m, _, dm, ops = patch_setup
    z = lambda x, y: np.zeros_like(x)
    zero = ExactSolution("zero", z, lambda x, y: np.zeros((2, len(x))), lambda x, y: np.zeros((3, len(x))), z)
    with pytest.raises(ConfigError):
        compute_errors(m, 3, np.zeros(dm.n_dofs), zero, dm, ops)


def test_permutation_invariance():
    ex = sine_channel_solution()
    m = sine_channel_mesh("voronoi", 4, 3)
    s = assemble(m, 3, ex.f)
    solve(s)
    dm = s.dofmap
    perm = np.random.default_rng(3).permutation(dm.n_dofs)
    dm2 = dataclasses.replace(dm, local_to_global=[perm[g] for g in dm.local_to_global])
    U2 = np.empty_like(s.U)
    U2[perm] = s.U
    a = compute_errors(m, 3, s.U, ex, dm, s.local_ops)
    b = compute_errors(m, 3, U2, ex, dm2, s.local_ops)
    assert a == b


def test_curved_k2_rate():
    ex = sine_channel_solution()
    errs, hs = [], []
    for n in (8, 16):
        m = sine_channel_mesh("quad", n, 2)
        s = assemble(m, 2, ex.f)
        solve(s)
        errs.append(compute_errors(m, 2, s.U, ex, s.dofmap, s.local_ops)[2])
        hs.append(m.diameters().mean())
    assert eoc(errs, hs)[0] == pytest.approx(1.0, abs=0.2)


def test_report_csv_and_plot_data():
    r = ConvergenceReport()
    r.add(8, 0.25, 100, (1e-2, 1e-1, 1.0))
    r.add(16, 0.125, 400, (1e-2 / 16, 1e-1 / 8, 0.25))
    lines = r.to_csv().splitlines()
    assert lines[0] == "level,h,ndof,err0,err1,err2,eoc0,eoc1,eoc2"
    assert lines[1].endswith(",,,")
    assert lines[2].split(",")[-3:] == ["4.000000", "3.000000", "2.000000"]
    assert r.final_eoc() == pytest.approx((4.0, 3.0, 2.0))
    pts = np.loadtxt(r.plot_data(2).splitlines())
    assert np.array_equal(pts, [[0.25, 1.0], [0.125, 0.25]])
