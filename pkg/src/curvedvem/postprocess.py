"""Relative error quantities, convergence rates and report files."""
import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .element import edge_quadrature_order
from .exceptions import ConfigError
from .quadrature import fan_rule


def compute_errors(mesh, k, U, exact, dofmap, local_ops):
    """(Err0, Err1, Err2) of the projected discrete solution against ``exact``.

    Err0 is the relative L2 error of Π u_h, Err1/Err2 the relative H1/H2
    seminorm errors; the denominators use the same quadrature as the
    numerators.
    """
    num = np.zeros(3)
    den = np.zeros(3)
    order = edge_quadrature_order(k)
    for e in range(mesh.n_elements):
        geom = mesh.geometry(e)
        ops = local_ops[e]
        c = ops.P @ dofmap.gather(e, U)
        rule = fan_rule(geom, order)
        x, y = rule.points[:, 0], rule.points[:, 1]
        w = rule.weights
        b = ops.basis
        V = b.values(rule.points)
        u = exact.u(x, y)
        gu = exact.grad(x, y)
        hu = exact.hess(x, y)
        p = V @ c
        gp = np.array([V @ (b.dx @ c), V @ (b.dy @ c)])
        hp = np.array([V @ (b.dxx @ c), V @ (b.dxy @ c), V @ (b.dyy @ c)])
        hw = np.array([1.0, 2.0, 1.0])[:, None]
        num += [w @ (u - p) ** 2, w @ np.sum((gu - gp) ** 2, axis=0), w @ np.sum(hw * (hu - hp) ** 2, axis=0)]
        den += [w @ u ** 2, w @ np.sum(gu ** 2, axis=0), w @ np.sum(hw * hu ** 2, axis=0)]
    if np.any(den <= 0.0):
        raise ConfigError("exact solution has a vanishing norm; relative errors undefined")
    return tuple(float(v) for v in np.sqrt(num / den))


def eoc(errors, hs):
    """Rates log(e_{i-1}/e_i) / log(h_{i-1}/h_i) for consecutive pairs."""
    errors = [float(e) for e in errors]
    hs = [float(h) for h in hs]
    if len(errors) != len(hs) or len(errors) < 2:
        raise ValueError("eoc needs two equally long lists of length >= 2")
    if min(errors) <= 0.0 or min(hs) <= 0.0:
        raise ValueError("eoc needs positive errors and mesh sizes")
    return [math.log(errors[i - 1] / errors[i]) / math.log(hs[i - 1] / hs[i]) for i in range(1, len(errors))]


@dataclass
class ReportRow:
    level: int
    h: float
    ndof: int
    err: tuple
    eoc: tuple = (None, None, None)


@dataclass
class ConvergenceReport:
    rows: list = field(default_factory=list)

    def add(self, level, h, ndof, errs):
        self.rows.append(ReportRow(level, h, ndof, tuple(errs)))
        self._update_rates()

    def _update_rates(self):
        for i in range(1, len(self.rows)):
            a, b = self.rows[i - 1], self.rows[i]
            b.eoc = tuple(eoc([a.err[j], b.err[j]], [a.h, b.h])[0] if a.err[j] > 0 and b.err[j] > 0 else None
                          for j in range(3))

    def final_eoc(self):
        return self.rows[-1].eoc

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["level", "h", "ndof", "err0", "err1", "err2", "eoc0", "eoc1", "eoc2"])
        for r in self.rows:
            w.writerow([r.level, repr(r.h), r.ndof, *(repr(e) for e in r.err),
                        *("" if v is None else f"{v:.6f}" for v in r.eoc)])
        return buf.getvalue()

    def plot_data(self, i):
        """Log-log pairs 'h err_i', one per line."""
        return "".join(f"{r.h!r} {r.err[i]!r}\n" for r in self.rows)
