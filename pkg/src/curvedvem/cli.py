"""Convergence-study runner.

    curvedvem --degree 3 --family quad --levels 8,16,32 --out runs/q3
    curvedvem --config study.cfg --mode straight

The config file holds flat ``key = value`` lines (``#`` starts a comment);
each key can be overridden by the flag of the same name.
"""
import argparse
import logging
import sys
import time
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np

from .assembly import assemble, solve
from .element import DEFAULT_LOAD, LOAD_MODES
from .exceptions import ConfigError, CurvedVEMError
from .mesh import load_mesh, save_mesh, validate_mesh
from .meshgen import sine_channel_mesh, square_mesh, straighten_boundary
from .postprocess import ConvergenceReport, compute_errors
from .problems import get_solution

log = logging.getLogger("curvedvem")

BUILTIN_DOMAINS = ("sine-channel", "square")


@dataclass
class StudyConfig:
    domain: str = "sine-channel"
    family: str = "quad"
    levels: tuple = (8, 16, 32, 64)
    degree: int = 3
    mode: str = "curved"
    solution: str = "sine-channel"
    out: str = "results"
    seed: int = 0
    lloyd: int = 40
    rho: float = 1e-3
    load: str = DEFAULT_LOAD
    dump_matrix: bool = False

    def validate(self):
        if self.degree < 2:
            raise ConfigError("degree must be >= 2")
        if not self.levels or any(b <= a for a, b in zip(self.levels, self.levels[1:])):
            raise ConfigError(f"levels must be non-empty and strictly increasing, got {list(self.levels)}")
        if min(self.levels) < 1:
            raise ConfigError("levels must be positive")
        if self.family not in ("quad", "voronoi"):
            raise ConfigError(f"unknown family {self.family!r}")
        if self.mode not in ("curved", "straight"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.load not in LOAD_MODES:
            raise ConfigError(f"unknown load {self.load!r}")
        if not 0.0 < self.rho < 1.0:
            raise ConfigError("rho must lie in (0, 1)")
        if self.domain not in BUILTIN_DOMAINS:
            if "{n}" not in self.domain and len(self.levels) > 1:
                raise ConfigError("a single mesh file supports one level; use a '{n}' path template")
        try:
            get_solution(self.solution)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        return self


def _convert(name, raw):
    kind = {f.name: f.type for f in fields(StudyConfig)}[name]
    try:
        if name == "levels":
            vals = raw if isinstance(raw, (list, tuple)) else str(raw).replace(",", " ").split()
            return tuple(int(v) for v in vals)
        if kind is bool:
            if isinstance(raw, bool):
                return raw
            low = str(raw).strip().lower()
            if low not in ("1", "0", "true", "false", "yes", "no"):
                raise ValueError(raw)
            return low in ("1", "true", "yes")
        return kind(raw)
    except (TypeError, ValueError):
        raise ConfigError(f"bad value for {name}: {raw!r}") from None


def read_config(path):
    """Parse a flat key = value file into a dict of typed values."""
    names = {f.name for f in fields(StudyConfig)}
    out = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in names:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = _convert(key, val)
    return out


def make_config(overrides=None, path=None):
    values = read_config(path) if path else {}
    for key, val in (overrides or {}).items():
        if val is not None:
            values[key] = _convert(key, val)
    return StudyConfig(**values).validate()


def build_mesh(config, n):
    if config.domain == "sine-channel":
        mesh = sine_channel_mesh(config.family, n, config.degree, config.seed, config.lloyd)
    elif config.domain == "square":
        mesh = square_mesh(config.family, n, config.degree, config.seed, config.lloyd)
    else:
        mesh = load_mesh(config.domain.format(n=n))
    if config.mode == "straight":
        mesh = straighten_boundary(mesh)
    return mesh


def dump_matrix(A, path):
    A = A.tocoo()
    order = np.lexsort((A.col, A.row))
    with open(path, "w") as fh:
        for i, j, v in zip(A.row[order], A.col[order], A.data[order]):
            fh.write(f"{i} {j} {v:.17g}\n")


def run_study(config):
    """Run every level, write report.csv, errs_*.dat and mesh snapshots."""
    config.validate()
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    exact = get_solution(config.solution)
    # the sine-channel solution is clamped on the exact boundary; straight-chord
    # runs impose homogeneous data on the approximate boundary as well
    boundary = None if config.solution == "sine-channel" else (exact.u, exact.grad)
    k = config.degree
    report = ConvergenceReport()
    for n in config.levels:
        t0 = time.perf_counter()
        mesh = build_mesh(config, n)
        reg = validate_mesh(mesh, config.rho)
        if not reg.ok:
            raise ConfigError(
                f"level {n}: mesh fails regularity at rho={config.rho}: "
                f"{len(reg.edge_violations)} short edges, {len(reg.ball_violations)} thin elements, "
                f"{len(reg.orientation_errors)} orientation errors, {len(reg.curve_errors)} curve mismatches")
        save_mesh(mesh, out / f"mesh_{n}.json")
        system = assemble(mesh, k, exact.f, boundary=boundary, load=config.load)
        _, res = solve(system)
        if config.dump_matrix:
            dump_matrix(system.A, out / f"matrix_{n}.txt")
        errs = compute_errors(mesh, k, system.U, exact, system.dofmap, system.local_ops)
        # mean h_E: the maximum jumps with single cells of random Voronoi meshes
        h = float(mesh.diameters().mean())
        report.add(n, h, system.dofmap.n_free, errs)
        log.info("level %d: %d elements, %d dofs, residual %.1e, errors %s, %.1fs", n, mesh.n_elements,
                 system.dofmap.n_free, res, " ".join(f"{e:.3e}" for e in errs), time.perf_counter() - t0)
    (out / "report.csv").write_text(report.to_csv())
    for i in range(3):
        (out / f"errs_{i}.dat").write_text(report.plot_data(i))
    (out / "config.txt").write_text("".join(
        f"{key} = {','.join(map(str, val)) if key == 'levels' else val}\n" for key, val in asdict(config).items()))
    return report


def build_parser():
    p = argparse.ArgumentParser(prog="curvedvem", description="C1 virtual element convergence studies "
                                "for the clamped plate on curved domains.")
    p.add_argument("--config", help="flat key = value config file")
    p.add_argument("--degree", type=int)
    p.add_argument("--family", choices=("quad", "voronoi"))
    p.add_argument("--levels", help="comma separated resolutions, e.g. 8,16,32")
    p.add_argument("--mode", choices=("curved", "straight"))
    p.add_argument("--domain", help="sine-channel, square, or a mesh file path ('{n}' is the level)")
    p.add_argument("--solution", help="sine-channel, patch-p2 or patch-p3")
    p.add_argument("--load", choices=LOAD_MODES)
    p.add_argument("--out")
    p.add_argument("--seed", type=int)
    p.add_argument("--lloyd", type=int)
    p.add_argument("--rho", type=float)
    p.add_argument("--dump-matrix", dest="dump_matrix", action="store_const", const=True, default=None)
    p.add_argument("-q", "--quiet", action="store_true")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO, format="%(message)s")
    overrides = {key: val for key, val in vars(args).items() if key not in ("config", "quiet")}
    try:
        config = make_config(overrides, args.config)
        report = run_study(config)
    except (CurvedVEMError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if not args.quiet:
        sys.stdout.write(report.to_csv())
    return 0
