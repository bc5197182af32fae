"""Arbitrary-order C1 virtual elements for the clamped plate on curved polygonal meshes."""
from .assembly import GlobalDofMap, SparseSystem, assemble, build_global_map, interpolate, solve
from .curves import Curve, polyline_spline, segment, sine_graph
from .element import DofLayout, LocalOperators, build_dof_layout, local_load_vector, local_operators
from .exceptions import (AssemblyError, ConfigError, CurvedVEMError, ElementDegeneracyError,
                         GeometryError, MeshError, OrientationError)
from .mesh import CurvedMesh, EdgeGeometry, ElementGeometry, load_mesh, save_mesh, validate_mesh
from .meshgen import sine_channel_mesh, square_mesh, straighten_boundary
from .postprocess import ConvergenceReport, compute_errors, eoc
from .problems import ExactSolution, get_solution, polynomial_solution, sine_channel_solution
from .quadrature import fan_rule, gauss_legendre, gauss_lobatto, integrate_function, integrate_monomial

__version__ = "0.1.0"
