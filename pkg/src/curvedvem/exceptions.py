class CurvedVEMError(Exception):
    """Base class for all errors raised by curvedvem."""


class CurveDomainError(CurvedVEMError, ValueError):
    """Curve parameter outside its interval."""


class DegenerateParametrizationError(CurvedVEMError, ValueError):
    """Vanishing curve derivative where a frame is required."""


class MeshError(CurvedVEMError):
    """Structural problem with a mesh (topology, orientation, generation)."""


class OrientationError(MeshError):
    """Element loop is clockwise or has non-positive area."""


class GeometryError(CurvedVEMError):
    """Element geometry unsuitable for integration (e.g. not star-shaped)."""


class ElementDegeneracyError(CurvedVEMError):
    """Local VEM operators could not be built for an element."""


class AssemblyError(CurvedVEMError):
    """Global system failed to factorize or is inconsistent."""


class ConfigError(CurvedVEMError, ValueError):
    """Invalid study configuration."""
