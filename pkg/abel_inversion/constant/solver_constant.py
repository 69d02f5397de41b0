class SolverConstant:
    """Numerical defaults shared by the solvers."""

    MIN_MESH_NODES = 3
    CANCELLATION_RELATIVE_GAP = 1e-6


class RegularizationConstant:
    """Defaults for the discrepancy-principle search."""

    DEFAULT_ALPHA_MIN = 1e-12
    DEFAULT_ALPHA_MAX = 1e4
    DEFAULT_REL_TOL = 1e-3
    MAX_BISECTION_ITERATIONS = 200


class SmoothingConstant:
    MIN_SPLINE_POINTS = 4
    DEFAULT_SMOOTHING_PARAMETER = 0.99


class OracleConstant:
    DEFAULT_TOLERANCE = 1e-12
    SUBDIVISION_LIMIT = 200


class TableConstant:
    FLOAT_FORMAT = ".17g"
    ENCODING = "utf-8"
