class SubcommandConstant:
    FORWARD = "forward"
    INVERT = "invert"
    REGULARIZE = "regularize"
    ERRORS = "errors"
    SMOOTH = "smooth"
    SYNTHETIC = "synthetic"
    TOMO = "tomo"
    CHOICES = (FORWARD, INVERT, REGULARIZE, ERRORS, SMOOTH, SYNTHETIC, TOMO)


class MethodConstant:
    FIRST = "first"
    SECOND = "second"
    CHOICES = (FIRST, SECOND)


class KernelKindConstant:
    SQRT_KERNEL = "sqrt"
    LOG_KERNEL = "log"


class EndpointRuleConstant:
    EXTRAPOLATE_LINEAR = "extrapolate"
    ZERO = "zero"
    COPY_PREVIOUS = "copy"
    CHOICES = (EXTRAPOLATE_LINEAR, ZERO, COPY_PREVIOUS)


class QprimeSchemeConstant:
    FORWARD_DIFFERENCE = "difference"
    SPLINE_DERIVATIVE = "spline"
    CHOICES = (FORWARD_DIFFERENCE, SPLINE_DERIVATIVE)


class PhantomConstant:
    CONSTANT = "constant"
    PARABOLIC = "parabolic"
    SEMICIRCLE = "semicircle"
    CHOICES = (CONSTANT, PARABOLIC, SEMICIRCLE)


class AlphaStatusConstant:
    MATCHED = "matched"
    OVERRIDE = "override"
    UNREACHABLE_LOW = "delta-unreachable-low"
    UNREACHABLE_HIGH = "delta-unreachable-high"
    MAX_ITERATIONS = "max-iterations"


class ColumnConstant:
    X = "x"
    Q = "q"
    DELTA = "delta"
    R = "r"
    K = "k"
    DK = "dk"
    BOUND = "bound"
    K_REFINED = "k_refined"
    K_ALPHA = "k_alpha"
    ALPHA = "alpha"
    INTENSITY = "I"
    SERIES = "series"
    Y = "y"


class ExitCodeConstant:
    SUCCESS = 0
    INTERNAL_ERROR = 1
    INVALID_ARGUMENT = 2
    INVALID_MESH = 3
    DOMAIN_ERROR = 4
    DEGENERATE_NODE = 5
    SINGULAR_SYSTEM = 6
    INVALID_MEASUREMENT = 7
    OUT_OF_RANGE = 8
    ORACLE_FAILURE = 9
    PARSE_ERROR = 10
    FILE_NOT_FOUND = 11


class IntegrandConstant:
    SQRT_KERNEL = KernelKindConstant.SQRT_KERNEL
    LOG_KERNEL = KernelKindConstant.LOG_KERNEL
    MOMENT_KERNEL = "moment"
    CHOICES = (SQRT_KERNEL, LOG_KERNEL, MOMENT_KERNEL)
