"""Polynomial interpolation, natural cubic splines, Chebyshev nodes and
least-squares fitting.

Hot loops live in a compiled extension when it is available; see
``interpfit.BACKEND`` for which one was loaded.
"""
from ._backend import BACKEND
from .chebyshev import (
    ChebyshevGrid,
    ErrorReport,
    chebyshev_nodes,
    chebyshev_T,
    equispaced_nodes,
    max_abs_error,
    rescale_interval,
    runge_function,
)
from .errors import (
    BadInterval,
    DegenerateData,
    DimensionMismatch,
    DuplicateNode,
    IndexOutOfRange,
    InterpfitError,
    InvalidOrder,
    NonPositiveData,
    SingularMatrix,
    SingularNormalMatrix,
    TooFewPoints,
    WrongArity,
)
from .fitting import (
    DesignMatrix,
    FitResult,
    ModelKind,
    cost,
    fit_line,
    fit_normal_equations,
    fit_transformed,
    residuals,
)
from .hermite import hermite_error_bound, hermite_eval, hermite_two_point
from .linalg import (
    PowerPolynomial,
    det_dense,
    solve_dense,
    solve_vandermonde_coeffs,
    vandermonde_determinant,
    vandermonde_matrix,
)
from .polyinterp import (
    DividedDifferenceTable,
    ErrorBoundQuery,
    NevilleTableau,
    NewtonPolynomial,
    divided_differences,
    interp_error_bound,
    lagrange_basis,
    lagrange_eval,
    neville_eval,
    newton_build,
    newton_eval,
    newton_extend,
    newton_from_points,
)
from .samples import HermiteSampleSet, SampleSet
from .spline import CubicSpline, natural_cubic_spline, spline_eval, spline_eval_deriv

__version__ = "0.1.0"
