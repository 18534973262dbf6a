"""Quantum dimensions of classical representations and universal formulas.

Submodules:

* :mod:`vogeldim.young` - Young diagrams and their vertical/horizontal sums
* :mod:`vogeldim.symbolic` - exact linear forms and products of sinh factors
* :mod:`vogeldim.weyl` - root data, Weyl-line quantum dimensions, rank fits
* :mod:`vogeldim.vogel` - Vogel points, known universal formulas, checks
* :mod:`vogeldim.reconstruct` - gamma-free universal denominators
"""

from .errors import (
    AreaMismatch,
    Divergent,
    FitUnstable,
    Indeterminate,
    Infeasible,
    InvalidDiagram,
    PoleAtPoint,
    ProblemTooLarge,
    RankTooSmall,
    VariableMismatch,
    VogelDimError,
    ZeroPrefactor,
)
from .reconstruct import build_problem, gamma_free_args, limit_polynomial, solve
from .symbolic import (
    LinearForm,
    RationalFactorForm,
    SinhProduct,
    canonicalize,
    classical_limit,
    evaluate,
    evaluate_rational,
    multiply,
)
from .vogel import (
    FORMULAS,
    VogelPoint,
    specialize_to_series,
    square_identities,
    verify_formula,
    vogel_point,
)
from .weyl import RepSpec, dimension, qdim_at_rank, rank_interpolate
from .young import YoungDiagram, horizontal_sum, transpose, vertical_sum

__version__ = "0.1.0"
