"""Exact classification of distinguished curves on flag manifolds SL(n,R)/P.

A curve t -> p exp(tX) o with X in the nilradical admits either a projective
or only an affine reparameterisation.  :func:`classify_curve` decides which by
building a polynomial criterion system and solving it exactly over Q.
"""

from .classify import (
    AFFINE_ONLY,
    PROJECTIVE,
    UNDETERMINED,
    ClassificationResult,
    classify_curve,
    p_conjugacy_search,
    reproduce_table,
    sl3_normal_form,
)
from .criterion import CriterionSystem, build_criterion_system, substitute_witness
from .errors import (
    BudgetExhausted,
    FlagCurvesError,
    NotInvertible,
    NotNilpotent,
    ParseError,
    SeriesDomainError,
    XNotInNilradical,
    XZero,
)
from .groebner import GroebnerBasis, buchberger, is_inconsistent
from .lie1d import VectorField1D, bracket, check_closure
from .matrix import (
    FlagContext,
    LieElement,
    PolyMatrix,
    adjoint,
    exp_mobius_cleared,
    exp_nilpotent,
    inverse,
    matrix_from_json,
    matrix_to_json,
)
from .poly import MultiPoly, parse_poly
from .quasipoly import QuasiPoly, parse_quasipoly
from .ratfunc import RationalFunction
from .rational import format_rational, parse_rational
from .series import TruncatedSeries, series_compose, series_elementary
from .solver import SolveOutcome, find_rational_witness, solve_system

__version__ = "0.1.0"
