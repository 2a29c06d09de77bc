"""Exact generalized inverses and matrix partial orders over involutive fields."""

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    GinvError,
    InverseMissing,
    MatrixParseError,
    NotIdempotent,
    NotSquare,
    PreconditionUnmet,
    UnknownTheorem,
    VerificationError,
)
from .fields import GF, GF2, Q, QI, FieldSpec, Scalar, parse_field, scalar_arith, scalar_conj
from .geninv import (
    InverseKind,
    InverseReport,
    classify_idempotent,
    core_inverse,
    group_inverse,
    inner_inverse,
    inverse_report,
    is_ep,
    mp_inverse,
    one_three_inverse,
)
from .matrix import (
    BlockDecomposition,
    Matrix,
    block_decompose,
    mat_mul,
    mat_star,
    rref_rank,
    solve_right,
)
from .orders import CoreCharacterization, OrderDecision, OrderKind, core_leq_via, order_consequences, order_leq
from .textio import format_matrix, parse_matrix, read_matrix

__version__ = "0.1.0"
