"""Inner, {1,3}, Moore-Penrose, group and core inverses.

Every constructor here builds a candidate through rank factorizations and then
checks it against the defining equations of its kind before returning it; a
candidate that fails its own equations raises :class:`VerificationError`. The
existence shortcuts (rank tests) are therefore never the last word.

The results are memoized: matrices are immutable and hashable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InverseMissing, NotSquare, VerificationError
from .matrix import Matrix, inverse, rank_factorization, rref_transform

_CACHE = 1 << 16


class InverseKind(enum.Enum):
    INNER = "inner"
    ONE_THREE = "one-three"
    MOORE_PENROSE = "mp"
    GROUP = "group"
    CORE = "core"


class IdempotentClass(enum.Enum):
    NOT_IDEMPOTENT = "not-idempotent"
    IDEMPOTENT = "idempotent"
    SELF_ADJOINT_IDEMPOTENT = "self-adjoint-idempotent"


def _require_square(a: Matrix, what: str):
    if not a.is_square:
        raise NotSquare(f"{what} needs a square matrix, got {a.shape}")


# -- defining equations ------------------------------------------------------

def penrose_checks(a: Matrix, x: Matrix) -> dict[str, bool]:
    ax, xa = a @ x, x @ a
    return {
        "axa=a": ax @ a == a,
        "xax=x": xa @ x == x,
        "(ax)*=ax": ax.star() == ax,
        "(xa)*=xa": xa.star() == xa,
    }


def group_checks(a: Matrix, x: Matrix) -> dict[str, bool]:
    ax, xa = a @ x, x @ a
    return {"axa=a": ax @ a == a, "xax=x": xa @ x == x, "ax=xa": ax == xa}


def core_checks(a: Matrix, x: Matrix) -> dict[str, bool]:
    """The three characterizing equations, plus the two reflexivity equations."""
    ax = a @ x
    return {
        "(ax)*=ax": ax.star() == ax,
        "xa²=a": x @ a @ a == a,
        "ax²=x": ax @ x == x,
        "axa=a": ax @ a == a,
        "xax=x": x @ ax == x,
    }


def is_core_inverse(a: Matrix, x: Matrix) -> bool:
    """True iff ``x`` passes the three core-inverse equations for ``a``."""
    ax = a @ x
    return ax.star() == ax and x @ a @ a == a and ax @ x == x


def checks_for(kind: InverseKind, a: Matrix, x: Matrix) -> dict[str, bool]:
    if kind is InverseKind.INNER:
        return {"axa=a": a @ x @ a == a}
    if kind is InverseKind.ONE_THREE:
        ax = a @ x
        return {"axa=a": ax @ a == a, "(ax)*=ax": ax.star() == ax}
    if kind is InverseKind.MOORE_PENROSE:
        return penrose_checks(a, x)
    if kind is InverseKind.GROUP:
        return group_checks(a, x)
    return core_checks(a, x)


def _verified(kind: InverseKind, a: Matrix, x: Matrix) -> Matrix:
    flags = checks_for(kind, a, x)
    if not all(flags.values()):
        bad = [k for k, v in flags.items() if not v]
        raise VerificationError(f"{kind.value} inverse candidate fails {bad} for {a!r}")
    return x


# -- constructors -------------------------------------------------------------

@lru_cache(maxsize=_CACHE)
def inner_inverse(a: Matrix) -> Matrix:
    """A deterministic inner inverse: ``S @ E`` where ``E @ a`` is the RREF of
    ``a`` and ``S`` routes the leading ones back to their pivot columns."""
    _, E, pivots = rref_transform(a)
    f = a.field
    s = [f.zero] * (a.cols * a.rows)
    for i, c in enumerate(pivots):
        s[c * a.rows + i] = f.one
    S = Matrix(f, a.cols, a.rows, s)
    return _verified(InverseKind.INNER, a, S @ E)


@lru_cache(maxsize=_CACHE)
def one_three_inverse(a: Matrix) -> Matrix | None:
    """``(a*a)^- a*``; exists exactly when rank(a*a) == rank(a)."""
    h = a.star()
    g = h @ a
    if g.rank() != a.rank():
        return None
    return _verified(InverseKind.ONE_THREE, a, inner_inverse(g) @ h)


@lru_cache(maxsize=_CACHE)
def mp_inverse(a: Matrix) -> Matrix | None:
    F, G = rank_factorization(a)
    if F.cols == 0:
        return Matrix.zeros(a.field, a.cols, a.rows)
    Fh, Gh = F.star(), G.star()
    mid = inverse(Fh @ a @ Gh)
    if mid is None:
        return None
    return _verified(InverseKind.MOORE_PENROSE, a, Gh @ mid @ Fh)


@lru_cache(maxsize=_CACHE)
def group_inverse(a: Matrix) -> Matrix | None:
    """``F (GF)^-2 G`` for a full-rank factorization ``a = FG``."""
    _require_square(a, "group inverse")
    F, G = rank_factorization(a)
    if F.cols == 0:
        return Matrix.zeros(a.field, a.rows)
    gf_inv = inverse(G @ F)
    if gf_inv is None:
        return None
    return _verified(InverseKind.GROUP, a, F @ gf_inv @ gf_inv @ G)


@lru_cache(maxsize=_CACHE)
def core_inverse(a: Matrix) -> Matrix | None:
    """``a^# a a^(1,3)`` when both factors exist, checked against the
    three-equation characterization."""
    _require_square(a, "core inverse")
    g = group_inverse(a)
    if g is None:
        return None
    t = one_three_inverse(a)
    if t is None:
        return None
    return _verified(InverseKind.CORE, a, g @ a @ t)


_BUILDERS = {
    InverseKind.INNER: inner_inverse,
    InverseKind.ONE_THREE: one_three_inverse,
    InverseKind.MOORE_PENROSE: mp_inverse,
    InverseKind.GROUP: group_inverse,
    InverseKind.CORE: core_inverse,
}


def compute(kind: InverseKind, a: Matrix) -> Matrix | None:
    return _BUILDERS[kind](a)


def require(kind: InverseKind, a: Matrix, operand: str = "a") -> Matrix:
    """Like :func:`compute` but raises :class:`InverseMissing` instead of None."""
    x = compute(kind, a)
    if x is None:
        raise InverseMissing(kind.value, operand)
    return x


@dataclass(frozen=True)
class InverseReport:
    kind: InverseKind
    input: Matrix
    result: Matrix | None
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def exists(self) -> bool:
        return self.result is not None


def inverse_report(kind: InverseKind, a: Matrix) -> InverseReport:
    x = compute(kind, a)
    checks = checks_for(kind, a, x) if x is not None else {}
    return InverseReport(kind, a, x, checks)


# -- classification -----------------------------------------------------------

def is_group_invertible(a: Matrix) -> bool:
    return group_inverse(a) is not None


def is_core_invertible(a: Matrix) -> bool:
    return core_inverse(a) is not None


@lru_cache(maxsize=_CACHE)
def is_ep(a: Matrix) -> bool:
    _require_square(a, "EP test")
    m = mp_inverse(a)
    if m is None:
        return False
    return m == group_inverse(a)


def classify_idempotent(a: Matrix) -> IdempotentClass:
    _require_square(a, "idempotent classification")
    if a @ a != a:
        return IdempotentClass.NOT_IDEMPOTENT
    if a.star() != a:
        return IdempotentClass.IDEMPOTENT
    return IdempotentClass.SELF_ADJOINT_IDEMPOTENT


def is_self_adjoint_idempotent(p: Matrix) -> bool:
    return p.is_square and p.star() == p and p @ p == p


def clear_caches() -> None:
    """Drop memoized inverses (used to time computations from cold)."""
    for f in (inner_inverse, one_three_inverse, mp_inverse, group_inverse, core_inverse, is_ep):
        f.cache_clear()
