"""Matrix partial orders and the equivalent forms of the core order.

Any predicate whose definition mentions ``a^#`` or the core inverse of ``a``
raises :class:`InverseMissing` when that inverse does not exist; "undefined"
is never reported as "does not hold".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import geninv
from .errors import DimensionMismatch, FieldMismatch, PreconditionUnmet
from .geninv import InverseKind
from .matrix import Matrix, block_decompose


class OrderKind(enum.Enum):
    STAR = "star"
    LEFT_STAR = "left-star"
    RIGHT_STAR = "right-star"
    MINUS = "minus"
    SHARP = "sharp"
    RIGHT_SHARP = "right-sharp"
    CORE = "core"


class CoreCharacterization(enum.Enum):
    DEFINITION = "definition"
    T23_2 = "t23-2"
    T23_3 = "t23-3"
    T23_4 = "t23-4"
    T23_5 = "t23-5"
    T23_6 = "t23-6"
    T24_IDEMPOTENT = "t24-idempotent"
    T24_BLOCKS = "t24-blocks"
    P28_MUTUAL = "p28-mutual"


@dataclass(frozen=True)
class OrderDecision:
    kind: OrderKind | CoreCharacterization
    a: Matrix
    b: Matrix
    holds: bool
    witness: Matrix | None = None
    failed: str | None = None

    def __bool__(self):
        return self.holds


def _pair(a: Matrix, b: Matrix):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field.name} vs {b.field.name}")
    if a.shape != b.shape or not a.is_square:
        raise DimensionMismatch(f"orders compare square matrices of one shape, got {a.shape} and {b.shape}")


def _decide(kind, a, b, equations, witness=None) -> OrderDecision:
    """``equations`` is a sequence of (name, thunk); evaluation stops at the
    first failing one. ``witness`` is attached only when all hold."""
    for name, check in equations:
        if not check():
            return OrderDecision(kind, a, b, False, None, name)
    return OrderDecision(kind, a, b, True, witness)


def range_right_contained(a: Matrix, b: Matrix) -> bool:
    """aR ⊆ bR, i.e. the column space of ``a`` lies in that of ``b``."""
    return b @ geninv.inner_inverse(b) @ a == a


def range_left_contained(a: Matrix, b: Matrix) -> bool:
    """Ra ⊆ Rb, i.e. the row space of ``a`` lies in that of ``b``."""
    return a @ geninv.inner_inverse(b) @ b == a


def minus_with(a: Matrix, b: Matrix, b_minus: Matrix) -> bool:
    """a = b b⁻ a = a b⁻ b = a b⁻ a for the given inner inverse of ``b``."""
    ab = a @ b_minus
    return b @ b_minus @ a == a and ab @ b == a and ab @ a == a


def order_leq(kind: OrderKind, a: Matrix, b: Matrix) -> OrderDecision:
    _pair(a, b)
    if kind is OrderKind.STAR:
        ah = a.star()
        return _decide(kind, a, b, [
            ("a*a=a*b", lambda: ah @ a == ah @ b),
            ("aa*=ba*", lambda: a @ ah == b @ ah),
        ])
    if kind is OrderKind.LEFT_STAR:
        ah = a.star()
        return _decide(kind, a, b, [
            ("a*a=a*b", lambda: ah @ a == ah @ b),
            ("aR⊆bR", lambda: range_right_contained(a, b)),
        ])
    if kind is OrderKind.RIGHT_STAR:
        ah = a.star()
        return _decide(kind, a, b, [
            ("aa*=ba*", lambda: a @ ah == b @ ah),
            ("Ra⊆Rb", lambda: range_left_contained(a, b)),
        ])
    if kind is OrderKind.MINUS:
        g = geninv.inner_inverse(b)
        ag = a @ g
        return _decide(kind, a, b, [
            ("bb⁻a=a", lambda: b @ g @ a == a),
            ("ab⁻b=a", lambda: ag @ b == a),
            ("ab⁻a=a", lambda: ag @ a == a),
        ], witness=g)
    if kind is OrderKind.SHARP:
        s = geninv.require(InverseKind.GROUP, a)
        return _decide(kind, a, b, [
            ("a#a=a#b", lambda: s @ a == s @ b),
            ("aa#=ba#", lambda: a @ s == b @ s),
        ])
    if kind is OrderKind.RIGHT_SHARP:
        s = geninv.require(InverseKind.GROUP, a)
        return _decide(kind, a, b, [
            ("aa#=ba#", lambda: a @ s == b @ s),
            ("Ra⊆Rb", lambda: range_left_contained(a, b)),
        ])
    if kind is OrderKind.CORE:
        return _core_definition(kind, a, b)
    raise ValueError(f"unknown order {kind!r}")


def _core_definition(kind, a, b):
    c = geninv.require(InverseKind.CORE, a)
    return _decide(kind, a, b, [
        ("a⊕a=a⊕b", lambda: c @ a == c @ b),
        ("aa⊕=ba⊕", lambda: a @ c == b @ c),
    ])


def leq(kind: OrderKind, a: Matrix, b: Matrix) -> bool:
    return order_leq(kind, a, b).holds


def core_leq_via(which: CoreCharacterization, a: Matrix, b: Matrix) -> OrderDecision:
    _pair(a, b)
    C = CoreCharacterization
    if which is C.DEFINITION:
        return _core_definition(which, a, b)
    c = geninv.require(InverseKind.CORE, a)
    d = b - a
    if which is C.T23_2:
        return _decide(which, a, b, [
            ("ba⊕b=a", lambda: b @ c @ b == a),
            ("a⊕ba⊕=a⊕", lambda: c @ b @ c == c),
        ])
    if which is C.T23_3:
        return _decide(which, a, b, [
            ("aa⊕b=a", lambda: a @ c @ b == a),
            ("ba⊕a=a", lambda: b @ c @ a == a),
        ])
    if which is C.T23_4:
        return _decide(which, a, b, [
            ("(b-a)a=0", lambda: (d @ a).is_zero()),
            ("a*(b-a)=0", lambda: (a.star() @ d).is_zero()),
        ])
    p = a @ c
    if which is C.T23_5:
        ip = p.one() - p
        return _decide(which, a, b, [
            ("(1-aa⊕)(b-a)=b-a", lambda: ip @ d == d),
            ("(b-a)(1-aa⊕)=b-a", lambda: d @ ip == d),
        ])
    if which is C.T23_6:
        return _decide(which, a, b, [
            ("(b-a)aa⊕=0", lambda: (d @ p).is_zero()),
            ("aa⊕(b-a)=0", lambda: (p @ d).is_zero()),
        ])
    if which is C.T24_IDEMPOTENT:
        return idempotent_witness(a, b, p)
    if which is C.T24_BLOCKS:
        return _blocks(a, b, p)
    if which is C.P28_MUTUAL:
        e = geninv.require(InverseKind.CORE, b, "b")
        return _decide(which, a, b, [
            ("a⊕b=b⊕a", lambda: c @ b == e @ a),
            ("ba⊕=ab⊕", lambda: b @ c == a @ e),
            ("ab⊕a=a", lambda: a @ e @ a == a),
        ])
    raise ValueError(f"unknown characterization {which!r}")


def idempotent_witness(a: Matrix, b: Matrix, p: Matrix, *, require_range: bool = False,
                       kind=CoreCharacterization.T24_IDEMPOTENT) -> OrderDecision:
    """Does the self-adjoint idempotent ``p`` satisfy a = pb and ap = bp?

    With ``require_range`` the extra condition aR = pR is also tested.
    """
    eqs = [
        ("p²=p=p*", lambda: geninv.is_self_adjoint_idempotent(p)),
        ("a=pb", lambda: p @ b == a),
        ("ap=bp", lambda: a @ p == b @ p),
    ]
    if require_range:
        eqs.append(("aR=pR", lambda: range_right_contained(a, p) and range_right_contained(p, a)))
    return _decide(kind, a, b, eqs, witness=p)


def _blocks(a, b, p):
    da = block_decompose(p, p, a)
    db = block_decompose(p, p, b)
    return _decide(CoreCharacterization.T24_BLOCKS, a, b, [
        ("p²=p=p*", lambda: geninv.is_self_adjoint_idempotent(p)),
        ("a21=0", lambda: da.a21.is_zero()),
        ("a22=0", lambda: da.a22.is_zero()),
        ("b11=a11", lambda: db.a11 == da.a11),
        ("b12=a12", lambda: db.a12 == da.a12),
        ("b21=0", lambda: db.a21.is_zero()),
    ], witness=p)


CONSEQUENCE_NAMES = (
    "ba⊕=ab⊕",
    "a⊕b=b⊕a",
    "b⊕ba⊕=a⊕",
    "a⊕bb⊕=a⊕",
    "a⊕ba⊕=a⊕",
    "b⊕aa⊕=a⊕",
    "a⊕ab⊕=a⊕",
    "b⊕ab⊕=a⊕",
)


def order_consequences(a: Matrix, b: Matrix) -> dict[str, bool]:
    """The eight identities that follow from a ≤⊕ b with both core invertible."""
    _pair(a, b)
    c = geninv.core_inverse(a)
    e = geninv.core_inverse(b)
    if c is None or e is None:
        raise PreconditionUnmet("both a and b must be core invertible")
    if not (c @ a == c @ b and a @ c == b @ c):
        raise PreconditionUnmet("a is not below b in the core order")
    values = (
        b @ c == a @ e,
        c @ b == e @ a,
        e @ b @ c == c,
        c @ b @ e == c,
        c @ b @ c == c,
        e @ a @ c == c,
        c @ a @ e == c,
        e @ a @ e == c,
    )
    return dict(zip(CONSEQUENCE_NAMES, values))
