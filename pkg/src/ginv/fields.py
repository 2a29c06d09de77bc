"""Exact involutive fields and their scalars.

Four families are supported:

* ``Q``        rationals, identity conjugation
* ``QI``       Gaussian rationals Q(i), conjugation i -> -i
* ``GF(p)``    prime fields, identity conjugation
* ``GF(p^2)``  quadratic extensions GF(p)[t]/(m(t)), Frobenius conjugation x -> x**p

Matrices never store :class:`Scalar` objects; they store the *raw* canonical
value for their field (a ``Fraction``, a pair of ``Fraction``, an ``int``
residue, or a pair of residues) and call the field's arithmetic directly.
:class:`Scalar` is the user-facing wrapper around one such value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterator

from .errors import DivisionByZero, FieldMismatch

_RAT = r"\d+(?:/\d+)?"
_PURE_REAL = re.compile(rf"^[+-]?{_RAT}$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _parse_fraction(token: str) -> Fraction:
    if not _PURE_REAL.match(token):
        raise ValueError(f"not a rational number: {token!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {token!r}") from None


def _split_binomial(token: str, unit: str) -> tuple[str, str] | None:
    """Split ``"a+b<unit>"``-style text into its two coefficient strings.

    Returns ``(real_part, unit_coefficient)`` with empty strings for absent
    parts, or None if the token is not of that shape.
    """
    if not token.endswith(unit):
        return (token, "") if _PURE_REAL.match(token) else None
    body = token[: -len(unit)]
    # the split point is the last sign that is not the leading one
    pos = max(body.rfind("+"), body.rfind("-"))
    if pos <= 0:
        coef = body
        real = ""
    else:
        real, coef = body[:pos], body[pos:]
        if not _PURE_REAL.match(real):
            return None
    if coef in ("", "+"):
        coef = "1"
    elif coef == "-":
        coef = "-1"
    if not _PURE_REAL.match(coef):
        return None
    return real, coef


class FieldSpec:
    """Base class of the four field descriptors.

    Subclasses are frozen dataclasses, so two descriptors for the same field
    compare (and hash) equal.
    """

    kind: str
    p: int | None = None
    modulus: tuple[int, int] | None = None

    # -- arithmetic on raw values; overridden per field ---------------------
    zero: Any
    one: Any

    def add(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def conj(self, x):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def parse_entry(self, token: str):
        raise NotImplementedError

    def format_entry(self, x) -> str:
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == self.zero

    def dot(self, xs, ys):
        """Sum of x*y over paired entries."""
        zero, add, mul = self.zero, self.add, self.mul
        s = zero
        for x, y in zip(xs, ys):
            if x != zero and y != zero:
                s = add(s, mul(x, y))
        return s

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    @property
    def order(self) -> int | None:
        """Number of elements, or None for the infinite fields."""
        return None

    def elements(self) -> Iterator:
        raise TypeError(f"{self.name} is infinite")

    @property
    def name(self) -> str:
        raise NotImplementedError

    def coerce(self, x):
        """Turn ints, strings, Fractions, tuples or Scalars into a raw value."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field.name} scalar used in {self.name}")
            return x.value
        if isinstance(x, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, str):
            return self.parse_entry(x.strip())
        return self._coerce_other(x)

    def _coerce_other(self, x):
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def __call__(self, x) -> "Scalar":
        return Scalar(self, self.coerce(x))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class RationalField(FieldSpec):
    kind: str = dc_field(default="Q", init=False)

    zero = Fraction(0)
    one = Fraction(1)

    @property
    def name(self):
        return "Q"

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def dot(self, xs, ys):
        # accumulate over a common denominator and reduce once at the end
        n, d = 0, 1
        for x, y in zip(xs, ys):
            if x and y:
                q = x.denominator * y.denominator
                n = n * q + x.numerator * y.numerator * d
                d *= q
        return Fraction(n, d)

    def inv(self, x):
        if not x:
            raise DivisionByZero("division by zero in Q")
        return 1 / x

    def conj(self, x):
        return x

    def from_int(self, n):
        return Fraction(n)

    def parse_entry(self, token):
        return _parse_fraction(token)

    def format_entry(self, x):
        return str(x)

    def _coerce_other(self, x):
        if isinstance(x, Fraction):
            return x
        raise TypeError(f"cannot coerce {x!r} into Q")


@dataclass(frozen=True)
class GaussianRationalField(FieldSpec):
    """Q(i) with values stored as ``(re, im)`` pairs of Fractions."""

    kind: str = dc_field(default="QI", init=False)

    zero = (Fraction(0), Fraction(0))
    one = (Fraction(1), Fraction(0))

    @property
    def name(self):
        return "QI"

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def sub(self, x, y):
        return (x[0] - y[0], x[1] - y[1])

    def neg(self, x):
        return (-x[0], -x[1])

    def mul(self, x, y):
        a, b = x
        c, d = y
        return (a * c - b * d, a * d + b * c)

    def inv(self, x):
        a, b = x
        n = a * a + b * b
        if not n:
            raise DivisionByZero("division by zero in QI")
        return (a / n, -b / n)

    def conj(self, x):
        return (x[0], -x[1])

    def from_int(self, n):
        return (Fraction(n), Fraction(0))

    def parse_entry(self, token):
        parts = _split_binomial(token, "i")
        if parts is None:
            raise ValueError(f"not a Gaussian rational: {token!r}")
        real, imag = parts
        return (_parse_fraction(real) if real else Fraction(0),
                _parse_fraction(imag) if imag else Fraction(0))

    def format_entry(self, x):
        a, b = x
        if not b:
            return str(a)
        if b == 1:
            im = "i"
        elif b == -1:
            im = "-i"
        else:
            im = f"{b}i"
        if not a:
            return im
        return f"{a}{im}" if im.startswith("-") else f"{a}+{im}"

    def _coerce_other(self, x):
        if isinstance(x, Fraction):
            return (x, Fraction(0))
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        if isinstance(x, tuple) and len(x) == 2:
            return (Fraction(x[0]), Fraction(x[1]))
        raise TypeError(f"cannot coerce {x!r} into QI")


@dataclass(frozen=True)
class PrimeField(FieldSpec):
    p: int = 2
    kind: str = dc_field(default="GFp", init=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"GF(p) needs a prime, got {self.p}")

    zero = 0
    one = 1

    @property
    def name(self):
        return f"GF({self.p})"

    @property
    def order(self):
        return self.p

    def elements(self):
        return iter(range(self.p))

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def neg(self, x):
        return -x % self.p

    def mul(self, x, y):
        return x * y % self.p

    def inv(self, x):
        if not x:
            raise DivisionByZero(f"division by zero in {self.name}")
        return pow(x, -1, self.p)

    def conj(self, x):
        return x

    def from_int(self, n):
        return n % self.p

    def parse_entry(self, token):
        if not re.fullmatch(r"[+-]?\d+", token):
            raise ValueError(f"not a residue: {token!r}")
        return int(token) % self.p

    def format_entry(self, x):
        return str(x)


def _poly_has_root(p: int, c1: int, c0: int) -> bool:
    return any((r * r + c1 * r + c0) % p == 0 for r in range(p))


@lru_cache(maxsize=None)
def default_modulus(p: int) -> tuple[int, int]:
    """Coefficients ``(c1, c0)`` of the first irreducible ``t^2 + c1 t + c0``.

    Candidates are scanned in lexicographic ``(c1, c0)`` order.
    """
    for c1 in range(p):
        for c0 in range(1, p):
            if not _poly_has_root(p, c1, c0):
                return (c1, c0)
    raise AssertionError("every prime field has an irreducible quadratic")


@dataclass(frozen=True)
class QuadraticField(FieldSpec):
    """GF(p^2) = GF(p)[t]/(t^2 + c1 t + c0); values are ``(a, b)`` for a + b t."""

    p: int = 2
    modulus: tuple[int, int] | None = None
    kind: str = dc_field(default="GFp2", init=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"GF(p^2) needs a prime, got {self.p}")
        if self.modulus is None:
            object.__setattr__(self, "modulus", default_modulus(self.p))
        c1, c0 = (c % self.p for c in self.modulus)
        if _poly_has_root(self.p, c1, c0):
            raise ValueError(f"t^2 + {c1}t + {c0} is reducible over GF({self.p})")
        object.__setattr__(self, "modulus", (c1, c0))
        # Frobenius image of t, so conj(a + b t) = a + b * t**p
        object.__setattr__(self, "_tp", self._pow((0, 1), self.p))

    zero = (0, 0)
    one = (1, 0)

    @property
    def name(self):
        return f"GF({self.p}^2)"

    @property
    def order(self):
        return self.p * self.p

    def elements(self):
        return ((a, b) for b in range(self.p) for a in range(self.p))

    def add(self, x, y):
        p = self.p
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)

    def sub(self, x, y):
        p = self.p
        return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)

    def neg(self, x):
        return (-x[0] % self.p, -x[1] % self.p)

    def mul(self, x, y):
        p = self.p
        c1, c0 = self.modulus
        a, b = x
        c, d = y
        bd = b * d
        return ((a * c - bd * c0) % p, (a * d + b * c - bd * c1) % p)

    def _pow(self, x, n):
        result = (1, 0)
        while n:
            if n & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            n >>= 1
        return result

    def inv(self, x):
        if x == (0, 0):
            raise DivisionByZero(f"division by zero in {self.name}")
        return self._pow(x, self.p * self.p - 2)

    def conj(self, x):
        a, b = x
        u, v = self._tp
        p = self.p
        return ((a + b * u) % p, b * v % p)

    def from_int(self, n):
        return (n % self.p, 0)

    def parse_entry(self, token):
        parts = _split_binomial(token, "t")
        if parts is None or "/" in token:
            raise ValueError(f"not an element of {self.name}: {token!r}")
        a, b = parts
        return (int(a) % self.p if a else 0, int(b) % self.p if b else 0)

    def format_entry(self, x):
        a, b = x
        if not b:
            return str(a)
        tb = "t" if b == 1 else f"{b}t"
        return tb if not a else f"{a}+{tb}"

    def _coerce_other(self, x):
        if isinstance(x, tuple) and len(x) == 2:
            return (int(x[0]) % self.p, int(x[1]) % self.p)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")


Q = RationalField()
QI = GaussianRationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def GF2(p: int, modulus: tuple[int, int] | None = None) -> QuadraticField:
    return QuadraticField(p, modulus)


_FIELD_RE = re.compile(r"^GF\(\s*(\d+)\s*(\^\s*2)?\s*\)$")


def parse_field(text: str) -> FieldSpec:
    """Parse ``Q``, ``QI``, ``GF(p)`` or ``GF(p^2)``."""
    text = text.strip()
    if text == "Q":
        return Q
    if text == "QI":
        return QI
    m = _FIELD_RE.match(text)
    if not m:
        raise ValueError(f"unknown field {text!r}; expected Q, QI, GF(p) or GF(p^2)")
    p = int(m.group(1))
    return QuadraticField(p) if m.group(2) else PrimeField(p)


@dataclass(frozen=True)
class Scalar:
    """An element of one field, always in canonical form."""

    field: FieldSpec
    value: Any

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field.name} vs {other.field.name}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def conj(self) -> "Scalar":
        return Scalar(self.field, self.field.conj(self.value))

    def __str__(self):
        return self.field.format_entry(self.value)

    def __repr__(self):
        return f"{self.field.name}({self.field.format_entry(self.value)!r})"


_OPS = {"add": "__add__", "sub": "__sub__", "mul": "__mul__", "div": "__truediv__"}


def scalar_arith(op: str, x: Scalar, y: Scalar) -> Scalar:
    if x.field != y.field:
        raise FieldMismatch(f"{x.field.name} vs {y.field.name}")
    try:
        return getattr(x, _OPS[op])(y)
    except KeyError:
        raise ValueError(f"unknown scalar operation {op!r}") from None


def scalar_conj(x: Scalar) -> Scalar:
    return x.conj()
