"""Verification harness for the core-order results.

Each :class:`TheoremId` has a case checker taking one ordered pair ``(a, b)``
and returning an :class:`Outcome`. :func:`check_theorem` runs a checker over a
:class:`Population` and aggregates a :class:`TheoremReport`. Cases whose
hypotheses fail are skipped, never counted as passes.

The two remarks (R25, R33) always start with their published fixture as an
extra case; for them "pass" on the fixture means the counterexample was
reproduced.
"""

from __future__ import annotations

import enum
import itertools
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from . import geninv
from .errors import GinvError, InverseMissing, UnknownTheorem
from .fields import Q, FieldSpec, parse_field
from .geninv import core_inverse, group_inverse, is_core_inverse, is_ep, mp_inverse
from .matrix import Matrix, enumerate_matrices
from .orders import (
    CoreCharacterization as CC,
    OrderKind as OK,
    core_leq_via,
    idempotent_witness,
    leq,
    minus_with,
    order_consequences,
    range_left_contained,
    range_right_contained,
)
from .textio import format_matrix, parse_matrix

MAX_COUNTEREXAMPLES = 10
MAX_EXHAUSTIVE_PAIRS = 100_000
# finite (field, dim) combinations with at most this many matrices get
# genuine existential searches over all candidates
ENUMERABLE_LIMIT = 1024
P34_POWERS = (2, 3, 4)


class TheoremId(enum.Enum):
    L21 = "L21"
    L22 = "L22"
    T23 = "T23"
    T24 = "T24"
    R25 = "R25"
    L26 = "L26"
    T27 = "T27"
    P28 = "P28"
    L28 = "L28"
    T29 = "T29"
    L31 = "L31"
    T32 = "T32"
    R33 = "R33"
    P34 = "P34"
    P36 = "P36"

    @classmethod
    def parse(cls, text: str) -> "TheoremId":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise UnknownTheorem(text) from None


class Mode(enum.Enum):
    EXHAUSTIVE_GF = "exhaustive"
    RANDOM_RATIONAL = "random"
    CONSTRUCTED_CORE_PAIRS = "constructed"


# -- populations --------------------------------------------------------------

def random_entry(fld: FieldSpec, rng: random.Random, bound: int = 3):
    """One raw field value; rationals have |numerator| <= bound, denominator <= 3."""
    if fld.kind == "Q":
        return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
    if fld.kind == "QI":
        return (Fraction(rng.randint(-bound, bound), rng.randint(1, 3)),
                Fraction(rng.randint(-bound, bound), rng.randint(1, 3)))
    if fld.kind == "GFp":
        return rng.randrange(fld.p)
    return (rng.randrange(fld.p), rng.randrange(fld.p))


def random_matrix(fld: FieldSpec, rows: int, cols: int, rng: random.Random) -> Matrix:
    return Matrix(fld, rows, cols, [random_entry(fld, rng) for _ in range(rows * cols)])


def random_ranked(fld: FieldSpec, n: int, rng: random.Random, rank: int | None = None) -> Matrix:
    """A random n x n matrix of rank at most ``rank``, built as a product u v.

    Random square matrices over Q are almost always invertible; going through a
    thin product is what makes singular inputs common.
    """
    if rank is None:
        rank = rng.randint(1, n)
    if rank == 0:
        return Matrix.zeros(fld, n)
    return random_matrix(fld, n, rank, rng) @ random_matrix(fld, rank, n, rng)


def generate_core_pair(a: Matrix, d: Matrix) -> tuple[Matrix, Matrix] | None:
    """``(a, a + (1-p) d (1-p))`` with ``p = a a⊕``, or None if ``a`` has no core inverse.

    The block shape of the result puts ``a`` below it in the core order.
    """
    c = core_inverse(a)
    if c is None:
        return None
    p = a @ c
    ip = p.one() - p
    return a, a + ip @ d @ ip


@dataclass(frozen=True)
class Population:
    mode: Mode
    field: FieldSpec
    dim: int
    count: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if self.mode is Mode.EXHAUSTIVE_GF:
            if self.field.order is None:
                raise ValueError("exhaustive populations need a finite field")
            if self.count is None and self.n_matrices ** 2 > MAX_EXHAUSTIVE_PAIRS:
                raise ValueError(
                    f"{self.n_matrices ** 2} pairs over {self.field.name} dim {self.dim}; "
                    "pass a count to sample pairs instead")
        elif self.count is None or self.count < 0:
            raise ValueError(f"{self.mode.value} populations need a non-negative count")

    @classmethod
    def exhaustive(cls, fld: FieldSpec | str, dim: int = 2, sample: int | None = None, seed: int = 0):
        fld = parse_field(fld) if isinstance(fld, str) else fld
        return cls(Mode.EXHAUSTIVE_GF, fld, dim, sample, seed)

    @classmethod
    def random(cls, fld: FieldSpec | str, dim: int, count: int, seed: int = 0):
        fld = parse_field(fld) if isinstance(fld, str) else fld
        return cls(Mode.RANDOM_RATIONAL, fld, dim, count, seed)

    @classmethod
    def constructed(cls, fld: FieldSpec | str, dim: int, count: int, seed: int = 0):
        fld = parse_field(fld) if isinstance(fld, str) else fld
        return cls(Mode.CONSTRUCTED_CORE_PAIRS, fld, dim, count, seed)

    @property
    def n_matrices(self) -> int | None:
        order = self.field.order
        return None if order is None else order ** (self.dim * self.dim)

    def matrices(self) -> list[Matrix]:
        return list(enumerate_matrices(self.field, self.dim))

    def pairs(self) -> Iterator[tuple[Matrix, Matrix]]:
        n, fld = self.dim, self.field
        rng = random.Random(self.seed)
        if self.mode is Mode.EXHAUSTIVE_GF:
            ms = self.matrices()
            if self.count is None:
                yield from itertools.product(ms, ms)
            else:
                for _ in range(self.count):
                    yield rng.choice(ms), rng.choice(ms)
            return
        # Q and QI use low-rank products; finite fields are dense enough as is
        exact = fld.order is None
        draw = (lambda: random_ranked(fld, n, rng)) if exact else (lambda: random_matrix(fld, n, n, rng))
        if self.mode is Mode.RANDOM_RATIONAL:
            for _ in range(self.count):
                yield draw(), draw()
            return
        for _ in range(self.count):
            for _attempt in range(1000):
                rank = rng.randint(1, n - 1) if n > 1 and rng.random() < 0.75 else n
                a = random_ranked(fld, n, rng, rank) if exact else random_matrix(fld, n, n, rng)
                pair = generate_core_pair(a, draw())
                if pair is not None:
                    yield pair
                    break
            else:
                raise RuntimeError(f"could not draw a core invertible matrix over {fld.name}")

    def summary(self) -> dict:
        return {"mode": self.mode.value, "field": self.field.name, "dim": self.dim,
                "count": self.count, "seed": self.seed}

    def label(self) -> str:
        s = f"{self.field.name} dim {self.dim} {self.mode.value}"
        if self.count is not None:
            s += f" n={self.count} seed={self.seed}"
        return s


# -- per-case machinery --------------------------------------------------------

@dataclass
class Outcome:
    status: str  # "pass" | "fail" | "skip"
    failed: list[str] = field(default_factory=list)
    reason: str = ""
    notes: Counter = field(default_factory=Counter)


def _skip(reason: str) -> Outcome:
    return Outcome("skip", reason=reason)


def _judge(checks: dict[str, bool], notes: Counter | None = None) -> Outcome:
    bad = [k for k, ok in checks.items() if not ok]
    return Outcome("fail" if bad else "pass", bad, notes=notes or Counter())


def _all_equal(values: Sequence) -> bool:
    return all(v == values[0] for v in values)


class Context:
    """Per-(field, dim) data shared by all cases: candidate sets for genuine
    existential searches when the matrix ring is small enough to enumerate."""

    def __init__(self, fld: FieldSpec, dim: int):
        self.field = fld
        self.dim = dim
        order = fld.order
        self.enumerable = order is not None and order ** (dim * dim) <= ENUMERABLE_LIMIT
        self._all = None
        self._idem = None
        self._sa_idem = None
        self._inner: dict[Matrix, list[Matrix]] = {}

    @property
    def all_matrices(self) -> list[Matrix]:
        if self._all is None:
            self._all = list(enumerate_matrices(self.field, self.dim))
        return self._all

    @property
    def idempotents(self) -> list[Matrix]:
        if self._idem is None:
            self._idem = [p for p in self.all_matrices if p @ p == p]
        return self._idem

    @property
    def sa_idempotents(self) -> list[Matrix]:
        if self._sa_idem is None:
            self._sa_idem = [p for p in self.idempotents if p.star() == p]
        return self._sa_idem

    def inner_inverses(self, a: Matrix) -> list[Matrix]:
        if a not in self._inner:
            self._inner[a] = [x for x in self.all_matrices if a @ x @ a == a]
        return self._inner[a]


_CONTEXTS: dict[tuple[FieldSpec, int], Context] = {}


def context_for(fld: FieldSpec, dim: int) -> Context:
    key = (fld, dim)
    if key not in _CONTEXTS:
        _CONTEXTS[key] = Context(fld, dim)
    return _CONTEXTS[key]


def clear_caches() -> None:
    """Forget enumeration contexts and memoized inverses."""
    _CONTEXTS.clear()
    geninv.clear_caches()


# -- checkers -------------------------------------------------------------------

def _check_l21(ctx: Context, a: Matrix, b: Matrix) -> Outcome:
    s = group_inverse(a)
    if s is None:
        return _skip("a not group invertible")
    a2 = a @ a
    sharp = leq(OK.SHARP, a, b)
    cand = a @ s
    cand_ok = cand @ b == a and b @ cand == a
    checks = {
        "(1) a#a=a#b ⟺ a²=ab": (s @ a == s @ b) == (a2 == a @ b),
        "(2) aa#=ba# ⟺ a²=ba": (a @ s == b @ s) == (a2 == b @ a),
        "(3) sharp ⟺ a²=ab=ba": sharp == (a2 == a @ b == b @ a),
        "(4) sharp ⟺ witness p=aa#": sharp == cand_ok,
    }
    if ctx.enumerable:
        exists = any(p @ b == a and b @ p == a for p in ctx.idempotents)
        checks["(4) sharp ⟺ ∃ idempotent p: a=pb=bp"] = sharp == exists
    return _judge(checks)


def _check_l22(ctx, a, b):
    c = core_inverse(a)
    if c is None:
        return _skip("a not core invertible")
    s = group_inverse(a)
    ah = a.star()
    return _judge({
        "(1) a⊕a=a⊕b ⟺ a*a=a*b": (c @ a == c @ b) == (ah @ a == ah @ b),
        "(2) aa⊕=ba⊕ ⟺ a²=ba ⟺ aa#=ba#":
            _all_equal([a @ c == b @ c, a @ a == b @ a, a @ s == b @ s]),
    })


_T23 = (CC.DEFINITION, CC.T23_2, CC.T23_3, CC.T23_4, CC.T23_5, CC.T23_6)


def _check_t23(ctx, a, b):
    if core_inverse(a) is None:
        return _skip("a not core invertible")
    verdicts = [core_leq_via(w, a, b).holds for w in _T23]
    notes = Counter(holds=int(verdicts[0]))
    checks = {f"(1) ⟺ ({i + 2})": verdicts[0] == v for i, v in enumerate(verdicts[1:])}
    return _judge(checks, notes)


def _check_t24(ctx, a, b):
    c = core_inverse(a)
    if c is None:
        return _skip("a not core invertible")
    p = a @ c
    d1 = core_leq_via(CC.DEFINITION, a, b).holds
    d2 = idempotent_witness(a, b, p, require_range=True).holds
    d3 = core_leq_via(CC.T24_IDEMPOTENT, a, b)
    d4 = core_leq_via(CC.T24_BLOCKS, a, b).holds
    checks = {
        "(1) ⟺ (2) with p=aa⊕": d1 == d2,
        "(1) ⟺ (3) with p=aa⊕": d1 == d3.holds,
        "(1) ⟺ (4)": d1 == d4,
    }
    if d3.holds:
        w = d3.witness
        checks["witness p²=p=p*, a=pb, ap=bp"] = (
            geninv.is_self_adjoint_idempotent(w) and w @ b == a and a @ w == b @ w)
    if ctx.enumerable:
        exists3 = any(q @ b == a and a @ q == b @ q for q in ctx.sa_idempotents)
        exists2 = any(q @ b == a and a @ q == b @ q
                      and range_right_contained(a, q) and range_right_contained(q, a)
                      for q in ctx.sa_idempotents)
        checks["(1) ⟺ (3) ∃ self-adjoint idempotent"] = d1 == exists3
        checks["(1) ⟺ (2) ∃ self-adjoint idempotent"] = d1 == exists2
    return _judge(checks, Counter(holds=int(d1)))


def _rank_subtractive(a, b):
    return b.rank() - a.rank() == (b - a).rank()


def _check_l26(ctx, a, b):
    verdict = leq(OK.MINUS, a, b)
    checks = {"rank(b)-rank(a)=rank(b-a) ⟺ minus": verdict == _rank_subtractive(a, b)}
    if ctx.enumerable:
        inner_a = ctx.inner_inverses(a)
        inner_b = ctx.inner_inverses(b)
        definition = any(g @ a == g @ b and a @ g == b @ g for g in inner_a)
        per_rep = [minus_with(a, b, g) for g in inner_b]
        checks["(1) definition ⟺ (2) ∃ b⁻"] = definition == any(per_rep)
        checks["(2) ∃ b⁻ ⟺ (3) ∀ b⁻"] = any(per_rep) == all(per_rep)
        checks["(3) ⟺ deterministic b⁻"] = all(per_rep) == verdict
    else:
        g = geninv.inner_inverse(b)
        one = b.one()
        reps = [g, g + (one - g @ b) @ a + a.star() @ (one - b @ g)]
        for extra in (mp_inverse(b), geninv.one_three_inverse(b)):
            if extra is not None:
                reps.append(extra)
        checks["(3) every representative agrees"] = _all_equal([minus_with(a, b, r) for r in reps])
    return _judge(checks, Counter(holds=int(verdict)))


def _core_pair(a, b):
    c, e = core_inverse(a), core_inverse(b)
    if c is None:
        return None, None, "a not core invertible"
    if e is None:
        return None, None, "b not core invertible"
    return c, e, ""


def _check_t27(ctx, a, b):
    c, e, why = _core_pair(a, b)
    if why:
        return _skip(why)
    if not leq(OK.CORE, a, b):
        return _skip("a ≰⊕ b")
    return _judge(order_consequences(a, b))


def _check_p28(ctx, a, b):
    c, e, why = _core_pair(a, b)
    if why:
        return _skip(why)
    d = leq(OK.CORE, a, b)
    return _judge({"core ⟺ a⊕b=b⊕a, ba⊕=ab⊕, ab⊕a=a": d == core_leq_via(CC.P28_MUTUAL, a, b).holds},
                  Counter(holds=int(d)))


def _definitional_core(a: Matrix, x: Matrix) -> bool:
    """axa = a, xR = aR and Rx = Ra*."""
    ah = a.star()
    return (a @ x @ a == a
            and range_right_contained(x, a) and range_right_contained(a, x)
            and range_left_contained(x, ah) and range_left_contained(ah, x))


def _check_l28(ctx, a, x):
    """Here the pair is read as (a, candidate x)."""
    three = is_core_inverse(a, x)
    checks = {"three equations ⟺ axa=a, xR=aR, Rx=Ra*": three == _definitional_core(a, x)}
    if three:
        checks["x equals the computed core inverse"] = core_inverse(a) == x
    return _judge(checks, Counter(core_pairs=int(three)))


def _check_t29(ctx, a, b):
    c, e, why = _core_pair(a, b)
    if why:
        return _skip(why)
    if not leq(OK.CORE, a, b):
        return _skip("a ≰⊕ b")
    ab_c = core_inverse(a @ b)
    a2_c = core_inverse(a @ a)
    ba_c = core_inverse(b @ a)
    checks = {
        "(ab)⊕ exists": ab_c is not None,
        "(a²)⊕ exists": a2_c is not None,
        "(ba)⊕ exists": ba_c is not None,
    }
    target = e @ c
    checks["(ab)⊕=b⊕a⊕"] = ab_c == target
    checks["b⊕a⊕=(a⊕)²"] = target == c @ c
    checks["(a⊕)²=(a²)⊕"] = c @ c == a2_c
    checks["(a²)⊕=(ba)⊕"] = a2_c == ba_c
    notes = Counter()
    if is_ep(a):
        notes["a_ep"] = 1
        checks["a EP ⇒ ab EP"] = is_ep(a @ b)
    return _judge(checks, notes)


def _check_l31(ctx, a, b):
    if core_inverse(a) is None:
        return _skip("a not core invertible")
    d = leq(OK.CORE, a, b)
    return _judge({"core ⟺ left-star ∧ right-sharp":
                   d == (leq(OK.LEFT_STAR, a, b) and leq(OK.RIGHT_SHARP, a, b))},
                  Counter(holds=int(d)))


def _check_t32(ctx, a, b):
    c, e, why = _core_pair(a, b)
    if why:
        return _skip(why)
    d1 = leq(OK.CORE, a, b)
    ls = leq(OK.LEFT_STAR, a, b)
    rs = leq(OK.RIGHT_SHARP, a, b)
    bcb = b @ c @ b == a
    clauses = {
        "(2) left-star ∧ ba⊕b=a": ls and bcb,
        "(3) left-star ∧ b⊕aa⊕=a⊕": ls and e @ a @ c == c,
        "(4) left-star ∧ b⊕ab⊕=a⊕": ls and e @ a @ e == c,
        "(5) right-sharp ∧ ba⊕b=a": rs and bcb,
        "(6) right-sharp ∧ a⊕ab⊕=a⊕": rs and c @ a @ e == c,
    }
    return _judge({f"(1) ⟺ {k}": d1 == v for k, v in clauses.items()}, Counter(holds=int(d1)))


def _check_p34(ctx, a, b):
    if core_inverse(a) is None:
        return _skip("a not core invertible")
    if not leq(OK.CORE, a, b):
        return _skip("a ≰⊕ b")
    sharp = leq(OK.SHARP, a, b)
    commute = a @ b == b @ a
    powers = {}
    checks = {}
    for k in P34_POWERS:
        try:
            powers[k] = leq(OK.CORE, a ** k, b ** k)
        except InverseMissing:
            checks[f"(a^{k})⊕ exists"] = False
            powers[k] = None
    checks["(1) sharp ⟺ (2) ab=ba"] = sharp == commute
    checks["(2) ⟺ (3) a²≤⊕b²"] = commute == powers[2]
    checks["(3) ⟺ (4) a^k≤⊕b^k for k≤4"] = powers[2] == all(powers[k] for k in P34_POWERS)
    if commute:
        for k in P34_POWERS:
            checks[f"ab^{k - 1}=a^{k}"] = a @ b ** (k - 1) == a ** k
    return _judge(checks, Counter(commuting=int(commute)))


def _check_p36(ctx, a, b):
    if not is_ep(a):
        return _skip("a not EP")
    v = [leq(OK.CORE, a, b), leq(OK.SHARP, a, b), leq(OK.STAR, a, b)]
    return _judge({"core ⟺ sharp ⟺ star": _all_equal(v)}, Counter(holds=int(v[0])))


def _check_r25(ctx, a, b):
    c = core_inverse(a)
    if c is None:
        return _skip("a not core invertible")
    m = mp_inverse(a)
    if m is None:
        return _skip("a has no Moore-Penrose inverse")
    s = group_inverse(a)
    one = c @ b @ c == c
    two = m @ b @ s == c
    checks = {"(2) ⇒ (1)": one or not two}
    notes = Counter()
    if is_ep(a):
        checks["a EP: (1) ⇒ (2)"] = two or not one
    elif one and not two:
        notes["converse_refuted"] = 1
    return _judge(checks, notes)


def _check_r33(ctx, a, b):
    if core_inverse(a) is None:
        return _skip("a not core invertible")
    if not is_ep(b):
        return _skip("b not EP")
    c, e = core_inverse(a), core_inverse(b)
    core = leq(OK.CORE, a, b)
    rider = e @ a @ e == c
    claimed = leq(OK.RIGHT_STAR, a, b) and rider
    corrected = leq(OK.LEFT_STAR, a, b) and rider
    notes = Counter()
    if core != claimed:
        notes["claim_refuted"] = 1
    return _judge({"core ⟺ left-star ∧ b⊕ab⊕=a⊕": core == corrected}, notes)


CHECKERS: dict[TheoremId, Callable[[Context, Matrix, Matrix], Outcome]] = {
    TheoremId.L21: _check_l21,
    TheoremId.L22: _check_l22,
    TheoremId.T23: _check_t23,
    TheoremId.T24: _check_t24,
    TheoremId.R25: _check_r25,
    TheoremId.L26: _check_l26,
    TheoremId.T27: _check_t27,
    TheoremId.P28: _check_p28,
    TheoremId.L28: _check_l28,
    TheoremId.T29: _check_t29,
    TheoremId.L31: _check_l31,
    TheoremId.T32: _check_t32,
    TheoremId.R33: _check_r33,
    TheoremId.P34: _check_p34,
    TheoremId.P36: _check_p36,
}


# -- the two published counterexamples ----------------------------------------

def _m(rows):
    return Matrix.from_rows(Q, rows)


FIXTURE_A = _m([[1, 1], [0, 0]])
FIXTURE_B = _m([[1, 1], [0, 1]])


def r25_fixture() -> dict:
    """A = B = [[1,1],[0,0]]: A⊕BA⊕ = A⊕ although A†BA# ≠ A⊕."""
    A = B = FIXTURE_A
    c, m, s = core_inverse(A), mp_inverse(A), group_inverse(A)
    return {
        "A#": s, "A†": m, "A⊕": c,
        "A†BA#": m @ B @ s,
        "A⊕BA⊕=A⊕": c @ B @ c == c,
        "A†BA#≠A⊕": m @ B @ s != c,
        "A EP": is_ep(A),
    }


def r33_fixture() -> dict:
    """A ≤⊕ B with B EP, yet AA* ≠ BA*, so the right-star version fails."""
    A, B = FIXTURE_A, FIXTURE_B
    c, e = core_inverse(A), core_inverse(B)
    claimed = leq(OK.RIGHT_STAR, A, B) and e @ A @ e == c
    return {
        "AA*": A @ A.star(), "BA*": B @ A.star(),
        "A core invertible": c is not None,
        "B EP": is_ep(B),
        "A≤⊕B": leq(OK.CORE, A, B),
        "AA*≠BA*": A @ A.star() != B @ A.star(),
        "claimed equivalence fails": leq(OK.CORE, A, B) != claimed,
    }


def _fixture_outcome(tid: TheoremId) -> Outcome:
    if tid is TheoremId.R25:
        fx = r25_fixture()
        checks = {
            "A#=A": fx["A#"] == FIXTURE_A,
            "A†=[[1/2,0],[1/2,0]]": fx["A†"] == _m([[Fraction(1, 2), 0], [Fraction(1, 2), 0]]),
            "A⊕=[[1,0],[0,0]]": fx["A⊕"] == _m([[1, 0], [0, 0]]),
            "A⊕BA⊕=A⊕": fx["A⊕BA⊕=A⊕"],
            "A†BA#≠A⊕": fx["A†BA#≠A⊕"],
        }
    else:
        fx = r33_fixture()
        checks = {k: fx[k] for k in ("A core invertible", "B EP", "A≤⊕B", "AA*≠BA*",
                                     "claimed equivalence fails")}
    return _judge(checks)


# -- reports -----------------------------------------------------------------

@dataclass
class TheoremReport:
    theorem: TheoremId
    population: dict
    tested: int = 0
    skipped: int = 0
    passed: int = 0
    failed: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    skip_reasons: dict[str, int] = field(default_factory=dict)
    observations: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "population": self.population,
            "tested": self.tested,
            "skipped": self.skipped,
            "passed": self.passed,
            "failed": self.failed,
            "counterexamples": self.counterexamples,
            "skip_reasons": dict(sorted(self.skip_reasons.items())),
            "observations": dict(sorted(self.observations.items())),
        }

    def summary_line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        pop = self.population
        where = f"{pop['field']} dim {pop['dim']} {pop['mode']}"
        return (f"{self.theorem.value:4} {where:28} tested {self.tested:6} skipped {self.skipped:6} "
                f"passed {self.passed:6} failed {self.failed:3}  {status}")


def _payload(case, a: Matrix, b: Matrix, outcome: Outcome) -> dict:
    return {"case": case, "a": format_matrix(a), "b": format_matrix(b), "failed": outcome.failed}


def run_case(tid: TheoremId, a: Matrix, b: Matrix) -> Outcome:
    """Run one case; library errors turn into a skip carrying their message."""
    ctx = context_for(a.field, a.rows)
    try:
        return CHECKERS[tid](ctx, a, b)
    except GinvError as e:
        return _skip(f"{type(e).__name__}: {e}")


def replay(tid: TheoremId | str, payload: dict) -> Outcome:
    """Re-run a stored counterexample payload."""
    if isinstance(tid, str):
        tid = TheoremId.parse(tid)
    if payload.get("case") == "fixture":
        return _fixture_outcome(tid)
    return run_case(tid, parse_matrix(payload["a"]), parse_matrix(payload["b"]))


def check_theorem(tid: TheoremId | str, pop: Population,
                  cases: Iterable[tuple[Matrix, Matrix]] | None = None) -> TheoremReport:
    if isinstance(tid, str):
        tid = TheoremId.parse(tid)
    if tid not in CHECKERS:
        raise UnknownTheorem(tid)
    report = TheoremReport(tid, pop.summary())
    reasons: Counter = Counter()
    notes: Counter = Counter()

    def record(case, a, b, out: Outcome):
        report.tested += 1
        notes.update(out.notes)
        if out.status == "skip":
            report.skipped += 1
            reasons[out.reason] += 1
        elif out.status == "pass":
            report.passed += 1
        else:
            report.failed += 1
            if len(report.counterexamples) < MAX_COUNTEREXAMPLES:
                report.counterexamples.append(_payload(case, a, b, out))

    if tid in (TheoremId.R25, TheoremId.R33):
        record("fixture", FIXTURE_A, FIXTURE_A if tid is TheoremId.R25 else FIXTURE_B,
               _fixture_outcome(tid))
    for i, (a, b) in enumerate(pop.pairs() if cases is None else cases):
        record(i, a, b, run_case(tid, a, b))
    report.skip_reasons = dict(reasons)
    report.observations = {k: v for k, v in notes.items() if v}
    return report


def reproduce_remarks() -> tuple[TheoremReport, TheoremReport]:
    pop = Population.exhaustive("GF(2)", 2)
    return check_theorem(TheoremId.R25, pop), check_theorem(TheoremId.R33, pop)


def _run_one(job):
    tid, pop = job
    return check_theorem(tid, pop)


def run_campaign(ids: Iterable[TheoremId | str], pops: Sequence[Population],
                 workers: int = 1) -> list[TheoremReport]:
    """Every (theorem, population) combination, in id-major order.

    Jobs are independent; with ``workers > 1`` they run in a process pool, and
    the result order is fixed by the job list, not by completion.
    """
    ids = [TheoremId.parse(t) if isinstance(t, str) else t for t in ids]
    jobs = [(t, p) for t in ids for p in pops]
    if workers <= 1 or len(jobs) <= 1:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(_run_one, jobs))


def transitivity_survey(fld: FieldSpec | str, dim: int = 2) -> dict[str, int]:
    """Count core-order chains a ≤⊕ b ≤⊕ c over an enumerable ring.

    Chains with a core invertible middle element are expected to satisfy
    a ≤⊕ c; chains whose middle is not core invertible are only tallied,
    since nothing is claimed about them.
    """
    fld = parse_field(fld) if isinstance(fld, str) else fld
    ms = list(enumerate_matrices(fld, dim))
    inv = [m for m in ms if core_inverse(m) is not None]
    above = {a: [b for b in ms if leq(OK.CORE, a, b)] for a in inv}
    out = Counter()
    for a in inv:
        for b in above[a]:
            if b in above:
                for c in above[b]:
                    key = "chains_core_middle_" + ("transitive" if leq(OK.CORE, a, c) else "violations")
                    out[key] += 1
            else:
                # b has no core inverse; "b ≤⊕ c" is read through the
                # annihilator form b² = cb, b*b = b*c, which needs no inverse
                bh = b.star()
                for c in ms:
                    if b @ b == c @ b and bh @ b == bh @ c:
                        key = "chains_other_middle_" + ("transitive" if leq(OK.CORE, a, c) else "intransitive")
                        out[key] += 1
    return dict(sorted(out.items()))
