"""Brute-force reference computations over GF(p), written on plain nested
lists so they share no code with the library."""

import itertools


def all_square(p, n):
    for entries in itertools.product(range(p), repeat=n * n):
        yield [list(entries[i * n:(i + 1) * n]) for i in range(n)]


def mul(p, x, y):
    return [[sum(x[i][k] * y[k][j] for k in range(len(y))) % p for j in range(len(y[0]))]
            for i in range(len(x))]


def tr(x):
    return [list(r) for r in zip(*x)]


def span_size(p, x):
    """Number of distinct vectors x @ v, i.e. p ** rank(x)."""
    cols = len(x[0])
    seen = set()
    for v in itertools.product(range(p), repeat=cols):
        seen.add(tuple(sum(x[i][k] * v[k] for k in range(cols)) % p for i in range(len(x))))
    return len(seen)


def rank(p, x):
    size, r = span_size(p, x), 0
    while p ** r < size:
        r += 1
    return r


def inverses(p, a, kind):
    """Every square candidate x satisfying the defining equations of ``kind``
    (transpose involution)."""
    n = len(a)
    out = []
    for x in all_square(p, n):
        ax, xa = mul(p, a, x), mul(p, x, a)
        axa = mul(p, ax, a) == a
        if kind == "inner":
            ok = axa
        elif kind == "one-three":
            ok = axa and tr(ax) == ax
        elif kind == "mp":
            ok = axa and mul(p, xa, x) == x and tr(ax) == ax and tr(xa) == xa
        elif kind == "group":
            ok = axa and mul(p, xa, x) == x and ax == xa
        elif kind == "core":
            ok = tr(ax) == ax and mul(p, x, mul(p, a, a)) == a and mul(p, ax, x) == x
        else:
            raise ValueError(kind)
        if ok:
            out.append(x)
    return out


def solvable(p, b, a):
    """Whether some square X has b X = a."""
    return any(mul(p, b, x) == a for x in all_square(p, len(b)))
