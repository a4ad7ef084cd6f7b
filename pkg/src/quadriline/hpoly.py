"""Dense homogeneous polynomials in two variables.

A form of degree d is a tuple ``(c0, ..., cd)`` standing for
``sum(c[i] * S**(d-i) * T**i)``.  Length-1 tuples are constants.  All
coefficients are exact field elements; arithmetic never leaves the field.
"""

from __future__ import annotations


def mul(f, g):
    n, m = len(f), len(g)
    out = []
    for k in range(n + m - 1):
        acc = None
        for i in range(max(0, k - m + 1), min(k, n - 1) + 1):
            term = f[i] * g[k - i]
            acc = term if acc is None else acc + term
        out.append(acc)
    return tuple(out)


def add(f, g):
    if len(f) != len(g):
        raise ValueError("degree mismatch in add")
    return tuple(a + b for a, b in zip(f, g))


def sub(f, g):
    if len(f) != len(g):
        raise ValueError("degree mismatch in sub")
    return tuple(a - b for a, b in zip(f, g))


def scale(k, f):
    return tuple(k * c for c in f)


def neg(f):
    return tuple(-c for c in f)


def eval_at(f, s, t):
    d = len(f) - 1
    acc = None
    for i, c in enumerate(f):
        term = c * s ** (d - i) * t ** i
        acc = term if acc is None else acc + term
    return acc


def is_zero(f):
    return all(not c for c in f)


def divides(f, g) -> bool:
    """Exact divisibility of homogeneous forms: does f divide g in k[S,T]?"""
    if is_zero(f):
        return is_zero(g)
    if is_zero(g):
        return True
    if len(g) < len(f):
        return False
    # Leading zero coefficients are powers of T; strip and compare valuations.
    fi = next(i for i, c in enumerate(f) if c)
    gi = next(i for i, c in enumerate(g) if c)
    if fi > gi:
        return False
    fc, gc = list(f[fi:]), list(g[gi:])
    # Now fc has an invertible leading coefficient; ordinary long division.
    while len(gc) >= len(fc):
        q = gc[0] / fc[0]
        for i, c in enumerate(fc):
            gc[i] = gc[i] - q * c
        gc.pop(0)  # cancelled by construction
    return all(not c for c in gc)
