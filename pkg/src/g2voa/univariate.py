"""Dense univariate polynomials over Q: gcd, square-free parts and rational roots.

A polynomial is a list of Fractions, constant term first, with no trailing
zeros; the zero polynomial is the empty list.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Poly = list  # list[Fraction]


def trim(p: Sequence) -> Poly:
    out = [Fraction(c) for c in p]
    while out and not out[-1]:
        out.pop()
    return out


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def monic(p: Sequence) -> Poly:
    p = trim(p)
    return [c / p[-1] for c in p] if p else []


def sub(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def mul(p: Sequence, q: Sequence) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def divmod_poly(p: Sequence, q: Sequence) -> tuple[Poly, Poly]:
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    while len(rem) >= len(q):
        c = rem[-1] / q[-1]
        k = len(rem) - len(q)
        quot[k] = c
        for i, b in enumerate(q):
            rem[k + i] -= c * b
        rem = trim(rem)
    return trim(quot), rem


def gcd(p: Sequence, q: Sequence) -> Poly:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def derivative(p: Sequence) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def evaluate(p: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def square_free_factors(p: Sequence) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic square-free ``f_i`` with ``p = lc * prod f_i^i``."""
    p = monic(p)
    if len(p) <= 1:
        return []
    out = []
    a = gcd(p, derivative(p))
    b = divmod_poly(p, a)[0]
    c = divmod_poly(derivative(p), a)[0]
    d = sub(c, derivative(b))
    i = 1
    while degree(b) > 0:
        f = gcd(b, d)
        b = divmod_poly(b, f)[0]
        c = divmod_poly(d, f)[0]
        d = sub(c, derivative(b))
        if degree(f) > 0:
            out.append((f, i))
        i += 1
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p: Sequence) -> list[Fraction]:
    """Distinct rational roots, by the rational root theorem."""
    p = trim(p)
    if not p:
        raise ValueError("the zero polynomial has every number as a root")
    roots = []
    while p and not p[0]:  # factor out x
        p = p[1:]
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(p) <= 1:
        return sorted(roots)
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    for num in _divisors(ints[0]):
        for dd in _divisors(ints[-1]):
            for cand in (Fraction(num, dd), Fraction(-num, dd)):
                if cand not in roots and evaluate(p, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def split_rational(p: Sequence) -> tuple[list[Fraction], Poly]:
    """Distinct rational roots of ``p`` and the monic part with no rational roots.

    The second entry is square-free-reduced: it is the product of the
    square-free parts' factors that have no rational root.
    """
    roots: list[Fraction] = []
    rest: Poly = [Fraction(1)]
    for f, _ in square_free_factors(p):
        rs = rational_roots(f)
        roots.extend(rs)
        for r in rs:
            f = divmod_poly(f, [-r, Fraction(1)])[0]
        rest = mul(rest, f)
    return sorted(set(roots)), monic(rest)


def to_text(p: Sequence, var: str = "x") -> str:
    p = trim(p)
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            mono = "" if i == 0 else f" * {var}" if i == 1 else f" * {var}^{i}"
            parts.append(f"{p[i]}{mono}")
    return " + ".join(parts)
