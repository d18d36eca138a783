"""Plain (commutative) polynomial arithmetic over Z_q.

Polynomials are tuples of residues in ascending degree with no trailing
zeros; the zero polynomial is the empty tuple and its degree is NEG_INF.
This is the coefficient arithmetic behind the cyclic Z_q block of mixed
codes; the skew machinery lives in `skewpoly`.
"""

from __future__ import annotations

from itertools import product
from math import gcd

from .errors import EnumerationCapExceeded, NonUnitLeadingCoeff, ParseError

NEG_INF = float("-inf")

ZPoly = tuple[int, ...]


def znorm(coeffs, q: int) -> ZPoly:
    out = [c % q for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def zdeg(p: ZPoly):
    return len(p) - 1 if p else NEG_INF


def zadd(f: ZPoly, g: ZPoly, q: int) -> ZPoly:
    n = max(len(f), len(g))
    return znorm([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], q)


def zsub(f: ZPoly, g: ZPoly, q: int) -> ZPoly:
    n = max(len(f), len(g))
    return znorm([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], q)


def zmul(f: ZPoly, g: ZPoly, q: int) -> ZPoly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] += fi * gj
    return znorm(out, q)


def zdivmod(f: ZPoly, g: ZPoly, q: int) -> tuple[ZPoly, ZPoly]:
    """f = quot*g + rem with deg rem < deg g; g must have a unit leading coeff."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if gcd(g[-1], q) != 1:
        raise NonUnitLeadingCoeff(f"leading coefficient {g[-1]} is not a unit mod {q}")
    inv = pow(g[-1], -1, q)
    rem = list(f)
    dg = len(g) - 1
    quot = [0] * max(len(f) - dg, 0)
    for t in range(len(rem) - 1 - dg, -1, -1):
        c = (rem[t + dg] * inv) % q
        if c:
            quot[t] = c
            for j, gj in enumerate(g):
                rem[t + j] = (rem[t + j] - c * gj) % q
    return znorm(quot, q), znorm(rem, q)


def xn_minus_1(n: int, q: int) -> ZPoly:
    return znorm([-1] + [0] * (n - 1) + [1], q)


def divides(g: ZPoly, f: ZPoly, q: int) -> bool:
    _, rem = zdivmod(f, g, q)
    return rem == ()


def zmod_xn_minus_1(f: ZPoly, n: int, q: int) -> ZPoly:
    """Reduce using x^n = 1."""
    out = [0] * n
    for i, c in enumerate(f):
        out[i % n] = (out[i % n] + c) % q
    return znorm(out, q)


def to_vector(f: ZPoly, n: int) -> tuple[int, ...]:
    if len(f) > n:
        raise ValueError(f"degree {len(f) - 1} does not fit in length {n}")
    return tuple(f) + (0,) * (n - len(f))


def cyclic_shift(vec: tuple[int, ...]) -> tuple[int, ...]:
    """(e_0, ..., e_{n-1}) -> (e_{n-1}, e_0, ..., e_{n-2})."""
    return (vec[-1],) + vec[:-1]


def zq_span(rows, q: int, cap: int = 1 << 24) -> set[tuple[int, ...]]:
    """All Z_q-linear combinations of the given integer vectors."""
    rows = list(rows)
    n = len(rows[0]) if rows else 0
    span = {(0,) * n}
    for row in rows:
        if len(span) * q > cap:
            raise EnumerationCapExceeded(f"span would exceed cap {cap}")
        multiples = [tuple((c * x) % q for x in row) for c in range(q)]
        span = {tuple((a + b) % q for a, b in zip(s, mult)) for s in span for mult in multiples}
    return span


def cyclic_code_words(g: ZPoly, n: int, q: int, cap: int = 1 << 24) -> set[tuple[int, ...]]:
    """The cyclic code of length n generated by g, as a set of vectors."""
    g = zmod_xn_minus_1(g, n, q)
    rows = []
    vec = to_vector(g, n)
    for _ in range(n):
        rows.append(vec)
        vec = cyclic_shift(vec)
    return zq_span(rows, q, cap=cap)


def is_cyclic_closed(words) -> bool:
    return all(cyclic_shift(w) in words for w in words)


def parse_zq_digits(text: str, q: int) -> ZPoly:
    """Ascending digit string, e.g. 31212201 -> 3 + x + 2x^2 + x^3 + 2x^4 + 2x^5 + x^7."""
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial string", position=0)
    coeffs = []
    for pos, ch in enumerate(text):
        if not ch.isdigit():
            raise ParseError(f"invalid character {ch!r} in digit string", position=pos)
        val = int(ch)
        if val >= q:
            raise ParseError(f"digit {val} is not a residue mod {q}", position=pos)
        coeffs.append(val)
    return znorm(coeffs, q)


def format_zq_digits(f: ZPoly) -> str:
    if not f:
        return "0"
    return "".join(str(c) for c in f)


def monic_divisors(n: int, q: int, max_deg: int | None = None):
    """Yield all monic divisors of x^n - 1 over Z_q, lowest degree first."""
    f = xn_minus_1(n, q)
    top = n if max_deg is None else min(max_deg, n)
    for deg in range(top + 1):
        for tail in product(range(q), repeat=deg):
            g = znorm(list(tail) + [1], q)
            if divides(g, f, q):
                yield g
