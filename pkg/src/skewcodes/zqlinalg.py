"""Linear algebra over Z_q: Howell canonical form, code types, distances.

Z_q has zero divisors, so plain row echelon does not determine a row space
canonically; the Howell form does.  Pivot entries divide q, entries above a
pivot are reduced modulo it, and for every row r with pivot d the multiple
(q/d)*r lies in the span of the later rows.  Those conditions make the form
unique per row space and give a unique mixed-radix coefficient
representation for enumeration.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import gcd, prod

import numpy as np

from .errors import EnumerationCapExceeded, ZeroCode
from .rings import RingParams


@dataclass(frozen=True)
class GenMatrix:
    """Rows generating a Z_q code; `canonical` marks Howell form."""

    rows: tuple[tuple[int, ...], ...]
    ncols: int
    params: RingParams
    canonical: bool = False

    @property
    def q(self) -> int:
        return self.params.q

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")


def gen_matrix(rows, ncols: int, params: RingParams) -> GenMatrix:
    q = params.q
    return GenMatrix(tuple(tuple(x % q for x in r) for r in rows), ncols, params)


@dataclass(frozen=True)
class CodeType:
    """Counts of pivots by p-adic valuation; profile[v] pivots have lead p^v."""

    params: RingParams
    profile: tuple[int, ...]

    @property
    def k1(self) -> int:
        return self.profile[0]

    @property
    def k2(self) -> int:
        return sum(self.profile[1:])

    def count(self) -> int:
        p, s = self.params.p, self.params.s
        return prod(p ** ((s - v) * t) for v, t in enumerate(self.profile))

    def __str__(self) -> str:
        if self.params.s == 2:
            return f"{self.params.q}^{self.k1} {self.params.p}^{self.k2}"
        return "profile" + str(self.profile)


def _lead(row) -> int | None:
    for i, x in enumerate(row):
        if x:
            return i
    return None


def _unit_lifting(a: int, q: int) -> int:
    """A unit w mod q with w*a = gcd(a, q) mod q."""
    a %= q
    if a == 0:
        return 1
    g = gcd(a, q)
    m = q // g
    w = pow((a // g) % m, -1, m)
    while gcd(w, q) != 1:
        w += m
    return w % q


def _solve_scale(a: int, b: int, q: int) -> int | None:
    """t with t*a = b mod q, or None when no solution exists."""
    g = gcd(a, q)
    if b % g:
        return None
    m = q // g
    return ((b // g) * pow((a // g) % m, -1, m)) % q if m > 1 else 0


def howell_form(m: GenMatrix) -> GenMatrix:
    """Canonical Howell form; the row space is preserved exactly."""
    q = m.q
    ncols = m.ncols
    piv: dict[int, list[int]] = {}
    todo = [[x % q for x in r] for r in m.rows]
    while todo:
        r = todo.pop()
        c = _lead(r)
        while c is not None:
            if c not in piv:
                piv[c] = r
                d = gcd(r[c], q)
                extra = [(q // d * x) % q for x in r]
                if any(extra):
                    todo.append(extra)
                break
            p = piv[c]
            t = _solve_scale(p[c], r[c], q)
            if t is not None:
                r = [(x - t * y) % q for x, y in zip(r, p)]
            else:
                # strengthen the pivot ideal via a unimodular gcd transform
                a, b = p[c], r[c]
                g, sa, sb = _xgcd(a, b)
                newp = [(sa * x + sb * y) % q for x, y in zip(p, r)]
                r = [((b // g) * x - (a // g) * y) % q for x, y in zip(p, r)]
                piv[c] = newp
                d = gcd(newp[c], q)
                extra = [(q // d * x) % q for x in newp]
                if any(extra):
                    todo.append(extra)
            c = _lead(r)

    cols = sorted(piv)
    rows = []
    for c in cols:
        row = piv[c]
        w = _unit_lifting(row[c], q)
        rows.append([(w * x) % q for x in row])
    # reduce entries above each pivot modulo the pivot value
    for j, c in enumerate(cols):
        d = rows[j][c]
        for i in range(j):
            t = rows[i][c] // d
            if t:
                rows[i] = [(x - t * y) % q for x, y in zip(rows[i], rows[j])]
    return GenMatrix(tuple(tuple(r) for r in rows), ncols, m.params, canonical=True)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qq = old_r // r
        old_r, r = r, old_r - qq * r
        old_s, s = s, old_s - qq * s
        old_t, t = t, old_t - qq * t
    return old_r, old_s, old_t


def _canonical(m: GenMatrix) -> GenMatrix:
    return m if m.canonical else howell_form(m)


def code_type(m: GenMatrix) -> CodeType:
    """Pivot valuation profile; at q = 4 this is the familiar (k1, k2)."""
    m = _canonical(m)
    p, s, q = m.params.p, m.params.s, m.params.q
    profile = [0] * s
    for row in m.rows:
        d = row[_lead(row)]
        v = 0
        while d % p == 0:
            d //= p
            v += 1
        profile[v] += 1
    return CodeType(m.params, tuple(profile))


def _pivot_counts(m: GenMatrix) -> list[int]:
    """Coefficient range q/d per Howell row; gives the unique representation."""
    q = m.q
    return [q // gcd(row[_lead(row)], q) for row in m.rows]


def enumerate_codewords(m: GenMatrix, cap: int = 1 << 26):
    """Yield every codeword exactly once (mixed-radix over the Howell rows)."""
    m = _canonical(m)
    q = m.q
    counts = _pivot_counts(m)
    total = prod(counts) if counts else 1
    if total > cap:
        raise EnumerationCapExceeded(f"{total} codewords exceed cap {cap}")
    if not m.rows:
        yield (0,) * m.ncols
        return
    for coeffs in product(*(range(c) for c in counts)):
        word = [0] * m.ncols
        for c, row in zip(coeffs, m.rows):
            if c:
                for i, x in enumerate(row):
                    word[i] = (word[i] + c * x) % q
        yield tuple(word)


def codeword_count(m: GenMatrix) -> int:
    return prod(_pivot_counts(_canonical(m)))


def _lee_min_block(rows: np.ndarray, counts: list[int], q: int, start: int, stop: int) -> int:
    """Minimum Lee weight over coefficient indices [start, stop), skipping 0."""
    idx = np.arange(start, stop, dtype=np.int64)
    coeffs = np.empty((len(idx), len(counts)), dtype=np.int64)
    rem = idx.copy()
    for j in range(len(counts) - 1, -1, -1):
        coeffs[:, j] = rem % counts[j]
        rem //= counts[j]
    words = (coeffs @ rows) % q
    weights = np.minimum(words, q - words).sum(axis=1)
    if start == 0:
        weights = weights[1:]
    return int(weights.min()) if weights.size else q * rows.shape[1] + 1


def min_lee_distance(
    m: GenMatrix,
    cap: int = 1 << 26,
    threads: int = 1,
    block: int = 1 << 15,
    abort_below: int | None = None,
) -> int:
    """Exhaustive minimum Lee weight over all nonzero codewords.

    With abort_below set, the scan stops as soon as the running minimum
    drops under that bound and returns the (partial) minimum; the result
    is exact whenever it is >= abort_below.  Target-filtered searches use
    this to discard candidates without finishing their enumeration.
    """
    m = _canonical(m)
    if not m.rows:
        raise ZeroCode("the zero code has no nonzero codeword")
    q = m.q
    counts = _pivot_counts(m)
    total = prod(counts)
    if total > cap:
        raise EnumerationCapExceeded(f"{total} codewords exceed cap {cap}")
    rows = np.array(m.rows, dtype=np.int64)
    ranges = [(s, min(s + block, total)) for s in range(0, total, block)]
    if abort_below is not None:
        # small probe blocks first: most rejected candidates die immediately
        best = q * m.ncols + 1
        start, step = 0, 1 << 10
        while start < total:
            stop = min(start + step, total)
            best = min(best, _lee_min_block(rows, counts, q, start, stop))
            if best < abort_below:
                return best
            start, step = stop, min(step * 4, block)
        return best
    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            mins = list(
                ex.map(lambda se: _lee_min_block(rows, counts, q, se[0], se[1]), ranges)
            )
    else:
        mins = [_lee_min_block(rows, counts, q, s, e) for s, e in ranges]
    return min(mins)


def lee_weight_vector(v, q: int) -> int:
    return sum(min(x % q, q - x % q) for x in v)


def parse_matrix(text: str, params: RingParams) -> GenMatrix:
    """One row per line, comma-separated residues."""
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([int(tok) for tok in line.split(",")])
    if not rows:
        raise ValueError("no rows")
    return gen_matrix(rows, len(rows[0]), params)


def format_matrix(m: GenMatrix) -> str:
    return "\n".join(",".join(str(x) for x in r) for r in m.rows)
