"""Z_qR-linear skew constacyclic codes of block length (alpha, beta).

A mixed code is generated by a pair (g_alpha, g_beta): a divisor of
x^alpha - 1 over Z_q next to a divisor of x^beta - lam in R[x; theta].
The builder materializes the module span as the Z_q row space of the
iterated shifts of the generator pair and of u times them, which is the
full left-module orbit; rank finding is left to the Z_q linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np

from .errors import (
    EnumerationCapExceeded,
    GeneratorNotDivisor,
    LengthMismatch,
    NotAParityCheck,
)
from .rings import (
    Automorphism,
    MixedWord,
    RingElem,
    RingParams,
    R_U,
    R_ZERO,
    apply_theta,
    eta,
    is_unit,
    mixed_add,
    relem_mul,
    star_mul,
)
from .skewpoly import (
    SkewPoly,
    binomial,
    skew_left_divide,
    skew_mul,
    skew_right_divide,
)
from .rcodes import consta_shift, poly_to_rvector
from . import zqpoly


@dataclass(frozen=True)
class MixedCodeSpec:
    alpha: int
    beta: int
    lam: RingElem
    theta: Automorphism
    g_alpha: zqpoly.ZPoly
    g_beta: SkewPoly

    @property
    def ring(self) -> RingParams:
        return self.g_beta.ring

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("alpha and beta must be positive")
        if not is_unit(self.lam, self.ring):
            raise ValueError(f"lambda {self.lam} must be a unit")


@dataclass(frozen=True)
class MixedCode:
    spec: MixedCodeSpec | None
    rows: tuple[MixedWord, ...]
    words: frozenset[MixedWord] | None
    side: str | None = None  # which factorization side validated g_beta

    @property
    def alpha(self) -> int:
        return len(self.rows[0].zq) if self.rows else len(next(iter(self.words)).zq)

    @property
    def beta(self) -> int:
        return len(self.rows[0].r) if self.rows else len(next(iter(self.words)).r)


def mixed_shift(w: MixedWord, lam: RingElem, theta: Automorphism, params: RingParams) -> MixedWord:
    """Rotate the Z_q block; twist-rotate the R block by lam and theta."""
    if not w.zq or not w.r:
        raise LengthMismatch("mixed shift needs both blocks non-empty")
    zq = (w.zq[-1],) + w.zq[:-1]
    wrapped = relem_mul(lam, apply_theta(theta, w.r[-1]), params)
    r = (wrapped,) + tuple(apply_theta(theta, x) for x in w.r[:-1])
    return MixedWord(zq, r)


def poly_scalar_action(
    h: SkewPoly, pair: tuple[zqpoly.ZPoly, SkewPoly], alpha: int, beta: int, lam: RingElem
) -> tuple[zqpoly.ZPoly, SkewPoly]:
    """h(x) . (f, g) = (eta(h) f mod x^alpha - 1, h * g mod x^beta - lam)."""
    f, g = pair
    ring, theta = h.ring, h.theta
    q = ring.q
    eta_h = zqpoly.znorm([eta(c) for c in h.coeffs], q)
    zpart = zqpoly.zmod_xn_minus_1(zqpoly.zmul(eta_h, f, q), alpha, q)
    prod_ = skew_mul(h, g)
    _, rpart = skew_right_divide(prod_, binomial(beta, lam, ring, theta))
    return zpart, rpart


def generator_from_parity(
    h: SkewPoly, beta: int, lam: RingElem
) -> tuple[SkewPoly, str]:
    """Recover g from the parity check h; returns (g, side).

    The side marker names the factorization form that held: "g*h" when
    x^beta - lam = g*h (tried first) and "h*g" for the mirror order.
    """
    if h.is_zero() or h.leading() != RingElem(1, 0):
        raise ValueError("parity-check polynomial must be monic")
    modulus = binomial(beta, lam, h.ring, h.theta)
    g, rem = skew_right_divide(modulus, h)
    if rem.is_zero():
        return g, "g*h"
    g, rem = skew_left_divide(modulus, h)
    if rem.is_zero():
        return g, "h*g"
    raise NotAParityCheck(f"{h} divides x^{beta} - lam on neither side")


def _validate_spec(spec: MixedCodeSpec) -> str:
    q = spec.ring.q
    if not zqpoly.divides(spec.g_alpha, zqpoly.xn_minus_1(spec.alpha, q), q):
        raise GeneratorNotDivisor(f"g_alpha does not divide x^{spec.alpha} - 1 over Z_{q}")
    modulus = binomial(spec.beta, spec.lam, spec.ring, spec.theta)
    if spec.g_beta.is_zero():
        raise GeneratorNotDivisor("zero g_beta")
    _, rem = skew_left_divide(modulus, spec.g_beta)
    if rem.is_zero():
        return "g*h"
    _, rem = skew_right_divide(modulus, spec.g_beta)
    if rem.is_zero():
        return "h*g"
    raise GeneratorNotDivisor(f"g_beta divides x^{spec.beta} - lam on neither side")


def generating_rows(spec: MixedCodeSpec, depth: int = 1) -> list[MixedWord]:
    """The orbit rows {x^i . g} and {u x^i . g} for i < depth * m * lcm(alpha, beta)."""
    ring, theta = spec.ring, spec.theta
    q = ring.q
    f = zqpoly.zmod_xn_minus_1(spec.g_alpha, spec.alpha, q)
    _, red = skew_right_divide(
        spec.g_beta, binomial(spec.beta, spec.lam, ring, theta)
    )
    word = MixedWord(zqpoly.to_vector(f, spec.alpha), poly_to_rvector(red, spec.beta))
    bound = depth * theta.m * lcm(spec.alpha, spec.beta)
    rows = []
    for _ in range(bound):
        rows.append(word)
        rows.append(star_mul(R_U, word, ring))
        word = mixed_shift(word, spec.lam, theta, ring)
    return rows


def spanning_rows(spec: MixedCodeSpec) -> list[MixedWord]:
    """Message-matched encoder rows: 2l rows for l = beta - deg(g_beta).

    The length-beta block code has the Z_q basis [g, x*g, ..., x^{l-1}*g,
    u*g, ..., u*x^{l-1}*g]; the j-th basis vector is paired with the
    Z_q-block row x^j * g_alpha while j stays below dim C_alpha and with a
    zero block afterwards.  The Z_q-span of these rows is the free-rank
    code the published tables report; unlike the full module span it keeps
    |code| = |R|^l.
    """
    ring, theta = spec.ring, spec.theta
    q = ring.q
    _, red = skew_right_divide(spec.g_beta, binomial(spec.beta, spec.lam, ring, theta))
    nrows = max(spec.beta - int(spec.g_beta.degree), 0)
    dim_alpha = spec.alpha - (len(spec.g_alpha) - 1)
    bvec = poly_to_rvector(red, spec.beta)
    brows = []
    for _ in range(nrows):
        brows.append(bvec)
        bvec = consta_shift(bvec, spec.lam, theta, ring)
    urows = [tuple(RingElem(0, x.a) for x in v) for v in brows]
    avec = zqpoly.to_vector(zqpoly.zmod_xn_minus_1(spec.g_alpha, spec.alpha, q), spec.alpha)
    arows = []
    for j in range(2 * len(brows)):
        arows.append(avec if j < dim_alpha else (0,) * spec.alpha)
        avec = zqpoly.cyclic_shift(avec)
    return [MixedWord(a, b) for a, b in zip(arows, brows + urows)]


def build_spanning_code(
    spec: MixedCodeSpec, explicit: bool = False, cap: int = 1 << 24
) -> MixedCode:
    """The code spanned by spanning_rows; the table-reproduction construction."""
    side = _validate_spec(spec)
    rows = spanning_rows(spec)
    words = frozenset(mixed_span(rows, spec.ring, cap=cap)) if explicit else None
    return MixedCode(spec, tuple(rows), words, side=side)


def build_mixed_code(
    spec: MixedCodeSpec, explicit: bool = False, cap: int = 1 << 24, depth: int = 1
) -> MixedCode:
    """Construct the code generated by (g_alpha, g_beta).

    With explicit=True the full codeword set is materialized (desk scale,
    guarded by cap); otherwise only the generating rows are kept and
    downstream linear algebra works on their Gray images.
    """
    side = _validate_spec(spec)
    rows = generating_rows(spec, depth=depth)
    words = frozenset(mixed_span(rows, spec.ring, cap=cap)) if explicit else None
    return MixedCode(spec, tuple(rows), words, side=side)


def mixed_span(rows, params: RingParams, cap: int = 1 << 24) -> set[MixedWord]:
    """Z_q-span of mixed words (the rows already include their u-multiples)."""
    rows = list(rows)
    if not rows:
        return set()
    q = params.q
    zero = MixedWord((0,) * len(rows[0].zq), (R_ZERO,) * len(rows[0].r))
    span = {zero}
    for row in rows:
        if row in span:
            continue
        if len(span) * q > cap:
            raise EnumerationCapExceeded(f"span would exceed cap {cap}")
        multiples = [star_mul(RingElem(c, 0), row, params) for c in range(q)]
        span = {mixed_add(s, mult, params) for s in span for mult in multiples}
    return span


def separable_product(alpha_words, beta_words, params: RingParams) -> MixedCode:
    """The direct product C_alpha x C_beta as an explicit mixed code."""
    words = frozenset(
        MixedWord(tuple(e), tuple(r)) for e in alpha_words for r in beta_words
    )
    return MixedCode(spec=None, rows=(), words=words, side=None)


def is_mixed_shift_closed(words, lam: RingElem, theta: Automorphism, params: RingParams) -> bool:
    words = set(words)
    return all(mixed_shift(w, lam, theta, params) in words for w in words)


def brute_dual_mixed(
    code: MixedCode, params: RingParams | None = None, cap: int = 1 << 24
) -> frozenset[MixedWord]:
    """All mixed words orthogonal to the code under the mixed inner product.

    Orthogonality means the full R value vanishes, unit part and u-part
    both.  Scanning against the generating rows (or the explicit words
    when no rows are stored) is exact because the form is additive in the
    code argument.
    """
    if params is None:
        if code.spec is None:
            raise ValueError("params required when the code carries no spec")
        params = code.spec.ring
    return dual_of_mixed_words(
        code.rows if code.rows else code.words, code.alpha, code.beta, params, cap=cap
    )


def dual_of_mixed_words(
    gens, alpha: int, beta: int, params: RingParams, cap: int = 1 << 24
) -> frozenset[MixedWord]:
    q = params.q
    total = q**alpha * q ** (2 * beta)
    if total > cap:
        raise EnumerationCapExceeded(f"{total} dual candidates exceed cap {cap}")
    n = total
    idx = np.arange(n, dtype=np.int64)
    e = np.empty((n, alpha), dtype=np.int64)
    a = np.empty((n, beta), dtype=np.int64)
    b = np.empty((n, beta), dtype=np.int64)
    rem = idx.copy()
    for j in range(beta - 1, -1, -1):
        b[:, j] = rem % q
        rem //= q
        a[:, j] = rem % q
        rem //= q
    for j in range(alpha - 1, -1, -1):
        e[:, j] = rem % q
        rem //= q
    keep = np.ones(n, dtype=bool)
    for g in gens:
        gz = np.array(g.zq, dtype=np.int64)
        ga = np.array([x.a for x in g.r], dtype=np.int64)
        gb = np.array([x.b for x in g.r], dtype=np.int64)
        unit = (a @ ga) % q
        upart = (e @ gz + b @ ga + a @ gb) % q
        keep &= (unit == 0) & (upart == 0)
    out = set()
    for i in np.nonzero(keep)[0]:
        out.add(
            MixedWord(
                tuple(int(x) for x in e[i]),
                tuple(RingElem(int(x), int(y)) for x, y in zip(a[i], b[i])),
            )
        )
    return frozenset(out)


@dataclass(frozen=True)
class DoubleSpec:
    """Two mixed ambients shifted simultaneously, sharing lam and theta."""

    alpha: int
    beta: int
    alpha2: int
    beta2: int
    lam: RingElem
    theta: Automorphism
    g_alpha: zqpoly.ZPoly
    g_beta: SkewPoly
    g_alpha2: zqpoly.ZPoly
    g_beta2: SkewPoly

    @property
    def ring(self) -> RingParams:
        return self.g_beta.ring

    @property
    def n1(self) -> int:
        return self.alpha + 2 * self.beta

    @property
    def n2(self) -> int:
        return self.alpha2 + 2 * self.beta2


DoubleWord = tuple[MixedWord, MixedWord]


def double_shift(w: DoubleWord, lam: RingElem, theta: Automorphism, params: RingParams) -> DoubleWord:
    return (
        mixed_shift(w[0], lam, theta, params),
        mixed_shift(w[1], lam, theta, params),
    )


def is_double_shift_closed(words, lam: RingElem, theta: Automorphism, params: RingParams) -> bool:
    words = set(words)
    return all(double_shift(w, lam, theta, params) in words for w in words)


def build_double_code(dspec: DoubleSpec, cap: int = 1 << 24) -> frozenset[DoubleWord]:
    """Span of the four-block generator under h . (f,g,f',g') = (eta(h)f, h*g, eta(h)f', h*g')."""
    ring, theta = dspec.ring, dspec.theta
    q = ring.q
    f1 = zqpoly.zmod_xn_minus_1(dspec.g_alpha, dspec.alpha, q)
    f2 = zqpoly.zmod_xn_minus_1(dspec.g_alpha2, dspec.alpha2, q)
    _, r1 = skew_right_divide(dspec.g_beta, binomial(dspec.beta, dspec.lam, ring, theta))
    _, r2 = skew_right_divide(dspec.g_beta2, binomial(dspec.beta2, dspec.lam, ring, theta))
    word: DoubleWord = (
        MixedWord(zqpoly.to_vector(f1, dspec.alpha), poly_to_rvector(r1, dspec.beta)),
        MixedWord(zqpoly.to_vector(f2, dspec.alpha2), poly_to_rvector(r2, dspec.beta2)),
    )
    bound = theta.m * lcm(dspec.alpha, dspec.beta, dspec.alpha2, dspec.beta2)
    rows: list[DoubleWord] = []
    for _ in range(bound):
        rows.append(word)
        rows.append((star_mul(R_U, word[0], ring), star_mul(R_U, word[1], ring)))
        word = double_shift(word, dspec.lam, theta, ring)
    zero = (
        MixedWord((0,) * dspec.alpha, (R_ZERO,) * dspec.beta),
        MixedWord((0,) * dspec.alpha2, (R_ZERO,) * dspec.beta2),
    )
    span: set[DoubleWord] = {zero}
    for row in rows:
        if row in span:
            continue
        if len(span) * q > cap:
            raise EnumerationCapExceeded(f"span would exceed cap {cap}")
        multiples = [
            (star_mul(RingElem(c, 0), row[0], ring), star_mul(RingElem(c, 0), row[1], ring))
            for c in range(q)
        ]
        span = {
            (mixed_add(s[0], m[0], ring), mixed_add(s[1], m[1], ring))
            for s in span
            for m in multiples
        }
    return frozenset(span)
