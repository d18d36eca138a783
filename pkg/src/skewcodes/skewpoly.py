"""The skew polynomial ring R[x; theta] with multiplication rule x*a = theta(a)x.

Coefficients are RingElem values in ascending degree, trailing zeros
stripped; the zero polynomial has degree NEG_INF.  Division (left and
right) requires a unit leading coefficient in the divisor, which is the
only case code constructions need.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import (
    ContextMismatch,
    DivisionByZeroPoly,
    EnumerationCapExceeded,
    NonUnitLeadingCoeff,
    ParseError,
)
from .rings import (
    Automorphism,
    RingElem,
    RingParams,
    R_ONE,
    R_U,
    R_ZERO,
    apply_theta,
    format_relem,
    is_unit,
    parse_relem,
    relem_inv,
    relem_mul,
    relem_neg,
    theta_fixes,
)
from .zqpoly import NEG_INF, parse_zq_digits

Coeffs = tuple[RingElem, ...]


@dataclass(frozen=True)
class SkewPoly:
    coeffs: Coeffs
    ring: RingParams
    theta: Automorphism

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> RingElem:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __str__(self) -> str:
        return format_r_poly(self)


def skew_poly(coeffs, ring: RingParams, theta: Automorphism) -> SkewPoly:
    """Build a canonical SkewPoly, reducing mod q and stripping trailing zeros."""
    q = ring.q
    out = [RingElem(c.a % q, c.b % q) for c in coeffs]
    while out and out[-1] == R_ZERO:
        out.pop()
    return SkewPoly(tuple(out), ring, theta)


def zero_poly(ring: RingParams, theta: Automorphism) -> SkewPoly:
    return SkewPoly((), ring, theta)


def one_poly(ring: RingParams, theta: Automorphism) -> SkewPoly:
    return SkewPoly((R_ONE,), ring, theta)


def monomial(c: RingElem, deg: int, ring: RingParams, theta: Automorphism) -> SkewPoly:
    return skew_poly([R_ZERO] * deg + [c], ring, theta)


def binomial(beta: int, lam: RingElem, ring: RingParams, theta: Automorphism) -> SkewPoly:
    """x^beta - lam."""
    return skew_poly([relem_neg(lam, ring)] + [R_ZERO] * (beta - 1) + [R_ONE], ring, theta)


def _require_ctx(f: SkewPoly, g: SkewPoly):
    if f.ring != g.ring or f.theta != g.theta:
        raise ContextMismatch("operands built over different (ring, theta) contexts")


def skew_add(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    _require_ctx(f, g)
    q = f.ring.q
    n = max(len(f.coeffs), len(g.coeffs))
    out = []
    for i in range(n):
        x = f.coeffs[i] if i < len(f.coeffs) else R_ZERO
        y = g.coeffs[i] if i < len(g.coeffs) else R_ZERO
        out.append(RingElem((x.a + y.a) % q, (x.b + y.b) % q))
    return skew_poly(out, f.ring, f.theta)


def skew_sub(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    _require_ctx(f, g)
    q = f.ring.q
    n = max(len(f.coeffs), len(g.coeffs))
    out = []
    for i in range(n):
        x = f.coeffs[i] if i < len(f.coeffs) else R_ZERO
        y = g.coeffs[i] if i < len(g.coeffs) else R_ZERO
        out.append(RingElem((x.a - y.a) % q, (x.b - y.b) % q))
    return skew_poly(out, f.ring, f.theta)


def _raw_mul(fc, gc, q, powers, m):
    """Coefficient lists of (a, b) pairs; returns the unnormalized product list."""
    if not fc or not gc:
        return []
    out_a = [0] * (len(fc) + len(gc) - 1)
    out_b = [0] * (len(fc) + len(gc) - 1)
    for i, (fa, fb) in enumerate(fc):
        if fa == 0 and fb == 0:
            continue
        kj, dj = powers[i % m]
        for j, (ga, gb) in enumerate(gc):
            # theta^i(g_j) = (ga + kj*gb) + u*(dj*gb)
            ta = ga + kj * gb
            tb = dj * gb
            out_a[i + j] += fa * ta
            out_b[i + j] += fa * tb + fb * ta
    return [(a % q, b % q) for a, b in zip(out_a, out_b)]


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """f * g with (a x^i)(b x^j) = a theta^i(b) x^(i+j)."""
    _require_ctx(f, g)
    raw = _raw_mul(f.coeffs, g.coeffs, f.ring.q, f.theta.powers, f.theta.m)
    return skew_poly([RingElem(a, b) for a, b in raw], f.ring, f.theta)


def skew_scalar(c: RingElem, f: SkewPoly) -> SkewPoly:
    """Left multiplication by the constant c (coefficientwise in R)."""
    return skew_poly([relem_mul(c, x, f.ring) for x in f.coeffs], f.ring, f.theta)


def _raw_right_divmod(fc, gc, q, powers, m):
    """Right division on raw (a, b) coefficient lists: f = quot*g + rem.

    The divisor's leading coefficient must be a unit; callers check that.
    Returns (quot, rem) as unnormalized lists.
    """
    rem = list(fc)
    dg = len(gc) - 1
    glead = gc[-1]
    quot = [(0, 0)] * max(len(fc) - dg, 0)
    for t in range(len(rem) - 1 - dg, -1, -1):
        fa, fb = rem[t + dg]
        if fa == 0 and fb == 0:
            continue
        kj, dj = powers[t % m]
        la = (glead[0] + kj * glead[1]) % q
        lb = (dj * glead[1]) % q
        # c = f_lead * (theta^t(g_lead))^-1
        ia = pow(la, -1, q)
        ib = (-ia * ia * lb) % q
        ca = (fa * ia) % q
        cb = (fa * ib + fb * ia) % q
        quot[t] = (ca, cb)
        ki, di = powers[t % m]
        for j, (ga, gb) in enumerate(gc):
            ta = ga + ki * gb
            tb = di * gb
            ra, rb = rem[t + j]
            rem[t + j] = ((ra - ca * ta) % q, (rb - ca * tb - cb * ta) % q)
    return quot, rem


def skew_right_divide(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """f = quot * g + rem with rem = 0 or deg(rem) < deg(g)."""
    _require_ctx(f, g)
    if g.is_zero():
        raise DivisionByZeroPoly("right division by the zero polynomial")
    if not is_unit(g.leading(), g.ring):
        raise NonUnitLeadingCoeff(f"leading coefficient {g.leading()} is not a unit")
    quot, rem = _raw_right_divmod(f.coeffs, g.coeffs, f.ring.q, f.theta.powers, f.theta.m)
    mk = lambda raw: skew_poly([RingElem(a, b) for a, b in raw], f.ring, f.theta)
    return mk(quot), mk(rem)


def skew_left_divide(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """f = g * quot + rem with rem = 0 or deg(rem) < deg(g).

    Uses theta^-1 = theta^(m-1) to solve for each quotient coefficient.
    """
    _require_ctx(f, g)
    if g.is_zero():
        raise DivisionByZeroPoly("left division by the zero polynomial")
    if not is_unit(g.leading(), g.ring):
        raise NonUnitLeadingCoeff(f"leading coefficient {g.leading()} is not a unit")
    ring, theta = f.ring, f.theta
    m = theta.m
    glead_inv = relem_inv(g.leading(), ring)
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    quot = [R_ZERO] * max(len(rem) - dg, 0)
    for t in range(len(rem) - 1 - dg, -1, -1):
        flead = rem[t + dg]
        if flead == R_ZERO:
            continue
        # leading term of g*(c x^t) is g_lead * theta^dg(c); solve for c
        w = relem_mul(glead_inv, flead, ring)
        c = apply_theta(theta, w, (m - dg % m) % m)
        quot[t] = c
        for i, gi in enumerate(g.coeffs):
            term = relem_mul(gi, apply_theta(theta, c, i), ring)
            ra, rb = rem[t + i]
            rem[t + i] = RingElem((ra - term.a) % ring.q, (rb - term.b) % ring.q)
    return skew_poly(quot, ring, theta), skew_poly(rem, ring, theta)


def _commutes_with(f: SkewPoly, g: SkewPoly) -> bool:
    return skew_mul(f, g) == skew_mul(g, f)


def is_central(f: SkewPoly, extra_constants: int = 8) -> bool:
    """Whether f commutes with every element of R[x; theta].

    It suffices to commute with x and with u, since those generate the ring
    over the always-central Z_q.  For small q all constants are checked as
    well; past that a fixed deterministic sample backs the generator check.
    """
    if f.is_zero():
        return True
    ring, theta = f.ring, f.theta
    x = monomial(R_ONE, 1, ring, theta)
    if not _commutes_with(f, x):
        return False
    if not _commutes_with(f, skew_poly([R_U], ring, theta)):
        return False
    q = ring.q
    if q * q <= 256:
        consts = (RingElem(a, b) for a in range(q) for b in range(q))
    else:
        consts = (RingElem(j % q, (3 * j + 1) % q) for j in range(extra_constants))
    return all(_commutes_with(f, skew_poly([c], ring, theta)) for c in consts)


def is_binomial_central(beta: int, lam: RingElem, ring: RingParams, theta: Automorphism) -> bool:
    """x^beta - lam is central iff m | beta and lam is fixed by theta."""
    if beta < 1:
        raise ValueError("beta must be positive")
    if not is_unit(lam, ring):
        raise ValueError(f"lambda {lam} must be a unit")
    return beta % theta.m == 0 and theta_fixes(theta, lam)


def all_ring_elements(ring: RingParams):
    """All q^2 elements of R in lexicographic (a, b) order."""
    return [RingElem(a, b) for a in range(ring.q) for b in range(ring.q)]


def right_divisor_pairs(
    beta: int,
    lam: RingElem,
    deg_h: int,
    ring: RingParams,
    theta: Automorphism,
    cap: int = 1 << 24,
):
    """All factorizations x^beta - lam = g * h over monic h of degree deg_h.

    Monic candidates h are enumerated with coefficients low-degree-first,
    lexicographic over (a, b) pairs, so the output order is reproducible.
    Yields (g, h) pairs with g the quotient of the exact right division.
    """
    if not 1 <= deg_h <= beta:
        raise ValueError(f"deg_h={deg_h} out of range [1, {beta}]")
    if not is_unit(lam, ring):
        raise ValueError(f"lambda {lam} must be a unit")
    q = ring.q
    if q ** (2 * deg_h) > cap:
        raise EnumerationCapExceeded(
            f"q^(2*deg_h) = {q ** (2 * deg_h)} exceeds enumeration cap {cap}"
        )
    f = binomial(beta, lam, ring, theta)
    fc = list(f.coeffs)
    powers, m = theta.powers, theta.m
    elements = [(a, b) for a in range(q) for b in range(q)]
    one = (1, 0)
    for tail in product(elements, repeat=deg_h):
        gc_raw = list(tail) + [one]
        quot, rem = _raw_right_divmod(fc, gc_raw, q, powers, m)
        if any(a or b for a, b in rem):
            continue
        g = skew_poly([RingElem(a, b) for a, b in quot], ring, theta)
        h = skew_poly([RingElem(a, b) for a, b in gc_raw], ring, theta)
        yield g, h


def parse_r_poly(text: str, ring: RingParams, theta: Automorphism) -> SkewPoly:
    """Parse comma-separated RingElem coefficients in ascending degree.

    A plain digit string with two or more digits (and q <= 10) is read as
    the compact ascending form for Z_q-only polynomials, e.g. 31212201.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial string", position=0)
    if "," not in text and "u" not in text and "+" not in text and len(text) > 1:
        if ring.q > 10:
            raise ParseError("compact digit form only supported for q <= 10", position=0)
        zp = parse_zq_digits(text, ring.q)
        return skew_poly([RingElem(c, 0) for c in zp], ring, theta)
    coeffs = [parse_relem(tok, ring) for tok in text.split(",")]
    return skew_poly(coeffs, ring, theta)


def format_r_poly(f: SkewPoly) -> str:
    """Canonical comma-separated ascending coefficients; zero prints as 0+0u."""
    if f.is_zero():
        return format_relem(R_ZERO)
    return ",".join(format_relem(c) for c in f.coeffs)
