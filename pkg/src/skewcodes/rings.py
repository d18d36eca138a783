"""Arithmetic in Z_q and in R = Z_q + uZ_q with u^2 = 0, q = p^s.

Elements of R are pairs (a, b) standing for a + u*b with both residues
canonical in [0, q).  The module also provides the projection eta onto the
unit part, the validated automorphisms of R that fix Z_q pointwise, the
star action of R on mixed Z_q^alpha x R^beta words, and the mixed inner
product those words carry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple

from .errors import InvalidAutomorphism, LengthMismatch, ParseError

MAX_Q = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RingParams:
    """Modulus data for Z_q, q = p^s."""

    p: int
    s: int
    q: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.s < 1:
            raise ValueError(f"s={self.s} must be positive")
        if self.q != self.p**self.s:
            raise ValueError(f"q={self.q} is not p^s={self.p**self.s}")
        if not 2 <= self.q <= MAX_Q:
            raise ValueError(f"q={self.q} out of supported range [2, {MAX_Q}]")

    @classmethod
    def from_q(cls, q: int) -> "RingParams":
        """Factor q as p^s; reject moduli that are not prime powers."""
        if q < 2:
            raise ValueError(f"q={q} must be at least 2")
        n, p = q, 2
        while p * p <= n:
            if n % p == 0:
                break
            p += 1
        else:
            p = n
        s = 0
        while n % p == 0:
            n //= p
            s += 1
        if n != 1:
            raise ValueError(f"q={q} is not a prime power")
        return cls(p=p, s=s, q=q)


class RingElem(NamedTuple):
    """a + u*b with a, b in [0, q)."""

    a: int
    b: int


R_ZERO = RingElem(0, 0)
R_ONE = RingElem(1, 0)
R_U = RingElem(0, 1)


def relem(a: int, b: int, params: RingParams) -> RingElem:
    return RingElem(a % params.q, b % params.q)


def relem_add(x: RingElem, y: RingElem, params: RingParams) -> RingElem:
    q = params.q
    return RingElem((x.a + y.a) % q, (x.b + y.b) % q)


def relem_sub(x: RingElem, y: RingElem, params: RingParams) -> RingElem:
    q = params.q
    return RingElem((x.a - y.a) % q, (x.b - y.b) % q)


def relem_neg(x: RingElem, params: RingParams) -> RingElem:
    q = params.q
    return RingElem(-x.a % q, -x.b % q)


def relem_mul(x: RingElem, y: RingElem, params: RingParams) -> RingElem:
    # (a + ub)(c + ud) = ac + u(ad + bc) since u^2 = 0
    q = params.q
    return RingElem((x.a * y.a) % q, (x.a * y.b + x.b * y.a) % q)


def is_unit(x: RingElem, params: RingParams) -> bool:
    """a + ub is a unit exactly when a is a unit of Z_q."""
    return gcd(x.a, params.q) == 1


def relem_inv(x: RingElem, params: RingParams) -> RingElem:
    """Inverse of a unit: (a + ub)^-1 = a^-1 - u a^-2 b."""
    q = params.q
    if gcd(x.a, q) != 1:
        raise ZeroDivisionError(f"{x} is not a unit mod {q}")
    ai = pow(x.a, -1, q)
    return RingElem(ai, (-ai * ai * x.b) % q)


def eta(x: RingElem) -> int:
    """Projection a + ub -> a, a surjective ring homomorphism R -> Z_q."""
    return x.a


_RELEM_RE = re.compile(r"^\s*(?:(\d+)\s*\+\s*)?(?:(\d*)\s*u|(\d+))\s*$")


def parse_relem(text: str, params: RingParams) -> RingElem:
    """Parse `a`, `bu`, or `a+bu` (whitespace tolerant, `u` means `1u`)."""
    m = _RELEM_RE.match(text)
    if m is None:
        raise ParseError(f"cannot parse ring element {text!r}", position=0)
    a_part, bu_part, bare = m.groups()
    if bare is not None:
        if a_part is not None:
            raise ParseError(f"cannot parse ring element {text!r}", position=0)
        return relem(int(bare), 0, params)
    a = int(a_part) if a_part is not None else 0
    b = int(bu_part) if bu_part != "" else 1
    return relem(a, b, params)


def format_relem(x: RingElem) -> str:
    """Canonical `a+bu` form, e.g. 0+0u, 3+2u."""
    return f"{x.a}+{x.b}u"


@dataclass(frozen=True)
class Automorphism:
    """Automorphism of R fixing Z_q pointwise, given by theta(u) = k + u*d.

    The action is theta(a + ub) = (a + k*b) + u*(d*b).  `m` is the
    multiplicative order; `powers[j]` holds the pair (k_j, d_j) describing
    theta^j, so applying a power is a two-coefficient affine map.
    """

    q: int
    k: int
    d: int
    m: int
    powers: tuple[tuple[int, int], ...]

    def is_identity(self) -> bool:
        return self.m == 1


def make_automorphism(params: RingParams, k: int, d: int) -> Automorphism:
    """Validate (k, d) and compute the order of theta.

    Requirements: k a non-unit with k^2 = 0 and 2kd = 0 (mod q), and d a
    unit so the map is bijective.
    """
    q = params.q
    k %= q
    d %= q
    if gcd(k, q) == 1:
        raise InvalidAutomorphism(f"k={k} is a unit mod {q}")
    if (k * k) % q != 0:
        raise InvalidAutomorphism(f"k^2 = {k * k % q} != 0 mod {q}")
    if (2 * k * d) % q != 0:
        raise InvalidAutomorphism(f"2kd = {2 * k * d % q} != 0 mod {q}")
    if gcd(d, q) != 1:
        raise InvalidAutomorphism(f"d={d} is not a unit mod {q}, map not bijective")

    # theta^(j+1)(u) = k_j + k*d_j + u*(d*d_j); order found by iterating on u.
    powers = [(0, 1)]
    kj, dj = k, d
    while (kj, dj) != (0, 1):
        powers.append((kj, dj))
        kj, dj = (kj + k * dj) % q, (d * dj) % q
        if len(powers) > q:
            raise InvalidAutomorphism(f"order of theta exceeds the cap m <= {q}")
    return Automorphism(q=q, k=k, d=d, m=len(powers), powers=tuple(powers))


def apply_theta(t: Automorphism, x: RingElem, power: int = 1) -> RingElem:
    """theta^power applied to x; power may be any non-negative integer."""
    if power < 0:
        raise ValueError("power must be non-negative")
    kj, dj = t.powers[power % t.m]
    return RingElem((x.a + kj * x.b) % t.q, (dj * x.b) % t.q)


def theta_fixes(t: Automorphism, x: RingElem) -> bool:
    return apply_theta(t, x) == x


def valid_automorphisms(params: RingParams) -> list[Automorphism]:
    """Census of all valid (k, d) pairs, ordered lexicographically."""
    out = []
    for k in range(params.q):
        for d in range(params.q):
            try:
                out.append(make_automorphism(params, k, d))
            except InvalidAutomorphism:
                continue
    return out


class MixedWord(NamedTuple):
    """A vector in Z_q^alpha x R^beta."""

    zq: tuple[int, ...]
    r: tuple[RingElem, ...]


def mixed_word(zq: Iterable[int], r: Iterable[RingElem], params: RingParams) -> MixedWord:
    q = params.q
    return MixedWord(tuple(e % q for e in zq), tuple(RingElem(x.a % q, x.b % q) for x in r))


def mixed_zero(alpha: int, beta: int) -> MixedWord:
    return MixedWord((0,) * alpha, (R_ZERO,) * beta)


def mixed_add(v: MixedWord, w: MixedWord, params: RingParams) -> MixedWord:
    if len(v.zq) != len(w.zq) or len(v.r) != len(w.r):
        raise LengthMismatch("mixed words live in different ambients")
    q = params.q
    return MixedWord(
        tuple((a + b) % q for a, b in zip(v.zq, w.zq)),
        tuple(relem_add(x, y, params) for x, y in zip(v.r, w.r)),
    )


def star_mul(dscalar: RingElem, w: MixedWord, params: RingParams) -> MixedWord:
    """The module action d * (e, r) = (eta(d) e, d r)."""
    q = params.q
    e = eta(dscalar)
    return MixedWord(
        tuple((e * x) % q for x in w.zq),
        tuple(relem_mul(dscalar, x, params) for x in w.r),
    )


def mixed_inner_product(v: MixedWord, w: MixedWord, params: RingParams) -> RingElem:
    """<v, w> = u * sum(v_i w_i over the Z_q block) + sum(v'_j w'_j over R)."""
    if len(v.zq) != len(w.zq) or len(v.r) != len(w.r):
        raise LengthMismatch(
            f"ambients differ: ({len(v.zq)},{len(v.r)}) vs ({len(w.zq)},{len(w.r)})"
        )
    q = params.q
    zq_dot = sum(a * b for a, b in zip(v.zq, w.zq)) % q
    acc_a = 0
    acc_b = zq_dot  # the u * zq_dot term
    for x, y in zip(v.r, w.r):
        acc_a += x.a * y.a
        acc_b += x.a * y.b + x.b * y.a
    return RingElem(acc_a % q, acc_b % q)


def parse_mixed_word(text: str, params: RingParams) -> MixedWord:
    """Parse `e_0,...,e_{alpha-1} | r_0,...,r_{beta-1}`; either block may be empty."""
    if "|" not in text:
        raise ParseError("mixed word needs a `|` separating the blocks", position=0)
    left, right = text.split("|", 1)
    try:
        zq = tuple(int(tok) % params.q for tok in left.split(",") if tok.strip())
    except ValueError as exc:
        raise ParseError(f"bad Z_q block {left!r}: {exc}", position=0) from None
    r = tuple(parse_relem(tok, params) for tok in right.split(",") if tok.strip())
    return MixedWord(zq, r)


def format_mixed_word(w: MixedWord) -> str:
    left = ",".join(str(e) for e in w.zq)
    right = ",".join(format_relem(x) for x in w.r)
    return f"{left} | {right}"
