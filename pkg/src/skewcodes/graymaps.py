"""Gray maps into Z_q vectors, Lee weight, and quasi-twisted closure checks.

Two injective Z_q-linear maps are provided.  DOUBLE sends a + ub to the
pair (b, a+b) and lays a vector out blockwise: all u-parts first, then all
sums.  TRIPLE, only defined at q = 4, sends a + ub to (b, 2a+3b, a+3b) and
concatenates the per-element triples.  Mixed words keep their Z_q block in
front under either map.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Sequence

from .errors import LengthNotDivisible, UnsupportedVariant
from .rings import Automorphism, MixedWord, RingElem, RingParams

ZqVector = tuple[int, ...]


class GrayVariant(Enum):
    DOUBLE = "double"
    TRIPLE = "triple"


def gray_psi(v: Sequence[RingElem], params: RingParams) -> ZqVector:
    """(r_0, ..., r_{b-1}) -> (b_0, ..., b_{b-1}, a_0+b_0, ..., a_{b-1}+b_{b-1})."""
    q = params.q
    return tuple(x.b % q for x in v) + tuple((x.a + x.b) % q for x in v)


def _triple(x: RingElem, q: int) -> tuple[int, int, int]:
    return (x.b % q, (2 * x.a + 3 * x.b) % q, (x.a + 3 * x.b) % q)


def gray_phi(w: MixedWord, variant: GrayVariant, params: RingParams) -> ZqVector:
    """Gray image of a mixed word; length alpha + 2*beta or alpha + 3*beta."""
    q = params.q
    zq = tuple(e % q for e in w.zq)
    if variant is GrayVariant.DOUBLE:
        return zq + gray_psi(w.r, params)
    if variant is GrayVariant.TRIPLE:
        if q != 4:
            raise UnsupportedVariant("the tripling map is only defined at q = 4")
        out = list(zq)
        for x in w.r:
            out.extend(_triple(x, q))
        return tuple(out)
    raise UnsupportedVariant(f"unknown Gray variant {variant!r}")


def gray_image_length(alpha: int, beta: int, variant: GrayVariant) -> int:
    return alpha + (2 if variant is GrayVariant.DOUBLE else 3) * beta


def lee_weight(v: Iterable[int], params: RingParams) -> int:
    """Sum of min(x, q - x) over the entries."""
    q = params.q
    return sum(min(x % q, q - x % q) for x in v)


def lee_distance(v: Sequence[int], w: Sequence[int], params: RingParams) -> int:
    q = params.q
    return lee_weight([(a - b) % q for a, b in zip(v, w)], params)


def qt_closed(codewords, lam: int, index_l: int, params: RingParams) -> bool:
    """Closure under the block twist: last l-block moves to the front scaled by lam."""
    words = set(codewords)
    if not words:
        return True
    q = params.q
    n = len(next(iter(words)))
    if index_l <= 0 or n % index_l:
        raise LengthNotDivisible(f"index {index_l} does not divide length {n}")
    for c in words:
        shifted = tuple((lam * x) % q for x in c[n - index_l:]) + c[: n - index_l]
        if shifted not in words:
            return False
    return True


def generalized_qt_closed(codewords, lambdas: Sequence[int], index_l: int, params: RingParams) -> bool:
    """Closure under the generalized twist with one constant per wrapped position.

    The wrapped block comes back reversed: position i of the new word is
    lambdas[i] * c[n-1-i] for i < l, followed by the untouched prefix.
    """
    if len(lambdas) != index_l:
        raise ValueError("need exactly index_l twist constants")
    words = set(codewords)
    if not words:
        return True
    q = params.q
    n = len(next(iter(words)))
    if index_l <= 0 or n % index_l:
        raise LengthNotDivisible(f"index {index_l} does not divide length {n}")
    for c in words:
        head = tuple((lambdas[i] * c[n - 1 - i]) % q for i in range(index_l))
        if head + c[: n - index_l] not in words:
            return False
    return True


def psi_shift_image(y: ZqVector, lam: RingElem, theta: Automorphism, params: RingParams) -> ZqVector:
    """The induced block map on psi images of length 2*beta.

    Writing y = (b_0..b_{beta-1}, a_0+b_0..), this is the image under psi of
    the constacyclic shift of the preimage, expressed directly in image
    coordinates:

        (l1*a' + (l0*d + l1*k)*b', d*b_0, ..., d*b_{beta-2},
         (l0+l1)*a' + ((k+d)*l0 + k*l1)*b', a_0+(k+d)*b_0, ...)

    with a' = a_{beta-1}, b' = b_{beta-1}.
    """
    q = params.q
    if len(y) % 2:
        raise LengthNotDivisible("psi images have even length")
    beta = len(y) // 2
    b = [y[i] % q for i in range(beta)]
    a = [(y[beta + i] - y[i]) % q for i in range(beta)]
    k, d = theta.k, theta.d
    l0, l1 = lam.a, lam.b
    ap, bp = a[beta - 1], b[beta - 1]
    first = (l1 * ap + (l0 * d + l1 * k) * bp) % q
    mid = [(d * b[j]) % q for j in range(beta - 1)]
    second = ((l0 + l1) * ap + ((k + d) * l0 + k * l1) * bp) % q
    tail = [(a[j] + (k + d) * b[j]) % q for j in range(beta - 1)]
    return (first, *mid, second, *tail)
