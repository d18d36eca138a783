"""Skew constacyclic codes of length beta over R = Z_q + uZ_q.

Codes are represented at desk scale by their explicit codeword sets next
to the generating rows {x^i * g}; the twisted shift, torsion/residue
codes and exhaustive annihilator duals all operate on those sets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EnumerationCapExceeded, GeneratorNotDivisor, LengthMismatch
from .rings import (
    Automorphism,
    RingElem,
    RingParams,
    R_ZERO,
    apply_theta,
    is_unit,
    relem_add,
    relem_mul,
)
from .skewpoly import SkewPoly, binomial, skew_right_divide

RVector = tuple[RingElem, ...]


@dataclass(frozen=True)
class RCodeSpec:
    beta: int
    lam: RingElem
    theta: Automorphism
    gen: SkewPoly

    @property
    def ring(self) -> RingParams:
        return self.gen.ring

    def __post_init__(self):
        if self.beta < 1:
            raise ValueError("beta must be positive")
        if not is_unit(self.lam, self.gen.ring):
            raise ValueError(f"lambda {self.lam} must be a unit")
        if self.gen.degree != float("-inf") and self.gen.degree > self.beta:
            raise ValueError("generator degree exceeds beta")


@dataclass(frozen=True)
class RCode:
    spec: RCodeSpec
    rows: tuple[RVector, ...]
    words: frozenset[RVector]

    def __len__(self) -> int:
        return len(self.words)


def consta_shift(c: RVector, lam: RingElem, theta: Automorphism, params: RingParams) -> RVector:
    """(c_0, ..., c_{beta-1}) -> (lam*theta(c_{beta-1}), theta(c_0), ..., theta(c_{beta-2}))."""
    if not c:
        raise LengthMismatch("empty vector")
    wrapped = relem_mul(lam, apply_theta(theta, c[-1]), params)
    return (wrapped,) + tuple(apply_theta(theta, x) for x in c[:-1])


def poly_to_rvector(f: SkewPoly, beta: int) -> RVector:
    if len(f.coeffs) > beta:
        raise ValueError(f"degree {f.degree} does not fit in length {beta}")
    return tuple(f.coeffs) + (R_ZERO,) * (beta - len(f.coeffs))


def r_span(rows, params: RingParams, cap: int = 1 << 24) -> frozenset[RVector]:
    """All R-linear combinations of the given R-vectors."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return frozenset()
    q = params.q
    beta = len(rows[0])
    scalars = [RingElem(a, b) for a in range(q) for b in range(q)]
    span = {(R_ZERO,) * beta}
    for row in rows:
        if tuple(row) in span:
            continue
        if len(span) * len(scalars) > cap:
            raise EnumerationCapExceeded(f"code span would exceed cap {cap}")
        multiples = [tuple(relem_mul(c, x, params) for x in row) for c in scalars]
        span = {
            tuple(relem_add(a, b, params) for a, b in zip(s, mult))
            for s in span
            for mult in multiples
        }
    return frozenset(span)


def build_rcode(spec: RCodeSpec, cap: int = 1 << 24) -> RCode:
    """Materialize the code generated by g: the R-span of {x^i * g mod x^beta - lam}.

    g must right-divide x^beta - lam (checked); the i range beta - deg(g)
    matches the basis of the free case and is redundant but harmless when
    the quotient collapses further.
    """
    ring, theta = spec.gen.ring, spec.theta
    modulus = binomial(spec.beta, spec.lam, ring, theta)
    if spec.gen.is_zero():
        raise GeneratorNotDivisor("zero generator")
    _, rem = skew_right_divide(modulus, spec.gen)
    if not rem.is_zero():
        raise GeneratorNotDivisor(
            f"{spec.gen} does not right-divide x^{spec.beta} - {spec.lam}"
        )
    _, red = skew_right_divide(spec.gen, modulus)
    vec = poly_to_rvector(red, spec.beta)
    nrows = spec.beta - len(spec.gen.coeffs) + 1
    rows = []
    for _ in range(max(nrows, 0)):
        rows.append(vec)
        vec = consta_shift(vec, spec.lam, theta, ring)
    expected = (ring.q ** 2) ** max(nrows, 0)
    if expected > cap:
        raise EnumerationCapExceeded(f"|R|^{max(nrows, 0)} = {expected} exceeds cap {cap}")
    words = r_span(rows, ring, cap=cap) if rows else frozenset({(R_ZERO,) * spec.beta})
    return RCode(spec, tuple(rows), words)


def is_shift_closed(words, lam: RingElem, theta: Automorphism, params: RingParams) -> bool:
    words = set(words)
    return all(consta_shift(w, lam, theta, params) in words for w in words)


def torsion(code: RCode) -> set[tuple[int, ...]]:
    """Tor(C) = {b in Z_q^beta : u*b in C}."""
    return {
        tuple(x.b for x in w) for w in code.words if all(x.a == 0 for x in w)
    }


def residue(code: RCode) -> set[tuple[int, ...]]:
    """Res(C) = {a in Z_q^beta : a + u*b in C for some b}."""
    return {tuple(x.a for x in w) for w in code.words}


def _r_candidates(beta: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    """Unit parts and u-parts of all q^(2*beta) vectors in R^beta."""
    n = q ** (2 * beta)
    idx = np.arange(n, dtype=np.int64)
    a = np.empty((n, beta), dtype=np.int64)
    b = np.empty((n, beta), dtype=np.int64)
    rem = idx.copy()
    for j in range(beta - 1, -1, -1):
        b[:, j] = rem % q
        rem //= q
        a[:, j] = rem % q
        rem //= q
    return a, b


def brute_dual_r(code: RCode, cap: int = 1 << 24) -> frozenset[RVector]:
    """All w in R^beta with sum_j c_j w_j = 0 in R for every c in the code.

    The scan is exhaustive over R^beta; orthogonality to the generating
    rows suffices because the form is R-linear in the code argument.
    """
    params = code.spec.ring
    q = params.q
    beta = code.spec.beta
    total = q ** (2 * beta)
    if total > cap:
        raise EnumerationCapExceeded(f"{total} dual candidates exceed cap {cap}")
    gens = code.rows if code.rows else tuple(code.words)
    acand, bcand = _r_candidates(beta, q)
    keep = np.ones(len(acand), dtype=bool)
    for g in gens:
        ga = np.array([x.a for x in g], dtype=np.int64)
        gb = np.array([x.b for x in g], dtype=np.int64)
        unit = (acand @ ga) % q
        upart = (bcand @ ga + acand @ gb) % q
        keep &= (unit == 0) & (upart == 0)
    out = set()
    for i in np.nonzero(keep)[0]:
        out.add(tuple(RingElem(int(a), int(b)) for a, b in zip(acand[i], bcand[i])))
    return frozenset(out)


def parse_rcode_spec(text: str, params: RingParams) -> RCodeSpec:
    """Parse `beta=14 lambda=1+0u theta=0,3 gen=<poly>` (whitespace separated)."""
    from .rings import make_automorphism, parse_relem
    from .skewpoly import parse_r_poly

    fields = {}
    for tok in text.split():
        if "=" not in tok:
            raise ValueError(f"bad token {tok!r} in code spec")
        key, val = tok.split("=", 1)
        fields[key] = val
    try:
        beta = int(fields["beta"])
        lam = parse_relem(fields["lambda"], params)
        k, d = (int(x) for x in fields["theta"].split(","))
        theta = make_automorphism(params, k, d)
        gen = parse_r_poly(fields["gen"], params, theta)
    except KeyError as exc:
        raise ValueError(f"code spec is missing field {exc}") from None
    return RCodeSpec(beta=beta, lam=lam, theta=theta, gen=gen)


def format_rcode_spec(spec: RCodeSpec) -> str:
    from .rings import format_relem
    from .skewpoly import format_r_poly

    return (
        f"beta={spec.beta} lambda={format_relem(spec.lam)} "
        f"theta={spec.theta.k},{spec.theta.d} gen={format_r_poly(spec.gen)}"
    )


def brute_dual_zq(words, n: int, params: RingParams) -> set[tuple[int, ...]]:
    """Standard dual of a Z_q code given by its full word set."""
    q = params.q
    words = list(words)
    out = set()
    for idx in range(q**n):
        v, rem = [], idx
        for _ in range(n):
            v.append(rem % q)
            rem //= q
        v = tuple(v)
        if all(sum(a * b for a, b in zip(v, w)) % q == 0 for w in words):
            out.add(v)
    return out
