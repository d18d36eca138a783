"""Seeded self-check suites behind the `props` CLI subcommand.

Each check returns a list of failure strings (empty = pass).  The random
parts draw from a seeded Random instance so a report is reproducible from
its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graymaps import GrayVariant, gray_phi, gray_psi
from .rings import (
    MixedWord,
    RingElem,
    RingParams,
    eta,
    make_automorphism,
    mixed_inner_product,
    relem_add,
    relem_mul,
    star_mul,
    valid_automorphisms,
)
from .skewpoly import (
    is_binomial_central,
    is_central,
    skew_mul,
    skew_poly,
    skew_right_divide,
    all_ring_elements,
)
from .zqlinalg import codeword_count, enumerate_codewords, gen_matrix, howell_form, min_lee_distance


@dataclass
class ReportItem:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    seed: int
    items: list[ReportItem] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.items)

    def add(self, name: str, failures: list[str]):
        self.items.append(ReportItem(name, not failures, "; ".join(failures[:3])))

    def lines(self) -> list[str]:
        out = [f"seed={self.seed}"]
        for i in self.items:
            out.append(f"{'PASS' if i.ok else 'FAIL'}  {i.name}" + (f"  [{i.detail}]" if i.detail else ""))
        good = sum(i.ok for i in self.items)
        out.append(f"{good}/{len(self.items)} checks passed")
        return out


def _ring_axioms(params: RingParams) -> list[str]:
    fails = []
    elems = all_ring_elements(params)
    for x in elems:
        for y in elems:
            if relem_mul(x, y, params) != relem_mul(y, x, params):
                fails.append(f"commutativity {x},{y}")
            if eta(relem_mul(x, y, params)) != (eta(x) * eta(y)) % params.q:
                fails.append(f"eta mult {x},{y}")
    for x in elems[:8]:
        for y in elems[:8]:
            for z in elems[:8]:
                lhs = relem_mul(relem_mul(x, y, params), z, params)
                rhs = relem_mul(x, relem_mul(y, z, params), params)
                if lhs != rhs:
                    fails.append(f"associativity {x},{y},{z}")
                if relem_mul(x, relem_add(y, z, params), params) != relem_add(
                    relem_mul(x, y, params), relem_mul(x, z, params), params
                ):
                    fails.append(f"distributivity {x},{y},{z}")
    return fails


def _automorphism_census(params: RingParams) -> list[str]:
    census = {(t.k, t.d) for t in valid_automorphisms(params)}
    if params.q == 4 and census != {(0, 1), (0, 3), (2, 1), (2, 3)}:
        return [f"census at q=4 is {sorted(census)}"]
    return []


def _division_checks(params: RingParams, rng: random.Random, rounds: int) -> list[str]:
    fails = []
    elems = all_ring_elements(params)
    units = [e for e in elems if e.a % 2 == 1] if params.q == 4 else [RingElem(1, 0)]
    for k, d in ((0, 3), (2, 1)):
        theta = make_automorphism(params, k, d)
        for _ in range(rounds):
            f = skew_poly([rng.choice(elems) for _ in range(rng.randint(1, 9))], params, theta)
            gc = [rng.choice(elems) for _ in range(rng.randint(0, 7))] + [rng.choice(units)]
            g = skew_poly(gc, params, theta)
            quot, rem = skew_right_divide(f, g)
            back = skew_mul(quot, g)
            recon = skew_poly(
                [
                    relem_add(
                        back.coeffs[i] if i < len(back.coeffs) else RingElem(0, 0),
                        rem.coeffs[i] if i < len(rem.coeffs) else RingElem(0, 0),
                        params,
                    )
                    for i in range(max(len(back.coeffs), len(rem.coeffs), 1))
                ],
                params,
                theta,
            )
            if recon != f:
                fails.append(f"re-multiplication failed for deg f={f.degree}")
            if not rem.is_zero() and rem.degree >= g.degree:
                fails.append("remainder degree not reduced")
    return fails


def _center_checks(params: RingParams) -> list[str]:
    fails = []
    theta = make_automorphism(params, 0, 3)
    lam_candidates = [RingElem(a, b) for a in (1, 3) for b in range(4)]
    for beta in range(1, 9):
        for lam in lam_candidates:
            from .skewpoly import binomial

            expect = is_central(binomial(beta, lam, params, theta))
            got = is_binomial_central(beta, lam, params, theta)
            if expect != got:
                fails.append(f"binomial centrality mismatch beta={beta} lam={lam}")
    return fails


def _gray_checks(params: RingParams, rng: random.Random) -> list[str]:
    fails = []
    elems = all_ring_elements(params)
    images = {gray_psi([e], params) for e in elems}
    if len(images) != len(elems):
        fails.append("psi not injective on R")
    for _ in range(50):
        v = [rng.choice(elems) for _ in range(4)]
        w = [rng.choice(elems) for _ in range(4)]
        s = [relem_add(x, y, params) for x, y in zip(v, w)]
        lhs = gray_psi(s, params)
        rhs = tuple((a + b) % params.q for a, b in zip(gray_psi(v, params), gray_psi(w, params)))
        if lhs != rhs:
            fails.append("psi not additive")
    if params.q == 4:
        trips = {gray_phi(MixedWord((), (e,)), GrayVariant.TRIPLE, params) for e in elems}
        if len(trips) != len(elems):
            fails.append("triple map not injective on R")
    return fails


def _howell_checks(params: RingParams, rng: random.Random, rounds: int) -> list[str]:
    fails = []
    q = params.q
    for _ in range(rounds):
        nrows, ncols = rng.randint(1, 4), rng.randint(1, 5)
        m = gen_matrix(
            [[rng.randrange(q) for _ in range(ncols)] for _ in range(nrows)], ncols, params
        )
        hm = howell_form(m)
        if howell_form(hm) != hm:
            fails.append("howell not idempotent")
        raw_span = set()
        from itertools import product

        for coeffs in product(range(q), repeat=nrows):
            word = [0] * ncols
            for c, row in zip(coeffs, m.rows):
                for i, x in enumerate(row):
                    word[i] = (word[i] + c * x) % q
            raw_span.add(tuple(word))
        can_span = set(enumerate_codewords(hm))
        if raw_span != can_span:
            fails.append("howell span mismatch")
        if codeword_count(hm) != len(raw_span):
            fails.append("count law violated")
        if len(raw_span) > 1:
            naive = min(
                sum(min(x, q - x) for x in w) for w in raw_span if any(w)
            )
            if min_lee_distance(hm) != naive:
                fails.append("distance oracle mismatch")
    return fails


def _inner_product_checks(params: RingParams) -> list[str]:
    fails = []
    elems = all_ring_elements(params)
    for c in elems:
        for ve in range(params.q):
            for vr in elems[:: max(1, len(elems) // 8)]:
                v = MixedWord((ve,), (vr,))
                for we in range(params.q):
                    for wr in elems[:: max(1, len(elems) // 8)]:
                        w = MixedWord((we,), (wr,))
                        lhs = mixed_inner_product(star_mul(c, v, params), w, params)
                        rhs = mixed_inner_product(v, star_mul(c, w, params), params)
                        if lhs != rhs:
                            fails.append(f"<c*v,w> != <v,c*w> at c={c}")
    return fails


def run_all(seed: int = 0, q: int = 4) -> Report:
    params = RingParams.from_q(q)
    rng = random.Random(seed)
    report = Report(seed=seed)
    report.add("ring axioms and eta homomorphism (exhaustive)", _ring_axioms(params))
    report.add("automorphism census", _automorphism_census(params))
    report.add("division re-multiplication (seeded random)", _division_checks(params, rng, 100))
    report.add("binomial centrality agreement", _center_checks(params))
    report.add("gray map injectivity and linearity", _gray_checks(params, rng))
    report.add("howell form idempotence, span, count, distance", _howell_checks(params, rng, 40))
    report.add("star action symmetry of the inner product", _inner_product_checks(params))
    return report
