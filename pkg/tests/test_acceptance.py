"""Acceptance suite: one test per numbered criterion, each printing a
PASS/FAIL line.  Two checks are known-red and kept faithful on purpose:

* criterion 1 requires all ten embedded manifest rows to rebuild exactly
  from their listed polynomials; five do (1, 3, 5, 8, 10) and five list
  polynomials that provably produce different distances, with verified
  one-or-two-symbol corrections recorded in data/table1_corrected.manifest
  (that manifest does rebuild 10/10 through the same pipeline).
* criterion 4's first clause asserts that centrality is equivalent to
  "nonzero coefficients only at even degrees"; the element 2x (central,
  odd degree) and u x^2 (even degrees only, not central) are genuine
  counterexamples over this ring, so the equivalence fails as stated.

See notes outside the package for the full analysis trail.
"""

import random
from itertools import product

import pytest

from skewcodes import zqpoly
from skewcodes.graymaps import GrayVariant, gray_phi, gray_psi, psi_shift_image
from skewcodes.rcodes import (
    RCodeSpec,
    brute_dual_r,
    brute_dual_zq,
    build_rcode,
    is_shift_closed,
    poly_to_rvector,
    r_span,
)
from skewcodes.rings import (
    MixedWord,
    RingElem,
    RingParams,
    make_automorphism,
    relem_add,
    relem_inv,
)
from skewcodes.search import load_manifest, reproduce_table1
from skewcodes.skewpoly import (
    all_ring_elements,
    binomial,
    is_binomial_central,
    is_central,
    one_poly,
    parse_r_poly,
    right_divisor_pairs,
    skew_add,
    skew_left_divide,
    skew_mul,
    skew_poly,
    skew_right_divide,
)
from skewcodes.zqlinalg import (
    code_type,
    codeword_count,
    enumerate_codewords,
    gen_matrix,
    lee_weight_vector,
    min_lee_distance,
)
from skewcodes.zqrcodes import (
    brute_dual_mixed,
    is_mixed_shift_closed,
    separable_product,
)

Z4 = RingParams.from_q(4)
THETA = make_automorphism(Z4, 0, 3)
ONE = RingElem(1, 0)
THREE = RingElem(3, 0)


def report(criterion: str, ok: bool, detail: str = ""):
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else ""))


class TestCriterion1TableReproduction:
    def test_all_rows_rebuild_exactly(self):
        rep = reproduce_table1()
        good = sum(r.ok for r in rep.rows)
        report("1 (table reproduction)", rep.ok, f"{good}/10 rows")
        assert rep.ok, (
            "rows failing to rebuild from their listed polynomials:\n"
            + "\n".join(l for l in rep.lines() if "FAIL" in l)
            + "\nEvery computed length and free rank matches; the five failing"
            " rows list polynomials whose pipeline distance provably differs,"
            " and one-or-two-symbol corrections that do rebuild are shipped in"
            " data/table1_corrected.manifest (see repo notes for the search"
            " evidence)."
        )


class TestCriterion2ParityValidity:
    def test_every_listed_parity_divides(self):
        failures = []
        modulus = binomial(14, ONE, Z4, THETA)
        for i, row in enumerate(load_manifest(), start=1):
            h = parse_r_poly(row.h_beta_text, Z4, THETA)
            g, rem = skew_right_divide(modulus, h)
            if rem.is_zero():
                if skew_mul(g, h) != modulus:
                    failures.append(f"row {i}: g*h re-multiplication mismatch")
                continue
            g, rem = skew_left_divide(modulus, h)
            if rem.is_zero():
                if skew_mul(h, g) != modulus:
                    failures.append(f"row {i}: h*g re-multiplication mismatch")
            else:
                failures.append(f"row {i}: h divides on neither side")
        report("2 (parity-check validity)", not failures, f"{10 - len(failures)}/10 rows")
        assert not failures, failures


class TestCriterion3DivisionSuite:
    def test_five_hundred_random_divisions(self):
        rng = random.Random(2024)
        elems = all_ring_elements(Z4)
        units = [e for e in elems if e.a % 2 == 1]
        bad = 0
        for k, d in ((0, 3), (2, 1)):
            theta = make_automorphism(Z4, k, d)
            for _ in range(250):
                f = skew_poly([rng.choice(elems) for _ in range(rng.randint(1, 9))], Z4, theta)
                g = skew_poly(
                    [rng.choice(elems) for _ in range(rng.randint(0, 8))] + [rng.choice(units)],
                    Z4,
                    theta,
                )
                quot, rem = skew_right_divide(f, g)
                if skew_add(skew_mul(quot, g), rem) != f:
                    bad += 1
                elif not rem.is_zero() and rem.degree >= g.degree:
                    bad += 1
        report("3 (division suite, 500 rounds)", bad == 0, f"{bad} failures")
        assert bad == 0


class TestCriterion4CenterTheorem:
    COEFFS = [
        RingElem(0, 0),
        RingElem(1, 0),
        RingElem(0, 1),
        RingElem(1, 1),
        RingElem(2, 0),
        RingElem(0, 3),
    ]

    def test_centrality_matches_even_degree_support(self):
        mismatches = []
        for coeffs in product(self.COEFFS, repeat=6):
            f = skew_poly(list(coeffs), Z4, THETA)
            even_support = all(
                c == RingElem(0, 0) for i, c in enumerate(f.coeffs) if i % 2 == 1
            )
            if is_central(f) != even_support:
                if len(mismatches) < 8:
                    mismatches.append(
                        f"{f} central={is_central(f)} even-degree-support={even_support}"
                    )
                else:
                    mismatches.append("...")
                    break
        report("4a (center = even-degree support)", not mismatches, f"first mismatches: {mismatches[:2]}")
        assert not mismatches, (
            "the stated equivalence fails over this ring; witnesses include 2x"
            " (commutes with every element, odd-degree support) and u x^2"
            " (even-degree support, does not commute with x):\n"
            + "\n".join(mismatches)
        )

    def test_binomial_centrality_corollary(self):
        units = [RingElem(a, b) for a in (1, 3) for b in range(4)]
        bad = []
        for beta in range(1, 9):
            for lam in units:
                if is_binomial_central(beta, lam, Z4, THETA) != is_central(
                    binomial(beta, lam, Z4, THETA)
                ):
                    bad.append((beta, lam))
        report("4b (binomial centrality corollary)", not bad, f"{len(bad)} mismatches")
        assert not bad


class TestCriterion5Duality:
    @pytest.mark.parametrize("beta", [2, 4])
    @pytest.mark.parametrize("lam", [ONE, THREE], ids=["lam1", "lam3"])
    def test_dual_of_every_constructed_code_closed(self, beta, lam):
        lam_inv = relem_inv(lam, Z4)
        checked = 0
        bad = 0
        for deg_h in range(1, beta + 1):
            seen = set()
            for g, _h in right_divisor_pairs(beta, lam, deg_h, Z4, THETA):
                if g in seen:
                    continue
                seen.add(g)
                code = build_rcode(RCodeSpec(beta=beta, lam=lam, theta=THETA, gen=g))
                dual = brute_dual_r(code)
                if not is_shift_closed(dual, lam_inv, THETA, Z4):
                    bad += 1
                checked += 1
        report(
            f"5 (dual closure beta={beta} lam={lam.a})",
            bad == 0,
            f"{checked} codes",
        )
        assert checked > 0 and bad == 0

    @pytest.mark.parametrize("lam", [ONE, THREE], ids=["lam1", "lam3"])
    def test_separable_duals_factor(self, lam):
        lam_inv = relem_inv(lam, Z4)
        alpha_codes = [
            zqpoly.cyclic_code_words(g, 2, 4)
            for g in [zqpoly.znorm([1], 4), zqpoly.znorm([3, 1], 4), zqpoly.znorm([2], 4)]
        ]
        beta_codes = []
        for deg_h in (1, 2):
            for g, _h in right_divisor_pairs(2, lam, deg_h, Z4, THETA):
                beta_codes.append(
                    build_rcode(RCodeSpec(beta=2, lam=lam, theta=THETA, gen=g))
                )
        bad = []
        for ca in alpha_codes:
            dual_a = brute_dual_zq(ca, 2, Z4)
            for cb in beta_codes:
                prod = separable_product(ca, cb.words, Z4)
                dual = brute_dual_mixed(prod, params=Z4)
                expected = {MixedWord(tuple(e), tuple(r)) for e in dual_a for r in brute_dual_r(cb)}
                if dual != expected:
                    bad.append("factorization")
                if not is_mixed_shift_closed(dual, lam_inv, THETA, Z4):
                    bad.append("closure")
        report(f"5 (separable dual factorization lam={lam.a})", not bad, f"{len(bad)} failures")
        assert not bad


class TestCriterion6Separability:
    def test_equivalence_both_directions(self):
        rng = random.Random(77)
        elems = all_ring_elements(Z4)
        alpha_family = [
            zqpoly.cyclic_code_words(zqpoly.znorm([1], 4), 2, 4),
            zqpoly.cyclic_code_words(zqpoly.znorm([3, 1], 4), 2, 4),
            zqpoly.cyclic_code_words(zqpoly.znorm([2], 4), 2, 4),
            zqpoly.cyclic_code_words(zqpoly.xn_minus_1(2, 4), 2, 4),
            zqpoly.zq_span([(1, 2)], 4),
            zqpoly.zq_span([(0, 1)], 4),
            zqpoly.zq_span([(1, 3), (2, 0)], 4),
        ]
        beta_family = []
        for deg_h in (1, 2):
            for g, _h in right_divisor_pairs(2, ONE, deg_h, Z4, THETA):
                beta_family.append(
                    frozenset(build_rcode(RCodeSpec(beta=2, lam=ONE, theta=THETA, gen=g)).words)
                )
                if len(beta_family) >= 5:
                    break
        while len(beta_family) < 8:
            w = (rng.choice(elems), rng.choice(elems))
            beta_family.append(frozenset(r_span([w], Z4)))
        pairs = 0
        bad = 0
        for ca in alpha_family:
            for cb in beta_family:
                prod = separable_product(ca, cb, Z4)
                lhs = is_mixed_shift_closed(prod.words, ONE, THETA, Z4)
                rhs = zqpoly.is_cyclic_closed(ca) and is_shift_closed(cb, ONE, THETA, Z4)
                if lhs != rhs:
                    bad += 1
                pairs += 1
        report("6 (separability equivalence)", bad == 0, f"{pairs} pairs")
        assert pairs >= 50 and bad == 0


class TestCriterion7GrayProperties:
    def test_injectivity_linearity_and_block_map_closure(self):
        rng = random.Random(99)
        elems = all_ring_elements(Z4)
        bad = []
        if len({gray_psi([e], Z4) for e in elems}) != 16:
            bad.append("psi injectivity")
        if len({gray_phi(MixedWord((), (e,)), GrayVariant.TRIPLE, Z4) for e in elems}) != 16:
            bad.append("triple injectivity")
        for _ in range(200):
            v = [rng.choice(elems) for _ in range(4)]
            w = [rng.choice(elems) for _ in range(4)]
            s = [relem_add(a, b, Z4) for a, b in zip(v, w)]
            if gray_psi(s, Z4) != tuple(
                (a + b) % 4 for a, b in zip(gray_psi(v, Z4), gray_psi(w, Z4))
            ):
                bad.append("psi additivity")
            mv = MixedWord((rng.randrange(4),), tuple(v))
            mw = MixedWord((0,), tuple(w))
            for variant in (GrayVariant.DOUBLE, GrayVariant.TRIPLE):
                lhs = gray_phi(
                    MixedWord(
                        tuple((a + b) % 4 for a, b in zip(mv.zq, mw.zq)),
                        tuple(relem_add(a, b, Z4) for a, b in zip(mv.r, mw.r)),
                    ),
                    variant,
                    Z4,
                )
                rhs = tuple(
                    (a + b) % 4
                    for a, b in zip(gray_phi(mv, variant, Z4), gray_phi(mw, variant, Z4))
                )
                if lhs != rhs:
                    bad.append(f"phi additivity {variant}")
        # block-map closure of the image of every skew cyclic code at beta = 2
        for deg in (1, 2):
            for g, _h in right_divisor_pairs(2, ONE, deg, Z4, THETA):
                code = build_rcode(RCodeSpec(beta=2, lam=ONE, theta=THETA, gen=g))
                image = {gray_psi(w, Z4) for w in code.words}
                if len(image) != len(code.words):
                    bad.append("psi image size")
                if not all(psi_shift_image(y, ONE, THETA, Z4) in image for y in image):
                    bad.append("block map closure")
        full = build_rcode(RCodeSpec(beta=2, lam=ONE, theta=THETA, gen=one_poly(Z4, THETA)))
        image = {gray_psi(w, Z4) for w in full.words}
        if not all(psi_shift_image(y, ONE, THETA, Z4) in image for y in image):
            bad.append("block map closure (full space)")
        report("7 (gray/qt properties)", not bad, f"{len(set(bad))} kinds of failure")
        assert not bad


class TestCriterion8OracleEquivalences:
    def test_min_distance_oracle(self):
        rng = random.Random(200)
        checked = 0
        while checked < 200:
            ncols = rng.randint(1, 6)
            m = gen_matrix(
                [[rng.randrange(4) for _ in range(ncols)] for _ in range(rng.randint(1, 3))],
                ncols,
                Z4,
            )
            if not any(any(r) for r in m.rows):
                continue
            naive = None
            for coeffs in product(range(4), repeat=len(m.rows)):
                word = [0] * ncols
                for c, row in zip(coeffs, m.rows):
                    for i, x in enumerate(row):
                        word[i] = (word[i] + c * x) % 4
                if any(word):
                    w = lee_weight_vector(word, 4)
                    naive = w if naive is None else min(naive, w)
            if naive is None:
                continue
            assert min_lee_distance(m) == naive
            checked += 1
        report("8 (distance vs naive oracle)", True, f"{checked} matrices")

    def test_rcode_polynomial_oracle(self):
        elems = all_ring_elements(Z4)
        modulus = binomial(3, ONE, Z4, THETA)
        specimens = 0
        for deg_h in (1, 2):
            for g, _h in right_divisor_pairs(3, ONE, deg_h, Z4, THETA):
                code = build_rcode(RCodeSpec(beta=3, lam=ONE, theta=THETA, gen=g))
                oracle = set()
                for coeffs in product(elems, repeat=3):
                    t = skew_poly(list(coeffs), Z4, THETA)
                    _, rem = skew_right_divide(skew_mul(t, g), modulus)
                    oracle.add(poly_to_rvector(rem, 3))
                assert oracle == set(code.words)
                specimens += 1
                break  # one per degree; the rest are covered in module tests
        report("8 (code vs polynomial multiples oracle)", True, f"{specimens} codes")

    def test_enumeration_count_matches_type(self):
        rng = random.Random(300)
        for _ in range(100):
            ncols = rng.randint(1, 5)
            m = gen_matrix(
                [[rng.randrange(4) for _ in range(ncols)] for _ in range(rng.randint(1, 4))],
                ncols,
                Z4,
            )
            words = list(enumerate_codewords(m))
            assert len(words) == len(set(words)) == code_type(m).count() == codeword_count(m)
        report("8 (enumeration count vs code type)", True, "100 matrices")
