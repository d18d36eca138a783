import random

import pytest

from skewcodes.errors import LengthNotDivisible, UnsupportedVariant
from skewcodes.graymaps import (
    GrayVariant,
    generalized_qt_closed,
    gray_phi,
    gray_psi,
    lee_weight,
    psi_shift_image,
    qt_closed,
)
from skewcodes.rcodes import build_rcode, consta_shift, RCodeSpec
from skewcodes.rings import MixedWord, RingElem, RingParams, make_automorphism, relem_add
from skewcodes.skewpoly import all_ring_elements, one_poly, right_divisor_pairs

Z4 = RingParams.from_q(4)
THETA = make_automorphism(Z4, 0, 3)


class TestPsi:
    def test_examples(self):
        assert gray_psi([RingElem(1, 1), RingElem(2, 0)], Z4) == (1, 0, 2, 2)
        assert gray_psi([RingElem(0, 0)] * 3, Z4) == (0,) * 6
        assert gray_psi([RingElem(2, 3)], Z4) == (3, 1)

    def test_injective_exhaustive(self):
        images = {gray_psi([e], Z4) for e in all_ring_elements(Z4)}
        assert len(images) == 16

    def test_linear(self):
        rng = random.Random(7)
        elems = all_ring_elements(Z4)
        for _ in range(100):
            v = [rng.choice(elems) for _ in range(5)]
            w = [rng.choice(elems) for _ in range(5)]
            s = [relem_add(a, b, Z4) for a, b in zip(v, w)]
            assert gray_psi(s, Z4) == tuple(
                (a + b) % 4 for a, b in zip(gray_psi(v, Z4), gray_psi(w, Z4))
            )
            c = rng.randrange(4)
            scaled = [RingElem((c * x.a) % 4, (c * x.b) % 4) for x in v]
            assert gray_psi(scaled, Z4) == tuple((c * a) % 4 for a in gray_psi(v, Z4))


class TestPhi:
    def test_double_example(self):
        w = MixedWord((2,), (RingElem(1, 3),))
        assert gray_phi(w, GrayVariant.DOUBLE, Z4) == (2, 3, 0)

    def test_triple_examples(self):
        assert gray_phi(MixedWord((), (RingElem(2, 1),)), GrayVariant.TRIPLE, Z4) == (1, 3, 1)
        assert gray_phi(MixedWord((), (RingElem(1, 0),)), GrayVariant.TRIPLE, Z4) == (0, 2, 1)

    def test_lengths(self):
        w = MixedWord((1, 2, 3), (RingElem(0, 1), RingElem(2, 2)))
        assert len(gray_phi(w, GrayVariant.DOUBLE, Z4)) == 3 + 2 * 2
        assert len(gray_phi(w, GrayVariant.TRIPLE, Z4)) == 3 + 3 * 2

    def test_triple_requires_q4(self):
        z9 = RingParams.from_q(9)
        with pytest.raises(UnsupportedVariant):
            gray_phi(MixedWord((), (RingElem(1, 0),)), GrayVariant.TRIPLE, z9)

    def test_triple_injective_and_linear(self):
        elems = all_ring_elements(Z4)
        images = {gray_phi(MixedWord((), (e,)), GrayVariant.TRIPLE, Z4) for e in elems}
        assert len(images) == 16
        for x in elems:
            for y in elems:
                s = relem_add(x, y, Z4)
                ix = gray_phi(MixedWord((), (x,)), GrayVariant.TRIPLE, Z4)
                iy = gray_phi(MixedWord((), (y,)), GrayVariant.TRIPLE, Z4)
                isum = gray_phi(MixedWord((), (s,)), GrayVariant.TRIPLE, Z4)
                assert isum == tuple((a + b) % 4 for a, b in zip(ix, iy))


class TestLeeWeight:
    @pytest.mark.parametrize(
        "vec,expect",
        [((1, 0, 2, 2), 5), ((0, 0, 0), 0), ((3, 3), 2)],
    )
    def test_examples(self, vec, expect):
        assert lee_weight(vec, Z4) == expect

    def test_norm_properties(self):
        for v in [(0, 1, 2, 3), (2, 2), (1,)]:
            assert lee_weight(v, Z4) == lee_weight([(-x) % 4 for x in v], Z4)
        assert lee_weight((0, 0), Z4) == 0


class TestQtClosure:
    def test_full_space_closed(self):
        words = [(a, b) for a in range(4) for b in range(4)]
        assert qt_closed(words, 3, 1, Z4)

    def test_missing_orbit_detected(self):
        assert not qt_closed({(0, 0), (1, 2)}, 1, 1, Z4)

    def test_index_must_divide(self):
        with pytest.raises(LengthNotDivisible):
            qt_closed({(0, 0, 0)}, 1, 2, Z4)

    def test_generalized_full_space(self):
        words = [(a, b) for a in range(4) for b in range(4)]
        assert generalized_qt_closed(words, [1, 1], 2, Z4)

    def test_generalized_zero_word(self):
        assert generalized_qt_closed({(0, 0, 0, 0)}, [1, 3], 2, Z4)

    def test_generalized_exhaustive_small(self):
        # orbit-completed random sets are closed; a deliberately broken one is not
        rng = random.Random(13)
        lambdas = [3, 1]
        def shift(c):
            return tuple((lambdas[i] * c[len(c) - 1 - i]) % 4 for i in range(2)) + c[:-2]
        for _ in range(20):
            seed_words = {tuple(rng.randrange(4) for _ in range(4)) for _ in range(3)}
            closure = set(seed_words)
            frontier = list(seed_words)
            while frontier:
                w = frontier.pop()
                s = shift(w)
                if s not in closure:
                    closure.add(s)
                    frontier.append(s)
            assert generalized_qt_closed(closure, lambdas, 2, Z4)
            broken = set(closure)
            probe = next(iter(closure))
            if shift(probe) != probe and shift(probe) in broken and len(broken) > 1:
                broken.remove(shift(probe))
                assert not generalized_qt_closed(broken, lambdas, 2, Z4)


class TestPsiImageShift:
    def lam(self, a, b=0):
        return RingElem(a, b)

    def test_consistent_with_preimage_shift(self):
        rng = random.Random(3)
        elems = all_ring_elements(Z4)
        units = [RingElem(a, b) for a in (1, 3) for b in range(4)]
        for _ in range(200):
            lam = rng.choice(units)
            beta = rng.randint(1, 5)
            c = tuple(rng.choice(elems) for _ in range(beta))
            lhs = psi_shift_image(gray_psi(c, Z4), lam, THETA, Z4)
            rhs = gray_psi(consta_shift(c, lam, THETA, Z4), Z4)
            assert lhs == rhs

    @pytest.mark.parametrize("lam", [RingElem(1, 0), RingElem(3, 0), RingElem(1, 2)])
    def test_image_of_skew_code_closed_under_block_map(self, lam):
        # every length-2 skew constacyclic code built from a degree-1 divisor
        for g, _h in right_divisor_pairs(2, lam, 1, Z4, THETA):
            spec = RCodeSpec(beta=2, lam=lam, theta=THETA, gen=g)
            code = build_rcode(spec)
            image = {gray_psi(w, Z4) for w in code.words}
            assert all(psi_shift_image(y, lam, THETA, Z4) in image for y in image)

    def test_trivial_codes_closed(self):
        lam = RingElem(1, 0)
        full = build_rcode(RCodeSpec(beta=2, lam=lam, theta=THETA, gen=one_poly(Z4, THETA)))
        image = {gray_psi(w, Z4) for w in full.words}
        assert all(psi_shift_image(y, lam, THETA, Z4) in image for y in image)
