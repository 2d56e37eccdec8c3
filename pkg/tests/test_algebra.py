from math import comb, factorial

import pytest
from hypothesis import given, settings

from conftest import partial_perms, rand_elem
from rookfft.algebra import (
    GROUPOID,
    SEMIGROUP,
    AlgebraElement,
    BasisMismatch,
    convolve_groupoid,
    convolve_semigroup,
    from_json_dict,
    inner1,
    inner2,
    to_groupoid,
    to_json_dict,
    to_semigroup,
)
from rookfft.core import (
    DimensionMismatch,
    PartialPermutation,
    compose,
    enumerate_rn,
    idempotent_on,
    size,
)
from rookfft.counting import OpCounter

PP = PartialPermutation


def pp(n, flat):
    return PP.from_flat(n, flat)


def delta(n, s, basis):
    return AlgebraElement.delta(n, s, basis)


class TestConvolveSemigroup:
    def test_point_masses_multiply_like_elements(self):
        for r in enumerate_rn(2):
            for t in enumerate_rn(2):
                prod = convolve_semigroup(delta(2, r, SEMIGROUP), delta(2, t, SEMIGROUP))
                assert prod.allclose(delta(2, compose(r, t), SEMIGROUP))

    def test_identity_delta_is_neutral(self):
        f = rand_elem(3, SEMIGROUP, seed=1)
        e = delta(3, PP.identity(3), SEMIGROUP)
        assert convolve_semigroup(e, f).allclose(f)

    def test_matches_triple_loop(self):
        f = rand_elem(3, SEMIGROUP, seed=2)
        g = rand_elem(3, SEMIGROUP, seed=3)
        expected = {}
        for r in enumerate_rn(3):
            for t in enumerate_rn(3):
                s = compose(r, t)
                expected[s] = expected.get(s, 0j) + f[r] * g[t]
        assert convolve_semigroup(f, g).allclose(AlgebraElement(3, SEMIGROUP, expected), 1e-10)

    def test_basis_mismatch(self):
        with pytest.raises(BasisMismatch):
            convolve_semigroup(
                rand_elem(2, SEMIGROUP, 1), rand_elem(2, GROUPOID, 1)
            )


class TestConvolveGroupoid:
    def test_disallowed_composition_vanishes(self):
        sigma = pp(4, "1->2;3->1")
        piv = pp(4, "1->4;2->3")
        out = convolve_groupoid(delta(4, sigma, GROUPOID), delta(4, piv, GROUPOID))
        assert out.support() == 0

    def test_aligned_composition_survives(self):
        sigma = pp(4, "1->2;3->1")
        piv = pp(4, "1->4;2->3")
        out = convolve_groupoid(delta(4, piv, GROUPOID), delta(4, sigma, GROUPOID))
        assert out.allclose(delta(4, pp(4, "1->3;3->4"), GROUPOID))

    def test_idempotent_bracket_squares_to_itself(self):
        e = idempotent_on(3, [1, 3])
        d = delta(3, e, GROUPOID)
        assert convolve_groupoid(d, d).allclose(d)

    def test_matches_range_aligned_sum(self):
        # (f∗g)(s) = Σ_{r : ran(r) = ran(s)} f(r)·g(r⁻¹s)
        f = rand_elem(3, GROUPOID, seed=4)
        g = rand_elem(3, GROUPOID, seed=5)
        got = convolve_groupoid(f, g)
        for s in enumerate_rn(3):
            total = 0j
            for r in enumerate_rn(3):
                if r.ran() == s.ran():
                    total += f[r] * g[compose(r.inverse(), s)]
            assert abs(got[s] - total) < 1e-10


class TestBasisChange:
    def test_r1_expansion(self):
        a, b = 2.0, 5.0
        f = AlgebraElement(1, SEMIGROUP, {PP.identity(1): a, PP.zero(1): b})
        g = to_groupoid(f)
        assert abs(g[PP.identity(1)] - a) < 1e-12
        assert abs(g[PP.zero(1)] - (a + b)) < 1e-12

    def test_identity_delta_spreads_everywhere(self):
        g = to_groupoid(delta(3, PP.identity(3), SEMIGROUP))
        for s in enumerate_rn(3):
            assert abs(g[s] - (1.0 if s.is_idempotent() else 0.0)) < 1e-12

    def test_bracket_identity_in_r1(self):
        f = to_semigroup(delta(1, PP.identity(1), GROUPOID))
        assert abs(f[PP.identity(1)] - 1) < 1e-12
        assert abs(f[PP.zero(1)] + 1) < 1e-12

    def test_bracket_zero_map_is_zero_map(self):
        f = to_semigroup(delta(2, PP.zero(2), GROUPOID))
        assert f.allclose(delta(2, PP.zero(2), SEMIGROUP))

    def test_round_trip_random(self):
        f = rand_elem(3, SEMIGROUP, seed=6)
        assert to_semigroup(to_groupoid(f)).allclose(f, 1e-10)

    @pytest.mark.parametrize("n", range(5))
    def test_mutually_inverse_on_basis_vectors(self, n):
        for s in enumerate_rn(n):
            d = delta(n, s, SEMIGROUP)
            assert to_semigroup(to_groupoid(d)).allclose(d, 1e-12)
            dg = delta(n, s, GROUPOID)
            assert to_groupoid(to_semigroup(dg)).allclose(dg, 1e-12)

    def test_zeta_op_count_on_full_support(self):
        n = 3
        f = rand_elem(n, SEMIGROUP, seed=7)
        counter = OpCounter()
        to_groupoid(f, counter)
        expected = sum(comb(n, k) ** 2 * factorial(k) * 2**k for k in range(n + 1))
        assert counter.multiply_adds == expected
        assert counter.multiply_adds <= 2**n * size(n)


class TestMultiplicationConsistency:
    @pytest.mark.parametrize("seed", [11, 12, 13])
    def test_bases_compute_the_same_product(self, seed):
        f = rand_elem(3, SEMIGROUP, seed)
        g = rand_elem(3, SEMIGROUP, seed + 100)
        lhs = to_groupoid(convolve_semigroup(f, g))
        rhs = convolve_groupoid(to_groupoid(f), to_groupoid(g))
        assert lhs.allclose(rhs, 1e-10)

    @pytest.mark.parametrize("basis", [SEMIGROUP, GROUPOID])
    def test_associativity(self, basis):
        conv = convolve_semigroup if basis == SEMIGROUP else convolve_groupoid
        f = rand_elem(3, basis, 21)
        g = rand_elem(3, basis, 22)
        h = rand_elem(3, basis, 23)
        assert conv(conv(f, g), h).allclose(conv(f, conv(g, h)), 1e-10)


class TestInnerProducts:
    def test_bracket_identity_counterexample(self):
        v = to_semigroup(delta(1, PP.identity(1), GROUPOID))
        w = to_semigroup(delta(1, PP.zero(1), GROUPOID))
        assert inner1(v, w) == -1

    def test_inner2_on_distinct_brackets(self):
        v = delta(1, PP.identity(1), GROUPOID)
        w = delta(1, PP.zero(1), GROUPOID)
        assert inner2(v, w) == 0

    def test_basis_requirements(self):
        f = rand_elem(2, SEMIGROUP, 1)
        g = rand_elem(2, GROUPOID, 1)
        with pytest.raises(BasisMismatch):
            inner1(f, g)
        with pytest.raises(BasisMismatch):
            inner2(g, f)

    def test_conjugate_symmetry(self):
        f = rand_elem(2, GROUPOID, 31)
        g = rand_elem(2, GROUPOID, 32)
        assert abs(inner2(f, g) - inner2(g, f).conjugate()) < 1e-12


@pytest.mark.parametrize("n", range(9))
def test_zeta_matrix_one_count_identity(n):
    rows = sum(comb(n, k) ** 2 * factorial(k) * size(n - k) for k in range(n + 1))
    cols = sum(comb(n, k) ** 2 * factorial(k) * 2**k for k in range(n + 1))
    assert rows == cols


class TestElementPlumbing:
    def test_near_zero_coefficients_are_dropped(self):
        f = AlgebraElement(2, SEMIGROUP, {PP.zero(2): 1e-16})
        assert f.support() == 0

    def test_dimension_check(self):
        with pytest.raises(DimensionMismatch):
            AlgebraElement(2, SEMIGROUP, {PP.zero(3): 1.0})

    def test_json_round_trip(self):
        f = rand_elem(3, GROUPOID, 41, support="sparse")
        assert from_json_dict(to_json_dict(f)).allclose(f, 1e-15)

    def test_arithmetic(self):
        f = rand_elem(2, SEMIGROUP, 51)
        g = rand_elem(2, SEMIGROUP, 52)
        assert (f + g - g).allclose(f, 1e-12)
        assert (2.0 * f).allclose(f + f, 1e-12)


@given(partial_perms(min_n=1, max_n=4))
@settings(max_examples=100)
def test_zeta_moebius_round_trip_on_deltas(s):
    d = AlgebraElement.delta(s.n, s, SEMIGROUP)
    assert to_semigroup(to_groupoid(d)).allclose(d, 1e-12)
