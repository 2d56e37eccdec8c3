import random
from math import factorial

import numpy as np
import pytest

from rookfft.counting import OpCounter
from rookfft.symmetric import (
    all_perms,
    adjacent_word,
    branch_sn,
    perm_compose,
    perm_inverse,
    seminormal_rep,
    sn_fft,
    sn_ifft,
    sn_naive,
)
from rookfft.tableaux import num_standard, partitions
from rookfft.transforms import clausen_bound


def rand_fn(n, seed):
    rng = random.Random(seed)
    return {w: complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for w in all_perms(n)}


class TestSeminormalImages:
    def test_trivial_and_sign(self):
        assert np.array_equal(seminormal_rep((2,)).transpositions[2], [[1.0]])
        assert np.array_equal(seminormal_rep((1, 1)).transpositions[2], [[-1.0]])

    def test_standard_rep_of_s3(self):
        rep = seminormal_rep((2, 1))
        assert rep.dim == 2
        assert np.allclose(rep.transpositions[2], np.diag([-1.0, 1.0]))
        # off-diagonal entries are 1 ± 1/(content difference) on the swap pair
        assert np.allclose(rep.transpositions[3], [[0.5, 0.5], [1.5, -0.5]])

    @pytest.mark.parametrize("n", range(2, 7))
    def test_generator_relations(self, n):
        for shape in partitions(n):
            rep = seminormal_rep(shape)
            eye = np.eye(rep.dim)
            for j in range(2, n + 1):
                M = rep.transpositions[j]
                assert np.allclose(M @ M, eye, atol=1e-10)
            for j in range(2, n):
                A, B = rep.transpositions[j], rep.transpositions[j + 1]
                assert np.allclose(A @ B @ A, B @ A @ B, atol=1e-10)
            for j in range(2, n + 1):
                for i in range(2, j - 1):
                    A, B = rep.transpositions[i], rep.transpositions[j]
                    assert np.allclose(A @ B, B @ A, atol=1e-10)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_schur_sparsity(self, n):
        for shape in partitions(n):
            rep = seminormal_rep(shape)
            for M in rep.transpositions.values():
                nz = np.abs(M) > 1e-12
                assert nz.sum(axis=0).max() <= 2
                assert nz.sum(axis=1).max() <= 2

    @pytest.mark.parametrize("n", range(1, 8))
    def test_sum_of_squared_dims(self, n):
        assert sum(num_standard(sh) ** 2 for sh in partitions(n)) == factorial(n)

    def test_evaluate_is_homomorphism(self):
        rep = seminormal_rep((2, 1))
        for u in all_perms(3):
            for v in all_perms(3):
                assert np.allclose(
                    rep.evaluate(u) @ rep.evaluate(v),
                    rep.evaluate(perm_compose(u, v)),
                    atol=1e-10,
                )


class TestBranching:
    def test_order_realized_by_blocks(self):
        # (2,1) restricted to S_2: diag(-1, 1) = sign ⊕ trivial exactly
        assert branch_sn((2, 1)) == ((1, 1), (2,))
        rep = seminormal_rep((2, 1))
        w = (2, 1, 3)
        M = rep.evaluate(w)
        top = seminormal_rep((1, 1)).evaluate((2, 1))
        bottom = seminormal_rep((2,)).evaluate((2, 1))
        assert np.allclose(M, np.block([
            [top, np.zeros((1, 1))],
            [np.zeros((1, 1)), bottom],
        ]), atol=1e-12)

    def test_trivial_and_sign_chains(self):
        assert branch_sn((4,)) == ((3,),)
        assert branch_sn((1, 1, 1, 1)) == ((1, 1, 1),)

    def test_restrict_sn_reads_the_representation(self):
        from rookfft.symmetric import restrict_sn

        assert restrict_sn(seminormal_rep((3, 1))) == ((2, 1), (3,))

    @pytest.mark.parametrize("n", range(2, 6))
    def test_chain_adapted_equality(self, n):
        # evaluating λ ⊢ n on w ∈ S_{n-1} gives exactly the block diagonal of
        # the restricted seminormal images
        for shape in partitions(n):
            rep = seminormal_rep(shape)
            parts = branch_sn(shape)
            for w in all_perms(n - 1):
                lifted = w + (n,)
                expected = np.zeros((rep.dim, rep.dim))
                at = 0
                for mu in parts:
                    sub = seminormal_rep(mu).evaluate(w)
                    d = sub.shape[0]
                    expected[at : at + d, at : at + d] = sub
                    at += d
                assert np.allclose(rep.evaluate(lifted), expected, atol=1e-12)


class TestWords:
    def test_adjacent_word_rebuilds_permutation(self):
        for n in range(1, 6):
            for w in all_perms(n):
                cur = tuple(range(1, n + 1))
                for j in adjacent_word(w):
                    t = tuple(j if v == j - 1 else j - 1 if v == j else v for v in cur)
                    cur = t
                # word product acts as composition: apply factors right-to-left
                rebuilt = tuple(range(1, n + 1))
                for j in reversed(adjacent_word(w)):
                    rebuilt = perm_compose(
                        tuple(j if v == j - 1 else j - 1 if v == j else v for v in range(1, n + 1)),
                        rebuilt,
                    )
                assert perm_inverse(perm_inverse(w)) == w
                assert rebuilt == w


class TestSnFFT:
    def test_s2_blocks(self):
        blocks = sn_fft({(1, 2): 3.0, (2, 1): 5.0}, 2)
        assert np.allclose(blocks[(2,)], [[8.0]])
        assert np.allclose(blocks[(1, 1)], [[-2.0]])

    def test_delta_at_identity(self):
        blocks = sn_fft({(1, 2, 3): 1.0}, 3)
        for shape, M in blocks.items():
            assert np.allclose(M, np.eye(num_standard(shape)))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_naive_within_bound(self, n):
        f = rand_fn(n, seed=n)
        counter = OpCounter()
        fast = sn_fft(f, n, counter)
        slow = sn_naive(f, n)
        for shape in fast:
            assert np.allclose(fast[shape], slow[shape], atol=1e-9)
        assert counter.multiply_adds <= clausen_bound(n)

    def test_s4_bound_value(self):
        counter = OpCounter()
        sn_fft(rand_fn(4, seed=0), 4, counter)
        assert counter.multiply_adds <= clausen_bound(4) == 1600

    @pytest.mark.parametrize("n", range(1, 5))
    def test_convolution_theorem(self, n):
        f, g = rand_fn(n, 10 + n), rand_fn(n, 20 + n)
        conv = {}
        for u, fu in f.items():
            for v, gv in g.items():
                w = perm_compose(u, v)
                conv[w] = conv.get(w, 0j) + fu * gv
        lhs = sn_fft(conv, n)
        F, G = sn_fft(f, n), sn_fft(g, n)
        for shape in lhs:
            assert np.allclose(lhs[shape], F[shape] @ G[shape], atol=1e-9)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_ifft_round_trip(self, n):
        f = rand_fn(n, 30 + n)
        back = sn_ifft(sn_fft(f, n))
        assert all(abs(back[w] - f[w]) < 1e-9 for w in f)

    def test_ifft_rejects_bad_blocks(self):
        blocks = sn_fft(rand_fn(3, 1), 3)
        with pytest.raises(ValueError):
            sn_ifft({(3,): blocks[(3,)]})
        blocks[(2, 1)] = np.zeros((3, 3))
        with pytest.raises(ValueError):
            sn_ifft(blocks)

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            sn_fft({(1, 1): 1.0}, 2)
