"""Young's seminormal representations of S_k and a divide-and-conquer FFT.

The matrix representations are chain-adapted to S_k > S_{k-1} > ... > S_1
(restriction to the subgroup fixing k is literally block-diagonal in
lower-level representations), which is what lets the FFT assemble subgroup
transforms for free and pay only for sparse multiplications by images of
the coset representatives T_i = t_{i+1}···t_k.  The resulting multiply-add
count is at most (2/3)k(k+1)²k!.

Permutations are tuples in one-line notation: w = (w(1), ..., w(k)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from itertools import permutations
from math import factorial
from typing import Mapping

import numpy as np

from .counting import OpCounter, Triplets, accumulate, block_diag, left_apply, sparse_triplets
from .tableaux import (
    Shape,
    Tableau,
    content,
    corners,
    find_entry,
    is_standard,
    nstandard_tableaux,
    num_standard,
    partitions,
    remove_corner,
    swap_adjacent,
)

Perm = tuple[int, ...]


def perm_compose(u: Perm, v: Perm) -> Perm:
    """u∘v."""
    return tuple(u[x - 1] for x in v)


def perm_inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for j, v in enumerate(w):
        inv[v - 1] = j + 1
    return tuple(inv)


def all_perms(n: int) -> tuple[Perm, ...]:
    return tuple(permutations(range(1, n + 1)))


def _descend_map(i: int, m: int) -> tuple[int, ...]:
    """Value table of T_i^{-1} at level m: i -> m, j -> j-1 for i < j <= m."""
    vt = list(range(m + 1))
    for j in range(i + 1, m + 1):
        vt[j] = j - 1
    vt[i] = m
    return tuple(vt)


def adjacent_word(w: Perm) -> list[int]:
    """Indices j with w = t_{j1}···t_{jr}, peeling the largest point per level."""
    word: list[int] = []
    cur = list(w)
    for m in range(len(w), 1, -1):
        v = cur[m - 1]
        word.extend(range(v + 1, m + 1))
        vt = _descend_map(v, m)
        cur = [vt[x] for x in cur[: m - 1]]
    return word


def transposition_image(basis: tuple[Tableau, ...], i: int) -> np.ndarray:
    """Matrix of t_i = (i-1, i) acting on the span of an n-standard basis.

    On a basis vector indexed by L: when both i-1 and i appear in L the
    action mixes L with the swapped tableau using the inverse content
    difference 1/(ct(L(i)) - ct(L(i-1))); when exactly one appears it just
    relabels; when neither appears it fixes the vector.
    """
    index = {t: j for j, t in enumerate(basis)}
    d = len(basis)
    M = np.zeros((d, d))
    for col, L in enumerate(basis):
        pos_i = find_entry(L, i)
        pos_prev = find_entry(L, i - 1)
        if pos_i is not None and pos_prev is not None:
            diff = content(*pos_i) - content(*pos_prev)
            M[col, col] += 1.0 / diff
            swapped = swap_adjacent(L, i)
            if is_standard(swapped):
                M[index[swapped], col] += 1.0 + 1.0 / diff
        elif pos_i is not None or pos_prev is not None:
            M[index[swap_adjacent(L, i)], col] = 1.0
        else:
            M[col, col] = 1.0
    return M


@dataclass
class GroupRep:
    """An irreducible seminormal matrix representation of S_k."""

    shape: Shape
    dim: int
    basis: tuple[Tableau, ...]
    transpositions: dict[int, np.ndarray]
    sparse: dict[int, Triplets]
    _eval_cache: dict[Perm, np.ndarray] = field(default_factory=dict, repr=False)

    @property
    def k(self) -> int:
        return sum(self.shape)

    def evaluate(self, w: Perm) -> np.ndarray:
        """ρ(w) as a dense matrix, via a word in adjacent transpositions."""
        hit = self._eval_cache.get(w)
        if hit is not None:
            return hit
        M = np.eye(self.dim)
        for j in adjacent_word(w):
            M = M @ self.transpositions[j]
        self._eval_cache[w] = M
        return M


@cache
def seminormal_rep(shape: Shape) -> GroupRep:
    """The seminormal representation of S_k indexed by λ ⊢ k."""
    k = sum(shape)
    basis = nstandard_tableaux(shape, k)
    images = {j: transposition_image(basis, j) for j in range(2, k + 1)}
    return GroupRep(
        shape=shape,
        dim=len(basis),
        basis=basis,
        transpositions=images,
        sparse={j: sparse_triplets(M) for j, M in images.items()},
    )


def branch_sn(shape: Shape) -> tuple[Shape, ...]:
    """Restriction of λ ⊢ k to S_{k-1}: remove each corner, top corner first.

    Under the last-letter basis order the restricted matrices are literally
    block-diagonal with blocks in exactly this order.
    """
    return tuple(remove_corner(shape, r) for r, _ in corners(shape))


def restrict_sn(rep: GroupRep) -> tuple[Shape, ...]:
    return branch_sn(rep.shape)


def sn_fft(
    f: Mapping[Perm, complex], n: int, counter: OpCounter | None = None
) -> dict[Shape, np.ndarray]:
    """Fourier transform of f on S_n over the seminormal representations.

    Recursive over the coset decomposition by w(n): the n subgroup
    transforms are reassembled block-diagonally for free and multiplied by
    the sparse images of T_i = t_{i+1}···t_n.  Returns one d_λ×d_λ block per
    λ ⊢ n; multiply-adds are charged to the counter.
    """
    if counter is None:
        counter = OpCounter()
    cleaned = {tuple(w): complex(c) for w, c in f.items() if c != 0}
    for w in cleaned:
        if len(w) != n or sorted(w) != list(range(1, n + 1)):
            raise ValueError(f"{w} is not a permutation of 1..{n}")
    return _sn_fft(cleaned, n, counter)


def _sn_fft(f: dict[Perm, complex], m: int, counter: OpCounter) -> dict[Shape, np.ndarray]:
    if m <= 1:
        # a single 1x1 identity block per representation: assignment only
        key = tuple(range(1, m + 1))
        return {shape: np.array([[f.get(key, 0j)]]) for shape in partitions(m)}

    buckets: dict[int, dict[Perm, complex]] = {}
    for w, c in f.items():
        i = w[m - 1]
        vt = _descend_map(i, m)
        buckets.setdefault(i, {})[tuple(vt[x] for x in w[: m - 1])] = c

    subs = {i: _sn_fft(g, m - 1, counter) for i, g in sorted(buckets.items())}

    out: dict[Shape, np.ndarray] = {}
    for shape in partitions(m):
        rep = seminormal_rep(shape)
        acc = None
        for i, sub in subs.items():
            D = block_diag([sub[mu] for mu in branch_sn(shape)], rep.dim)
            for j in range(m, i, -1):
                D = left_apply(rep.sparse[j], D, counter)
            acc = accumulate(acc, D, counter)
        out[shape] = acc if acc is not None else np.zeros((rep.dim, rep.dim), dtype=complex)
    return out


def sn_naive(f: Mapping[Perm, complex], n: int) -> dict[Shape, np.ndarray]:
    """Direct evaluation of all blocks; the oracle for sn_fft."""
    out = {}
    for shape in partitions(n):
        rep = seminormal_rep(shape)
        acc = np.zeros((rep.dim, rep.dim), dtype=complex)
        for w, c in f.items():
            if c != 0:
                acc += c * rep.evaluate(tuple(w))
        out[shape] = acc
    return out


def sn_ifft(blocks: Mapping[Shape, np.ndarray]) -> dict[Perm, complex]:
    """Invert a transform on S_n: f(w) = (1/n!) Σ_λ d_λ tr(f̂(λ) ρ_λ(w⁻¹))."""
    shapes = list(blocks)
    if not shapes:
        raise ValueError("no blocks given")
    n = sum(shapes[0])
    expected = set(partitions(n))
    if set(shapes) != expected:
        raise ValueError(f"incomplete block set: need all partitions of {n}")
    for shape in shapes:
        d = num_standard(shape)
        if np.shape(blocks[shape]) != (d, d):
            raise ValueError(f"block {shape} should be {d}x{d}")
    order = factorial(n)
    out: dict[Perm, complex] = {}
    for w in all_perms(n):
        w_inv = perm_inverse(w)
        total = 0j
        for shape in expected:
            rep = seminormal_rep(shape)
            total += rep.dim * np.trace(np.asarray(blocks[shape]) @ rep.evaluate(w_inv))
        out[w] = total / order
    return out
