"""Irreducible matrix representations of the rook monoid R_n.

Two equivalent families, both indexed by partitions λ ⊢ k for 0 ≤ k ≤ n:

* the tensor-up family ("stein"), built from a seminormal representation ρ
  of S_k placed into a C(n,k)×C(n,k) grid of d_ρ×d_ρ cells indexed by
  k-subsets: the groupoid basis element for s of rank k maps to ρ(y) in
  cell (ran(s), dom(s)) and every other element of the basis to 0;

* the tableau family ("halverson"), acting on n-standard tableaux with the
  seminormal content coefficients, extended by the rank-dropping generator
  [n] = (1)(2)..(n-1)[n] which kills every tableau containing n.  With the
  generalized last-letter basis order these matrices are chain-adapted to
  R_n > R_{n-1} > ... > R_1, which the recursive transform relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from math import comb

import numpy as np

from .core import (
    PartialPermutation,
    factorize,
    generator_word,
    ksubset_index,
    ksubsets,
    restrictions,
)
from .counting import Triplets, sparse_triplets
from .symmetric import GroupRep, seminormal_rep, transposition_image
from .tableaux import (
    Shape,
    corners,
    entries,
    nstandard_tableaux,
    num_standard,
    partitions,
    remove_corner,
)

# per-element image caches are worthwhile at test scale but would hold
# |R_n|·Σ dim² complex entries (gigabytes from n = 6 on), so cap them
CACHE_AMBIENT_LIMIT = 5


def labels(n: int) -> tuple[Shape, ...]:
    """Λ_n: all partitions of all weights 0..n, in a fixed order."""
    out: list[Shape] = []
    for k in range(n + 1):
        out.extend(partitions(k))
    return tuple(out)


def dim(shape: Shape, n: int) -> int:
    """Dimension of the irreducible labelled by λ ⊢ k: C(n,k)·f^λ."""
    return comb(n, sum(shape)) * num_standard(shape)


def branch_rn(shape: Shape, n: int) -> tuple[Shape, ...]:
    """Restriction of λ to R_{n-1}, in realized block order.

    The label itself survives (when λ ⊬ n), followed by each corner
    removal, top corner first.
    """
    if n < 1:
        raise ValueError("branching needs n >= 1")
    keep = (shape,) if sum(shape) < n else ()
    return keep + tuple(remove_corner(shape, r) for r, _ in corners(shape))


@dataclass
class HalversonRep:
    """Chain-adapted irreducible representation of R_n on n-standard tableaux."""

    shape: Shape
    n: int
    dim: int
    basis: tuple
    transpositions: dict[int, np.ndarray]
    sparse: dict[int, Triplets]
    _links: dict[int, np.ndarray] = field(default_factory=dict, repr=False)
    _eval_cache: dict = field(default_factory=dict, repr=False)
    _groupoid_cache: dict = field(default_factory=dict, repr=False)

    def link_image(self, m: int) -> np.ndarray:
        """Image of [m]: diagonal, keeping exactly the tableaux without m."""
        hit = self._links.get(m)
        if hit is None:
            hit = np.diag([0.0 if m in entries(L) else 1.0 for L in self.basis])
            self._links[m] = hit
        return hit

    def link_sparse(self, m: int) -> Triplets:
        return sparse_triplets(self.link_image(m))

    def evaluate(self, s: PartialPermutation) -> np.ndarray:
        """ρ(s) via a generator word; at most 2 nonzeros per factor row."""
        if s.n != self.n:
            raise ValueError(f"element lives in R_{s.n}, representation in R_{self.n}")
        hit = self._eval_cache.get(s)
        if hit is not None:
            return hit
        M = np.eye(self.dim)
        for kind, j in generator_word(s):
            M = M @ (self.transpositions[j] if kind == "t" else self.link_image(j))
        if self.n <= CACHE_AMBIENT_LIMIT:
            self._eval_cache[s] = M
        return M

    def eval_groupoid(self, s: PartialPermutation) -> np.ndarray:
        """Image of the groupoid basis element ⌊s⌋ = Σ_{t≤s} μ(t,s)·t."""
        hit = self._groupoid_cache.get(s)
        if hit is not None:
            return hit
        k = s.rank
        M = np.zeros((self.dim, self.dim))
        for t in restrictions(s):
            sign = -1.0 if (k - t.rank) % 2 else 1.0
            M = M + sign * self.evaluate(t)
        if self.n <= CACHE_AMBIENT_LIMIT:
            self._groupoid_cache[s] = M
        return M


@cache
def halverson_rep(shape: Shape, n: int) -> HalversonRep:
    if sum(shape) > n:
        raise ValueError(f"weight of {shape} exceeds n = {n}")
    basis = nstandard_tableaux(shape, n)
    images = {j: transposition_image(basis, j) for j in range(2, n + 1)}
    return HalversonRep(
        shape=shape,
        n=n,
        dim=len(basis),
        basis=basis,
        transpositions=images,
        sparse={j: sparse_triplets(M) for j, M in images.items()},
    )


@dataclass
class SteinRep:
    """Tensor-up irreducible representation of R_n from a seminormal ρ on S_k."""

    shape: Shape
    n: int
    base: GroupRep
    subsets: tuple[tuple[int, ...], ...]
    _eval_cache: dict = field(default_factory=dict, repr=False)

    @property
    def k(self) -> int:
        return sum(self.shape)

    @property
    def dim(self) -> int:
        return len(self.subsets) * self.base.dim

    def cell(self, M: np.ndarray, a: int, b: int) -> np.ndarray:
        d = self.base.dim
        return M[a * d : (a + 1) * d, b * d : (b + 1) * d]

    def eval_groupoid(self, s: PartialPermutation) -> np.ndarray:
        """Image of the groupoid basis element for s: zero unless rk(s) = k,
        otherwise ρ(y) in the (ran(s), dom(s)) cell."""
        hit = self._eval_cache.get(s)
        if hit is not None:
            return hit
        out = np.zeros((self.dim, self.dim))
        if s.rank == self.k:
            ran, y, dom = factorize(s)
            block = self.base.evaluate(y.to_perm_tuple())
            d = self.base.dim
            a, b = ksubset_index(ran), ksubset_index(dom)
            out[a * d : (a + 1) * d, b * d : (b + 1) * d] = block
        if self.n <= CACHE_AMBIENT_LIMIT:
            self._eval_cache[s] = out
        return out

    def eval_semigroup(self, s: PartialPermutation) -> np.ndarray:
        """Image of s itself: the sum over all restrictions of rank k."""
        out = np.zeros((self.dim, self.dim))
        for t in restrictions(s):
            if t.rank == self.k:
                out += self.eval_groupoid(t)
        return out


@cache
def stein_rep(shape: Shape, n: int) -> SteinRep:
    k = sum(shape)
    if k > n:
        raise ValueError(f"weight of {shape} exceeds n = {n}")
    return SteinRep(shape=shape, n=n, base=seminormal_rep(shape), subsets=ksubsets(n, k))
