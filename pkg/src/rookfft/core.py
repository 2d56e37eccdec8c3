"""Elements of the rook monoid R_n and their combinatorics.

R_n is the set of all injective partial maps on {1..n} under partial-function
composition (equivalently, 0/1 matrices with at most one 1 per row and
column).  This module provides the elements themselves, composition and
semigroup inverses, the natural partial order with its Möbius function,
enumeration and counting formulas, Munn's cycle-link notation, and the
canonical factorization of an element through the symmetric group on its
rank.

Elements are immutable and hashable so they can key sparse coefficient maps.
"""

from __future__ import annotations

import re
from functools import cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Iterator, NamedTuple

import numpy as np


class DimensionMismatch(ValueError):
    """Operands belong to rook monoids of different ambient size."""


class ParseError(ValueError):
    """Malformed textual form of an element."""


class PartialPermutation:
    """An element of R_n: an injective partial map on {1..n}.

    The map is stored as a length-n image tuple with 0 marking points
    outside the domain, giving O(1) application and O(n) composition.
    """

    __slots__ = ("n", "image", "_hash")

    def __init__(self, n: int, image: Iterable[int | None]):
        img = tuple(0 if v is None else int(v) for v in image)
        if n < 0:
            raise ValueError("ambient size must be nonnegative")
        if len(img) != n:
            raise ValueError(f"image must have length n={n}, got {len(img)}")
        defined = [v for v in img if v != 0]
        for v in defined:
            if not 1 <= v <= n:
                raise ValueError(f"image value {v} out of range 1..{n}")
        if len(set(defined)) != len(defined):
            raise ValueError("not injective")
        self.n = n
        self.image = img
        self._hash = hash((n, img))

    @classmethod
    def identity(cls, n: int) -> "PartialPermutation":
        return cls(n, range(1, n + 1))

    @classmethod
    def zero(cls, n: int) -> "PartialPermutation":
        """The empty map (the zero of the monoid)."""
        return cls(n, (0,) * n)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "PartialPermutation":
        img = [0] * n
        for a, b in pairs:
            if not 1 <= a <= n:
                raise ValueError(f"domain point {a} out of range 1..{n}")
            if img[a - 1] != 0:
                raise ValueError(f"domain point {a} mapped twice")
            img[a - 1] = b
        return cls(n, img)

    def __call__(self, i: int) -> int | None:
        v = self.image[i - 1]
        return v if v != 0 else None

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i + 1, v) for i, v in enumerate(self.image) if v != 0)

    def dom(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, v in enumerate(self.image) if v != 0)

    def ran(self) -> tuple[int, ...]:
        return tuple(sorted(v for v in self.image if v != 0))

    @property
    def rank(self) -> int:
        return sum(1 for v in self.image if v != 0)

    def preimage(self, v: int) -> int | None:
        if v < 1:
            return None
        try:
            return self.image.index(v) + 1
        except ValueError:
            return None

    def inverse(self) -> "PartialPermutation":
        """The unique y with xyx = x and yxy = y; dom(y) = ran(x)."""
        img = [0] * self.n
        for i, v in enumerate(self.image):
            if v != 0:
                img[v - 1] = i + 1
        return PartialPermutation(self.n, img)

    def restrict(self, points: Iterable[int]) -> "PartialPermutation":
        """Restriction of the map to dom ∩ points."""
        keep = set(points)
        img = [v if (i + 1) in keep else 0 for i, v in enumerate(self.image)]
        return PartialPermutation(self.n, img)

    def is_idempotent(self) -> bool:
        return all(v == 0 or v == i + 1 for i, v in enumerate(self.image))

    # -- ambient-size changes ------------------------------------------------

    def extended(self, n: int) -> "PartialPermutation":
        """Same mappings in a larger ambient set; new points unmapped."""
        if n < self.n:
            raise ValueError("extended() cannot shrink the ambient set")
        return PartialPermutation(n, self.image + (0,) * (n - self.n))

    def extended_fixed(self, n: int) -> "PartialPermutation":
        """Same mappings in a larger ambient set; new points fixed.

        This is the embedding R_m < R_n used by the sub-semigroup chain
        R_n > R_{n-1} > ... > R_1.
        """
        if n < self.n:
            raise ValueError("extended_fixed() cannot shrink the ambient set")
        return PartialPermutation(n, self.image + tuple(range(self.n + 1, n + 1)))

    def truncated(self, m: int) -> "PartialPermutation":
        """Drop ambient points above m; they must be outside dom and ran."""
        if m > self.n:
            raise ValueError("truncated() cannot grow the ambient set")
        if any(v != 0 for v in self.image[m:]) or any(v > m for v in self.image[:m]):
            raise ValueError(f"element does not live inside R_{m}")
        return PartialPermutation(m, self.image[:m])

    def truncated_fixed(self, m: int) -> "PartialPermutation":
        """Drop ambient points above m; they must all be fixed points."""
        if m > self.n:
            raise ValueError("truncated_fixed() cannot grow the ambient set")
        if any(self.image[j] != j + 1 for j in range(m, self.n)):
            raise ValueError(f"points above {m} are not all fixed")
        if any(v > m for v in self.image[:m]):
            raise ValueError(f"element does not live inside R_{m}")
        return PartialPermutation(m, self.image[:m])

    def with_point_fixed(self, p: int) -> "PartialPermutation":
        """Adjoin the fixed point p; p must lie outside dom and ran."""
        if self.image[p - 1] != 0 or p in self.image:
            raise ValueError(f"{p} already occurs in dom or ran")
        img = list(self.image)
        img[p - 1] = p
        return PartialPermutation(self.n, img)

    # -- group interop -------------------------------------------------------

    def to_perm_tuple(self) -> tuple[int, ...]:
        """One-line notation; requires full rank."""
        if self.rank != self.n:
            raise ValueError("not a full permutation")
        return self.image

    @classmethod
    def from_perm_tuple(cls, w: tuple[int, ...]) -> "PartialPermutation":
        return cls(len(w), w)

    # -- text forms ------------------------------------------------------------

    def to_flat(self) -> str:
        """Flat mapping form "a->b;c->d" (ascending domain, "" = zero map)."""
        return ";".join(f"{a}->{b}" for a, b in self.pairs())

    @classmethod
    def from_flat(cls, n: int, text: str) -> "PartialPermutation":
        text = text.strip()
        if not text:
            return cls.zero(n)
        pairs = []
        for part in text.split(";"):
            m = re.fullmatch(r"\s*(\d+)\s*->\s*(\d+)\s*", part)
            if m is None:
                raise ParseError(f"bad mapping {part!r}")
            pairs.append((int(m.group(1)), int(m.group(2))))
        try:
            return cls.from_pairs(n, pairs)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def as_matrix(self) -> np.ndarray:
        """0/1 rook matrix with a 1 at (s(b), b); display helper only."""
        M = np.zeros((self.n, self.n), dtype=int)
        for b, a in self.pairs():
            M[a - 1, b - 1] = 1
        return M

    # -- dunder plumbing -------------------------------------------------------

    def __mul__(self, other: "PartialPermutation") -> "PartialPermutation":
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PartialPermutation)
            and self.n == other.n
            and self.image == other.image
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PartialPermutation({self.n}, {self.to_flat()!r})"


def compose(g: PartialPermutation, f: PartialPermutation) -> PartialPermutation:
    """g∘f: defined where x ∈ dom(f) and f(x) ∈ dom(g)."""
    if g.n != f.n:
        raise DimensionMismatch(f"cannot compose R_{g.n} with R_{f.n}")
    img = [0] * f.n
    for x0, v in enumerate(f.image):
        if v != 0:
            img[x0] = g.image[v - 1]
    return PartialPermutation(f.n, img)


def inverse(s: PartialPermutation) -> PartialPermutation:
    return s.inverse()


def rank(s: PartialPermutation) -> int:
    return s.rank


def idempotent_on(n: int, points: Iterable[int]) -> PartialPermutation:
    """The identity map restricted to the given points."""
    pts = set(points)
    return PartialPermutation(n, (i if i in pts else 0 for i in range(1, n + 1)))


def leq(s: PartialPermutation, t: PartialPermutation) -> bool:
    """The natural partial order: s ≤ t iff s is a restriction of t.

    Equivalent to the existence of an idempotent e with s = e∘t.
    """
    if s.n != t.n:
        raise DimensionMismatch("cannot compare elements of different R_n")
    return all(v == 0 or v == t.image[i] for i, v in enumerate(s.image))


def mobius(s: PartialPermutation, t: PartialPermutation) -> int:
    """Möbius function of the natural order: (-1)^(rank difference) on s ≤ t."""
    if not leq(s, t):
        return 0
    return -1 if (t.rank - s.rank) % 2 else 1


def restrictions(s: PartialPermutation) -> Iterator[PartialPermutation]:
    """All t ≤ s, i.e. the 2^rank restrictions of s (including s itself)."""
    d = s.dom()
    for r in range(len(d) + 1):
        for sub in combinations(d, r):
            yield s.restrict(sub)


def size(n: int) -> int:
    """|R_n| = sum_k C(n,k)^2 k!."""
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def size_recursive(n: int) -> int:
    """|R_n| via |R_n| = 2n|R_{n-1}| - (n-1)^2 |R_{n-2}|, n >= 3."""
    table = [1, 2, 7]
    if n < len(table):
        return table[n]
    for m in range(3, n + 1):
        table.append(2 * m * table[m - 1] - (m - 1) ** 2 * table[m - 2])
    return table[n]


@cache
def enumerate_rn(n: int) -> tuple[PartialPermutation, ...]:
    """All elements of R_n, sorted by image tuple (the canonical order)."""
    elems = []
    for k in range(n + 1):
        for dom in combinations(range(1, n + 1), k):
            for values in permutations(range(1, n + 1), k):
                img = [0] * n
                for a, b in zip(dom, values):
                    img[a - 1] = b
                elems.append(PartialPermutation(n, img))
    elems.sort(key=lambda s: s.image)
    return tuple(elems)


# ---------------------------------------------------------------------------
# k-subsets in colexicographic order (so {1..k} always comes first)
# ---------------------------------------------------------------------------


@cache
def ksubsets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """The k-subsets of {1..n} in colex order; stable as n grows."""
    subs = sorted(combinations(range(1, n + 1), k), key=lambda t: tuple(reversed(t)))
    return tuple(subs)


def ksubset_index(subset: tuple[int, ...]) -> int:
    """Colex rank of a strictly increasing subset (independent of n)."""
    return sum(comb(a - 1, i + 1) for i, a in enumerate(subset))


def order_preserving(n: int, a: Iterable[int], b: Iterable[int]) -> PartialPermutation:
    """p_(A->B): the unique order preserving bijection from A to B."""
    at, bt = tuple(sorted(a)), tuple(sorted(b))
    if len(at) != len(bt):
        raise ValueError(f"|A|={len(at)} and |B|={len(bt)} differ")
    return PartialPermutation.from_pairs(n, zip(at, bt))


class CanonicalFactorization(NamedTuple):
    """x = p_({1..k}->ran) ∘ y ∘ p_(dom->{1..k}) with y a full permutation of {1..k}."""

    ran: tuple[int, ...]
    y: PartialPermutation
    dom: tuple[int, ...]


def factorize(s: PartialPermutation) -> CanonicalFactorization:
    """Factor s through the symmetric group on its rank."""
    d, r = s.dom(), s.ran()
    k = len(d)
    pos_in_ran = {v: i + 1 for i, v in enumerate(r)}
    y = PartialPermutation(k, (pos_in_ran[s.image[a - 1]] for a in d))
    return CanonicalFactorization(r, y, d)


def reassemble(fact: CanonicalFactorization, n: int) -> PartialPermutation:
    """Inverse of factorize."""
    k = fact.y.n
    p_out = order_preserving(n, range(1, k + 1), fact.ran)
    p_in = order_preserving(n, fact.dom, range(1, k + 1))
    return compose(compose(p_out, fact.y.extended(n)), p_in)


# ---------------------------------------------------------------------------
# Cycle-link notation (Munn)
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\(([^()\[\]]*)\)|\[([^()\[\]]*)\]|\s+")


def parse_cycle_link(text: str, n: int) -> PartialPermutation:
    """Parse cycle-link notation: cycles "(a,b,...)" and links "[a,b,...]".

    A cycle (a1,...,ak) maps each ai to its successor and ak back to a1; a
    link [b1,...,bk] maps each bi to its successor and bk to nothing.
    Symbols may appear at most once; unmentioned symbols are unmapped.
    """
    text = text.strip()
    if not text:
        if n == 0:
            return PartialPermutation.zero(0)
        raise ParseError("empty cycle-link string")
    pairs: list[tuple[int, int]] = []
    seen: set[int] = set()
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character at position {pos}: {text[pos]!r}")
        pos = m.end()
        body = m.group(1) if m.group(1) is not None else m.group(2)
        if body is None:
            continue
        try:
            syms = [int(p) for p in body.split(",")]
        except ValueError:
            raise ParseError(f"bad symbol list {body!r}") from None
        if not syms:
            raise ParseError("empty cycle or link")
        for a in syms:
            if not 1 <= a <= n:
                raise ParseError(f"symbol {a} out of range 1..{n}")
            if a in seen:
                raise ParseError(f"symbol {a} repeated")
            seen.add(a)
        for a, b in zip(syms, syms[1:]):
            pairs.append((a, b))
        if m.group(1) is not None:
            pairs.append((syms[-1], syms[0]))
    try:
        return PartialPermutation.from_pairs(n, pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def print_cycle_link(s: PartialPermutation) -> str:
    """Canonical cycle-link form.

    Cycles (rotated to start at their minimal element) come first, then
    links; each group is sorted by minimal element, and every point of
    {1..n} appears (fixed points as "(p)", isolated points as "[p]").
    """
    n = s.n
    in_ran = set(s.ran())
    visited = [False] * (n + 1)
    links: list[list[int]] = []
    for start in range(1, n + 1):
        if start in in_ran:
            continue
        chain = [start]
        visited[start] = True
        while s(chain[-1]) is not None:
            chain.append(s(chain[-1]))
            visited[chain[-1]] = True
        links.append(chain)
    cycles: list[list[int]] = []
    for start in range(1, n + 1):
        if visited[start]:
            continue
        cyc = [start]
        visited[start] = True
        nxt = s(start)
        while nxt != start:
            cyc.append(nxt)
            visited[nxt] = True
            nxt = s(nxt)
        cycles.append(cyc)
    cycles.sort(key=min)
    links.sort(key=min)
    out = ["(" + ",".join(map(str, c)) + ")" for c in cycles]
    out += ["[" + ",".join(map(str, c)) + "]" for c in links]
    return "".join(out)


# ---------------------------------------------------------------------------
# Factorization into generators {t_2..t_n, [m]}
# ---------------------------------------------------------------------------

GeneratorToken = tuple[str, int]  # ("t", j) for (j-1,j); ("link", m) for (1)..(m-1)[m]


def _tcycle(i: int, m: int, n: int) -> PartialPermutation:
    """T_i at level m: the full permutation i -> i+1 -> ... -> m -> i."""
    img = list(range(1, n + 1))
    for j in range(i, m):
        img[j - 1] = j + 1
    img[m - 1] = i
    return PartialPermutation(n, img)


def generator_word(s: PartialPermutation) -> list[GeneratorToken]:
    """Express s as a product of adjacent transpositions and rank-dropping links.

    Working down the chain R_n > R_{n-1} > ... the element is peeled one
    level at a time: if m ∈ dom(s) a left factor t_{i+1}..t_m moves m into
    place; if m ∈ ran(s) only, a right factor t_m..t_{i+1} does; otherwise
    the link [m] = (1)(2)..(m-1)[m] removes m from the domain.  The product
    of the returned tokens, in order, equals s.
    """
    n = s.n
    word: list[GeneratorToken] = []
    suffix: list[GeneratorToken] = []
    cur = s
    for m in range(n, 0, -1):
        v = cur(m)
        if v is not None:
            word.extend(("t", j) for j in range(v + 1, m + 1))
            if v != m:
                cur = compose(_tcycle(v, m, n).inverse(), cur)
        elif m in cur.image:
            i = cur.preimage(m)
            suffix[:0] = (("t", j) for j in range(m, i, -1))
            cur = compose(cur, _tcycle(i, m, n))
        else:
            word.append(("link", m))
            cur = cur.with_point_fixed(m)
    return word + suffix
