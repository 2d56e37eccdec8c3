"""Spectral analysis of partially ranked data over the rook monoid.

A ballot that ranks some candidates and skips others is an injective
partial map candidate → position, i.e. an element of R_n, and a dataset is
a nonnegative function on R_n.  Under an association model (semigroup or
groupoid basis) the dataset becomes an algebra element, which decomposes
into isotypic components via transform → zero out → invert.  Energies are
reported under ⟨·,·⟩₂, the inner product that makes distinct isotypic
components orthogonal.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .algebra import (
    BASES,
    GROUPOID,
    AlgebraElement,
    BasisMismatch,
    inner2,
    to_groupoid,
)
from .core import ParseError, PartialPermutation
from .rook_reps import labels
from .tableaux import Shape
from .transforms import FourierCoefficients, fourier_invert, stein_fft


@dataclass
class Dataset:
    """Ballots with multiplicities; all ballots share the ambient size."""

    n: int
    records: list[tuple[PartialPermutation, float]]

    def total_count(self) -> float:
        return sum(c for _, c in self.records)


def ingest(path, n: int | None = None) -> Dataset:
    """Read a ballot CSV (header "ballot,count"); duplicate ballots merge.

    The ballot field is the flat mapping form "a->b;c->d" ("" for the
    all-blank ballot).  When n is not given it is inferred from the largest
    symbol mentioned.
    """
    with open(path, "r", encoding="utf-8", newline="") as fh:
        return _ingest_lines(fh, n)


def _ingest_lines(fh, n: int | None) -> Dataset:
    rows = list(csv.reader(fh))
    if not rows or [c.strip() for c in rows[0]] != ["ballot", "count"]:
        raise ParseError('line 1: expected header "ballot,count"')
    raw: list[tuple[int, str, float]] = []
    biggest = 0
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 2:
            raise ParseError(f"line {lineno}: expected 2 fields, got {len(row)}")
        text = row[0].strip()
        try:
            count = float(row[1])
        except ValueError:
            raise ParseError(f"line {lineno}: bad count {row[1]!r}") from None
        if count < 0:
            raise ParseError(f"line {lineno}: negative count {count}")
        for token in text.replace("->", ";").split(";"):
            if token.strip().isdigit():
                biggest = max(biggest, int(token))
        raw.append((lineno, text, count))
    if n is None:
        n = biggest
    merged: dict[PartialPermutation, float] = {}
    for lineno, text, count in raw:
        try:
            ballot = PartialPermutation.from_flat(n, text)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        merged[ballot] = merged.get(ballot, 0.0) + count
    return Dataset(n, sorted(merged.items(), key=lambda kv: kv[0].image))


def to_function(d: Dataset, association: str) -> AlgebraElement:
    """Attach the raw counts to the chosen natural basis."""
    if association not in BASES:
        raise ValueError(f"unknown association model {association!r}")
    coeffs: dict[PartialPermutation, complex] = {}
    for ballot, count in d.records:
        coeffs[ballot] = coeffs.get(ballot, 0j) + count
    return AlgebraElement(d.n, association, coeffs)


def _as_groupoid(f: AlgebraElement) -> AlgebraElement:
    return f if f.basis == GROUPOID else to_groupoid(f)


def isotypic_project(f: AlgebraElement, shape: Shape) -> AlgebraElement:
    """Projection onto the isotypic component of one label.

    Computed by transform → keep the one block → invert; the projections
    over all labels sum back to the groupoid image of f.
    """
    shape = tuple(shape)
    if shape not in labels(f.n):
        raise ValueError(f"unknown label {shape} for R_{f.n}")
    F = stein_fft(_as_groupoid(f))
    kept = {sh: (M if sh == shape else np.zeros_like(M)) for sh, M in F.blocks.items()}
    return fourier_invert(FourierCoefficients(f.n, F.family, kept))


@dataclass
class SpectrumReport:
    """Per-label ⟨p,p⟩₂ energies of the isotypic projections."""

    n: int
    association: str
    energies: dict[Shape, float]
    total: float

    def fractions(self) -> dict[Shape, float]:
        if self.total == 0:
            return {sh: 0.0 for sh in self.energies}
        return {sh: e / self.total for sh, e in self.energies.items()}


def spectrum(f: AlgebraElement, association: str | None = None) -> SpectrumReport:
    """Energy decomposition of f across the isotypic components.

    The association model is the basis carrying the raw values; passing a
    different one is an error (convert explicitly instead).
    """
    if association is not None and association != f.basis:
        raise BasisMismatch(
            f"element carries the {f.basis} association, asked for {association}"
        )
    g = _as_groupoid(f)
    F = stein_fft(g)
    energies: dict[Shape, float] = {}
    total = 0.0
    for shape in labels(f.n):
        kept = {sh: (M if sh == shape else np.zeros_like(M)) for sh, M in F.blocks.items()}
        p = fourier_invert(FourierCoefficients(f.n, F.family, kept))
        e = inner2(p, p).real
        energies[shape] = e
        total += e
    return SpectrumReport(f.n, f.basis, energies, total)


def analyze(d: Dataset, association: str) -> SpectrumReport:
    return spectrum(to_function(d, association))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def report_to_json_dict(r: SpectrumReport) -> dict:
    fracs = r.fractions()
    return {
        "n": r.n,
        "association": r.association,
        "total": r.total,
        "labels": [
            {"lambda": list(sh), "k": sum(sh), "energy": e, "fraction": fracs[sh]}
            for sh, e in r.energies.items()
        ],
    }


def report_to_csv(r: SpectrumReport) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["lambda", "k", "energy", "fraction"])
    fracs = r.fractions()
    for sh, e in r.energies.items():
        writer.writerow([" ".join(map(str, sh)), sum(sh), repr(e), repr(fracs[sh])])
    return out.getvalue()
