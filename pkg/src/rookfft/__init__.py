"""Harmonic analysis on the rook monoid R_n (the symmetric inverse semigroup).

The package provides the elements of R_n and both natural bases of its
semigroup algebra, explicit irreducible matrix representations, fast
Fourier transforms with a naive oracle and instrumented operation counts,
Fourier inversion, and spectral analysis of partially ranked data.
"""

__version__ = "0.1.0"

from .algebra import (
    GROUPOID,
    SEMIGROUP,
    AlgebraElement,
    BasisMismatch,
    convolve_groupoid,
    convolve_semigroup,
    inner1,
    inner2,
    to_groupoid,
    to_semigroup,
)
from .core import (
    DimensionMismatch,
    ParseError,
    PartialPermutation,
    compose,
    enumerate_rn,
    factorize,
    idempotent_on,
    leq,
    mobius,
    order_preserving,
    parse_cycle_link,
    print_cycle_link,
    size,
    size_recursive,
)
from .counting import OpCounter
from .rook_reps import branch_rn, dim, halverson_rep, labels, stein_rep
from .spectral import Dataset, SpectrumReport, ingest, isotypic_project, spectrum, to_function
from .symmetric import branch_sn, seminormal_rep, sn_fft, sn_ifft
from .transforms import (
    FourierCoefficients,
    fourier_invert,
    naive_transform,
    recursive_fft,
    stein_fft,
    stein_fft_semigroup,
)

__all__ = [
    "AlgebraElement",
    "BasisMismatch",
    "Dataset",
    "DimensionMismatch",
    "FourierCoefficients",
    "GROUPOID",
    "OpCounter",
    "ParseError",
    "PartialPermutation",
    "SEMIGROUP",
    "SpectrumReport",
    "branch_rn",
    "branch_sn",
    "compose",
    "convolve_groupoid",
    "convolve_semigroup",
    "dim",
    "enumerate_rn",
    "factorize",
    "fourier_invert",
    "halverson_rep",
    "idempotent_on",
    "ingest",
    "inner1",
    "inner2",
    "isotypic_project",
    "labels",
    "leq",
    "mobius",
    "naive_transform",
    "order_preserving",
    "parse_cycle_link",
    "print_cycle_link",
    "recursive_fft",
    "seminormal_rep",
    "size",
    "size_recursive",
    "sn_fft",
    "sn_ifft",
    "spectrum",
    "stein_fft",
    "stein_fft_semigroup",
    "stein_rep",
    "to_function",
    "to_groupoid",
    "to_semigroup",
]
