"""Command-line surface: enumeration, transforms, inversion, convolution,
spectral analysis, and bound-checking benchmarks.

Exit codes: 0 success, 2 usage, 3 parse failure, 4 math-consistency
failure (an oracle or bound check failed, treated as a bug signal).
Every error path prints a single line "ERR:<KIND>: message" to stderr.
The environment variable ROOKFFT_THREADS caps parallelism (0 = auto).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .algebra import (
    GROUPOID,
    SEMIGROUP,
    AlgebraElement,
    BasisMismatch,
    convolve_groupoid,
    convolve_semigroup,
    from_json_dict as element_from_json,
    random_element,
    to_groupoid,
    to_json_dict as element_to_json,
    to_semigroup,
)
from .core import (
    DimensionMismatch,
    ParseError,
    enumerate_rn,
    print_cycle_link,
    size,
    size_recursive,
)
from .spectral import analyze, ingest, report_to_csv, report_to_json_dict, to_function
from .transforms import (
    HALVERSON,
    STEIN,
    fourier_invert,
    from_json_dict as fc_from_json,
    naive_transform,
    naive_bound,
    recursive_bound,
    recursive_fft,
    stein_bound,
    stein_fft,
    stein_fft_semigroup,
    stein_semigroup_bound,
    to_json_dict as fc_to_json,
)

ENUMERATE_GUARD = 8
BENCH_GUARD = 6


@dataclass(frozen=True)
class CliConfig:
    """Parsed invocation; one flat record regardless of subcommand."""

    subcommand: str
    n: int | None = None
    algorithm: str = "naive"
    basis: str | None = None
    association: str = GROUPOID
    inputs: tuple[str, ...] = ()
    output: str | None = None
    format: str = "json"
    convert: bool = False
    seed: int = 0

    @property
    def input(self) -> str:
        if len(self.inputs) != 1:
            raise CliError(2, "USAGE",
                           f"{self.subcommand} takes exactly one --input, got {len(self.inputs)}")
        return self.inputs[0]


class CliError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code = code
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - argparse hook
        raise CliError(2, "USAGE", message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rookfft",
        description="Harmonic analysis on the rook monoid R_n.",
    )
    parser.add_argument("--version", action="version", version=f"rookfft {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("enumerate", help="list all elements of R_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("transform", help="Fourier transform of a function on R_n")
    p.add_argument("--input", action="append", required=True,
                   help="AlgebraElement JSON or ballot CSV")
    p.add_argument("--algorithm", choices=("naive", "stein", "recursive"), default="naive")
    p.add_argument("--basis", choices=(SEMIGROUP, GROUPOID),
                   help="expected basis of the input (validated against the file)")
    p.add_argument("--association", choices=(SEMIGROUP, GROUPOID), default=GROUPOID,
                   help="basis for ballot-CSV input")
    p.add_argument("--convert", action="store_true",
                   help="allow a change of basis when the algorithm needs the other one")
    p.add_argument("--n", type=int, help="ambient size for ballot-CSV input")
    p.add_argument("--output")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("invert", help="Fourier inversion of a block set")
    p.add_argument("--input", action="append", required=True,
                   help="FourierCoefficients JSON")
    p.add_argument("--output")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("convolve", help="convolution of two algebra elements")
    p.add_argument("--input", action="append", required=True,
                   help="AlgebraElement JSON (give twice)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("analyze", help="isotypic energy spectrum of a ballot file")
    p.add_argument("--input", action="append", required=True, help="ballot CSV")
    p.add_argument("--association", choices=(SEMIGROUP, GROUPOID), default=GROUPOID)
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bench", help="run all algorithms on seeded random inputs")
    p.add_argument("--n", type=int, default=4, help="largest ambient size (rows 1..n)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=cmd_bench)

    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    raw_input = getattr(args, "input", None)
    if raw_input is None:
        inputs: tuple[str, ...] = ()
    elif isinstance(raw_input, list):
        inputs = tuple(raw_input)
    else:
        inputs = (raw_input,)
    return CliConfig(
        subcommand=args.subcommand,
        n=getattr(args, "n", None),
        algorithm=getattr(args, "algorithm", "naive"),
        basis=getattr(args, "basis", None),
        association=getattr(args, "association", GROUPOID),
        inputs=inputs,
        output=getattr(args, "output", None),
        format=getattr(args, "format", "json"),
        convert=getattr(args, "convert", False),
        seed=getattr(args, "seed", 0),
    )


def _emit(config: CliConfig, text: str) -> None:
    if config.output:
        with open(config.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


# ---------------------------------------------------------------------------


def cmd_enumerate(config: CliConfig) -> int:
    n = config.n
    if n is None or n < 0:
        raise CliError(2, "USAGE", "n must be nonnegative")
    if n > ENUMERATE_GUARD:
        raise CliError(
            2, "USAGE",
            f"n = {n} refused: |R_n| is too large to print (guard: n <= {ENUMERATE_GUARD})",
        )
    elems = enumerate_rn(n)
    total = size(n)
    recursive_ok = total == size_recursive(n)
    if config.format == "json":
        _emit(config, _dump_json({
            "n": n,
            "size": total,
            "recursive_check": recursive_ok,
            "elements": [{"cycle_link": print_cycle_link(s), "flat": s.to_flat()} for s in elems],
        }))
    else:
        lines = ["cycle_link,flat"]
        lines += [f"{print_cycle_link(s)},{s.to_flat()}" for s in elems]
        lines.append(f"# size={total} recursive={size_recursive(n)} ok={str(recursive_ok).lower()}")
        _emit(config, "\n".join(lines) + "\n")
    return 0


def _load_element(config: CliConfig) -> AlgebraElement:
    path = config.input
    if path.endswith(".csv"):
        dataset = ingest(path, config.n)
        return to_function(dataset, config.association)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
    f = element_from_json(data)
    if config.basis and config.basis != f.basis:
        raise CliError(2, "USAGE",
                       f"input is tagged {f.basis} but --basis {config.basis} was given")
    return f


def cmd_transform(config: CliConfig) -> int:
    f = _load_element(config)
    algorithm = config.algorithm
    if algorithm == "naive":
        family = HALVERSON if f.basis == SEMIGROUP else STEIN
        F = naive_transform(f, family)
        bound = naive_bound(f.n)
        bound_name = "naive"
    elif algorithm == "stein":
        if f.basis == SEMIGROUP:
            if not config.convert:
                raise CliError(2, "USAGE",
                               "stein needs the groupoid basis; pass --convert to change basis")
            F = stein_fft_semigroup(f)
            bound = stein_semigroup_bound(f.n)
            bound_name = "stein_semigroup"
        else:
            F = stein_fft(f)
            bound = stein_bound(f.n)
            bound_name = "stein"
    else:
        if f.basis == GROUPOID:
            if not config.convert:
                raise CliError(2, "USAGE",
                               "recursive needs the semigroup basis; pass --convert to change basis")
            f = to_semigroup(f)
        F = recursive_fft(f)
        bound = recursive_bound(f.n)
        bound_name = "recursive"
    ok = Fraction(F.ops.multiply_adds) <= Fraction(bound)
    data = fc_to_json(F)
    data["algorithm"] = algorithm
    data["bound"] = float(bound)
    data["bound_name"] = bound_name
    data["within_bound"] = ok
    _emit(config, _dump_json(data))
    if not ok:
        print(f"ERR:MATH: measured ops {F.ops.multiply_adds} exceed bound {bound}", file=sys.stderr)
        return 4
    return 0


def cmd_invert(config: CliConfig) -> int:
    try:
        with open(config.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{config.input}: {exc}") from None
    F = fc_from_json(data)
    f = fourier_invert(F)
    _emit(config, _dump_json(element_to_json(f)))
    return 0


def cmd_convolve(config: CliConfig) -> int:
    if len(config.inputs) != 2:
        raise CliError(2, "USAGE", "convolve needs exactly two --input files")
    elems = []
    for path in config.inputs:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                elems.append(element_from_json(json.load(fh)))
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from None
    f, g = elems
    if f.basis != g.basis:
        raise CliError(2, "USAGE", f"cannot convolve {f.basis} with {g.basis}")
    h = convolve_semigroup(f, g) if f.basis == SEMIGROUP else convolve_groupoid(f, g)
    _emit(config, _dump_json(element_to_json(h)))
    return 0


def cmd_analyze(config: CliConfig) -> int:
    dataset = ingest(config.input, config.n)
    report = analyze(dataset, config.association)
    if config.format == "csv":
        _emit(config, report_to_csv(report))
    else:
        _emit(config, _dump_json(report_to_json_dict(report)))
    return 0


def cmd_bench(config: CliConfig) -> int:
    top = config.n if config.n is not None else 4
    if top < 1:
        raise CliError(2, "USAGE", "bench needs n >= 1")
    if top > BENCH_GUARD:
        raise CliError(2, "USAGE", f"bench refused for n > {BENCH_GUARD}")
    rng = random.Random(config.seed)
    rows = []
    all_agree = True
    for n in range(1, top + 1):
        f = random_element(n, SEMIGROUP, rng)
        naive_h = naive_transform(f, HALVERSON)
        rec = recursive_fft(f)
        stein_pipe = stein_fft_semigroup(f)
        naive_s = naive_transform(to_groupoid(f), STEIN)
        agree = rec.allclose(naive_h, 1e-9) and stein_pipe.allclose(naive_s, 1e-9)
        all_agree = all_agree and agree
        rows.append({
            "n": n,
            "size": size(n),
            "ops_naive": naive_h.ops.multiply_adds,
            "ops_stein": stein_pipe.ops.multiply_adds,
            "ops_recursive": rec.ops.multiply_adds,
            "bound_naive": naive_bound(n),
            "bound_stein": float(stein_semigroup_bound(n)),
            "bound_recursive": recursive_bound(n),
            "agree": agree,
        })
    if config.format == "json":
        _emit(config, _dump_json(rows))
    else:
        header = ["n", "size", "ops_naive", "ops_stein", "ops_recursive",
                  "bound_naive", "bound_stein", "bound_recursive", "agree"]
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(
                str(row[h]).lower() if h == "agree" else repr(row[h]) if isinstance(row[h], float) else str(row[h])
                for h in header
            ))
        _emit(config, "\n".join(lines) + "\n")
    if not all_agree:
        print("ERR:MATH: fast transforms disagree with the naive oracle", file=sys.stderr)
        return 4
    return 0


# ---------------------------------------------------------------------------


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(_config(args))
    except CliError as exc:
        print(f"ERR:{exc.kind}: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"ERR:PARSE: {exc}", file=sys.stderr)
        return 3
    except (BasisMismatch, DimensionMismatch) as exc:
        print(f"ERR:USAGE: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ERR:USAGE: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"ERR:PARSE: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
