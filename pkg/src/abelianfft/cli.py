"""Command line interface.

Subcommands: transform, convolve, characters, circulant, verify, bench.
Exit codes: 0 success, 1 verification failure, 2 semantic input error,
3 input parse failure, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import bench, circulant, fourier, transforms, vecio, verify
from .errors import DimensionError, ResourceLimitError, UnsupportedLengthError, VectorParseError
from .groups import as_group

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_PARSE = 3
EXIT_CAP = 4


def _write_result(args, vec, info: str) -> None:
    """Vector to -o (or stdout); the info line goes wherever the data is not."""
    if getattr(args, "output", None):
        vecio.write_vector(args.output, vec, getattr(args, "format", None))
        print(info)
    else:
        print(info, file=sys.stderr)
        sys.stdout.write(vecio.dumps_vector(vec, getattr(args, "format", None) or "json"))


def _cmd_transform(args) -> int:
    group = as_group(args.group)
    x = vecio.read_vector(args.input, args.format)
    if x.shape[0] != group.order:
        raise DimensionError(f"vector length {x.shape[0]} != order {group.order} of {group}")
    if args.engine == "fast":
        y = transforms.g_fft(group, x, args.direction)
    elif args.direction == "analysis":
        y = fourier.apply_D(group, x)
    else:
        y = fourier.apply_F(group, x)
    norm = f"(1/{group.order}) F*" if args.direction == "analysis" else "F"
    _write_result(args, y, f"engine={args.engine} direction={args.direction} normalization={norm}")
    return EXIT_OK


def _cmd_convolve(args) -> int:
    group = as_group(args.group)
    c = vecio.read_vector(args.file_c, args.format)
    d = vecio.read_vector(args.file_d, args.format)
    for name, vec in (("c", c), ("d", d)):
        if vec.shape[0] != group.order:
            raise DimensionError(
                f"vector {name} has length {vec.shape[0]}, group {group} has order {group.order}"
            )
    if args.engine == "naive":
        out = circulant.g_naive_convolve(group, c, d)
        kernel = "naive"
    elif group.num_factors == 1 and transforms.is_power_of_two(group.factors[0]):
        out = transforms.fast_convolve(c, d)
        kernel = "radix2"
    else:
        out = transforms.g_fast_convolve(group, c, d)
        kernel = "separable"
    _write_result(args, out, f"engine={args.engine} kernel={kernel} group={group}")
    return EXIT_OK


def _parse_element(group, text: str):
    parts = [p.strip() for p in text.split(",") if p.strip() != ""]
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad element label {text!r}") from None
    if group.num_factors == 1 and len(coords) == 1:
        return coords
    return group.check_element(coords)


def _cmd_characters(args) -> int:
    group = as_group(args.group)
    f = fourier.dft_matrix(group)
    if args.element is not None:
        elems = [group.check_element(_parse_element(group, args.element))]
    else:
        elems = group.elements()
    for g in elems:
        row = f[:, group.index_of(g)]
        cells = [vecio.format_complex(z, args.precision) for z in row]
        label = ",".join(str(c) for c in g) if g else "()"
        if args.porcelain:
            print("\t".join([label, *cells]))
        else:
            print(f"chi({label}): " + "  ".join(cells))
    return EXIT_OK


def _cmd_circulant(args) -> int:
    group = as_group(args.group)
    v = vecio.read_vector(args.input, args.format)
    if v.shape[0] != group.order:
        raise DimensionError(f"vector length {v.shape[0]} != order {group.order} of {group}")
    circ = circulant.GCirculant(group, v)
    if args.action == "materialize":
        m = circ.materialize(cap=args.oracle_cap)
        if args.output:
            def pair(z):
                return f"[{format(z.real, '.17g')}, {format(z.imag, '.17g')}]"

            rows = ",\n".join("  [" + ", ".join(pair(z) for z in row) + "]" for row in m)
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write("[\n" + rows + "\n]\n")
            print(f"wrote {m.shape[0]}x{m.shape[1]} matrix to {args.output}")
        else:
            for row in m:
                print("  ".join(vecio.format_complex(z, args.precision) for z in row))
    elif args.action == "spectrum":
        lam = fourier.g_circulant_eigenvalues(group, v)
        if args.output:
            vecio.write_vector(args.output, lam, args.format)
            print(f"wrote {lam.shape[0]} eigenvalues to {args.output}")
        else:
            for g, value in zip(group.elements(), lam):
                label = ",".join(str(c) for c in g) if g else "()"
                print(f"lambda({label}) = {vecio.format_complex(value, args.precision)}")
    elif args.action == "blocks":
        for m, block in enumerate(circ.blocks()):
            cells = "  ".join(vecio.format_complex(z, args.precision) for z in block.generator)
            print(f"C_{m} over {block.group}: {cells}")
    else:  # check
        residual = fourier.diagonalize_check(group, v, cap=args.oracle_cap)
        ok = residual <= args.tolerance
        print(f"diagonalization residual {residual:.3e} (tolerance {args.tolerance:g}): "
              + ("PASS" if ok else "FAIL"))
        return EXIT_OK if ok else EXIT_VERIFY_FAILED
    return EXIT_OK


def _cmd_verify(args) -> int:
    results, ok = verify.run_verify(
        scope=args.scope, seed=args.seed, tolerance=args.tolerance, oracle_cap=args.oracle_cap
    )
    sys.stdout.write(verify.format_report(results, args.seed, args.tolerance, args.porcelain))
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_bench(args) -> int:
    if not 12 <= args.max_exponent <= 24:
        raise ValueError(f"--max-exponent must be in 12..24, got {args.max_exponent}")
    sizes = [1 << k for k in range(12, args.max_exponent + 1)]
    report = bench.run_bench(
        sizes, repeats=args.repeats, naive_cap=circulant.oracle_cap(args.oracle_cap), seed=args.seed
    )
    sys.stdout.write(report.format_table(porcelain=args.porcelain))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelianfft",
        description="Fourier transforms and convolution on Z_n and finite abelian groups.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=1e-9, help="residual tolerance (default 1e-9)")
    common.add_argument("--seed", type=int, default=0, help="RNG seed for randomized checks")
    common.add_argument("--oracle-cap", type=int, default=None,
                        help="dense materialization cap (default 4096; env ABELIANFFT_ORACLE_CAP)")
    common.add_argument("--format", choices=("json", "csv"), default=None,
                        help="vector file format (default: by extension)")
    common.add_argument("--porcelain", action="store_true", help="machine-readable output")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", parents=[common], help="apply the Fourier transform to a vector")
    p.add_argument("group", help="group spec, e.g. 8, Z8, Z3xZ2, Z2^3")
    p.add_argument("input", help="vector file (JSON or CSV)")
    p.add_argument("--direction", choices=("analysis", "synthesis"), default="analysis")
    p.add_argument("--engine", choices=("fast", "naive"), default="fast")
    p.add_argument("-o", "--output", default=None, help="output vector file (default: stdout)")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("convolve", parents=[common], help="convolve two vectors over a group")
    p.add_argument("group")
    p.add_argument("file_c")
    p.add_argument("file_d")
    p.add_argument("--engine", choices=("fast", "naive"), default="fast")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_convolve)

    p = sub.add_parser("characters", parents=[common], help="print character table rows")
    p.add_argument("group")
    p.add_argument("--element", default=None, help="single element label, e.g. 1,1")
    p.add_argument("--precision", type=int, default=6)
    p.set_defaults(func=_cmd_characters)

    p = sub.add_parser("circulant", parents=[common], help="inspect the circulant of a generator")
    p.add_argument("group")
    p.add_argument("input", help="generator vector file")
    p.add_argument("action", choices=("materialize", "spectrum", "blocks", "check"))
    p.add_argument("--precision", type=int, default=6)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_circulant)

    p = sub.add_parser("verify", parents=[common], help="run the invariant self-checks")
    p.add_argument("scope", nargs="?", default="all", choices=("all", *verify.SCOPES))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time fft against the dense transform")
    p.add_argument("--max-exponent", type=int, default=18, help="largest size 2^e (12..24)")
    p.add_argument("--repeats", type=int, default=5)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except VectorParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DimensionError, UnsupportedLengthError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
