"""Command line driver: ``taulattice ALGEBRA_FILE [--json PATH] [--dot PATH] ...``.

Exit status is 0 whenever the pipeline runs, whatever the mathematical
verdicts; 1 for unreadable files, 2 for invalid input and 3 for computations
that could not be carried out.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .algebra import InfiniteDimensional, InvalidPresentation
from .decompose import DecompositionFailure
from .linalg import Field
from .report import RunReport, run_presentation
from .specfile import ParseError, parse_spec
from .tau_tilting import ApproximationFailure, DEFAULT_DIM_BOUND, DEFAULT_NODE_BOUND

EXIT_OK, EXIT_IO, EXIT_INPUT, EXIT_COMPUTE = 0, 1, 2, 3


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="taulattice",
        description="Enumerate support tau-tilting pairs and torsion classes of a bound quiver algebra "
                    "and decide whether its torsion lattice is Boolean.")
    ap.add_argument("algebra", help="algebra description file")
    ap.add_argument("--json", metavar="PATH", help="write the machine-readable report ('-' for stdout)")
    ap.add_argument("--dot", metavar="PATH", help="write the brick-labelled Hasse quiver in DOT format")
    ap.add_argument("--field", metavar="P", type=int, help="override the characteristic (0 or a prime)")
    ap.add_argument("--node-bound", metavar="K", type=_positive, help="stop enumerating after K pairs")
    ap.add_argument("--dim-bound", metavar="K", type=_positive, help="stop at modules of dimension above K")
    ap.add_argument("--oracle", action="store_true",
                    help="also compare with brute-force torsion classes where a fixture applies")
    ap.add_argument("--timings", action="store_true", help="include per-stage timings in the JSON report")
    ap.add_argument("-q", "--quiet", action="store_true", help="no summary on stdout")
    return ap


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def run(path: str, json_path: Optional[str] = None, dot_path: Optional[str] = None, field: Optional[int] = None,
        node_bound: Optional[int] = None, dim_bound: Optional[int] = None, oracle: bool = False,
        timings: bool = False) -> RunReport:
    """Parse ``path``, run the pipeline and write the requested artifacts."""
    spec = parse_spec(Path(path).read_text(encoding="utf-8"))
    pres = spec.presentation
    if field is not None:
        pres = pres.with_field(Field(field))
    nb = node_bound or spec.node_bound or DEFAULT_NODE_BOUND
    db = dim_bound or spec.dim_bound or DEFAULT_DIM_BOUND
    report = run_presentation(pres, nb, db, oracle=oracle)
    if json_path:
        _write(json_path, report.to_json(include_timings=timings))
    if dot_path:
        dot = report.dot()
        if dot is not None:
            _write(dot_path, dot)
    return report


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args.algebra, args.json, args.dot, args.field, args.node_bound, args.dim_bound,
                     args.oracle, args.timings)
    except OSError as exc:
        print(f"taulattice: {exc}", file=sys.stderr)
        return EXIT_IO
    except ParseError as exc:
        print(f"{args.algebra}:{exc.line}:{exc.column}: {type(exc).__name__}: {exc.message}", file=sys.stderr)
        return EXIT_INPUT
    except (InvalidPresentation, InfiniteDimensional, ValueError) as exc:
        print(f"taulattice: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DecompositionFailure, ApproximationFailure) as exc:
        print(f"taulattice: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if not args.quiet and args.json != "-" and args.dot != "-":
        sys.stdout.write(report.summary())
    if args.dot and report.quiver is None:
        print("taulattice: enumeration incomplete, no DOT written", file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
