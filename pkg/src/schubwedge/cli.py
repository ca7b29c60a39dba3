"""Command-line front end.

Exit status: 0 on success, 2 for bad input (argument syntax, parse errors,
k/n out of range, non-monic p, partitions outside the box) and 3 when a
computation fails.
"""
from __future__ import annotations

import argparse
import json
import sys

from .coeff import Generator, PolyParseError, parse_ring
from .exterior import ModuleSpec, TruncationError
from .presentation import presentation
from .schubert_ring import (
    SchubertClass,
    multiply_classes,
    pieri_on_class,
    structure_constants,
    table_to_json,
)
from .schur import format_partition, giambelli_vector, parse_partition, partition_to_index, schur_delta

EXIT_USAGE = 2
EXIT_COMPUTE = 3


class UsageError(Exception):
    pass


def build_spec(p: str, n: int, ring_src: str = "") -> ModuleSpec:
    """Module for ``--p``: ``classical``, ``quantum`` or a polynomial in X."""
    try:
        ring = parse_ring(ring_src or "")
    except ValueError as exc:
        raise UsageError(f"bad --ring: {exc}") from None
    if n < 1:
        raise UsageError("n must be at least 1")
    try:
        if p == "classical":
            src = f"X^{n}"
        elif p == "quantum":
            if "q" not in ring:
                ring = ring.extend([Generator("q", n)])
            src = f"X^{n} + q"
        else:
            src = p
        return ModuleSpec.from_polynomial(src, ring, n)
    except PolyParseError as exc:
        raise UsageError(f"cannot parse p: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_k(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise UsageError(f"k={k} must satisfy 1 <= k <= n={n}")


def _schubert_class(src: str, k: int, spec: ModuleSpec) -> SchubertClass:
    try:
        return SchubertClass(parse_partition(src), k, spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _run_present(args, spec):
    result = presentation(spec, args.k)
    if args.format == "json":
        return result.to_json()
    return result.to_text()


def _run_multiply(args, spec):
    a = _schubert_class(args.lhs, args.k, spec)
    b = _schubert_class(args.rhs, args.k, spec)
    prod = multiply_classes(a, b)
    if args.format == "json":
        return {
            "lhs": format_partition(a.partition),
            "rhs": format_partition(b.partition),
            "result": prod.to_json(),
        }
    return f"{prod}\n"


def _run_pieri(args, spec):
    if args.h < 0:
        raise UsageError("h must be non-negative")
    b = _schubert_class(args.partition, args.k, spec)
    out = pieri_on_class(args.h, b)
    if args.format == "json":
        return {"h": args.h, "partition": format_partition(b.partition), "result": out.to_json()}
    return f"{out}\n"


def _run_giambelli(args, spec):
    b = _schubert_class(args.partition, args.k, spec)
    I = partition_to_index(b.partition, args.k)
    delta = schur_delta(I)
    operator = str(delta.rename({f"T{i}": f"D{i}" for i in range(1, I[-1] + 1)}))
    vec = giambelli_vector(I, spec)
    if args.format == "json":
        return {
            "partition": format_partition(b.partition),
            "indices": list(I),
            "operator": operator,
            "vector": vec.to_json(),
        }
    return f"Delta = {operator}\nDelta(D) e(1..{args.k}) = {vec}\n"


def _run_constants(args, spec):
    if args.max_weight < 0:
        raise UsageError("max weight must be non-negative")
    table = structure_constants(spec, args.k, args.max_weight)
    if args.format == "json":
        return table_to_json(table)
    lines = []
    for entry in table_to_json(table):
        lam = parse_partition(entry["lhs"])
        mu = parse_partition(entry["rhs"])
        lines.append(f"σ({entry['lhs']}) * σ({entry['rhs']}) = {table[(lam, mu)]}")
    return "\n".join(lines) + "\n"


COMMANDS = {
    "present": _run_present,
    "multiply": _run_multiply,
    "pieri": _run_pieri,
    "giambelli": _run_giambelli,
    "constants": _run_constants,
}


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-k", type=int, required=True, help="exterior power / subspace dimension")
    common.add_argument("-n", type=int, required=True, help="degree of p")
    common.add_argument(
        "--p", default="classical",
        help="'classical' (X^n), 'quantum' (X^n + q) or a monic polynomial in X",
    )
    common.add_argument("--ring", default="", help="coefficient generators, e.g. 'c1:1,c2:2'")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", "-o", default="-", help="output path (default stdout)")

    parser = argparse.ArgumentParser(
        prog="schubwedge",
        description="Schubert calculus on a Grassmann algebra",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("present", parents=[common], help="generators and relations")
    m = sub.add_parser("multiply", parents=[common], help="product of two Schubert classes")
    m.add_argument("--lhs", required=True)
    m.add_argument("--rhs", required=True)
    pr = sub.add_parser("pieri", parents=[common], help="D_h applied to a Schubert class")
    pr.add_argument("--h", "-H", dest="h", type=int, required=True)
    pr.add_argument("--partition", required=True)
    g = sub.add_parser("giambelli", parents=[common], help="Schur determinant of a partition and its wedge")
    g.add_argument("--partition", required=True)
    c = sub.add_parser("constants", parents=[common], help="table of class products")
    c.add_argument("--max-weight", type=int, required=True)
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        _check_k(args.k, args.n)
        spec = build_spec(args.p, args.n, args.ring)
        doc = COMMANDS[args.command](args, spec)
    except UsageError as exc:
        print(f"schubwedge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TruncationError, ArithmeticError, AssertionError) as exc:
        print(f"schubwedge: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    text = doc if isinstance(doc, str) else json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if args.output == "-":
        stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
