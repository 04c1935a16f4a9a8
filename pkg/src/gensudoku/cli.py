"""Command-line entry point: ``gensudoku {generate,validate,transform,solve,mask}``."""
from __future__ import annotations

import argparse
import sys

from . import construction, solver, transforms
from .errors import SudokuError
from .grid import validate
from .textio import GridDocument, SymbolAlphabet, read_grid, render_grid


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _u64(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError(f"{text} is not an unsigned 64-bit integer")
    return v


def _cap(text: str):
    if text == "all":
        return None
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("cap must be positive or 'all'")
    return v


_OP_ARITY = {
    "swap-rows-in-band": (transforms.SwapRowsInBand, 3),
    "swap-bands": (transforms.SwapBands, 2),
    "swap-cols-in-stack": (transforms.SwapColsInStack, 3),
    "swap-stacks": (transforms.SwapStacks, 2),
}


def apply_op_spec(grid, spec: str):
    """Apply one ``--op`` spec such as ``swap-bands:0,2`` or ``transpose``."""
    name, _, args = spec.partition(":")
    if name == "transpose":
        if args:
            raise SudokuError("transpose takes no arguments")
        return transforms.apply_transform(grid, transforms.Transpose())
    values = _int_list(args) if args else []
    if name == "relabel":
        return transforms.apply_transform(grid, transforms.RelabelSymbols(tuple(values)))
    if name == "permute-rows-unchecked":
        return transforms.permute_rows_unchecked(grid, values)
    if name == "permute-cols-unchecked":
        return transforms.permute_cols_unchecked(grid, values)
    if name in _OP_ARITY:
        cls, arity = _OP_ARITY[name]
        if len(values) != arity:
            raise SudokuError(f"{name} takes {arity} comma-separated integers, got {args!r}")
        return transforms.apply_transform(grid, cls(*values))
    raise SudokuError(f"unknown transform {name!r}")


def _emit(text: str, path=None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    if args.symbol_perm is not None:
        grid = construction.build_with_alphabet_order(args.n, args.symbol_perm)
    else:
        grid = construction.build_base_solution(args.n)
        if args.scramble_seed is not None:
            grid = transforms.scramble(grid, transforms.ScramblePlan(args.scramble_seed, args.steps))
    doc = GridDocument(SymbolAlphabet.default(args.n), grid)
    _emit(render_grid(doc, header=args.header), args.output)
    return 0


def cmd_validate(args) -> int:
    doc = read_grid(args.file)
    report = validate(doc.grid)
    if not report.violations:
        print("VALID (complete)" if report.complete else "VALID (partial)")
        return 0
    print(f"INVALID ({len(report.violations)} violations)")
    for v in report.violations:
        where = " ".join(f"({r},{c})" for r, c in v.positions)
        print(f"{v.kind} {v.unit_index}: symbol {doc.alphabet.token(v.symbol_index)} at {where}")
    return 1


def cmd_transform(args) -> int:
    doc = read_grid(args.file)
    grid = doc.grid
    for spec in args.op:
        grid = apply_op_spec(grid, spec)
    _emit(render_grid(GridDocument(doc.alphabet, grid)), args.output)
    return 0


def cmd_solve(args) -> int:
    doc = read_grid(args.file)
    outcome = solver.solve(doc.grid, args.cap)
    blocks = [render_grid(GridDocument(doc.alphabet, g)) for g in outcome.solutions]
    sys.stdout.write("\n".join(blocks))
    if blocks:
        sys.stdout.write("\n")
    print(f"count={len(outcome.solutions)} exhausted={str(outcome.exhausted).lower()}")
    return 0


def cmd_mask(args) -> int:
    doc = read_grid(args.file)
    puzzle = solver.make_puzzle(doc.grid, args.seed, args.clues)
    _emit(render_grid(GridDocument(doc.alphabet, puzzle)), args.output)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # one-line diagnostic instead of argparse's usage dump
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gensudoku", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="write the base solution of order n")
    p.add_argument("--n", type=int, required=True, help="box side; the grid is n^2 x n^2")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--symbol-perm", type=_int_list, help="relabel symbols: comma-separated 0-based indices")
    mode.add_argument("--scramble-seed", type=_u64, help="apply a seeded scramble")
    p.add_argument("--steps", type=int, default=50, help="scramble steps (default: 50)")
    p.add_argument("--header", action="store_true", help="emit the '#order: n' header line")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("validate", help="check a grid for duplicate symbols")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("transform", help="apply transforms in the given order")
    p.add_argument("file")
    p.add_argument("--op", action="append", required=True, metavar="SPEC")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("solve", help="enumerate completions")
    p.add_argument("file")
    p.add_argument("--cap", type=_cap, default=None, help="maximum solutions, or 'all' (default)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("mask", help="blank cells while the solution stays unique")
    p.add_argument("file")
    p.add_argument("--seed", type=_u64, required=True)
    p.add_argument("--clues", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mask)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SudokuError, ValueError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"gensudoku: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
