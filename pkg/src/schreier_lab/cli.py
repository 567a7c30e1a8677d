"""Command-line surface: norm, tau, glindex, uncomp-table, selftest.

Exit codes: 0 success, 1 property failure (with counterexample certificate),
2 usage or parse error.  Every command emits a reproducible report; with
--format json the report fields are command, inputs, value, witness, seed,
tool_version.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__
from .norms import FinVec, SpaceSpec, norm
from .schreier_core import SchreierChain, SchreierSet, tau1, tau1_decompose
from .gl_index import gl1_windowed
from .sequences import growth_table
from .selftest import run_suites


def parse_vector_literal(text: str) -> FinVec:
    """Comma-separated index:value pairs; whitespace ignored; duplicates rejected."""
    cleaned = text.replace(" ", "").replace("\t", "")
    if not cleaned:
        return FinVec.zero()
    entries: dict[int, float] = {}
    for part in cleaned.split(","):
        if ":" not in part:
            raise ValueError(f"expected 'index:value', got {part!r}")
        idx_text, val_text = part.split(":", 1)
        try:
            idx = int(idx_text)
            val = float(val_text)
        except ValueError as exc:
            raise ValueError(f"cannot parse entry {part!r}") from exc
        if idx < 1:
            raise ValueError(f"indices must be >= 1, got {idx}")
        if idx in entries:
            raise ValueError(f"duplicate index {idx}")
        entries[idx] = val
    return FinVec(entries)


def parse_set_literal(text: str) -> tuple[int, ...]:
    """Comma-separated naturals, strictly increasing."""
    cleaned = text.replace(" ", "").replace("\t", "")
    if not cleaned:
        return ()
    values = []
    for part in cleaned.split(","):
        try:
            v = int(part)
        except ValueError as exc:
            raise ValueError(f"cannot parse element {part!r}") from exc
        if v < 1:
            raise ValueError(f"elements must be >= 1, got {v}")
        values.append(v)
    for a, b in zip(values, values[1:]):
        if a >= b:
            raise ValueError(f"elements must be strictly increasing: {a} >= {b}")
    return tuple(values)


def _space_from_args(args: argparse.Namespace) -> SpaceSpec:
    return SpaceSpec(args.space, args.p)


def _witness_json(witness: Any) -> Any:
    if witness is None:
        return None
    if isinstance(witness, SchreierSet):
        return list(witness.elements)
    if isinstance(witness, SchreierChain):
        return [list(s.elements) for s in witness]
    return witness


def _report(command: str, inputs: dict, value: Any, witness: Any, seed: int) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "value": value,
        "witness": witness,
        "seed": seed,
        "tool_version": __version__,
    }


def _emit(report: dict, fmt: str, text_lines: list[str], csv_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    elif fmt == "csv":
        for line in csv_lines:
            print(line)
    else:
        for line in text_lines:
            print(line)


def _cmd_norm(args: argparse.Namespace) -> int:
    space = _space_from_args(args)
    vec = parse_vector_literal(args.vec)
    result = norm(vec, space)
    witness = _witness_json(result.witness)
    report = _report(
        "norm",
        {"space": args.space, "p": space.p, "vec": args.vec},
        result.value,
        witness,
        args.seed,
    )
    text = [
        f"space: {space.label()}",
        f"norm: {result.value!r}",
        f"witness: {witness}",
    ]
    csv = ["field,value", f"norm,{result.value!r}", f"witness,\"{witness}\""]
    _emit(report, args.format, text, csv)
    return 0


def _cmd_tau(args: argparse.Namespace) -> int:
    elems = parse_set_literal(args.set)
    value = tau1(elems)
    pieces = [list(s.elements) for s in tau1_decompose(elems)] if elems else []
    report = _report("tau", {"set": args.set}, value, pieces, args.seed)
    text = [f"tau1: {value}", f"decomposition: {pieces}"]
    csv = ["field,value", f"tau1,{value}", f"decomposition,\"{pieces}\""]
    _emit(report, args.format, text, csv)
    return 0


def _cmd_glindex(args: argparse.Namespace) -> int:
    m = parse_set_literal(args.m)
    n = parse_set_literal(args.n)
    result = gl1_windowed(m, n, args.window)
    report = _report(
        "glindex",
        {"m": args.m, "n": args.n, "window": args.window},
        result.value,
        list(result.argmax_J),
        args.seed,
    )
    banner = (
        f"note: search restricted to J within [1, {args.window}]; the reported value "
        "is a lower bound for the full index (supremum over all finite J)"
    )
    text = [banner, f"windowed GL_1: {result.value}", f"argmax J: {list(result.argmax_J)}"]
    csv = ["field,value", f"gl1_windowed,{result.value}", f"argmax_J,\"{list(result.argmax_J)}\""]
    if args.format != "text":
        print(banner, file=sys.stderr)
    _emit(report, args.format, text, csv)
    return 0


def _cmd_uncomp_table(args: argparse.Namespace) -> int:
    space = _space_from_args(args)
    rows = growth_table(space, args.kmax)
    row_dicts = [
        {
            "k": r.k,
            "companion": r.companion_norm,
            "spike": r.spike_norm,
            "lower_bound": r.lower_bound_C,
        }
        for r in rows
    ]
    report = _report(
        "uncomp-table",
        {"space": args.space, "p": space.p, "kmax": args.kmax},
        row_dicts,
        None,
        args.seed,
    )
    text = [f"space: {space.label()}", "k companion spike lower_bound"] + [
        f"{r.k} {r.companion_norm!r} {r.spike_norm!r} {r.lower_bound_C!r}" for r in rows
    ]
    csv = ["k,companion,spike,lower_bound"] + [
        f"{r.k},{r.companion_norm!r},{r.spike_norm!r},{r.lower_bound_C!r}" for r in rows
    ]
    _emit(report, args.format, text, csv)
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    print(f"selftest: seed={args.seed} level={args.level} version={__version__}")
    results = run_suites(seed=args.seed, level=args.level, mutate=args.mutate)
    failed = False
    for res in results:
        print(res.line())
        for cert in res.certificates:
            print(f"  certificate: {cert}")
        if not res.passed:
            failed = True
    print("selftest:", "FAILED" if failed else "OK")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schreier-lab",
        description="Exact Schreier/Baernstein space combinatorics and norms.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=0, help="seed for randomized work")
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default="text", help="output format"
        )

    p_norm = sub.add_parser("norm", help="norm of a finitely supported vector")
    p_norm.add_argument("--space", choices=("Sp", "Bp"), required=True)
    p_norm.add_argument("--p", type=float, required=True)
    p_norm.add_argument("--vec", required=True, help='vector literal, e.g. "1:1,2:1,3:1"')
    common(p_norm)
    p_norm.set_defaults(func=_cmd_norm)

    p_tau = sub.add_parser("tau", help="Schreier covering number of a finite set")
    p_tau.add_argument("--set", required=True, help='set literal, e.g. "1,2,3"')
    common(p_tau)
    p_tau.set_defaults(func=_cmd_tau)

    p_gl = sub.add_parser("glindex", help="windowed Gasparis-Leung index")
    p_gl.add_argument("--m", required=True, help="first sequence (tau side)")
    p_gl.add_argument("--n", required=True, help="second sequence (Schreier-constraint side)")
    p_gl.add_argument("--window", type=int, required=True)
    common(p_gl)
    p_gl.set_defaults(func=_cmd_glindex)

    p_tab = sub.add_parser("uncomp-table", help="complementation lower-bound table")
    p_tab.add_argument("--space", choices=("Sp", "Bp"), required=True)
    p_tab.add_argument("--p", type=float, required=True)
    p_tab.add_argument("--kmax", type=int, required=True)
    common(p_tab)
    p_tab.set_defaults(func=_cmd_uncomp_table)

    p_self = sub.add_parser("selftest", help="run the acceptance suites")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.add_argument("--level", choices=("quick", "full"), default="full")
    p_self.add_argument(
        "--mutate",
        choices=("sp-norm",),
        default=None,
        help="deliberately corrupt an engine to confirm the suites catch it",
    )
    p_self.set_defaults(func=_cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
