"""Command-line front end.

Output sets are printed one string per line in dictionary order, with the
empty string shown as ``()`` and an empty set as ``UNDEFINED``.  Exit status
is 0 on success, 1 on domain or machine errors and 2 on resource errors.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from pathlib import Path

from . import algebra, oracle as oracle_mod, witnesses
from .engine import DEFAULT_MAX_CONFIGS, accepts, enumerate_outputs, format_path
from .errors import CflError, PreconditionError, ResourceError, TerminationError
from .machine import LinearBound, load_machine, tokenize
from .optimization import opt_eval, opt_nfa_el_eval
from .pumping import PumpingParams, pumping_report
from .strings import Alphabet, dict_key, render

EMPTY = "()"
UNDEFINED = "UNDEFINED"


def show(word) -> str:
    return render(word) or EMPTY


def format_set(values, alpha: Alphabet) -> list[str]:
    if not values:
        return [UNDEFINED]
    return [show(y) for y in sorted(values, key=dict_key(alpha))]


def parse_input(text: str, alpha: Alphabet):
    if text == EMPTY:
        return "" if alpha.single_char else ()
    if alpha.single_char:
        return text
    return tokenize(text, alpha)


def _inputs(args, alpha: Alphabet) -> list:
    raw = list(args.inputs)
    if getattr(args, "inputs_file", None):
        raw += [ln.strip() for ln in Path(args.inputs_file).read_text(encoding="utf-8").splitlines() if ln.strip()]
    return [parse_input(t, alpha) for t in raw]


def _emit_blocks(results, out) -> None:
    """``results`` is a list of (input, lines); headers only when several inputs."""
    many = len(results) > 1
    for x, lines in results:
        if many:
            print(f"> {show(x)}", file=out)
        for line in lines:
            print(line, file=out)


def _resolve_oracle(text: str, max_configs: int) -> oracle_mod.Oracle:
    kind, _, rest = text.partition(":")
    if kind == "builtin":
        return oracle_mod.builtin_oracle(rest)
    if kind == "machine":
        return oracle_mod.language_from_machine(load_machine(rest), max_configs=max_configs)
    raise PreconditionError(f"--oracle expects builtin:<name> or machine:<file>, got {text!r}")


# --- subcommands ---------------------------------------------------------------

def cmd_run(args, out):
    spec = load_machine(args.machine)
    results = []
    for x in _inputs(args, spec.input_alphabet):
        results.append((x, ["ACCEPT" if accepts(spec, x, args.max_configs) else "REJECT"]))
    _emit_blocks(results, out)


def cmd_enum(args, out):
    spec = load_machine(args.machine)
    results = []
    for x in _inputs(args, spec.input_alphabet):
        results.append((x, format_set(enumerate_outputs(spec, x, args.max_configs), spec.output_alphabet)))
    _emit_blocks(results, out)


def cmd_opt(args, out):
    spec = load_machine(args.machine)
    evaluate = opt_nfa_el_eval if args.el else opt_eval
    results = [(x, [show(evaluate(spec, args.mode, x))]) for x in _inputs(args, spec.input_alphabet)]
    _emit_blocks(results, out)


def cmd_compose(args, out):
    f = algebra.from_machine(load_machine(args.outer), args.max_configs)
    g = algebra.from_machine(load_machine(args.inner), args.max_configs)
    h = algebra.compose(f, g)
    results = [(x, format_set(h(x), h.output_alphabet)) for x in _inputs(args, h.input_alphabet)]
    _emit_blocks(results, out)


def cmd_algebra(args, out):
    f = algebra.from_machine(load_machine(args.f), args.max_configs)
    if args.op == "complement":
        if args.g:
            raise PreconditionError("complement takes a single machine")
        bound = LinearBound(*args.bound) if args.bound else f.output_bound
        h = algebra.complement(f, bound, args.n0, args.max_configs)
    else:
        if not args.g:
            raise PreconditionError(f"{args.op} needs two machines")
        g = algebra.from_machine(load_machine(args.g), args.max_configs)
        op = {"intersect": algebra.intersect, "union": algebra.union, "difference": algebra.set_difference}[args.op]
        h = op(f, g)
    results = [(x, format_set(h(x), h.output_alphabet)) for x in _inputs(args, h.input_alphabet)]
    _emit_blocks(results, out)


def cmd_oracle_run(args, out):
    spec = load_machine(args.machine)
    if args.chain:
        if args.oracle:
            raise PreconditionError("use either --oracle or --chain, not both")
        chain = [load_machine(p) for p in args.chain]
        h = oracle_mod.build_level(len(chain) + 1, spec, chain, args.max_configs)
        evaluate = h
    else:
        if not args.oracle:
            raise PreconditionError("oracle-run needs --oracle or --chain")
        A = _resolve_oracle(args.oracle, args.max_configs)
        if spec.is_turing:
            evaluate = lambda x: oracle_mod.eval_turing(spec, A, x, max_configs=args.max_configs)  # noqa: E731
        else:
            evaluate = lambda x: oracle_mod.eval_many_one(spec, A, x, args.max_configs)  # noqa: E731
    results = [(x, format_set(evaluate(x), spec.output_alphabet)) for x in _inputs(args, spec.input_alphabet)]
    _emit_blocks(results, out)


def cmd_pump(args, out):
    spec = load_machine(args.machine)
    f = algebra.from_machine(spec, args.max_configs)
    params = PumpingParams(args.m, args.c, args.d)
    ws = _inputs(args, spec.input_alphabet)
    report = pumping_report(f, params, ws, args.imax, args.length_preserving, args.relaxed)
    if args.s is not None:
        wanted = "" if args.s == EMPTY else args.s
        report = type(report)(report.params, report.i_max, tuple(r for r in report.rows if r.s == wanted))
    print(report.render(), file=out)


def cmd_refine(args, out):
    g = algebra.from_machine(load_machine(args.g), args.max_configs)
    f = algebra.from_machine(load_machine(args.f), args.max_configs)
    verdict = algebra.refinement_check(g, f, args.max_len)
    if verdict.holds:
        print(f"HOLDS up to length {args.max_len}", file=out)
    else:
        print(f"FAILS at {show(verdict.counterexample)}: {verdict.reason}", file=out)
        return 1
    return 0


def cmd_verify(args, out):
    if args.write_machines:
        for path in witnesses.write_corpus(args.write_machines):
            print(f"wrote {path}", file=out)
    rng = random.Random(args.seed)
    status = 0
    for e in witnesses.catalog():
        if args.only and e.name not in args.only:
            continue
        verdict = witnesses.verify_entry(e, args.max_len)
        checked = verdict.checked
        if verdict and args.samples:
            sigma = list(e.construction.input_alphabet)
            n = (args.max_len if args.max_len is not None else e.test_len) + 2
            sample = [tuple(rng.choice(sigma) for _ in range(n)) for _ in range(args.samples)]
            if e.construction.input_alphabet.single_char:
                sample = ["".join(s) for s in sample]
            extra = witnesses.verify_entry(e, inputs=sample)
            checked += extra.checked
            verdict = extra if not extra else verdict
        if verdict:
            print(f"PASS {e.name} ({checked} inputs)", file=out)
        else:
            status = 1
            print(
                f"FAIL {e.name} at {show(verdict.mismatch)}: construction={sorted(verdict.construction_value)} "
                f"reference={sorted(verdict.oracle_value)}",
                file=out,
            )
    return status


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-configs", type=int, default=DEFAULT_MAX_CONFIGS, help="configuration cap per run")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("-v", "--verbose", action="store_true")

    def with_inputs(p):
        p.add_argument("inputs", nargs="*", help="input strings; () is the empty string")
        p.add_argument("--inputs-file", help="newline-delimited input strings")

    parser = argparse.ArgumentParser(prog="cflfun", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", parents=[common], help="accept/reject each input")
    p.add_argument("machine")
    with_inputs(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("enum", parents=[common], help="print the output set")
    p.add_argument("machine")
    with_inputs(p)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("opt", parents=[common], help="dictionary-extremal output")
    p.add_argument("--mode", choices=["max", "min"], default="max")
    p.add_argument("--el", action="store_true", help="require a stack-free machine with equal-length outputs")
    p.add_argument("machine")
    with_inputs(p)
    p.set_defaults(func=cmd_opt)

    p = sub.add_parser("compose", parents=[common], help="(outer ∘ inner)(x)")
    p.add_argument("outer")
    p.add_argument("inner")
    with_inputs(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("algebra", parents=[common], help="pointwise set operations")
    p.add_argument("op", choices=["intersect", "union", "difference", "complement"])
    p.add_argument("f")
    p.add_argument("--g", help="second machine for binary operators")
    p.add_argument("--bound", type=int, nargs=2, metavar=("A", "B"), help="complement length bound a*n+b")
    p.add_argument("--n0", type=int, default=0, help="complement is undefined below this input length")
    with_inputs(p)
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("oracle-run", parents=[common], help="evaluate an oracle machine")
    p.add_argument("machine")
    p.add_argument("--oracle", help="builtin:<palindromes|dup|all|none> or machine:<file>")
    p.add_argument("--chain", action="append", default=[], help="oracle chain machine (repeatable)")
    with_inputs(p)
    p.set_defaults(func=cmd_oracle_run)

    p = sub.add_parser("pump", parents=[common], help="search pumping decompositions")
    p.add_argument("machine")
    p.add_argument("--s", help="restrict to this output string")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--imax", type=int, default=2)
    p.add_argument("--relaxed", action="store_true")
    p.add_argument("--length-preserving", action="store_true")
    with_inputs(p)
    p.set_defaults(func=cmd_pump)

    p = sub.add_parser("refine", parents=[common], help="bounded check that F refines G")
    p.add_argument("g")
    p.add_argument("f")
    p.add_argument("--max-len", type=int, default=6)
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("verify-witnesses", parents=[common], help="check every catalog entry against its reference")
    p.add_argument("--max-len", type=int)
    p.add_argument("--only", action="append")
    p.add_argument("--samples", type=int, default=0, help="extra random inputs two symbols longer")
    p.add_argument("--write-machines", metavar="DIR", help="also write the machine corpus to DIR")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # positional inputs may follow options such as --chain
    if extra:
        if not hasattr(args, "inputs") or any(e.startswith("-") and e != "-" for e in extra):
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
        args.inputs = list(args.inputs) + extra
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args, out) or 0
    except TerminationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("violating path prefix:\n" + format_path(exc.path), file=sys.stderr)
        return 1
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 2
    except (CflError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
