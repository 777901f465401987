"""Command-line front end.

Every number is printed in full decimal (no scientific notation, no
truncation); exact rationals print as "num/den".  Exit codes: 0 on success,
1 when a verification fails or a run is aborted, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import markov as mk
from . import pell as pl
from . import search as sr
from . import triples as tr
from .errors import BudgetExceededError, CayleyError, NotASolutionError

CORRECTION_NOTES = {
    "chebyshev": (
        "note: Chebyshev values use first-kind seeds (1, x); the Lucas-form "
        "alias U_{n+1}(2x, 1) yields second-kind seeds (1, 2x) and breaks the "
        "product and composition identities the solution chains rely on."
    ),
    "pell-one-index": (
        "note: the second solution member is the companion value at index "
        "n - 1; taking it at index n fails z^2 - d*a^2 = s^2 for n >= 2."
    ),
    "pell-two-scale": (
        "note: the chain difference is scaled by s/2; without that factor "
        "a^2 - d*z^2 = -s^2*d fails for every s != 2."
    ),
}

NOTES_BY_COMMAND = {
    "family": ("chebyshev",),
    "graph": ("chebyshev",),
    "pell-one": ("chebyshev", "pell-one-index"),
    "pell-two": ("chebyshev", "pell-two-scale"),
}


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be comma-separated integers, got {text!r}")


def _triple_arg(text: str) -> tuple[int, int, int]:
    vals = _parse_ints(text, "triple")
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"triple needs exactly three components, got {text!r}")
    return vals


def _word_arg(text: str) -> tuple[int, ...]:
    if text == "":
        return ()
    return _parse_ints(text, "word")


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("CAYLEY_BUDGET")
    return int(env) if env else None


def _notes(args) -> None:
    if not args.note_corrections:
        return
    for key in NOTES_BY_COMMAND.get(args.command, ()):
        print(CORRECTION_NOTES[key], file=sys.stderr)


def _cmd_verify(args) -> int:
    t = tr.Triple(args.s, *args.triple)
    payload = {
        "s": t.s,
        "triple": list(t.components),
        "value": t.value,
        "solution": t.is_solution,
    }
    _emit(args, payload, f"value {t.value}: {'solution' if t.is_solution else 'not a solution'}")
    return 0 if t.is_solution else 1


def _cmd_family(args) -> int:
    t = tr.family_triple(args.s, args.b, args.n, args.m)
    payload = {
        "s": args.s,
        "b": args.b,
        "n": args.n,
        "m": args.m,
        "triple": list(t.components),
        "value": t.value,
    }
    _emit(args, payload, "{},{},{}".format(*t.components))
    return 0


def _cmd_graph(args) -> int:
    seed = tr.Triple(args.s, *args.seed)
    g = tr.solution_graph(seed, args.bound)
    if args.format == "dot":
        print(g.to_dot(), end="")
    else:
        print(g.to_json())
    return 0


def _cmd_reduce(args) -> int:
    t = tr.Triple(args.s, *args.triple)
    trace = tr.reduction_trace(t)
    term = trace[-1]
    payload = {
        "s": t.s,
        "trace": [list(x.components) for x in trace],
        "terminal": list(term.components),
        "base": tr.is_base(term),
        "singular": tr.is_singular(term),
    }
    _emit(args, payload, "\n".join("{},{},{}".format(*x.components) for x in trace))
    return 0


def _cmd_pell_one(args) -> int:
    inst = pl.family_one_instance(args.s, args.y)
    sols = [pl.pell_family_one(args.s, args.y, n) for n in range(1, args.count + 1)]
    assert all(pl.verify_pell(inst, sol) for sol in sols)
    payload = {
        "d": inst.d,
        "rhs": inst.rhs,
        "form": inst.form,
        "solutions": [[z, a] for z, a in sols],
        "provenance": "chain-family-one",
        "convention": {"companion_index": "n-1"},
        "s": args.s,
        "y": args.y,
    }
    _emit(args, payload, "\n".join(f"{z},{a}" for z, a in sols))
    return 0


def _cmd_pell_two(args) -> int:
    inst = pl.family_two_instance(args.s, args.p, args.n)
    sols = [pl.pell_family_two(args.s, args.p, args.n, m) for m in range(1, args.count + 1)]
    assert all(pl.verify_pell(inst, sol) for sol in sols)
    payload = {
        "d": inst.d,
        "rhs": inst.rhs,
        "form": inst.form,
        "solutions": [[z, a] for z, a in sols],
        "provenance": "chain-family-two",
        "convention": {"difference_scale": "s/2"},
        "s": args.s,
        "p": args.p,
        "n": args.n,
    }
    _emit(args, payload, "\n".join(f"{z},{a}" for z, a in sols))
    return 0


def _cmd_pell_oracle(args) -> int:
    inst = pl.PellInstance(args.d, args.rhs, args.form)
    sols = pl.pell_oracle(inst, args.bound, include_zero=args.include_zero, workers=args.workers)
    payload = {
        "d": inst.d,
        "rhs": inst.rhs,
        "form": inst.form,
        "solutions": [[z, a] for z, a in sols],
        "provenance": f"exhaustive-scan(z<={args.bound})",
    }
    _emit(args, payload, "\n".join(f"{z},{a}" for z, a in sols))
    return 0


def _cmd_search(args) -> int:
    sols = sr.enumerate_solutions(args.s, args.bound, budget=_budget(args), workers=args.workers)
    if args.format == "csv":
        print(sr.triples_to_csv(sols), end="")
    else:
        print(sr.triples_to_jsonl(sols), end="")
    return 0


def _cmd_classify(args) -> int:
    rows = sr.classify(args.s, args.bound, budget=_budget(args), workers=args.workers)
    if args.format == "csv":
        print(sr.classifications_to_csv(rows), end="")
    else:
        print(sr.classifications_to_jsonl(rows), end="")
    return 0


def _cmd_markov_tree(args) -> int:
    if args.format == "dot":
        print(mk.markov_tree_dot(args.depth), end="")
    else:
        triples = mk.markov_tree(args.depth)
        print(json.dumps({"depth": args.depth, "triples": [list(t) for t in triples]}))
    return 0


def _cmd_continuant(args) -> int:
    word = args.word
    if args.interior:
        value = mk.continuant_interior(word)
        kind = "interior"
    elif args.drop_last:
        value = mk.continuant_drop_last(word)
        kind = "drop-last"
    else:
        value = mk.continuant(word)
        kind = "full"
    _emit(args, {"word": list(word), "kind": kind, "value": value}, str(value))
    return 0


def _cmd_r_match(args) -> int:
    report = mk.sequence_overlap_search(args.max_entry, args.max_block, args.terms)
    print(json.dumps(report.as_dict()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleycubic",
        description="Exact solutions of s*(x^2+y^2+z^2) - s^3 - 2xyz = 0 and their relatives.",
        # without this, a subcommand flag like "family --n" is grabbed by the
        # top-level parser as an abbreviation of --note-corrections
        allow_abbrev=False,
    )
    parser.add_argument(
        "--note-corrections",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="print convention notes for operations with known formula pitfalls (stderr)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices, default):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("verify", help="check whether a triple solves the surface")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--triple", type=_triple_arg, required=True)
    fmt(p, ("json", "text"), "json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("family", help="chain triple (X_n, X_{n+m}, X_m) at base (s, b)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    fmt(p, ("json", "text"), "text")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("graph", help="bounded conjugation closure of a seed solution")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--seed", type=_triple_arg, required=True)
    p.add_argument("--bound", type=int, required=True)
    fmt(p, ("json", "dot"), "json")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("reduce", help="shrink a solution by conjugating its maximum")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--triple", type=_triple_arg, required=True)
    fmt(p, ("json", "text"), "json")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("pell-one", help="solutions of z^2 - (y^2-s^2)a^2 = s^2 from the chain")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--count", type=int, default=6, help="emit solutions for n = 1..count")
    fmt(p, ("json", "text"), "json")
    p.set_defaults(func=_cmd_pell_one)

    p = sub.add_parser("pell-two", help="solutions of a^2 - d*z^2 = -s^2*d from chain differences")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=3, help="emit solutions for m = 1..count")
    fmt(p, ("json", "text"), "json")
    p.set_defaults(func=_cmd_pell_two)

    p = sub.add_parser("pell-oracle", help="exhaustive scan for Pell solutions up to a bound")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rhs", type=int, required=True)
    p.add_argument("--form", choices=(pl.FORM_Z, pl.FORM_A), default=pl.FORM_Z)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--include-zero", action="store_true", help="keep a = 0 solutions")
    p.add_argument("--workers", type=int, default=1)
    fmt(p, ("json", "text"), "json")
    p.set_defaults(func=_cmd_pell_oracle)

    p = sub.add_parser("search", help="enumerate all solutions with components <= bound")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="cap on quadratic solves (env CAYLEY_BUDGET)")
    p.add_argument("--workers", type=int, default=1)
    fmt(p, ("jsonl", "csv"), "jsonl")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("classify", help="enumerate and tag solutions within a bound")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="cap on quadratic solves (env CAYLEY_BUDGET)")
    p.add_argument("--workers", type=int, default=1)
    fmt(p, ("jsonl", "csv"), "jsonl")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("markov-tree", help="Markov triples within a move depth of (1,1,1)")
    p.add_argument("--depth", type=int, required=True)
    fmt(p, ("json", "dot"), "json")
    p.set_defaults(func=_cmd_markov_tree)

    p = sub.add_parser("continuant", help="continuant of a word, optionally with ends dropped")
    p.add_argument("--word", type=_word_arg, required=True)
    p.add_argument("--drop-last", action="store_true")
    p.add_argument("--interior", action="store_true")
    fmt(p, ("json", "text"), "json")
    p.set_defaults(func=_cmd_continuant)

    p = sub.add_parser("r-match", help="search for chain/continuant sequence overlaps")
    p.add_argument("--max-entry", type=int, default=3)
    p.add_argument("--max-block", type=int, default=4)
    p.add_argument("--terms", type=int, default=6)
    p.set_defaults(func=_cmd_r_match)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _notes(args)
    try:
        return args.func(args)
    except NotASolutionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (CayleyError, ValueError) as exc:
        parser.exit(2, f"error: {exc}\n")
    return 0


def main() -> None:
    sys.exit(run())
