"""Command-line front end.

Four query commands (member, separate, cover, imprint) plus a batch
driver that replays one query per line from a file. Exit codes: 0 for
an answered query of either polarity, 2 for input errors, 3 for an
exceeded resource budget, 4 for an unsupported basis or level.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
import time
from pathlib import Path

from .basis import oracle_for
from .decide import LEVELS, Verdict, coverable, member, separable
from .engines import bpol_iopti, bpol_opti, pbpol_iopti, pbpol_pointed_imprint, pol_imprint
from .errors import BudgetExceededError, UnsupportedError
from .lang import (
    DEFAULT_STATE_BUDGET,
    Alphabet,
    compile_regex,
    complement,
    parse_regex,
    transition_monoid,
)
from .rating import canonical_covering_map
from .semiring import DEFAULT_ANTICHAIN_BUDGET

RESULT_WORDS = {
    ("member", True): "member",
    ("member", False): "not-member",
    ("separate", True): "separable",
    ("separate", False): "not-separable",
    ("cover", True): "coverable",
    ("cover", False): "not-coverable",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--level", required=True, choices=LEVELS, help="hierarchy level")
    common.add_argument("--alphabet", required=True, help="alphabet letters, e.g. ab")
    common.add_argument("--basis", default="mod", help="basis oracle name (default mod)")
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--witness", action="store_true", help="attach a witness when available")
    common.add_argument(
        "--emit-imprint", action="store_true", help="also print the computed imprint"
    )
    common.add_argument(
        "--max-states",
        type=int,
        default=DEFAULT_STATE_BUDGET,
        help="budget for automaton states and monoid elements",
    )
    common.add_argument(
        "--max-antichain",
        type=int,
        default=DEFAULT_ANTICHAIN_BUDGET,
        help="antichain size budget for the engines",
    )
    common.add_argument(
        "--no-stats", action="store_true", help="omit statistics for reproducible output"
    )

    parser = argparse.ArgumentParser(
        prog="modhier",
        description="Decide separation, covering, and membership for regular languages "
        "in concatenation hierarchies over length-residue bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("member", parents=[common], help="is the language at the level?")
    p.add_argument("regex")
    p = sub.add_parser("separate", parents=[common], help="is L1 separable from L2?")
    p.add_argument("regex1")
    p.add_argument("regex2")
    p = sub.add_parser("cover", parents=[common], help="is the target coverable?")
    p.add_argument("target")
    p.add_argument("constraints", nargs="+")
    p = sub.add_parser("imprint", parents=[common], help="print the imprint of the inputs")
    p.add_argument("regexes", nargs="+")
    p = sub.add_parser("batch", help="run one query per line from a file")
    p.add_argument("file")

    return parser


def _compile(text: str, alphabet: Alphabet, max_states: int):
    return compile_regex(parse_regex(text, alphabet), alphabet, max_states=max_states)


def _compute_imprint(level, dfas, oracle, max_monoid, max_antichain):
    """Morphism, imprint, and pointedness for the given input languages."""
    if level == "0":
        raise UnsupportedError("imprints are not defined at level 0")
    morphism = transition_monoid(dfas, max_elements=max_monoid)
    rho = canonical_covering_map(morphism)
    if level == "1/2":
        imprint = pol_imprint(morphism, rho, oracle, max_antichain=max_antichain)
        return morphism, imprint, True
    if level == "1":
        iopti = bpol_iopti(rho, oracle, max_antichain=max_antichain)
        return morphism, bpol_opti(rho, iopti, max_antichain=max_antichain), False
    iopti = pbpol_iopti(morphism, rho, oracle, max_antichain=max_antichain)
    return morphism, pbpol_pointed_imprint(morphism, rho, iopti, max_antichain=max_antichain), True


def _format_value(value) -> str:
    return "{" + ",".join(str(i) for i in sorted(value)) + "}"


def _sorted_maximal(imprint, pointed):
    if pointed:
        return sorted(imprint.maximal, key=lambda pair: (pair[0], tuple(sorted(pair[1]))))
    return sorted(imprint.maximal, key=lambda value: tuple(sorted(value)))


def _imprint_text(morphism, imprint, pointed, out) -> None:
    out.write(f"MONOID: {morphism.size} elements\n")
    for i in range(morphism.size):
        out.write(f'  {i} = "{morphism.word_for[i]}"\n')
    if pointed:
        cells = ["(%d,%s)" % (s, _format_value(t)) for s, t in _sorted_maximal(imprint, True)]
    else:
        cells = [_format_value(t) for t in _sorted_maximal(imprint, False)]
    out.write("IMPRINT: " + " ".join(cells) + "\n")


def _imprint_json(morphism, imprint, pointed) -> dict:
    if pointed:
        maximal = [[s, sorted(t)] for s, t in _sorted_maximal(imprint, True)]
    else:
        maximal = [sorted(t) for t in _sorted_maximal(imprint, False)]
    return {
        "pointed": pointed,
        "monoid": list(morphism.word_for),
        "maximal": maximal,
    }


def _witness_text(witness: dict) -> str:
    if "modulus" in witness:
        return f"WITNESS: d={witness['modulus']}"
    if "blocking" in witness:
        blocking = witness["blocking"]
        image = _format_value(blocking["image"])
        if "element" in blocking:
            return 'WITNESS: blocking element %d word "%s" image %s' % (
                blocking["element"],
                blocking["word"],
                image,
            )
        return f"WITNESS: blocking image {image}"
    fields = witness["separator"]
    return f"WITNESS: separator d={fields['modulus']} markers {json.dumps(fields['markers'])}"


def _emit(args, verdict: Verdict, imprint_parts, out) -> None:
    if args.json:
        payload = {
            "command": args.command,
            "level": args.level,
            "basis": args.basis,
            "answer": verdict.answer,
        }
        if verdict.witness is not None:
            payload["witness"] = verdict.witness
        if imprint_parts is not None:
            payload["imprint"] = _imprint_json(*imprint_parts)
        if not args.no_stats:
            payload["stats"] = verdict.stats
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return
    out.write(f"RESULT: {RESULT_WORDS[(verdict.kind, verdict.answer)]}\n")
    if verdict.witness is not None:
        out.write(_witness_text(verdict.witness) + "\n")
    if imprint_parts is not None:
        _imprint_text(*imprint_parts, out)
    if not args.no_stats:
        pairs = " ".join(f"{k}={v}" for k, v in verdict.stats.items())
        out.write(f"STATS: {pairs}\n")


def _run_query(args, out) -> int:
    oracle = oracle_for(args.basis)
    alphabet = Alphabet.of(args.alphabet)
    budgets = {
        "max_monoid": args.max_states,
        "max_antichain": args.max_antichain,
    }

    if args.command == "imprint":
        started = time.perf_counter()
        dfas = [_compile(r, alphabet, args.max_states) for r in args.regexes]
        morphism, imprint, pointed = _compute_imprint(
            args.level, dfas, oracle, args.max_states, args.max_antichain
        )
        if args.json:
            payload = {
                "command": "imprint",
                "level": args.level,
                "basis": args.basis,
                "imprint": _imprint_json(morphism, imprint, pointed),
            }
            if not args.no_stats:
                payload["stats"] = {
                    "monoid": morphism.size,
                    "iterations": imprint.passes,
                    "antichain": len(imprint.maximal),
                    "ms": round((time.perf_counter() - started) * 1000, 3),
                }
            out.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            _imprint_text(morphism, imprint, pointed, out)
            if not args.no_stats:
                elapsed = round((time.perf_counter() - started) * 1000, 3)
                out.write(
                    f"STATS: monoid={morphism.size} iterations={imprint.passes} "
                    f"antichain={len(imprint.maximal)} ms={elapsed}\n"
                )
        return 0

    if args.command == "member":
        language = _compile(args.regex, alphabet, args.max_states)
        verdict = member(args.level, language, oracle, want_witness=args.witness, **budgets)
        imprint_inputs = [language, complement(language)]
    elif args.command == "separate":
        l1 = _compile(args.regex1, alphabet, args.max_states)
        l2 = _compile(args.regex2, alphabet, args.max_states)
        verdict = separable(args.level, l1, l2, oracle, want_witness=args.witness, **budgets)
        imprint_inputs = [l1, l2]
    else:
        target = _compile(args.target, alphabet, args.max_states)
        constraints = [_compile(r, alphabet, args.max_states) for r in args.constraints]
        verdict = coverable(
            args.level, target, constraints, oracle, want_witness=args.witness, **budgets
        )
        imprint_inputs = [target] + constraints

    imprint_parts = None
    if args.emit_imprint:
        imprint_parts = _compute_imprint(
            args.level, imprint_inputs, oracle, args.max_states, args.max_antichain
        )
    _emit(args, verdict, imprint_parts, out)
    return 0


def _run_batch(args, out, err) -> int:
    status = 0
    for raw in Path(args.file).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.write(f"QUERY: {line}\n")
        tokens = shlex.split(line)
        if tokens and tokens[0] == "batch":
            err.write("batch files cannot nest batch commands\n")
            code = 2
        else:
            code = run(tokens, out=out, err=err)
        if code != 0 and status == 0:
            status = code
    return status


def run(argv=None, out=None, err=None) -> int:
    """Parse and execute one command line; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "batch":
            return _run_batch(args, out, err)
        return _run_query(args, out)
    except BudgetExceededError as exc:
        err.write(f"error: {exc}\n")
        return 3
    except UnsupportedError as exc:
        err.write(f"error: {exc}\n")
        return 4
    except (ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
