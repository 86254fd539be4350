"""Command line surface: vbraid <subcommand>.

Exit codes: 0 success, 1 validation error, 2 verification failure.
Every randomized subcommand requires an explicit --seed.
"""

from __future__ import annotations

import argparse
import sys
from random import Random

from .action import Coordinates, act_word, base_vector
from .diagram import certify_nontrivial, verify_diagram
from .hunt import HuntConfig, hunt, moved_fraction
from .wordproblem import are_equal_bn, are_equal_vb2, distinguish_vbn
from .words import format_word, free_reduce, parse_word, permutation

VALIDATION_ERROR = 1
VERIFICATION_FAILURE = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the contract reserves 2
    # for verification failures, so route flag errors to status 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(VALIDATION_ERROR, f"{self.prog}: error: {message}\n")


def _parse_length(text: str) -> int | tuple[int, int]:
    if ":" in text:
        low_text, high_text = text.split(":", 1)
        return (int(low_text), int(high_text))
    return int(text)


def _vector_argument(text: str, n: int) -> Coordinates:
    if text == "base":
        return base_vector(n)
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"not a comma-separated integer vector: {text!r}") from None
    if len(entries) != 2 * n:
        raise ValueError(
            f"vector has {len(entries)} entries but {n} strands need {2 * n}"
        )
    return Coordinates(n, entries)


def _cmd_act(args) -> int:
    vector = _vector_argument(args.vector, args.n)
    word = parse_word(args.word, args.n)
    print(act_word(vector, word).to_csv())
    return 0


def _cmd_eq(args) -> int:
    w1 = parse_word(args.w1, args.n)
    w2 = parse_word(args.w2, args.n)
    if args.group == "bn":
        verdict = are_equal_bn(w1, w2)
    elif args.group == "vb2":
        verdict = are_equal_vb2(w1, w2)
    else:
        if args.seed is None:
            raise ValueError("--seed is required for --group vbn")
        verdict = distinguish_vbn(w1, w2, args.battery, Random(args.seed))
    print(verdict.status.value.capitalize())
    if verdict.witness:
        print(f"witness: {verdict.witness}")
    if verdict.images is not None:
        left, right = verdict.images
        print(f"images: {','.join(map(str, left))} vs {','.join(map(str, right))}")
    return 0


def _cmd_perm(args) -> int:
    word = parse_word(args.word, args.n)
    print(" ".join(map(str, permutation(word))))
    return 0


def _cmd_reduce(args) -> int:
    word = parse_word(args.word, args.n)
    print(format_word(free_reduce(word)))
    return 0


def _cmd_hunt(args) -> int:
    config = HuntConfig(
        strands=args.n,
        word_length=_parse_length(args.length),
        word_count=args.count,
        seed=args.seed,
        battery_size=args.battery,
        coefficient_bound=args.bound,
        base=None if args.base is None else tuple(Coordinates.from_csv(args.base).entries),
    )
    report = hunt(config, workers=args.workers)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(report.to_json())
        handle.write("\n")
    if args.fixers_out:
        with open(args.fixers_out, "w", encoding="utf-8") as handle:
            text = report.fixers_jsonl()
            handle.write(text)
            if text:
                handle.write("\n")
    print(
        f"tested {report.words_tested} words: {len(report.base_fixers)} distinct "
        f"base fixers, {len(report.kernel_candidates)} kernel candidates "
        f"({report.runtime_seconds:.1f}s)"
    )
    return 0


def _cmd_moved_fraction(args) -> int:
    word = parse_word(args.word, args.n)
    fraction = moved_fraction(word, args.samples, args.bound, Random(args.seed))
    print(float(fraction))
    return 0


def _cmd_verify_diagram(args) -> int:
    report = verify_diagram(args.samples, Random(args.seed))
    for check in report.arrow_checks:
        status = "ok" if check.ok else f"FAIL counterexample={check.counterexample}"
        print(f"arrow {check.arrow.describe()}: {check.samples} samples {status}")
    closure = report.closure
    if closure.ok:
        print("closure: complete")
    else:
        for box, generator in closure.missing:
            print(f"closure: MISSING {generator} arrow out of {box}")
    if args.json:
        import json

        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(report.as_dict(), handle, indent=2)
            handle.write("\n")
    return 0 if report.ok else VERIFICATION_FAILURE


def _cmd_certify(args) -> int:
    word = parse_word(args.word, 2)
    start = tuple(Coordinates.from_csv(args.start).entries)
    if len(start) != 4:
        raise ValueError(f"start vector needs 4 entries, got {len(start)}")
    certificate = certify_nontrivial(word, start)  # type: ignore[arg-type]
    if certificate.violation is not None:
        print(f"VIOLATION: {certificate.violation}", file=sys.stderr)
        return VERIFICATION_FAILURE
    if certificate.trivial:
        print("Trivial")
        return 0
    print("nontrivial")
    print(f"image: {','.join(map(str, certificate.image))}")
    print(f"path: {' -> '.join(certificate.boxes)}")
    print(f"norms: {' '.join(map(str, certificate.norms))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vbraid", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    act = commands.add_parser("act", help="apply a word to a coordinate vector")
    act.add_argument("--n", type=int, required=True, help="strand count")
    act.add_argument("--vector", required=True, help='CSV entries or "base"')
    act.add_argument("--word", required=True)
    act.set_defaults(func=_cmd_act)

    eq = commands.add_parser("eq", help="test two words for equality")
    eq.add_argument("--group", choices=("bn", "vb2", "vbn"), required=True)
    eq.add_argument("--n", type=int, required=True)
    eq.add_argument("--w1", required=True)
    eq.add_argument("--w2", required=True)
    eq.add_argument("--battery", type=int, default=1000)
    eq.add_argument("--seed", type=int)
    eq.set_defaults(func=_cmd_eq)

    perm = commands.add_parser("perm", help="strand permutation of a word")
    perm.add_argument("--n", type=int)
    perm.add_argument("--word", required=True)
    perm.set_defaults(func=_cmd_perm)

    reduce_ = commands.add_parser("reduce", help="freely reduce a word")
    reduce_.add_argument("--n", type=int)
    reduce_.add_argument("--word", required=True)
    reduce_.set_defaults(func=_cmd_reduce)

    hunt_ = commands.add_parser("hunt", help="randomized kernel search")
    hunt_.add_argument("--n", type=int, required=True)
    hunt_.add_argument("--count", type=int, required=True, help="number of words")
    hunt_.add_argument("--length", required=True, help="word length N or range LO:HI")
    hunt_.add_argument("--seed", type=int, required=True)
    hunt_.add_argument("--battery", type=int, default=100)
    hunt_.add_argument("--bound", type=int, default=100)
    hunt_.add_argument("--base", help="override the start vector (CSV)")
    hunt_.add_argument("--workers", type=int, default=1)
    hunt_.add_argument("--out", required=True, help="JSON report path")
    hunt_.add_argument("--fixers-out", help="JSON-lines path for base fixers")
    hunt_.set_defaults(func=_cmd_hunt)

    moved = commands.add_parser("moved-fraction", help="fraction of probes a word moves")
    moved.add_argument("--n", type=int)
    moved.add_argument("--word", required=True)
    moved.add_argument("--samples", type=int, default=10000)
    moved.add_argument("--bound", type=int, default=100)
    moved.add_argument("--seed", type=int, required=True)
    moved.set_defaults(func=_cmd_moved_fraction)

    verify = commands.add_parser("verify-diagram", help="check all diagram arrows")
    verify.add_argument("--samples", type=int, default=1000)
    verify.add_argument("--seed", type=int, required=True)
    verify.add_argument("--json", help="also write the report as JSON")
    verify.set_defaults(func=_cmd_verify_diagram)

    certify = commands.add_parser(
        "certify", help="certify a two-strand word as trivial or nontrivial"
    )
    certify.add_argument("--word", required=True)
    certify.add_argument("--start", default="0,2,0,1", help="start vector (CSV)")
    certify.set_defaults(func=_cmd_certify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as error:
        print(f"vbraid {args.command}: error: {error}", file=sys.stderr)
        return VALIDATION_ERROR


if __name__ == "__main__":
    sys.exit(main())
