"""Command-line front end.

Text grammars (all elements 1-based decimal):

- permutation: values separated by commas or whitespace, "2,3,1" or "2 3 1";
- partition: blocks joined by "/", elements within a block comma-separated,
  "1,3/2,4"; when the input contains no comma at all, each block may be a
  digit string ("13/24"), accepted only while every element is a single
  digit and never emitted;
- word: letters separated by commas or whitespace, "1,2,1,2", and must
  satisfy restricted growth.

Any positional argument may be "-" to read the value from stdin (at most
one per invocation).  Results go to stdout, errors to stderr.  JSON output
is one record per line with keys in the documented order.

Exit codes: 0 = success, and for relational commands the relation holds;
1 = the relation does not hold; 2 = usage or parse error; 3 = a verify run
found mismatches.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import Permutation, RGFWord, SetPartition, partition_of_rgf, rgf_of
from .errors import BoundExceeded
from .fastpaths import dispatch_contains
from .matchers import (
    MatchResult,
    partition_count,
    perm_contains,
    perm_count,
    rgf_contains,
    rgf_count,
)
from .oracle import VerificationReport, brute_partition_contains, census, verify_reduction, verify_rgf_coincidence
from .reduction import perm_of_matchstick, reduce_perm


class ParseError(ValueError):
    """Malformed input text; the message names the offending token."""


def _int_tokens(text: str, what: str) -> list[int]:
    stripped = text.strip()
    if not stripped:
        return []
    if "," in stripped:
        tokens = [t.strip() for t in stripped.split(",")]
    else:
        tokens = stripped.split()
    values = []
    for position, token in enumerate(tokens, start=1):
        if not token:
            raise ParseError(f"empty token at position {position}")
        if not token.isdigit():
            raise ParseError(f"invalid token {token!r} at position {position}")
        value = int(token)
        if value < 1:
            raise ParseError(f"invalid {what} {value} at position {position}")
        values.append(value)
    return values


def parse_permutation(text: str) -> Permutation:
    """Parse "2,3,1" or "2 3 1"; rejects non-bijective words."""
    values = _int_tokens(text, "value")
    seen = set()
    for position, value in enumerate(values, start=1):
        if value in seen:
            raise ParseError(f"duplicate value {value} at position {position}")
        seen.add(value)
    for value in range(1, len(values) + 1):
        if value not in seen:
            raise ParseError(f"missing value {value}")
    return Permutation(tuple(values))


def parse_partition(text: str) -> SetPartition:
    """Parse "1,3/2,4" (or compact "13/24"); rejects gaps and repeats."""
    stripped = text.strip()
    if not stripped:
        return SetPartition(())
    compact = "," not in stripped
    blocks: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for index, block_token in enumerate(stripped.split("/"), start=1):
        token = block_token.strip()
        if not token:
            raise ParseError(f"empty block at position {index}")
        if compact:
            if not token.isdigit():
                raise ParseError(f"invalid block {token!r} at position {index}")
            elements = [int(ch) for ch in token]
        else:
            elements = _int_tokens(token, "element")
            if not elements:
                raise ParseError(f"empty block at position {index}")
        for element in elements:
            if element < 1:
                raise ParseError(f"invalid element {element} in block {index}")
            if element in seen:
                raise ParseError(f"repeated element {element}")
            seen.add(element)
        blocks.append(tuple(elements))
    for element in range(1, max(seen) + 1):
        if element not in seen:
            raise ParseError(f"missing element {element}")
    return SetPartition(tuple(blocks))


def parse_rgf(text: str) -> RGFWord:
    """Parse "1,2,1,2" or "1 2 1 2"; rejects words violating restricted
    growth."""
    letters = _int_tokens(text, "letter")
    try:
        return RGFWord(tuple(letters))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_permutation(perm: Permutation) -> str:
    return ",".join(map(str, perm.values))


def format_partition(sigma: SetPartition) -> str:
    return "/".join(",".join(map(str, block)) for block in sigma.blocks)


def format_rgf(word: RGFWord) -> str:
    return ",".join(map(str, word.letters))


def _read_arg(value: str) -> str:
    return sys.stdin.read().strip() if value == "-" else value


def _emit(fmt: str, record: dict, plain_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(record, separators=(",", ":")))
    else:
        for line in plain_lines:
            print(line)


def _match_output(
    command: str, result: MatchResult, want_witness: bool, fmt: str
) -> int:
    record: dict = {"command": command, "contains": result.contains}
    lines = ["true" if result.contains else "false"]
    if want_witness and result.witness is not None:
        record["witness"] = list(result.witness)
        lines.append(",".join(map(str, result.witness)))
    _emit(fmt, record, lines)
    return 0 if result.contains else 1


def _cmd_contains(ns: argparse.Namespace) -> int:
    text_raw = _read_arg(ns.text)
    pattern_raw = _read_arg(ns.pattern)
    if ns.kind == "perm":
        if ns.oracle:
            raise ParseError("--oracle applies only to --kind partition")
        result = perm_contains(parse_permutation(text_raw), parse_permutation(pattern_raw))
    else:
        sigma = parse_partition(text_raw)
        pattern = parse_partition(pattern_raw)
        if ns.oracle:
            if ns.witness:
                raise ParseError("--oracle yields no witness; drop --witness")
            result = MatchResult(brute_partition_contains(sigma, pattern))
        else:
            result = dispatch_contains(sigma, pattern)
    return _match_output("contains", result, ns.witness, ns.format)


def _cmd_count(ns: argparse.Namespace) -> int:
    text_raw = _read_arg(ns.text)
    pattern_raw = _read_arg(ns.pattern)
    if ns.kind == "perm":
        value = perm_count(parse_permutation(text_raw), parse_permutation(pattern_raw))
    elif ns.kind == "partition":
        value = partition_count(parse_partition(text_raw), parse_partition(pattern_raw))
    else:
        value = rgf_count(parse_rgf(text_raw), parse_rgf(pattern_raw))
    _emit(ns.format, {"command": "count", "count": value}, [str(value)])
    return 0


def _cmd_reduce(ns: argparse.Namespace) -> int:
    reduced = reduce_perm(parse_permutation(_read_arg(ns.perm)))
    text = format_partition(reduced)
    _emit(ns.format, {"command": "reduce", "result": text}, [text])
    return 0


def _cmd_invert_reduce(ns: argparse.Namespace) -> int:
    sigma = parse_partition(_read_arg(ns.partition))
    try:
        perm = perm_of_matchstick(sigma)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    text = format_permutation(perm)
    _emit(ns.format, {"command": "invert-reduce", "result": text}, [text])
    return 0


def _cmd_rgf(ns: argparse.Namespace) -> int:
    raw = _read_arg(ns.value)
    if ns.invert:
        text = format_partition(partition_of_rgf(parse_rgf(raw)))
    else:
        text = format_rgf(rgf_of(parse_partition(raw)))
    _emit(ns.format, {"command": "rgf", "result": text}, [text])
    return 0


def _cmd_rgf_contains(ns: argparse.Namespace) -> int:
    result = rgf_contains(parse_rgf(_read_arg(ns.text)), parse_rgf(_read_arg(ns.pattern)))
    return _match_output("rgf-contains", result, ns.witness, ns.format)


def _cmd_census(ns: argparse.Namespace) -> int:
    raw = _read_arg(ns.pattern)
    pattern = parse_partition(raw) if ns.notion == "partition" else parse_rgf(raw)
    row = census(ns.n, pattern, ns.notion, force=ns.force, jobs=ns.jobs)
    pattern_text = (
        format_partition(row.pattern)
        if isinstance(row.pattern, SetPartition)
        else format_rgf(row.pattern)
    )
    record = {
        "command": "census",
        "n": row.n,
        "pattern": pattern_text,
        "notion": row.notion,
        "avoiders": row.avoiders,
        "containers": row.containers,
    }
    plain = (
        f"n={row.n} pattern={pattern_text} notion={row.notion} "
        f"avoiders={row.avoiders} containers={row.containers}"
    )
    _emit(ns.format, record, [plain])
    return 0


def _report_output(gate: str, report: VerificationReport, fmt: str) -> None:
    if fmt == "json":
        # elapsed is omitted so identical runs emit identical bytes.
        record = {
            "command": "verify",
            "gate": gate,
            "max_n": report.max_n,
            "max_k": report.max_k,
            "pairs_checked": report.pairs_checked,
            "mismatches": [
                {
                    "check": m.check,
                    "text": list(m.text),
                    "pattern": list(m.pattern),
                    "engine": m.engine,
                    "oracle": m.oracle,
                }
                for m in report.mismatches
            ],
        }
        print(json.dumps(record, separators=(",", ":")))
        return
    status = "ok" if report.ok else "FAIL"
    print(
        f"gate={gate} max_n={report.max_n} max_k={report.max_k} "
        f"pairs={report.pairs_checked} mismatches={len(report.mismatches)} "
        f"elapsed={report.elapsed:.2f}s {status}"
    )
    for m in report.mismatches:
        print(
            f"  MISMATCH check={m.check} text={m.text} pattern={m.pattern} "
            f"engine={m.engine} oracle={m.oracle}"
        )


def _cmd_verify(ns: argparse.Namespace) -> int:
    gates = ["reduction", "rgf"] if ns.gate == "all" else [ns.gate]
    failed = False
    for gate in gates:
        if gate == "reduction":
            max_n = ns.max_n if ns.max_n is not None else 6
            max_k = ns.max_k if ns.max_k is not None else 4
            report = verify_reduction(max_n, max_k, force=ns.force, jobs=ns.jobs)
        else:
            max_n = ns.max_n if ns.max_n is not None else 5
            max_k = ns.max_k if ns.max_k is not None else 3
            report = verify_rgf_coincidence(max_n, max_k, force=ns.force, jobs=ns.jobs)
        _report_output(gate, report, ns.format)
        failed = failed or not report.ok
    return 3 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permpart",
        description="Pattern containment in permutations, set partitions, and "
        "restricted growth words.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("plain", "json"), default="plain", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("contains", parents=[common], help="decide containment")
    p.add_argument("text")
    p.add_argument("pattern")
    p.add_argument("--kind", choices=("perm", "partition"), required=True)
    p.add_argument("--witness", action="store_true", help="also print a witness")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="force the brute-force subset reference (partitions only)",
    )
    p.set_defaults(handler=_cmd_contains)

    p = sub.add_parser("count", parents=[common], help="count occurrences")
    p.add_argument("text")
    p.add_argument("pattern")
    p.add_argument("--kind", choices=("perm", "partition", "rgf"), required=True)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser(
        "reduce", parents=[common], help="map a permutation to its matchstick partition"
    )
    p.add_argument("perm")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser(
        "invert-reduce", parents=[common], help="recover a permutation from a matchstick partition"
    )
    p.add_argument("partition")
    p.set_defaults(handler=_cmd_invert_reduce)

    p = sub.add_parser(
        "rgf",
        parents=[common],
        help="encode a partition as its restricted growth word (--invert decodes)",
    )
    p.add_argument("value")
    p.add_argument("--invert", action="store_true", help="decode a word to a partition")
    p.set_defaults(handler=_cmd_rgf)

    p = sub.add_parser("rgf-contains", parents=[common], help="decide word containment")
    p.add_argument("text")
    p.add_argument("pattern")
    p.add_argument("--witness", action="store_true", help="also print a witness")
    p.set_defaults(handler=_cmd_rgf_contains)

    p = sub.add_parser(
        "census", parents=[common], help="count avoiders/containers of a pattern over [n]"
    )
    p.add_argument("n", type=int)
    p.add_argument("pattern")
    p.add_argument("--notion", choices=("partition", "rgf"), default="partition")
    p.add_argument("--force", action="store_true", help="override the safety bound")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("verify", parents=[common], help="run the verification gates")
    p.add_argument("gate", nargs="?", choices=("reduction", "rgf", "all"), default="all")
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.add_argument("--max-k", type=int, default=None, dest="max_k")
    p.add_argument("--force", action="store_true", help="override the safety bound")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    p.set_defaults(handler=_cmd_verify)

    return parser


def run_command(argv: Sequence[str]) -> int:
    """Parse argv, run the command, and return the exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return ns.handler(ns)
    except (ParseError, BoundExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
