import io
import json
import sys

import pytest

from permpart import brute_partition_contains, dispatch_contains
from permpart.cli import (
    ParseError,
    format_partition,
    format_permutation,
    format_rgf,
    parse_partition,
    parse_permutation,
    parse_rgf,
    run_command,
)
from helpers import partitions_of, perms_of, rgf_words_of


def run(capsys, argv, stdin=None):
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
        try:
            code = run_command(argv)
        finally:
            sys.stdin = old
    else:
        code = run_command(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsers:
    def test_permutation_grammars(self):
        assert parse_permutation("2,3,1").values == (2, 3, 1)
        assert parse_permutation("2 3 1").values == (2, 3, 1)
        assert parse_permutation("  2, 3, 1 ").values == (2, 3, 1)
        assert parse_permutation("").values == ()

    def test_permutation_errors(self):
        with pytest.raises(ParseError, match="duplicate value 2"):
            parse_permutation("2,2,1")
        with pytest.raises(ParseError, match="missing value 3"):
            parse_permutation("2,4,1")
        with pytest.raises(ParseError, match="empty token at position 2"):
            parse_permutation("1,,2")
        with pytest.raises(ParseError, match="invalid token"):
            parse_permutation("1,x,2")

    def test_partition_grammars(self):
        assert parse_partition("1,3/2,4").blocks == ((1, 3), (2, 4))
        assert parse_partition("2,4/1,3").blocks == ((1, 3), (2, 4))
        assert parse_partition("13/24") == parse_partition("1,3/2,4")
        assert parse_partition("").blocks == ()

    def test_partition_errors(self):
        with pytest.raises(ParseError, match="missing element 4"):
            parse_partition("1,3/2,5")
        with pytest.raises(ParseError, match="repeated element 2"):
            parse_partition("1,2/2,3")
        with pytest.raises(ParseError, match="empty block"):
            parse_partition("1,2//3")

    def test_rgf_grammar(self):
        assert parse_rgf("1,2,1,2").letters == (1, 2, 1, 2)
        with pytest.raises(ParseError, match="restricted growth"):
            parse_rgf("2,1")

    def test_roundtrips_exhaustive(self):
        for n in range(7):
            for perm in perms_of(n):
                assert parse_permutation(format_permutation(perm)) == perm
            for sigma in partitions_of(n):
                assert parse_partition(format_partition(sigma)) == sigma
            for word in rgf_words_of(n):
                assert parse_rgf(format_rgf(word)) == word


class TestGoldens:
    def test_contains_partition_json(self, capsys):
        code, out, err = run(
            capsys,
            ["contains", "--kind", "partition", "1,3/2,4", "1,2", "--witness", "--format", "json"],
        )
        assert code == 0
        assert out == '{"command":"contains","contains":true,"witness":[1,3]}\n'

    def test_reduce_plain(self, capsys):
        code, out, err = run(capsys, ["reduce", "2,3,1"])
        assert code == 0
        assert out == "1,5/2,6/3,4\n"

    def test_contains_perm_false(self, capsys):
        code, out, err = run(capsys, ["contains", "--kind", "perm", "1,2,3", "2,1"])
        assert code == 1
        assert out == "false\n"


class TestExitCodes:
    def test_parse_error_is_2(self, capsys):
        code, out, err = run(capsys, ["contains", "--kind", "perm", "2,2,1", "1"])
        assert code == 2
        assert "duplicate value 2" in err
        assert out == ""

    def test_usage_error_is_2(self, capsys):
        code, out, err = run(capsys, ["contains", "1,2", "1"])  # missing --kind
        assert code == 2

    def test_help_is_0(self, capsys):
        code, out, err = run(capsys, ["--help"])
        assert code == 0

    def test_bound_refusal_is_2(self, capsys):
        code, out, err = run(capsys, ["census", "11", "1,2"])
        assert code == 2
        assert "runaway" in err

    def test_dichotomy_matches_printed_boolean(self, capsys):
        for text in partitions_of(4):
            for pattern in partitions_of(2):
                code, out, err = run(
                    capsys,
                    [
                        "contains",
                        "--kind",
                        "partition",
                        format_partition(text),
                        format_partition(pattern),
                    ],
                )
                assert (code, out) in ((0, "true\n"), (1, "false\n"))
                assert (code == 0) == dispatch_contains(text, pattern).contains


class TestCommands:
    def test_contains_witness_plain(self, capsys):
        code, out, err = run(
            capsys, ["contains", "--kind", "partition", "1,3/2,4", "1,2", "--witness"]
        )
        assert code == 0
        assert out == "true\n1,3\n"

    def test_contains_oracle_agrees(self, capsys):
        for text in partitions_of(4):
            for pattern in partitions_of(3):
                argv = [
                    "contains",
                    "--kind",
                    "partition",
                    format_partition(text),
                    format_partition(pattern),
                ]
                code, out, err = run(capsys, argv)
                oracle_code, oracle_out, _ = run(capsys, argv + ["--oracle"])
                assert (code, out) == (oracle_code, oracle_out)

    def test_oracle_witness_rejected(self, capsys):
        code, out, err = run(
            capsys,
            ["contains", "--kind", "partition", "1,3/2,4", "1,2", "--oracle", "--witness"],
        )
        assert code == 2

    def test_count_kinds(self, capsys):
        assert run(capsys, ["count", "--kind", "perm", "2,3,1", "2,1"])[:2] == (0, "2\n")
        assert run(capsys, ["count", "--kind", "partition", "1,3/2,4", "1,2"])[:2] == (
            0,
            "2\n",
        )
        code, out, err = run(
            capsys, ["count", "--kind", "rgf", "1,1,1", "1,1", "--format", "json"]
        )
        assert (code, out) == (0, '{"command":"count","count":3}\n')

    def test_stdin_dash(self, capsys):
        code, out, err = run(capsys, ["reduce", "-"], stdin="2,3,1\n")
        assert (code, out) == (0, "1,5/2,6/3,4\n")

    def test_invert_reduce(self, capsys):
        code, out, err = run(capsys, ["invert-reduce", "1,5/2,6/3,4"])
        assert (code, out) == (0, "2,3,1\n")
        code, out, err = run(capsys, ["invert-reduce", "1,2/3,4"])
        assert code == 2 and "matchstick" in err

    def test_reduce_invert_roundtrip(self, capsys):
        for perm in perms_of(4):
            code, out, err = run(capsys, ["reduce", format_permutation(perm)])
            assert code == 0
            code, out, err = run(capsys, ["invert-reduce", out.strip()])
            assert (code, out.strip()) == (0, format_permutation(perm))

    def test_rgf_command(self, capsys):
        code, out, err = run(capsys, ["rgf", "1,4/2,6/3,5"])
        assert (code, out) == (0, "1,2,3,1,3,2\n")
        code, out, err = run(capsys, ["rgf", "1,2,3,1,3,2", "--invert"])
        assert (code, out) == (0, "1,4/2,6/3,5\n")

    def test_rgf_contains(self, capsys):
        code, out, err = run(capsys, ["rgf-contains", "1,2,2,1", "1,1,2"])
        assert (code, out) == (1, "false\n")
        code, out, err = run(
            capsys, ["rgf-contains", "1,2,1,2", "1,1", "--witness", "--format", "json"]
        )
        assert (code, out) == (
            0,
            '{"command":"rgf-contains","contains":true,"witness":[1,3]}\n',
        )

    def test_census_json_golden(self, capsys):
        code, out, err = run(capsys, ["census", "4", "1,2", "--format", "json"])
        assert code == 0
        assert out == (
            '{"command":"census","n":4,"pattern":"1,2","notion":"partition",'
            '"avoiders":1,"containers":14}\n'
        )

    def test_census_rgf_notion(self, capsys):
        code, out, err = run(capsys, ["census", "4", "1,1", "--notion", "rgf"])
        assert (code, out) == (0, "n=4 pattern=1,1 notion=rgf avoiders=1 containers=14\n")

    def test_verify_json_shape(self, capsys):
        code, out, err = run(
            capsys,
            ["verify", "reduction", "--max-n", "3", "--max-k", "3", "--format", "json"],
        )
        assert code == 0
        record = json.loads(out)
        assert list(record) == [
            "command", "gate", "max_n", "max_k", "pairs_checked", "mismatches",
        ]
        assert record["pairs_checked"] == 81 and record["mismatches"] == []
        assert out.count("\n") == 1  # single-line record

    def test_verify_all_plain(self, capsys):
        code, out, err = run(
            capsys, ["verify", "--max-n", "3", "--max-k", "2", "--jobs", "2"]
        )
        assert code == 0
        assert "gate=reduction" in out and "gate=rgf" in out
        assert out.count(" ok") == 2

    def test_verify_bound_refusal(self, capsys):
        code, out, err = run(capsys, ["verify", "reduction", "--max-n", "8"])
        assert code == 2 and "runaway" in err

    def test_json_outputs_are_single_lines(self, capsys):
        for argv in (
            ["contains", "--kind", "perm", "1,3,2", "2,1", "--format", "json"],
            ["reduce", "2,1", "--format", "json"],
            ["rgf", "1,2/3", "--format", "json"],
            ["census", "3", "1,2", "--format", "json"],
        ):
            code, out, err = run(capsys, argv)
            assert out.endswith("\n") and out.count("\n") == 1
            json.loads(out)
