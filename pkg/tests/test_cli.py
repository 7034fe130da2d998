import json

import pytest

from kostka.cli import main
from kostka.counting import kostka
from kostka.tableaux import is_semistandard, weight


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    out = json.loads(captured.out) if captured.out else None
    err = json.loads(captured.err) if captured.err else None
    return code, out, err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--shape", "6,3,3", "--weight", "5,4,3")
    assert code == 0
    assert out == {"kostka": "1"}


def test_count_small_example(capsys):
    code, out, _ = run(capsys, "count", "--shape", "2,1", "--weight", "1,1,1")
    assert code == 0
    assert out == {"kostka": "2"}


def test_count_oracle_agrees(capsys):
    _, fast, _ = run(capsys, "count", "--shape", "4,2,1", "--weight", "3,2,1,1")
    _, slow, _ = run(
        capsys, "count", "--shape", "4,2,1", "--weight", "3,2,1,1", "--oracle"
    )
    assert fast == slow


def test_count_multi(capsys):
    code, out, _ = run(
        capsys, "count-multi", "--shape", "[[1],[1]]", "--weight", "1,1"
    )
    assert code == 0
    assert out == {"kostka": "2"}


def test_count_multi_from_file(capsys, tmp_path):
    f = tmp_path / "shape.json"
    f.write_text("[[2,1,1],[2,2],[4]]")
    code, out, _ = run(
        capsys, "count-multi", "--shape", "@" + str(f), "--weight", "8,3,1"
    )
    assert code == 0
    assert out == {"kostka": "1"}


def test_positive_partition_and_multi(capsys):
    code, out, _ = run(capsys, "positive", "--shape", "3,1", "--weight", "2,2")
    assert code == 0
    assert out == {"positive": True}
    code, out, _ = run(
        capsys, "positive", "--shape", "[[1,1]]", "--weight", "2", "--exit-code"
    )
    assert code == 1
    assert out == {"positive": False}


def test_mult_one_with_certificate(capsys):
    code, out, _ = run(
        capsys, "mult-one", "--shape", "6,3,3", "--weight", "5,4,3", "--exit-code"
    )
    assert code == 0
    assert out["multiplicity_one"] is True
    assert out["certificate"]["indices"][-1] == 3


def test_mult_one_false(capsys):
    code, out, _ = run(
        capsys, "mult-one", "--shape", "2,1", "--weight", "1,1,1", "--exit-code"
    )
    assert code == 1
    assert out == {"multiplicity_one": False}


def test_mult_one_multi_exit_code(capsys):
    code, out, _ = run(
        capsys,
        "mult-one-multi",
        "--shape",
        "[[1],[1]]",
        "--weight",
        "1,1",
        "--exit-code",
    )
    assert code == 1
    assert out == {"multiplicity_one": False}


def test_exit_code_defaults_to_zero_without_flag(capsys):
    code, out, _ = run(capsys, "mult-one", "--shape", "2,1", "--weight", "1,1,1")
    assert code == 0
    assert out == {"multiplicity_one": False}


def test_unique(capsys):
    code, out, _ = run(capsys, "unique", "--shape", "3,2,1", "--exit-code")
    assert code == 0
    assert out == {"unique_weight": True}
    code, out, _ = run(capsys, "unique-multi", "--shape", "[[2],[]]", "--exit-code")
    assert code == 1
    assert out == {"unique_weight": False}


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--shape", "2,1", "--weight", "1,1,1")
    assert code == 0
    assert out["count"] == "2"
    assert len(out["tableaux"]) == 2
    for doc in out["tableaux"]:
        rows = tuple(tuple(r) for r in doc["rows"])
        assert is_semistandard(rows, shape=(2, 1))
        assert weight(rows) == (1, 1, 1)
        assert doc["shape"] == [2, 1]


def test_enumerate_count_only_and_multi(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--shape", "2,1", "--weight", "1,1,1", "--count-only"
    )
    assert code == 0
    assert out == {"count": "2"}
    code, out, _ = run(capsys, "enumerate", "--shape", "[[1],[1]]", "--weight", "1,1")
    assert code == 0
    assert out["count"] == "2"
    assert all(len(mt["components"]) == 2 for mt in out["multitableaux"])


def test_greedy(capsys):
    code, out, _ = run(capsys, "greedy", "--shape", "6,3,3", "--weight", "5,4,3")
    assert code == 0
    assert out["tableau"]["rows"] == [
        [1, 1, 1, 1, 1, 2],
        [2, 2, 2],
        [3, 3, 3],
    ]


def test_wreath_decompose(capsys):
    code, out, _ = run(
        capsys, "wreath-decompose", "--r", "2", "--d", "1", "--mu", "1"
    )
    assert code == 0
    assert out["params"] == {"r": 2, "d": 1, "n": 1, "mu": [1]}
    assert out["constituents"] == [
        {"label": [[], [1]], "multiplicity": "1"},
        {"label": [[1], []], "multiplicity": "1"},
    ]


def test_ggg_commands(capsys):
    entries = '[{"size":2,"partition":[1]},{"size":3,"partition":[1]}]'
    code, out, _ = run(capsys, "ggg-count", "--entries", entries, "--mu", "3,2")
    assert code == 0
    assert out == {"kostka": "1"}
    code, out, _ = run(
        capsys, "ggg-positive", "--entries", entries, "--mu", "3,2", "--exit-code"
    )
    assert code == 0
    assert out == {"positive": True}
    same = '[{"size":2,"partition":[1]},{"size":2,"partition":[1]}]'
    code, out, _ = run(
        capsys, "ggg-mult-one", "--entries", same, "--mu", "4", "--exit-code"
    )
    assert code == 0
    assert out == {"multiplicity_one": True}


def test_error_exits_two_with_json_on_stderr(capsys):
    code, out, err = run(capsys, "count", "--shape", "2,1", "--weight", "1,1")
    assert code == 2
    assert out is None
    assert err["error"]["type"] == "SizeMismatchError"
    assert err["error"]["message"]


def test_parse_error_exits_two(capsys):
    code, _, err = run(capsys, "count", "--shape", "a,b", "--weight", "1")
    assert code == 2
    assert err["error"]["type"] == "ParseError"
    code, _, err = run(capsys, "count-multi", "--shape", "not json", "--weight", "1")
    assert code == 2
    assert err["error"]["type"] == "ParseError"


def test_counts_are_decimal_strings(capsys):
    # large counts survive JSON round trips exactly
    _, out, _ = run(
        capsys, "count", "--shape", "8,6,4,2", "--weight", ",".join("1" * 20)
    )
    assert out["kostka"] == str(kostka((8, 6, 4, 2), (1,) * 20))
    assert isinstance(out["kostka"], str)
