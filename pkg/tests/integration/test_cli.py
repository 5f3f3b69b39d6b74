"""명령행 통합 테스트: 표준 출력 JSON과 종료 코드"""

import json

import pytest

from src.cli.commands import run


def _run(capsys, *argv):
    code = run(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_eval_prints_canonical_element(capsys):
    # When
    code, body = _run(capsys, "eval", "1 + t^2")

    # Then
    assert code == 0
    assert body["text"] == "t^2 + 1"


def test_equiv_positive_with_witness(capsys):
    # When
    code, body = _run(capsys, "equiv", "--level", "0", "t^2 + 3", "t^2")

    # Then
    assert code == 0
    assert body["equivalent"] is True
    assert body["witness"] == {"kind": "bound_n", "n": 4}


def test_equiv_negative_exits_one(capsys):
    # When
    code, body = _run(capsys, "equiv", "--level", "2", "t", "t^2")

    # Then
    assert code == 1
    assert body["equivalent"] is False
    assert body["reason"]["degA"] == "1"


def test_auto_then_apply(capsys, tmp_path):
    # Given
    code, body = _run(capsys, "auto", "--from", "t", "--to", "2*t + 1", "--probes", "20")
    assert code == 0
    assert body["route"] == "e2"
    assert body["validation"]["passed"] is True
    desc = tmp_path / "f.json"
    desc.write_text(json.dumps(body), encoding="utf-8")

    # When
    forward_code, forward = _run(capsys, "apply", "--desc", str(desc), "t")
    inverse_code, inverse = _run(capsys, "apply", "--desc", str(desc), "--inverse", "2*t + 1")

    # Then
    assert forward_code == inverse_code == 0
    assert forward["image"]["text"] == "2*t + 1"
    assert inverse["image"]["text"] == "t"


def test_auto_e3_route_in_two_dimensions(capsys):
    # When
    code, body = _run(capsys, "--dim", "2", "auto", "--from", "t^(1,0)", "--to", "t^(1,1)")

    # Then
    assert code == 0
    assert body["route"] == "e3"
    assert body["dim"] == 2


def test_auto_without_route_is_cannot_prove(capsys):
    # When
    code, body = _run(capsys, "auto", "--from", "t", "--to", "t^2")

    # Then
    assert code == 1
    assert body["error"] == "cannot_prove"


@pytest.mark.parametrize(
    "argv, exit_code, error",
    [
        (["eval", "t^^2"], 2, "parse_error"),
        (["eval", "1/2"], 2, "invariant_violation"),
        (["arith", "root", "2*t^2", "2"], 3, "coefficient_not_representable"),
        (["arith", "sub", "t", "t^2"], 1, "underflow"),
        (["--dim", "2", "arith", "divmod", "t^(2,0)", "t^(1,0) - t^(1,-1)"], 3,
         "non_terminating_quotient"),
        (["seq", "e0", "5"], 2, "standard_input"),
        (["embed", "--anchor", "t", "t^(1,0)"], 2, "parse_error"),
    ],
)
def test_error_exit_codes(capsys, argv, exit_code, error):
    # When
    code, body = _run(capsys, *argv)

    # Then
    assert code == exit_code
    assert body["error"] == error


def test_arith_divmod(capsys):
    # When
    code, body = _run(capsys, "arith", "divmod", "t^2", "t + 1")

    # Then
    assert code == 0
    assert body["q"]["text"] == "t - 1"
    assert body["r"]["text"] == "1"


def test_seq_and_embed(capsys):
    # When
    seq_code, seq = _run(capsys, "seq", "e2", "t^2", "--k", "3", "--direction", "down")
    embed_code, embed = _run(capsys, "--dim", "2", "embed", "--anchor", "t^(1,0)", "t^(2,3)")

    # Then
    assert seq_code == embed_code == 0
    assert [term["text"] for term in seq["terms"]] == ["t^2", "1/2*t^2", "1/3*t^2"]
    assert embed["value"] == "2"
    assert embed["degenerate"] is False


def test_output_is_deterministic(capsys):
    # When
    _, first = _run(capsys, "auto", "--from", "t + 3", "--to", "5*t", "--probes", "10")
    _, second = _run(capsys, "auto", "--from", "t + 3", "--to", "5*t", "--probes", "10")

    # Then
    assert first == second
