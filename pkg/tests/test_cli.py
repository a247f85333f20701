"""CLI behaviour: the documented commands, JSON output, and exit codes."""

import json

import pytest

from cliffsig import Signature, parse_multivector
from cliffsig.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_eval_examples(capsys):
    code, out, _ = run(capsys, "eval", "--sig", "1,3", "e1*e1")
    assert (code, out) == (0, "1")
    code, out, _ = run(capsys, "eval", "--sig", "1,3", "--product", "tilt", "e1*e1")
    assert (code, out) == (0, "-1")
    code, out, _ = run(capsys, "eval", "--sig", "2,0", "e1^e1")
    assert (code, out) == (0, "0")


def test_eval_multiple_exprs_combine_left_to_right(capsys):
    code, out, _ = run(capsys, "eval", "--sig", "2,0", "e1", "e2", "e2")
    assert (code, out) == (0, "e1")


def test_eval_json_roundtrip(capsys):
    code, out, _ = run(
        capsys, "eval", "--sig", "2,2", "--json", "(1 + e1)*(e2^e3) - 1/2"
    )
    assert code == 0
    data = json.loads(out)
    sig = Signature(*data["sig"])
    reparsed = parse_multivector(data["result"], sig)
    want = parse_multivector("(1 + e1)*(e2^e3) - 1/2", sig)
    assert reparsed == want


def test_eval_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "eval", "--sig", "2,0", "e1 +")
    assert code == 2 and "parse error" in err
    code, _, err = run(capsys, "eval", "--sig", "2,0", "e9")
    assert code == 2 and "e9" in err


def test_eval_vee_product(capsys):
    code, out, _ = run(
        capsys, "eval", "--sig", "1,3", "--product", "vee", "--odd", "e2,e3,e4",
        "--json", "e2*e2",
    )
    data = json.loads(out)
    assert code == 0
    assert data["target"] == [4, 0]
    assert data["result"] == "1"


def test_classify_outputs(capsys):
    code, out, _ = run(capsys, "classify", "--sig", "1,3")
    assert code == 0
    assert "M(2,H)" in out and "M(2,C)" in out

    code, out, _ = run(capsys, "classify", "--sig", "0,0")
    assert code == 0 and out == "Cl(0,0): R"

    code, out, _ = run(capsys, "classify", "--sig", "3,0", "--even", "2,0")
    assert code == 0 and out == "M(2,R)"


def test_classify_json_and_oracle(capsys):
    code, out, _ = run(capsys, "classify", "--sig", "1,3", "--json", "--oracle")
    data = json.loads(out)
    assert code == 0
    assert data["algebra"] == "M(2,H)"
    assert data["even_part"] == "M(2,C)"
    assert data["oracle_agrees"] is True

    code, out, _ = run(
        capsys, "classify", "--sig", "3,0", "--even", "1,0", "--json", "--oracle"
    )
    data = json.loads(out)
    assert code == 0
    assert data["even_subalgebra"] == "C (+) C"
    assert data["oracle_agrees"] is True


def test_grading_command(capsys):
    code, out, _ = run(capsys, "grading", "--sig", "1,3", "--odd", "e2,e3,e4", "--json")
    data = json.loads(out)
    assert code == 0
    assert (data["p0"], data["q0"], data["p1"], data["q1"]) == (1, 0, 0, 3)
    assert data["target"] == [4, 0]
    assert data["dichotomy"] == "half"
    assert data["closure_ok"] is True


def test_grading_involution_file(tmp_path, capsys):
    path = tmp_path / "inv.json"
    path.write_text(json.dumps([["5/3", "-4/3"], ["4/3", "-5/3"]]))
    code, out, _ = run(
        capsys, "grading", "--sig", "1,1", "--involution", str(path), "--json"
    )
    data = json.loads(out)
    assert code == 0
    assert data["accepted"] is True
    assert (data["p0"], data["q0"], data["p1"], data["q1"]) == (1, 0, 0, 1)

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([["1", "1"], ["0", "1"]]))
    code, out, _ = run(capsys, "grading", "--sig", "2,0", "--involution", str(bad), "--json")
    assert code == 1
    assert json.loads(out)["accepted"] is False
    assert "NotInvolution" in json.loads(out)["reason"]


def test_sigchange_command(capsys):
    code, out, _ = run(
        capsys, "sigchange", "--sig", "1,3", "--odd", "e2,e3,e4", "--expr", "e1*e1",
        "--json",
    )
    data = json.loads(out)
    assert code == 0
    assert data == {
        "sig": [1, 3],
        "odd": [2, 3, 4],
        "product": "vee",
        "target": [4, 0],
        "result": "1",
    }


def test_sigchange_products(capsys):
    code, out, _ = run(
        capsys, "sigchange", "--sig", "1,3", "--product", "tilt", "--expr", "e2*e2"
    )
    assert code == 0
    assert out.splitlines() == ["target: Cl(3,1)", "1"]


def test_verify_command_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "table4", "--max-n", "3")
    assert code == 0
    assert "0 violations" in out

    code, out, _ = run(capsys, "verify", "--suite", "sigchange", "--max-n", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["suite"] == "sigchange" and data["violations"] == 0

    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "table4", "--max-n", "99"])
    assert exc.value.code == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "e1"])  # missing --sig
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])  # a subcommand is required
    assert exc.value.code == 2


def test_verify_seed_flag_is_reproducible(capsys):
    code1, out1, _ = run(capsys, "verify", "--suite", "core", "--max-n", "2", "--json", "--seed", "42")
    code2, out2, _ = run(capsys, "verify", "--suite", "core", "--max-n", "2", "--json", "--seed", "42")
    assert code1 == code2 == 0
    a, b = json.loads(out1), json.loads(out2)
    for cell in a["cells"] + b["cells"]:
        del cell["seconds"]
    assert a == b
