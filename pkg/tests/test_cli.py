import json

import pytest

from unirank3.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_json_is_canonical(capsys):
    code, out1, _ = _run(capsys, "classify", "--alpha", "1", "--exps", "0,1,2")
    assert code == 0
    _, out2, _ = _run(capsys, "classify", "--alpha", "1", "--exps", "0,1,2")
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["verdict"] == "SomeUnitarizable"
    assert json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n" == out1


def test_classify_agrees_with_enumerate(capsys):
    _, out1, _ = _run(capsys, "classify", "--alpha", "2", "--exps", "2,3,4")
    _, out2, _ = _run(capsys, "enumerate", "--alpha", "2", "--exps", "2,3,4")
    assert json.loads(out1)["verdict"] == json.loads(out2)["verdict"]


def test_pretty_output(capsys):
    code, out, _ = _run(capsys, "classify", "--alpha", "0", "--exps", "0", "--pretty")
    assert code == 0 and out.startswith("{\n")


def test_text_format(capsys):
    code, out, _ = _run(capsys, "classify", "--alpha", "0", "--exps", "0", "--format", "text")
    assert code == 0
    assert "verdict: " in out


def test_jacquet_subcommand(capsys):
    code, out, _ = _run(capsys, "jacquet", "--alpha", "0", "--label", "d([0,1]+;s)")
    assert code == 0
    doc = json.loads(out)
    assert doc["label"] == "d([0,1]+;s)"
    assert {(t["coeff"], t["gl"], t["cl"]) for t in doc["terms"]} == {
        (1, "1", "d([0,1]+;s)"),
        (1, "L{[0,1]}", "s"),
        (1, "L{[1]}", "s(0)+"),
    }


def test_dual_subcommand(capsys):
    code, out, _ = _run(capsys, "dual", "--alpha", "2", "--label", "L([1,3];s)")
    assert code == 0
    assert json.loads(out)["dual"] == "L([3]; d_sp([1],[2];s))"


def test_mult_subcommand(capsys):
    code, out, _ = _run(
        capsys, "mult", "--alpha", "1", "--gl", "[-1,1]", "--label", "L([0,2];s)"
    )
    assert code == 0
    assert json.loads(out) == {"exact": 4, "gl": "[-1,1]", "label": "L([0,2]; s)"}


def test_gl_unitary_subcommand(capsys):
    code, out, _ = _run(capsys, "gl-unitary", "--label", "L{[-1/2,1/2]}")
    assert code == 0
    assert json.loads(out)["unitarizable"] is True


def test_verify_subcommand(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "mseg-closed-vs-composed", "--bound", "3")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_domain_error_exit_code(capsys):
    code, _, err = _run(capsys, "verify", "--suite", "nope")
    assert code == 1
    assert json.loads(err)["error"] == "UnknownSuite"
    code, _, err = _run(capsys, "enumerate", "--alpha", "3", "--exps", "1,2,3,4")
    assert code == 1
    assert json.loads(err)["error"] == "RankExceeded"


def test_schema_error_exit_code(capsys):
    code, _, err = _run(capsys, "classify", "--alpha", "x", "--exps", "0")
    assert code == 2
    code, _, err = _run(capsys, "jacquet", "--alpha", "1", "--label", "???")
    assert code == 2
    code, _, err = _run(capsys, "classify", "--alpha", "1")
    assert code == 2


def test_lines_file(capsys, tmp_path):
    path = tmp_path / "lines.json"
    path.write_text(
        json.dumps(
            [
                {"name": "a", "alpha": "1", "exps": ["1/4"]},
                {"name": "b", "alpha": "0", "exps": ["0"]},
            ]
        )
    )
    code, out, _ = _run(capsys, "classify", "--lines", str(path))
    assert code == 0
    assert json.loads(out)["verdict"] == "AllUnitarizable"
    path.write_text(json.dumps([{"alpha": "1", "bogus": 1}]))
    code, _, err = _run(capsys, "classify", "--lines", str(path))
    assert code == 2
