import json

import pytest

from skein4.cli import EXIT_INTERNAL, EXIT_OK, EXIT_UNSUPPORTED, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


def test_eval_prints_value(capsys):
    code, out, _ = run(capsys, "eval", "--expr", "close(braid3[])")
    assert code == EXIT_OK
    assert out == "1*t^3"


def test_eval_normalized(capsys):
    code, out, _ = run(capsys, "eval", "--expr", "torus(2,1)", "--normalize")
    assert code == EXIT_OK
    assert out == "1*t"


def test_eval_json_record(capsys):
    code, out, _ = run(capsys, "eval", "--expr", "torus(2,2)", "--spec", "p1", "--json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["value"] == "1*t - 1*x*t + 1*x*t^2"
    assert record["components"] == 2
    assert record["timing_ms"] is None


def test_eval_line_record(capsys):
    code, out, _ = run(capsys, "eval", "--expr", "torus(2,3)", "--record")
    assert code == EXIT_OK
    assert out.startswith("input=torus(2,3); spec=spec-i; writhe=3")
    assert "timing_ms" not in out


def test_eval_timing(capsys):
    code, out, _ = run(capsys, "eval", "--expr", "N(braid2[])", "--json", "--timing")
    assert code == EXIT_OK
    assert json.loads(out)["timing_ms"] >= 0


def test_eval_invariant(capsys):
    code, out, _ = run(capsys, "eval", "--expr", "torus(2,1)", "--invariant", "p2", "--normalize")
    assert code == EXIT_OK
    assert out == "1*t"


def test_eval_exit_codes(capsys):
    code, _, err = run(capsys, "eval", "--expr", "torus(3,4)")
    assert code == EXIT_UNSUPPORTED
    assert err.startswith("error:")
    assert run(capsys, "eval", "--expr", "N(int(2)")[0] == EXIT_USAGE
    assert run(capsys, "eval", "--expr", "rat(2 2)")[0] == EXIT_USAGE
    assert run(capsys, "eval", "--expr", "@no_such_entry")[0] == EXIT_USAGE


def test_bad_choice_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(["eval", "--expr", "torus(2,3)", "--spec", "spec-x"])
    assert exc_info.value.code == EXIT_USAGE


def test_check_basis_counts(capsys):
    code, out, _ = run(capsys, "check", "basis-counts")
    assert code == EXIT_OK
    assert out == "B3=24 C3=16 total=40 g(4)=1120 PASS"


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "conditions", "--spec", "spec-ii", "--json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["suite"] == "conditions"
    assert all(item["passed"] for item in report["items"])


def test_catalog_commands(capsys, fresh_catalog):
    code, out, _ = run(capsys, "catalog", "show", "4_1")
    assert (code, out) == (EXIT_OK, "N(rat(2 2))")

    code, out, _ = run(capsys, "catalog", "add", "hopf", "torus(2,2)", "--note", "Hopf link")
    assert code == EXIT_OK
    assert out == "hopf\ttorus(2,2)\tHopf link"

    code, out, _ = run(capsys, "catalog", "list")
    assert "hopf\ttorus(2,2)\tHopf link" in out.splitlines()

    assert run(capsys, "catalog", "add", "hopf", "torus(2,2)")[0] == EXIT_USAGE
    assert run(capsys, "catalog", "show", "nope")[0] == EXIT_USAGE


def test_catalog_reference_evaluates(capsys, fresh_catalog):
    code, out, _ = run(capsys, "eval", "--expr", "@unknot")
    assert (code, out) == (EXIT_OK, "1*t")


def test_burau_json(capsys):
    code, out, _ = run(capsys, "burau", "--braid", "braid2[1]", "--json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["braid"] == "braid2[1]"
    assert len(record["rows"]) == 2
    assert record["ideal"] is None


def test_burau_reduced(capsys):
    code, out, _ = run(capsys, "burau", "--braid", "braid3[1 -1]", "--mod", "t+1")
    assert code == EXIT_OK
    assert out.splitlines() == ["[1, 0, 0]", "[0, 1, 0]", "[0, 0, 1]"]


def test_burau_errors(capsys):
    assert run(capsys, "burau")[0] == EXIT_USAGE
    assert run(capsys, "burau", "--braid", "braid2[1]", "--mod", "2*t^2+1")[0] == EXIT_USAGE
    assert run(capsys, "burau", "--braid", "N(int(2))")[0] == EXIT_USAGE


def test_tricolor(capsys):
    code, out, _ = run(capsys, "tricolor", "--expr", "torus(2,3)")
    assert code == EXIT_OK
    assert "rank=2" in out
    assert run(capsys, "tricolor")[0] == EXIT_USAGE


def test_tricolor_invariance(capsys):
    code, out, _ = run(capsys, "tricolor", "--invariance", "--trials", "10", "--seed", "4")
    assert code == EXIT_OK
    assert out.endswith("PASS")


def test_internal_errors_have_their_own_code(capsys, monkeypatch):
    from skein4.app.services import evaluation

    def broken(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(evaluation, "evaluate_text", broken)
    code, _, err = run(capsys, "eval", "--expr", "torus(2,3)")
    assert code == EXIT_INTERNAL
    assert err.startswith("internal error: boom")
