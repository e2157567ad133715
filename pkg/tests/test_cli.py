import json
from pathlib import Path

import pytest

from abslog import check_theory, parse_theory
from abslog.cli import main
from abslog.driver import build_model, model_for
from abslog.errors import AbslogError
from abslog.logics import SIG_D

CORPUS = Path(__file__).parent.parent / "src" / "abslog" / "corpus"
DATA = Path(__file__).parent / "data"


def test_check_corpus_exit_zero(capsys):
    for name in ("prelude_k.al", "peano.al"):
        assert main(["check", str(CORPUS / name)]) == 0
        out = capsys.readouterr().out
        assert "failed" not in out


def test_check_bad_script_exit_one(capsys):
    assert main(["check", str(DATA / "bad_mp_notimp.al")]) == 1
    out = capsys.readouterr().out
    assert "failed" in out and "NotAnImplication" in out


def test_check_missing_file_exit_two(capsys):
    assert main(["check", "no_such_file.al"]) == 2


def test_check_parse_error_exit_two(tmp_path, capsys):
    bad = tmp_path / "broken.al"
    bad.write_text("logic D\naxiom Q: (all x. x")
    assert main(["check", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "broken.al:2:" in err


def test_check_json_schema(capsys):
    assert main(["check", str(CORPUS / "prelude_k.al"), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["file"].endswith("prelude_k.al")
    names = [b["name"] for b in doc["blocks"]]
    assert "efq" in names and "dichotomy" in names
    for block in doc["blocks"]:
        assert set(block) == {"name", "kind", "verdict", "diagnostics"}
        assert block["verdict"] == "proved"


def test_check_json_reports_diagnostics(capsys):
    assert main(["check", str(DATA / "bad_ax.al"), "--json"]) == 1
    doc = json.loads(capsys.readouterr().out)
    diags = [d for b in doc["blocks"] for d in b["diagnostics"]]
    assert diags and diags[0]["code"] == "NotAnAxiom"
    assert diags[0]["line"] > 0


def test_model_check_cli(capsys):
    assert main(["model-check", str(CORPUS / "prelude_k.al"),
                 "--model", "boolean", "--arity-cap", "1"]) == 0
    out = capsys.readouterr().out
    assert out.count("holds") == 21


def test_model_check_failure_reported(tmp_path, capsys):
    bad = tmp_path / "inconsistent.al"
    bad.write_text("logic D\naxiom BAD: all x. x\n")
    assert main(["model-check", str(bad), "--model", "boolean"]) == 1
    out = capsys.readouterr().out
    assert "BAD: fails" in out


def test_eval_cli(capsys):
    assert main(["eval", str(CORPUS / "prelude_k.al"),
                 "--term", "(all x. x)", "--model", "boolean"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "(all x. x) = F"
    assert main(["eval", str(CORPUS / "prelude_k.al"),
                 "--term", "not A", "--model", "boolean",
                 "--assign", "A=F"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "not A = T"


def test_eval_bad_assignment(capsys):
    assert main(["eval", str(CORPUS / "prelude_k.al"),
                 "--term", "A", "--model", "boolean",
                 "--assign", "A=Maybe"]) == 2


# driver-level behavior


def test_lemmas_usable_across_blocks():
    tf = parse_theory("""
        logic D
        theorem top: true
        proof
          s1: ax D1
        qed
        theorem top_again: true
        proof
          s1: lemma top
        qed
        """)
    assert check_theory(tf).passed


def test_claim_mismatch_diagnostic():
    tf = parse_theory("""
        logic D
        theorem t: true
        proof
          s1: ax D1 ==> A -> A
        qed
        """)
    report = check_theory(tf)
    assert not report.passed
    assert report.results[0].diagnostics[0].code == "ClaimMismatch"


def test_conclusion_mismatch_diagnostic():
    tf = parse_theory("""
        logic D
        theorem t: A -> A
        proof
          s1: ax D1
        qed
        """)
    report = check_theory(tf)
    assert report.results[0].diagnostics[0].code == "ConclusionMismatch"


def test_duplicate_step_diagnostic():
    tf = parse_theory("""
        logic D
        theorem t: true
        proof
          s1: ax D1
          s1: ax D1
        qed
        """)
    assert check_theory(tf).results[0].diagnostics[0].code == "DuplicateStep"


def test_unknown_step_reference():
    tf = parse_theory("""
        logic D
        theorem t: true
        proof
          s2: mp s0 s1
        qed
        """)
    report = check_theory(tf)
    assert not report.passed
    assert report.results[0].diagnostics[0].code == "UnknownStep"


def test_failure_does_not_poison_later_blocks():
    tf = parse_theory("""
        logic D
        theorem broken: A
        proof
          s1: ax D1
        qed
        theorem fine: true
        proof
          s1: ax D1
        qed
        """)
    report = check_theory(tf)
    assert [r.verdict for r in report.results] == ["failed", "proved"]


def test_build_model_validation():
    good = """
        logic D
        model two {
          carrier T, F
          true := T
          imp := { (T, T) -> T, (T, F) -> F, (F, T) -> T, (F, F) -> T }
          all := { ([T, T]) -> T, ([T, F]) -> F, ([F, T]) -> F, ([F, F]) -> F }
        }
        """
    tf = parse_theory(good)
    alg = build_model(tf.model_block("two"), SIG_D)
    assert alg.size == 2
    with pytest.raises(AbslogError):
        # the table for imp is incomplete
        parse = parse_theory(good.replace(", (F, F) -> T", ""))
        build_model(parse.model_block("two"), SIG_D)
    with pytest.raises(AbslogError):
        parse = parse_theory(good.replace("true := T", "true := X"))
        build_model(parse.model_block("two"), SIG_D)


def test_model_for_resolution(tmp_path):
    tf = parse_theory("logic D\n")
    assert model_for(tf, "degenerate").size == 1
    # boolean needs the full classical signature behind the theory
    with pytest.raises(AbslogError):
        model_for(parse_theory("logic D\nabstraction box (0; {})\n"), "boolean")
    with pytest.raises(FileNotFoundError):
        model_for(tf, str(tmp_path / "missing.json"))
