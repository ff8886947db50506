"""End-to-end CLI behavior: subcommands, exit codes, JSON output."""

import json

import pytest

from aieo.cli import main
from aieo.parser import parse_formula
from aieo.printer import formula_to_text


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_and_print(capsys):
    code, out, _ = run(capsys, "print", "P(eps x.S(x))&~Q(y)")
    assert code == 0
    assert out.strip() == "P(eps x. S(x)) & ~Q(y)"
    code, out, _ = run(capsys, "parse", "P(x)", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"node": "pred", "symbol": "P", "args": [{"node": "var", "name": "x"}]}


def test_parse_failure_exit_one(capsys):
    code, _, err = run(capsys, "print", "P(")
    assert code == 1
    assert "error" in err


def test_translate(capsys):
    code, out, _ = run(capsys, "translate", "--mode", "epsilon", "some politicians are crooks")
    assert code == 0
    assert out.strip() == "crook(eps x. politician(x))"
    code, out, _ = run(capsys, "translate", "--mode", "montague", "every S is P", "--json")
    doc = json.loads(out)
    assert doc["formula"] == "forall x. s(x) -> p(x)"


def test_translate_print_parse_print_fixpoint(capsys):
    _, out, _ = run(capsys, "translate", "--mode", "epsilon", "some S is P")
    first = out.strip()
    _, out, _ = run(capsys, "print", first)
    second = out.strip()
    assert parse_formula(second) == parse_formula(first)
    assert formula_to_text(parse_formula(second)) == second == first


def test_entail_exit_codes(capsys):
    code, out, _ = run(
        capsys, "entail", "--gamma", "P(tau x. S(x))", "--phi", "P(eps x. S(x))", "--bound", "2"
    )
    assert code == 0
    assert "countermodel" in out
    code, _, _ = run(
        capsys, "entail", "--gamma", "P(tau x. S(x))", "--phi", "P(eps x. S(x))",
        "--bound", "2", "--expect-valid",
    )
    assert code == 1
    code, out, _ = run(
        capsys, "entail",
        "--gamma", "P(eps x. S(x)), exists x. S(x)",
        "--phi", "exists x. (S(x) & P(x))",
        "--bound", "3", "--expect-valid",
    )
    assert code == 0
    assert "valid up to bound 3" in out


def test_entail_json_countermodel_schema(capsys):
    code, out, _ = run(
        capsys, "entail", "--gamma", "P(tau x. S(x))", "--phi", "P(eps x. S(x))",
        "--bound", "2", "--json",
    )
    doc = json.loads(out)
    assert doc["verdict"] == "countermodel"
    model = doc["model"]
    assert set(model) == {"domain", "predicates", "constants", "choice", "default"}


def test_entail_with_theory_file(tmp_path, capsys):
    thy = tmp_path / "biv.thy"
    thy.write_text("P(tau x. S(x)) -> P(eps x. S(x))\n")
    code, out, _ = run(
        capsys, "entail", "--theory", str(thy),
        "--gamma", "P(tau x. S(x))", "--phi", "P(eps x. S(x))",
        "--bound", "2", "--expect-valid",
    )
    assert code == 0
    assert "valid up to bound 2" in out


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("AIEO_BUDGET", "10")
    code, _, err = run(capsys, "entail", "--gamma", "P(x)", "--phi", "P(x)", "--bound", "3")
    assert code == 1
    assert "exceed" in err


def test_prove_roundtrip(tmp_path, capsys):
    script = tmp_path / "ok.proof"
    script.write_text(
        "constants: c\n"
        "a1 = axiom(P(c) |- P(c))\n"
        "d1 = eps_intro(a1, var=x, pattern=P(x), witness=c)\n"
    )
    code, out, _ = run(capsys, "prove", "--script", str(script))
    assert code == 0
    assert "P(c) |- P(eps x. P(x))" in out
    bad = tmp_path / "bad.proof"
    bad.write_text("a1 = axiom(S(x) |- S(x))\nd1 = tau_intro(a1, var=x)\n")
    code, out, _ = run(capsys, "prove", "--script", str(bad))
    assert code == 1
    assert "d1" in out and "tau_intro" in out


def test_square_with_theory_file(tmp_path, capsys):
    thy = tmp_path / "biv.thy"
    thy.write_text("# bivalence hypothesis\nP(tau x. S(x)) -> P(eps x. S(x))\n")
    code, out, _ = run(
        capsys, "square", "--s", "S", "--p", "P", "--theory", str(thy), "--expect-pass"
    )
    assert code == 0
    assert "PASS" in out
    code, out, _ = run(capsys, "square", "--s", "S", "--p", "P", "--bound", "2", "--expect-pass")
    assert code == 1
    code, out, _ = run(
        capsys, "square", "--s", "S", "--p", "P", "--theory", str(thy),
        "--proposition", "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["all_ok"] is True
    assert doc["square"]["A"] == "P(tau x. S(x))"


def test_square_proposition_hypothesis_not_met(capsys):
    code, out, _ = run(capsys, "square", "--s", "S", "--p", "P", "--bound", "2", "--proposition")
    assert code == 1
    assert "hypothesis not met" in out


def test_demo_inadequacies(capsys):
    code, out, _ = run(capsys, "demo-inadequacies", "--json")
    assert code == 0
    docs = json.loads(out)
    assert [d["which"] for d in docs] == [1, 2, 3]
    assert docs[2]["epsilon_type"] == "e"
    assert docs[2]["raised_type"] == "(e->t)->t"
    code, out, _ = run(capsys, "demo-inadequacies", "--which", "1")
    assert code == 0
    assert "model" in out


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["entail"])  # missing required --phi
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["translate", "--mode", "klingon", "some S is P"])
    assert exc.value.code == 2
