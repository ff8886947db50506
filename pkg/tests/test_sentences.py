"""Controlled-English parsing and the two translation modes."""

import pytest

from aieo.montague import Lexicon, UnknownWord
from aieo.printer import formula_to_text
from aieo.sentences import SentencePattern, UnrecognizedPattern, canonical_noun, parse_sentence, translate


def test_pattern_recognition():
    assert parse_sentence("every S is P") == SentencePattern("A", "s", "p")
    assert parse_sentence("Some politicians ARE crooks.") == SentencePattern(
        "I", "politicians", "crooks"
    )
    assert parse_sentence("no man is island") == SentencePattern("E", "man", "island")
    assert parse_sentence("not all students are employees") == SentencePattern(
        "O-notall", "students", "employees"
    )
    assert parse_sentence("some students are not employees") == SentencePattern(
        "O-somenot", "students", "employees"
    )


def test_unrecognized_patterns():
    for bad in ["most S are P", "every S is", "S is P", "all S are P",
                "some S and P", "no no no"]:
        with pytest.raises(UnrecognizedPattern):
            parse_sentence(bad)


def test_epsilon_translations_match_table():
    cases = {
        "every S is P": "P(tau x. S(x))",
        "some S is P": "P(eps x. S(x))",
        "no S is P": "~P(eps x. S(x))",
        "not all S are P": "~P(tau x. S(x))",
        "some S are not P": "~P(tau x. S(x))",  # same content, different focus
    }
    for sentence, expected in cases.items():
        got = translate(sentence, "epsilon")
        assert formula_to_text(got) == expected.replace("S", "s").replace("P", "p")


def test_montague_translations():
    cases = {
        "every S is P": "forall x. s(x) -> p(x)",
        "some S is P": "exists x. s(x) & p(x)",
        "no S is P": "~(exists x. s(x) & p(x))",
        "not all S are P": "~(forall x. s(x) -> p(x))",
        "some S are not P": "~(forall x. s(x) -> p(x))",
    }
    for sentence, expected in cases.items():
        assert formula_to_text(translate(sentence, "montague")) == expected


def test_both_o_forms_coincide():
    a = translate("not all students are employees", "epsilon")
    b = translate("some students are not employees", "epsilon")
    assert a == b


def test_lexicon_enforced_when_given():
    lex = Lexicon()
    lex.load_text("politician : e->t\ncrook : e->t")
    got = translate("some politicians are crooks", "epsilon", lex)
    assert formula_to_text(got) == "crook(eps x. politician(x))"
    with pytest.raises(UnknownWord):
        translate("some wizards are crooks", "epsilon", lex)


def test_canonical_noun():
    assert canonical_noun("politicians") == "politician"
    assert canonical_noun("employees") == "employee"
    assert canonical_noun("boxes") == "box"
    assert canonical_noun("ponies") == "pony"
    assert canonical_noun("glass") == "glass"
    lex = Lexicon()
    lex.load_text("hits : e->t")  # lexicon may choose a plural as canonical
    assert canonical_noun("hits", lex) == "hits"


def test_bad_mode():
    with pytest.raises(ValueError):
        translate("some S is P", "prolog")
